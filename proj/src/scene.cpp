// Copyright 2026 The Motion Transformer Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mtr/scene.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mtr
{

std::string to_string(AgentCategory c)
{
  switch (c) {
    case AgentCategory::kVehicle:
      return "vehicle";
    case AgentCategory::kPedestrian:
      return "pedestrian";
    case AgentCategory::kCyclist:
      return "cyclist";
  }
  return "vehicle";
}

std::string to_string(LaneType t)
{
  switch (t) {
    case LaneType::kLane:
      return "lane";
    case LaneType::kEdge:
      return "edge";
    case LaneType::kCrosswalk:
      return "crosswalk";
  }
  return "lane";
}

AgentCategory agent_category_from_string(const std::string & s)
{
  if (s == "vehicle") return AgentCategory::kVehicle;
  if (s == "pedestrian") return AgentCategory::kPedestrian;
  if (s == "cyclist") return AgentCategory::kCyclist;
  throw std::invalid_argument("unknown agent category '" + s + "'");
}

LaneType lane_type_from_string(const std::string & s)
{
  if (s == "lane") return LaneType::kLane;
  if (s == "edge") return LaneType::kEdge;
  if (s == "crosswalk") return LaneType::kCrosswalk;
  throw std::invalid_argument("unknown lane type '" + s + "'");
}

const AgentTrack * Scene::interest_agent() const
{
  for (const auto & a : agents) {
    if (a.is_interest) {
      return &a;
    }
  }
  return nullptr;
}

const AgentTrack * Scene::find_agent(std::int64_t agent_id) const
{
  for (const auto & a : agents) {
    if (a.agent_id == agent_id) {
      return &a;
    }
  }
  return nullptr;
}

void validate_scene(const Scene & scene)
{
  constexpr double pi = std::numbers::pi;
  if (scene.agents.empty()) {
    throw std::invalid_argument("scene '" + scene.scene_id + "': no agents");
  }
  if (scene.interest_agent() == nullptr) {
    throw std::invalid_argument("scene '" + scene.scene_id + "': no interest agent");
  }
  const std::size_t len = scene.agents.front().states.size();
  if (scene.current_index < 0 || static_cast<std::size_t>(scene.current_index) >= len) {
    throw std::invalid_argument("scene '" + scene.scene_id + "': current_index out of range");
  }
  for (const auto & a : scene.agents) {
    if (a.states.size() != len) {
      throw std::invalid_argument("scene '" + scene.scene_id + "': inconsistent track lengths");
    }
    for (const auto & s : a.states) {
      if (s.valid && (s.heading <= -pi - 1e-9 || s.heading > pi + 1e-9)) {
        throw std::invalid_argument("scene '" + scene.scene_id + "': heading out of (-pi, pi]");
      }
    }
  }
  for (const auto & pl : scene.polylines) {
    if (pl.points.size() < 2) {
      throw std::invalid_argument("scene '" + scene.scene_id + "': polyline with < 2 points");
    }
    for (const auto & p : pl.points) {
      const double norm = std::hypot(p.dir_x, p.dir_y);
      if (std::abs(norm - 1.0) > 1e-6) {
        throw std::invalid_argument("scene '" + scene.scene_id + "': non-unit map direction");
      }
    }
  }
}

Frame normalization_frame(const Scene & scene, std::int64_t agent_id)
{
  const AgentTrack * agent = scene.find_agent(agent_id);
  if (agent == nullptr) {
    throw std::invalid_argument("normalize_to_agent: unknown agent_id " + std::to_string(agent_id));
  }
  const AgentState & current = agent->states.at(scene.current_index);
  if (!current.valid) {
    throw std::invalid_argument("normalize_to_agent: agent " + std::to_string(agent_id) +
                                " has no valid current state");
  }
  return Frame{current.x, current.y, current.heading};
}

Scene normalize_to_agent(const Scene & scene, std::int64_t agent_id)
{
  const Frame frame = normalization_frame(scene, agent_id);
  Scene out = scene;
  for (auto & agent : out.agents) {
    for (auto & s : agent.states) {
      if (!s.valid) {
        continue;
      }
      const Waypoint p = frame.to_local({s.x, s.y});
      const Waypoint v = frame.rotate_to_local({s.vx, s.vy});
      s.x = p[0];
      s.y = p[1];
      s.vx = v[0];
      s.vy = v[1];
      s.heading = wrap_angle(s.heading - frame.rotation);
    }
  }
  for (auto & pl : out.polylines) {
    for (auto & p : pl.points) {
      const Waypoint q = frame.to_local({p.x, p.y});
      const Waypoint d = frame.rotate_to_local({p.dir_x, p.dir_y});
      p.x = q[0];
      p.y = q[1];
      p.dir_x = d[0];
      p.dir_y = d[1];
    }
  }
  return out;
}

namespace
{

struct Chunk
{
  const MapPolyline * source;
  int first;
  int count;
  Waypoint center;
};

Waypoint last_known_position(const AgentTrack & a, int current_index)
{
  for (int t = current_index; t >= 0; --t) {
    if (a.states[t].valid) {
      return {a.states[t].x, a.states[t].y};
    }
  }
  return {0.0, 0.0};
}

bool has_valid_history(const AgentTrack & a, int current_index)
{
  for (int t = 0; t <= current_index; ++t) {
    if (a.states[t].valid) {
      return true;
    }
  }
  return false;
}

}  // namespace

VectorizedScene vectorize(const Scene & scene, const VectorizeConfig & config, const Frame & frame)
{
  const AgentTrack * interest = scene.interest_agent();
  if (interest == nullptr) {
    throw std::invalid_argument("vectorize: scene has no interest agent");
  }
  if (scene.polylines.empty()) {
    throw std::invalid_argument("vectorize: scene has no polylines");
  }
  if (!has_valid_history(*interest, scene.current_index)) {
    throw std::invalid_argument("vectorize: interest agent has no valid history step");
  }

  const int H = scene.current_index;
  const int steps = H + 1;
  const int T = static_cast<int>(interest->states.size()) - steps;
  const int P = config.points_per_polyline;

  // Agents: interest first, the rest by distance of their last known
  // position to the origin.
  std::vector<const AgentTrack *> others;
  for (const auto & a : scene.agents) {
    if (&a != interest && has_valid_history(a, scene.current_index)) {
      others.push_back(&a);
    }
  }
  std::stable_sort(others.begin(), others.end(),
                   [&](const AgentTrack * a, const AgentTrack * b) {
                     const Waypoint pa = last_known_position(*a, H);
                     const Waypoint pb = last_known_position(*b, H);
                     return pa[0] * pa[0] + pa[1] * pa[1] < pb[0] * pb[0] + pb[1] * pb[1];
                   });
  std::vector<const AgentTrack *> kept{interest};
  for (const auto * a : others) {
    if (static_cast<int>(kept.size()) >= config.max_agents) {
      break;
    }
    kept.push_back(a);
  }

  // Map: split long polylines into consecutive chunks, then truncate by
  // center distance when over the budget (stable order otherwise).
  std::vector<Chunk> chunks;
  for (const auto & pl : scene.polylines) {
    const int n = static_cast<int>(pl.points.size());
    for (int first = 0; first < n; first += P) {
      Chunk c{&pl, first, std::min(P, n - first), {0.0, 0.0}};
      for (int i = 0; i < c.count; ++i) {
        c.center[0] += pl.points[first + i].x;
        c.center[1] += pl.points[first + i].y;
      }
      c.center[0] /= c.count;
      c.center[1] /= c.count;
      chunks.push_back(c);
    }
  }
  if (static_cast<int>(chunks.size()) > config.max_polylines) {
    std::stable_sort(chunks.begin(), chunks.end(), [](const Chunk & a, const Chunk & b) {
      return a.center[0] * a.center[0] + a.center[1] * a.center[1] <
             b.center[0] * b.center[0] + b.center[1] * b.center[1];
    });
    chunks.resize(config.max_polylines);
  }

  VectorizedScene vs;
  vs.num_agents = config.max_agents;
  vs.num_polylines = config.max_polylines;
  vs.history_steps = steps;
  vs.points_per_polyline = P;
  vs.agent_features = Mat(vs.num_agents * steps, VectorizedScene::kAgentChannels);
  vs.map_features = Mat(vs.num_polylines * P, VectorizedScene::kMapChannels);
  vs.agent_mask.assign(vs.num_agents, 0.0);
  vs.map_mask.assign(vs.num_polylines, 0.0);
  vs.agent_step_valid.assign(vs.num_agents * steps, 0.0);
  vs.map_point_valid.assign(vs.num_polylines * P, 0.0);
  vs.agent_positions.assign(vs.num_agents, {0.0, 0.0});
  vs.polyline_centers.assign(vs.num_polylines, {0.0, 0.0});
  vs.interest_category = interest->category;
  vs.frame = frame;

  for (std::size_t a = 0; a < kept.size(); ++a) {
    const AgentTrack & track = *kept[a];
    vs.agent_mask[a] = 1.0;
    vs.agent_positions[a] = last_known_position(track, H);
    for (int t = 0; t < steps; ++t) {
      const AgentState & s = track.states[t];
      if (!s.valid) {
        continue;
      }
      const int row = static_cast<int>(a) * steps + t;
      vs.agent_step_valid[row] = 1.0;
      double * f = vs.agent_features.row_ptr(row);
      f[0] = s.x;
      f[1] = s.y;
      f[2] = std::sin(s.heading);
      f[3] = std::cos(s.heading);
      f[4] = s.vx;
      f[5] = s.vy;
      f[6 + static_cast<int>(track.category)] = 1.0;
      f[9] = H > 0 ? static_cast<double>(t) / H : 1.0;
      f[10] = 1.0;
    }
  }

  for (std::size_t c = 0; c < chunks.size(); ++c) {
    const Chunk & chunk = chunks[c];
    vs.map_mask[c] = 1.0;
    vs.polyline_centers[c] = chunk.center;
    for (int i = 0; i < chunk.count; ++i) {
      const MapPoint & p = chunk.source->points[chunk.first + i];
      const int row = static_cast<int>(c) * P + i;
      vs.map_point_valid[row] = 1.0;
      double * f = vs.map_features.row_ptr(row);
      f[0] = p.x;
      f[1] = p.y;
      f[2] = p.dir_x;
      f[3] = p.dir_y;
      f[4 + static_cast<int>(chunk.source->lane_type)] = 1.0;
      f[7] = 1.0;
    }
  }

  vs.gt_future = Mat(T, 2);
  vs.gt_valid.assign(T, 0);
  for (int t = 0; t < T; ++t) {
    const AgentState & s = interest->states[steps + t];
    if (s.valid) {
      vs.gt_future(t, 0) = s.x;
      vs.gt_future(t, 1) = s.y;
      vs.gt_valid[t] = 1;
    }
  }
  return vs;
}

VectorizedScene vectorize_agent_centric(const Scene & raw, const VectorizeConfig & config)
{
  const AgentTrack * interest = raw.interest_agent();
  if (interest == nullptr) {
    throw std::invalid_argument("vectorize: scene has no interest agent");
  }
  const Frame frame = normalization_frame(raw, interest->agent_id);
  return vectorize(normalize_to_agent(raw, interest->agent_id), config, frame);
}

}  // namespace mtr
