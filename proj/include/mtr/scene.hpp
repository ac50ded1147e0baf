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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mtr/geometry.hpp"
#include "mtr/mat.hpp"

namespace mtr
{

enum class AgentCategory { kVehicle = 0, kPedestrian = 1, kCyclist = 2 };
enum class LaneType { kLane = 0, kEdge = 1, kCrosswalk = 2 };

constexpr int kNumCategories = 3;

std::string to_string(AgentCategory c);
std::string to_string(LaneType t);
AgentCategory agent_category_from_string(const std::string & s);
LaneType lane_type_from_string(const std::string & s);

/// One timestep of an agent track. Invalid steps carry all-zero fields.
struct AgentState
{
  double x = 0.0;
  double y = 0.0;
  double heading = 0.0;
  double vx = 0.0;
  double vy = 0.0;
  bool valid = false;
};

struct AgentTrack
{
  std::int64_t agent_id = 0;
  AgentCategory category = AgentCategory::kVehicle;
  bool is_interest = false;
  std::vector<AgentState> states;  // length H + 1 + T
};

struct MapPoint
{
  double x = 0.0;
  double y = 0.0;
  double dir_x = 1.0;
  double dir_y = 0.0;
};

struct MapPolyline
{
  std::int64_t polyline_id = 0;
  LaneType lane_type = LaneType::kLane;
  std::vector<MapPoint> points;  // 2 or more
};

struct Scene
{
  std::string scene_id;
  int current_index = 0;  // index of "now" within states; equals H
  std::vector<AgentTrack> agents;
  std::vector<MapPolyline> polylines;

  int history_steps() const { return current_index; }
  int future_steps() const
  {
    return agents.empty() ? 0 : static_cast<int>(agents.front().states.size()) - current_index - 1;
  }
  const AgentTrack * interest_agent() const;
  const AgentTrack * find_agent(std::int64_t agent_id) const;
};

/// Throws std::invalid_argument when a structural invariant is broken
/// (missing interest agent, inconsistent track lengths, out-of-range heading,
/// non-unit map directions).
void validate_scene(const Scene & scene);

/// Pose of `agent_id` at the current step; the transform that
/// normalize_to_agent applies.
Frame normalization_frame(const Scene & scene, std::int64_t agent_id);

/// Rigidly transform the whole scene so the given agent's current state sits
/// at the origin with heading zero. Invalid steps stay zero.
Scene normalize_to_agent(const Scene & scene, std::int64_t agent_id);

struct VectorizeConfig
{
  int max_agents = 16;
  int max_polylines = 64;
  int points_per_polyline = 20;
};

/// Fixed-shape, agent-centric tensor view of a scene.
///
/// Agent feature channels (per step):
///   0 x, 1 y, 2 sin(heading), 3 cos(heading), 4 vx, 5 vy,
///   6..8 one-hot category, 9 time index / H, 10 valid flag
/// Map feature channels (per point):
///   0 x, 1 y, 2 dir_x, 3 dir_y, 4..6 one-hot lane type, 7 valid flag
struct VectorizedScene
{
  static constexpr int kAgentChannels = 11;
  static constexpr int kMapChannels = 8;

  int num_agents = 0;      // rows in the agent token axis (padded)
  int num_polylines = 0;   // rows in the map token axis (padded)
  int history_steps = 0;   // H + 1 points per agent
  int points_per_polyline = 0;

  Mat agent_features;  // (num_agents * history_steps) x kAgentChannels
  Mat map_features;    // (num_polylines * points_per_polyline) x kMapChannels

  std::vector<double> agent_mask;        // per agent token
  std::vector<double> map_mask;          // per map token
  std::vector<double> agent_step_valid;  // per agent feature row
  std::vector<double> map_point_valid;   // per map feature row

  std::vector<Waypoint> agent_positions;   // current position per agent token
  std::vector<Waypoint> polyline_centers;  // mean of valid points per map token

  Mat gt_future;              // T x 2, interest agent
  std::vector<char> gt_valid;  // length T
  AgentCategory interest_category = AgentCategory::kVehicle;
  Frame frame;  // normalization applied upstream

  double agent_feature(int a, int t, int c) const
  {
    return agent_features(a * history_steps + t, c);
  }
  double map_feature(int p, int i, int c) const
  {
    return map_features(p * points_per_polyline + i, c);
  }
};

/// Vectorize an already-normalized scene (interest agent at the origin).
/// `frame` is recorded untouched. Polylines longer than points_per_polyline
/// split into consecutive chunks. Throws when the scene has no polylines or
/// the interest agent has no valid history step.
VectorizedScene vectorize(const Scene & scene, const VectorizeConfig & config,
                          const Frame & frame = {});

/// Convenience: normalize to the interest agent, then vectorize, recording
/// the applied frame.
VectorizedScene vectorize_agent_centric(const Scene & raw, const VectorizeConfig & config);

}  // namespace mtr
