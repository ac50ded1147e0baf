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

#include "mtr/generator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace mtr
{
namespace
{

constexpr double kPi = std::numbers::pi;

// Independent sub-streams per concern so e.g. the branch draw never shifts
// the noise sequence.
std::uint64_t splitmix64(std::uint64_t x)
{
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::mt19937_64 stream(std::uint64_t seed, std::uint64_t salt)
{
  return std::mt19937_64(splitmix64(seed ^ (salt * 0x9e3779b97f4a7c15ULL)));
}

/// Piecewise-linear centerline with arc-length lookup.
struct Path
{
  std::vector<Waypoint> pts;
  std::vector<double> cum;  // cumulative arc length, cum[0] = 0

  void finish()
  {
    cum.resize(pts.size());
    cum[0] = 0.0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
      cum[i] = cum[i - 1] + distance(pts[i - 1], pts[i]);
    }
  }
  double length() const { return cum.back(); }

  Waypoint point_at(double s) const
  {
    if (s <= 0.0) return pts.front();
    if (s >= length()) return pts.back();
    const auto it = std::upper_bound(cum.begin(), cum.end(), s);
    const std::size_t i = static_cast<std::size_t>(it - cum.begin());
    const double seg = cum[i] - cum[i - 1];
    const double a = seg > 0.0 ? (s - cum[i - 1]) / seg : 0.0;
    return {pts[i - 1][0] + a * (pts[i][0] - pts[i - 1][0]),
            pts[i - 1][1] + a * (pts[i][1] - pts[i - 1][1])};
  }

  Waypoint tangent_at(double s) const
  {
    std::size_t i = 1;
    if (s > 0.0) {
      const auto it = std::upper_bound(cum.begin(), cum.end(), std::min(s, length() - 1e-9));
      i = std::min(static_cast<std::size_t>(it - cum.begin()), pts.size() - 1);
    }
    const double dx = pts[i][0] - pts[i - 1][0];
    const double dy = pts[i][1] - pts[i - 1][1];
    const double n = std::hypot(dx, dy);
    return {dx / n, dy / n};
  }
};

Path straight_path(double length, double spacing)
{
  Path p;
  const int n = std::max(2, static_cast<int>(std::ceil(length / spacing)) + 1);
  for (int i = 0; i < n; ++i) {
    const double s = length * i / (n - 1);
    p.pts.push_back({s, 0.0});
  }
  p.finish();
  return p;
}

Path arc_path(double length, double spacing, double curvature)
{
  Path p;
  const int n = std::max(2, static_cast<int>(std::ceil(length / spacing)) + 1);
  for (int i = 0; i < n; ++i) {
    const double s = length * i / (n - 1);
    if (std::abs(curvature) < 1e-12) {
      p.pts.push_back({s, 0.0});
    } else {
      p.pts.push_back({std::sin(curvature * s) / curvature,
                       (1.0 - std::cos(curvature * s)) / curvature});
    }
  }
  p.finish();
  return p;
}

Path ray_path(Waypoint origin, double angle, double length, double spacing)
{
  Path p;
  const int n = std::max(2, static_cast<int>(std::ceil(length / spacing)) + 1);
  const double cx = std::cos(angle);
  const double cy = std::sin(angle);
  for (int i = 0; i < n; ++i) {
    const double s = length * i / (n - 1);
    p.pts.push_back({origin[0] + cx * s, origin[1] + cy * s});
  }
  p.finish();
  return p;
}

Path join(const Path & a, const Path & b)
{
  Path p;
  p.pts = a.pts;
  // skip b's first point; it coincides with a's last
  p.pts.insert(p.pts.end(), b.pts.begin() + 1, b.pts.end());
  p.finish();
  return p;
}

std::vector<double> branch_angles(int num_branches)
{
  if (num_branches == 2) {
    return {-0.7, 0.7};
  }
  return {-0.9, 0.0, 0.9};
}

MapPolyline polyline_from_path(const Path & p, std::int64_t id, LaneType type)
{
  MapPolyline pl;
  pl.polyline_id = id;
  pl.lane_type = type;
  for (std::size_t i = 0; i < p.pts.size(); ++i) {
    const double s = p.cum[i];
    const Waypoint t = p.tangent_at(std::min(s + 1e-6, p.length()));
    pl.points.push_back({p.pts[i][0], p.pts[i][1], t[0], t[1]});
  }
  return pl;
}

double bounded_gauss(std::mt19937_64 & rng, double sigma, double bound)
{
  if (sigma <= 0.0) {
    return 0.0;
  }
  std::normal_distribution<double> n(0.0, sigma);
  return std::clamp(n(rng), -bound, bound);
}

AgentCategory draw_category(std::mt19937_64 & rng, const std::array<double, 3> & mix)
{
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double total = mix[0] + mix[1] + mix[2];
  double x = u(rng) * total;
  for (int i = 0; i < 2; ++i) {
    if (x < mix[i]) {
      return static_cast<AgentCategory>(i);
    }
    x -= mix[i];
  }
  return AgentCategory::kCyclist;
}

/// Sample an agent track following `path` at constant speed, current arc
/// position s_now, with bounded position noise on every valid step.
AgentTrack make_track(const Path & path, double s_now, double speed, int H, int T, double dt,
                      std::mt19937_64 & noise_rng, const GeneratorSpec & spec,
                      std::int64_t agent_id, AgentCategory category, bool is_interest)
{
  AgentTrack track;
  track.agent_id = agent_id;
  track.category = category;
  track.is_interest = is_interest;
  track.states.resize(H + 1 + T);
  for (int t = 0; t < H + 1 + T; ++t) {
    const double s = s_now + speed * dt * (t - H);
    AgentState st;
    const Waypoint p = path.point_at(s);
    const Waypoint tan = path.tangent_at(s);
    st.x = p[0] + bounded_gauss(noise_rng, spec.noise_sigma, spec.noise_bound);
    st.y = p[1] + bounded_gauss(noise_rng, spec.noise_sigma, spec.noise_bound);
    st.heading = std::atan2(tan[1], tan[0]);
    st.vx = speed * tan[0];
    st.vy = speed * tan[1];
    st.valid = true;
    track.states[t] = st;
  }
  return track;
}

void apply_world_transform(Scene & scene, double tx, double ty, double rot)
{
  const double c = std::cos(rot);
  const double s = std::sin(rot);
  for (auto & agent : scene.agents) {
    for (auto & st : agent.states) {
      if (!st.valid) {
        continue;
      }
      const double x = st.x;
      const double y = st.y;
      st.x = tx + c * x - s * y;
      st.y = ty + s * x + c * y;
      const double vx = st.vx;
      const double vy = st.vy;
      st.vx = c * vx - s * vy;
      st.vy = s * vx + c * vy;
      st.heading = wrap_angle(st.heading + rot);
    }
  }
  for (auto & pl : scene.polylines) {
    for (auto & p : pl.points) {
      const double x = p.x;
      const double y = p.y;
      p.x = tx + c * x - s * y;
      p.y = ty + s * x + c * y;
      const double dx = p.dir_x;
      const double dy = p.dir_y;
      p.dir_x = c * dx - s * dy;
      p.dir_y = s * dx + c * dy;
    }
  }
}

}  // namespace

std::string to_string(LaneGeometry g)
{
  switch (g) {
    case LaneGeometry::kStraight:
      return "straight";
    case LaneGeometry::kCurved:
      return "curved";
    case LaneGeometry::kBranch:
      return "branch";
  }
  return "straight";
}

LaneGeometry lane_geometry_from_string(const std::string & s)
{
  if (s == "straight") return LaneGeometry::kStraight;
  if (s == "curved") return LaneGeometry::kCurved;
  if (s == "branch") return LaneGeometry::kBranch;
  throw std::invalid_argument("unknown lane geometry '" + s + "'");
}

void GeneratorSpec::validate() const
{
  if (future_steps <= 0) throw std::invalid_argument("generator: future_steps must be positive");
  if (history_steps < 1) throw std::invalid_argument("generator: history_steps must be >= 1");
  if (dt <= 0.0) throw std::invalid_argument("generator: dt must be positive");
  if (speed_min <= 0.0 || speed_max < speed_min) {
    throw std::invalid_argument("generator: bad speed range");
  }
  if (geometry == LaneGeometry::kBranch) {
    if (num_branches != 2 && num_branches != 3) {
      throw std::invalid_argument("generator: num_branches must be 2 or 3");
    }
    if (!branch_probs.empty()) {
      if (static_cast<int>(branch_probs.size()) != num_branches) {
        throw std::invalid_argument("generator: branch_probs size mismatch");
      }
      double sum = 0.0;
      for (double p : branch_probs) {
        if (p < 0.0) throw std::invalid_argument("generator: negative branch probability");
        sum += p;
      }
      if (std::abs(sum - 1.0) > 1e-6) {
        throw std::invalid_argument("generator: branch_probs must sum to 1");
      }
    }
  }
  if (min_background_agents < 0 || max_background_agents < min_background_agents) {
    throw std::invalid_argument("generator: bad background agent range");
  }
  if (noise_sigma < 0.0 || noise_bound < 0.0) {
    throw std::invalid_argument("generator: negative noise");
  }
  if (lane_length <= 0.0 || lane_point_spacing <= 0.0) {
    throw std::invalid_argument("generator: bad lane dimensions");
  }
  // The interest agent must fit H past and T future steps on the lane at top
  // speed.
  if (speed_max * dt * (history_steps + future_steps) > lane_length) {
    throw std::invalid_argument("generator: lane too short for the configured horizon");
  }
}

Scene generate_synthetic_scene(const GeneratorSpec & spec, std::uint64_t seed)
{
  return generate_synthetic_scene(spec, seed, nullptr);
}

Scene generate_synthetic_scene(const GeneratorSpec & spec, std::uint64_t seed, SceneGenMeta * meta)
{
  spec.validate();
  const int H = spec.history_steps;
  const int T = spec.future_steps;

  auto rng_world = stream(seed, 1);
  auto rng_branch = stream(seed, 2);
  auto rng_kinematics = stream(seed, 3);
  auto rng_noise = stream(seed, 4);
  auto rng_background = stream(seed, 5);
  auto rng_validity = stream(seed, 6);

  std::uniform_real_distribution<double> u01(0.0, 1.0);

  Scene scene;
  scene.scene_id = to_string(spec.geometry) +
                   (spec.geometry == LaneGeometry::kBranch ? std::to_string(spec.num_branches)
                                                           : std::string()) +
                   "-" + std::to_string(seed);
  scene.current_index = H;

  // Lane skeleton in the local frame plus the per-branch paths an agent can
  // follow.
  std::vector<Path> routes;
  std::vector<double> route_probs;
  double route_start_offset = 0.0;  // arc length where the interest agent's story begins
  if (spec.geometry == LaneGeometry::kBranch) {
    const Path stem = straight_path(spec.lane_length, spec.lane_point_spacing);
    Path stem_shifted;  // stem ends at the origin
    stem_shifted.pts = stem.pts;
    for (auto & p : stem_shifted.pts) {
      p[0] -= spec.lane_length;
    }
    stem_shifted.finish();
    const auto angles = branch_angles(spec.num_branches);
    scene.polylines.push_back(polyline_from_path(stem_shifted, 0, LaneType::kLane));
    for (std::size_t b = 0; b < angles.size(); ++b) {
      const Path branch = ray_path({0.0, 0.0}, angles[b], spec.lane_length, spec.lane_point_spacing);
      scene.polylines.push_back(
        polyline_from_path(branch, static_cast<std::int64_t>(b) + 1, LaneType::kLane));
      routes.push_back(join(stem_shifted, branch));
    }
    route_probs = spec.branch_probs;
    if (route_probs.empty()) {
      route_probs.assign(spec.num_branches, 1.0 / spec.num_branches);
    }
    route_start_offset = spec.lane_length;  // branch point sits at this arc length
  } else {
    double curvature = 0.0;
    if (spec.geometry == LaneGeometry::kCurved) {
      std::uniform_real_distribution<double> uc(spec.curvature_min, spec.curvature_max);
      curvature = uc(rng_kinematics) * (u01(rng_kinematics) < 0.5 ? -1.0 : 1.0);
    }
    Path lane = arc_path(spec.lane_length, spec.lane_point_spacing, curvature);
    scene.polylines.push_back(polyline_from_path(lane, 0, LaneType::kLane));
    routes.push_back(std::move(lane));
    route_probs = {1.0};
  }

  // Branch choice.
  int taken = 0;
  {
    double x = u01(rng_branch);
    for (std::size_t b = 0; b < route_probs.size(); ++b) {
      if (x < route_probs[b] || b + 1 == route_probs.size()) {
        taken = static_cast<int>(b);
        break;
      }
      x -= route_probs[b];
    }
  }

  // Interest agent kinematics: the branch point (or a mid-lane anchor) is
  // crossed somewhere in the middle of the future horizon.
  std::uniform_real_distribution<double> uspeed(spec.speed_min, spec.speed_max);
  const double speed = uspeed(rng_kinematics);
  std::uniform_real_distribution<double> ua(0.35, 0.65);
  const double alpha = ua(rng_kinematics);
  double s_now = 0.0;
  if (spec.geometry == LaneGeometry::kBranch) {
    s_now = route_start_offset - speed * spec.dt * T * alpha;
  } else {
    const double lo = speed * spec.dt * H;
    const double hi = routes[0].length() - speed * spec.dt * T;
    s_now = lo + u01(rng_kinematics) * std::max(0.0, hi - lo);
  }

  const AgentCategory category = draw_category(rng_kinematics, spec.category_mix);
  AgentTrack interest = make_track(routes[taken], s_now, speed, H, T, spec.dt, rng_noise, spec, 0,
                                   category, true);

  // Optionally blank out a leading history prefix (never the current step).
  if (H >= 2 && u01(rng_validity) < spec.invalid_history_prob) {
    std::uniform_int_distribution<int> ulen(1, H - 1);
    const int n = ulen(rng_validity);
    for (int t = 0; t < n; ++t) {
      interest.states[t] = AgentState{};
    }
  }
  scene.agents.push_back(std::move(interest));

  // Background agents ride the same lane system.
  std::uniform_int_distribution<int> ucount(spec.min_background_agents, spec.max_background_agents);
  const int n_background = ucount(rng_background);
  for (int i = 0; i < n_background; ++i) {
    std::uniform_int_distribution<std::size_t> uroute(0, routes.size() - 1);
    const Path & route = routes[uroute(rng_background)];
    const double v = uspeed(rng_background);
    const double lo = v * spec.dt * H;
    const double hi = route.length() - v * spec.dt * T;
    const double s = lo + u01(rng_background) * std::max(0.0, hi - lo);
    scene.agents.push_back(make_track(route, s, v, H, T, spec.dt, rng_background, spec,
                                      static_cast<std::int64_t>(i) + 1,
                                      draw_category(rng_background, spec.category_mix), false));
  }

  // Random placement in the world frame so normalization has real work to do.
  std::uniform_real_distribution<double> ut(-spec.world_range, spec.world_range);
  std::uniform_real_distribution<double> ur(-kPi, kPi);
  const double tx = ut(rng_world);
  const double ty = ut(rng_world);
  const double rot = ur(rng_world);
  apply_world_transform(scene, tx, ty, rot);

  if (meta != nullptr) {
    meta->branch_taken = taken;
    meta->speed = speed;
    meta->branch_endpoints.clear();
    const double c = std::cos(rot);
    const double sn = std::sin(rot);
    for (const auto & route : routes) {
      const Waypoint e = route.point_at(s_now + speed * spec.dt * T);
      meta->branch_endpoints.push_back({tx + c * e[0] - sn * e[1], ty + sn * e[0] + c * e[1]});
    }
  }
  return scene;
}

}  // namespace mtr
