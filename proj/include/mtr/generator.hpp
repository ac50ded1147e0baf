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

#include <array>
#include <cstdint>
#include <vector>

#include "mtr/geometry.hpp"
#include "mtr/scene.hpp"

namespace mtr
{

enum class LaneGeometry { kStraight, kCurved, kBranch };

std::string to_string(LaneGeometry g);
LaneGeometry lane_geometry_from_string(const std::string & s);

/// Parameters of the synthetic scene family. A (spec, seed) pair fully
/// determines one scene.
struct GeneratorSpec
{
  LaneGeometry geometry = LaneGeometry::kBranch;
  int num_branches = 3;               // 2 or 3, branch geometry only
  std::vector<double> branch_probs;   // empty means uniform
  int history_steps = 6;              // H
  int future_steps = 16;              // T
  double dt = 0.1;                    // s
  double speed_min = 6.0;             // m/s
  double speed_max = 10.0;
  int min_background_agents = 1;
  int max_background_agents = 4;
  double noise_sigma = 0.05;   // per-waypoint position noise, m
  double noise_bound = 0.15;   // hard truncation of the noise, m
  double curvature_min = 0.005;  // 1/m, curved geometry only
  double curvature_max = 0.02;
  double lane_length = 60.0;        // m (per branch for branch geometry)
  double lane_point_spacing = 2.0;  // m between map points
  double world_range = 40.0;        // scenes are placed uniformly in this box
  double invalid_history_prob = 0.1;  // chance of an invalid history prefix
  std::array<double, 3> category_mix{1.0, 0.0, 0.0};

  void validate() const;  // throws std::invalid_argument
};

/// Per-scene generation metadata, exposed for evaluation code that needs the
/// noise-free branch alternatives.
struct SceneGenMeta
{
  int branch_taken = 0;
  double speed = 0.0;
  /// Noise-free endpoint the interest agent would reach on each branch
  /// (world frame). Single-lane geometries expose one entry.
  std::vector<Waypoint> branch_endpoints;
};

Scene generate_synthetic_scene(const GeneratorSpec & spec, std::uint64_t seed);
Scene generate_synthetic_scene(const GeneratorSpec & spec, std::uint64_t seed, SceneGenMeta * meta);

}  // namespace mtr
