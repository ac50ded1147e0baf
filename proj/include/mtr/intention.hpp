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
#include <map>
#include <vector>

#include "mtr/geometry.hpp"
#include "mtr/scene.hpp"

namespace mtr
{

/// K representative trajectory endpoints for one agent category, in the
/// agent-centric frame. Points are kept in canonical order (angle, then
/// radius) so serialization is deterministic.
struct IntentionPointSet
{
  AgentCategory category = AgentCategory::kVehicle;
  int k = 0;
  std::uint64_t seed = 0;
  std::vector<Waypoint> points;
};

/// Lloyd's algorithm with k-means++ initialization under `seed`. Iteration
/// stops when assignments are unchanged or after max_iters. Empty clusters
/// are re-seeded at the point farthest from its assigned centroid. When
/// `sse_history` is given it receives the within-cluster SSE after every
/// assignment step (non-increasing).
IntentionPointSet cluster_intention_points(const std::vector<Waypoint> & endpoints, int k,
                                           std::uint64_t seed, int max_iters,
                                           AgentCategory category = AgentCategory::kVehicle,
                                           std::vector<double> * sse_history = nullptr);

/// Index of the intention point nearest to the GT endpoint; ties go to the
/// smaller index.
int assign_positive_mode(const IntentionPointSet & intentions, const Waypoint & gt_endpoint);

/// Last valid future waypoint of the interest agent (the clustering target).
/// Returns false when the future has no valid step.
bool gt_endpoint_of(const Scene & scene, Waypoint * out);

/// Intention sets keyed by category, as loaded from an intention file.
struct IntentionLibrary
{
  std::map<AgentCategory, IntentionPointSet> by_category;

  const IntentionPointSet & for_category(AgentCategory c) const;
  bool has(AgentCategory c) const { return by_category.count(c) != 0; }
};

}  // namespace mtr
