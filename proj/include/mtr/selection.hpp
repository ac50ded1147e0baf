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

#include <span>
#include <string>
#include <vector>

#include "mtr/geometry.hpp"

namespace mtr
{

struct PredictionEntry
{
  std::vector<Waypoint> trajectory;  // T waypoints
  double confidence = 0.0;
  std::string model_id;
};

struct PredictionSet
{
  std::string scene_id;
  std::vector<PredictionEntry> entries;
};

struct EnsembleConfig
{
  int top_k = 6;
  double single_model_delta = 2.5;  // m, single-model NMS threshold
  bool renormalize_per_model = true;
};

/// Cumulative arc length of a trajectory.
double trajectory_length(std::span<const Waypoint> traj);

/// Endpoint-NMS distance threshold scaled with the length of the most
/// confident trajectory: clamped linear ramp from 2.5 m (L <= 10) to 3.5 m
/// (L >= 50).
double ensemble_threshold(double length);

/// Greedy endpoint NMS. Takes the most confident unsuppressed entry,
/// suppresses everything with an endpoint within `delta` of it, repeats.
/// When fewer than top_k survive, the remaining slots are filled with the
/// most confident suppressed entries. Output is ordered by confidence
/// descending; confidence ties keep insertion order.
PredictionSet nms_trajectories(const PredictionSet & preds, double delta, int top_k);

/// Pool the per-model top-6 sets, pick the threshold from the globally most
/// confident trajectory, run NMS down to 6, renormalize confidences.
PredictionSet ensemble_combine(const std::vector<PredictionSet> & model_outputs,
                               const EnsembleConfig & config);

}  // namespace mtr
