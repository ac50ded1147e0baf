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

#include "mtr/selection.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mtr
{

double trajectory_length(std::span<const Waypoint> traj)
{
  double length = 0.0;
  for (std::size_t i = 1; i < traj.size(); ++i) {
    length += distance(traj[i - 1], traj[i]);
  }
  return length;
}

double ensemble_threshold(double length)
{
  return std::min(3.5, std::max(2.5, (length - 10.0) / (50.0 - 10.0) * 1.5 + 2.5));
}

PredictionSet nms_trajectories(const PredictionSet & preds, double delta, int top_k)
{
  if (preds.entries.empty()) {
    throw std::invalid_argument("nms_trajectories: empty prediction set");
  }
  if (top_k < 1) {
    throw std::invalid_argument("nms_trajectories: top_k must be >= 1");
  }
  const std::size_t n = preds.entries.size();

  // Confidence-descending order; stable so confidence ties keep insertion
  // order.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return preds.entries[a].confidence > preds.entries[b].confidence;
  });

  std::vector<bool> suppressed(n, false);
  std::vector<bool> selected(n, false);
  PredictionSet out;
  out.scene_id = preds.scene_id;

  for (std::size_t oi = 0; oi < n && static_cast<int>(out.entries.size()) < top_k; ++oi) {
    const std::size_t i = order[oi];
    if (suppressed[i]) {
      continue;
    }
    selected[i] = true;
    out.entries.push_back(preds.entries[i]);
    const Waypoint & end = preds.entries[i].trajectory.back();
    for (std::size_t j = 0; j < n; ++j) {
      if (!selected[j] && !suppressed[j] &&
          distance(preds.entries[j].trajectory.back(), end) <= delta) {
        suppressed[j] = true;
      }
    }
  }

  // Fill remaining slots from the suppressed pool, best confidence first.
  for (std::size_t oi = 0; oi < n && static_cast<int>(out.entries.size()) < top_k; ++oi) {
    const std::size_t i = order[oi];
    if (!selected[i]) {
      selected[i] = true;
      out.entries.push_back(preds.entries[i]);
    }
  }

  std::stable_sort(out.entries.begin(), out.entries.end(),
                   [](const PredictionEntry & a, const PredictionEntry & b) {
                     return a.confidence > b.confidence;
                   });
  return out;
}

PredictionSet ensemble_combine(const std::vector<PredictionSet> & model_outputs,
                               const EnsembleConfig & config)
{
  if (model_outputs.empty()) {
    throw std::invalid_argument("ensemble_combine: no model outputs");
  }
  const std::string & scene_id = model_outputs.front().scene_id;
  for (const auto & m : model_outputs) {
    if (m.scene_id != scene_id) {
      throw std::invalid_argument("ensemble_combine: mixed scene_ids ('" + scene_id + "' vs '" +
                                  m.scene_id + "')");
    }
  }

  PredictionSet pooled;
  pooled.scene_id = scene_id;
  for (const auto & m : model_outputs) {
    double sum = 0.0;
    for (const auto & e : m.entries) {
      sum += e.confidence;
    }
    for (const auto & e : m.entries) {
      PredictionEntry copy = e;
      if (config.renormalize_per_model) {
        copy.confidence = sum > 0.0 ? e.confidence / sum : 1.0 / m.entries.size();
      }
      pooled.entries.push_back(std::move(copy));
    }
  }
  if (pooled.entries.empty()) {
    throw std::invalid_argument("ensemble_combine: no pooled entries");
  }

  const auto most_confident = std::max_element(
    pooled.entries.begin(), pooled.entries.end(),
    [](const PredictionEntry & a, const PredictionEntry & b) {
      return a.confidence < b.confidence;
    });
  const double delta = ensemble_threshold(trajectory_length(most_confident->trajectory));

  PredictionSet out = nms_trajectories(pooled, delta, config.top_k);
  double sum = 0.0;
  for (const auto & e : out.entries) {
    sum += e.confidence;
  }
  for (auto & e : out.entries) {
    e.confidence = sum > 0.0 ? e.confidence / sum : 1.0 / out.entries.size();
  }
  return out;
}

}  // namespace mtr
