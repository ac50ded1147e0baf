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

#include "mtr/intention.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace mtr
{
namespace
{

int nearest_centroid(const std::vector<Waypoint> & centroids, const Waypoint & p)
{
  int best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < centroids.size(); ++c) {
    const double d = squared_distance(centroids[c], p);
    if (d < best_d) {
      best_d = d;
      best = static_cast<int>(c);
    }
  }
  return best;
}

double sse_of(const std::vector<Waypoint> & pts, const std::vector<Waypoint> & centroids,
              const std::vector<int> & assign)
{
  double sse = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    sse += squared_distance(pts[i], centroids[assign[i]]);
  }
  return sse;
}

std::vector<Waypoint> kmeanspp_init(const std::vector<Waypoint> & pts, int k,
                                    std::mt19937_64 & rng)
{
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Waypoint> centroids;
  centroids.reserve(k);
  centroids.push_back(pts[static_cast<std::size_t>(u(rng) * pts.size()) % pts.size()]);
  std::vector<double> d2(pts.size());
  while (static_cast<int>(centroids.size()) < k) {
    double total = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      d2[i] = squared_distance(pts[i], centroids[nearest_centroid(centroids, pts[i])]);
      total += d2[i];
    }
    std::size_t pick = 0;
    if (total > 0.0) {
      double x = u(rng) * total;
      for (std::size_t i = 0; i < pts.size(); ++i) {
        if (x < d2[i] || i + 1 == pts.size()) {
          pick = i;
          break;
        }
        x -= d2[i];
      }
    } else {
      pick = static_cast<std::size_t>(u(rng) * pts.size()) % pts.size();
    }
    centroids.push_back(pts[pick]);
  }
  return centroids;
}

}  // namespace

IntentionPointSet cluster_intention_points(const std::vector<Waypoint> & endpoints, int k,
                                           std::uint64_t seed, int max_iters,
                                           AgentCategory category,
                                           std::vector<double> * sse_history)
{
  if (k <= 0) {
    throw std::invalid_argument("cluster_intention_points: k must be positive");
  }
  if (static_cast<int>(endpoints.size()) < k) {
    throw std::invalid_argument("cluster_intention_points: fewer endpoints (" +
                                std::to_string(endpoints.size()) + ") than clusters (" +
                                std::to_string(k) + ")");
  }
  for (const auto & p : endpoints) {
    if (!std::isfinite(p[0]) || !std::isfinite(p[1])) {
      throw std::invalid_argument("cluster_intention_points: non-finite endpoint");
    }
  }
  if (sse_history != nullptr) {
    sse_history->clear();
  }

  std::mt19937_64 rng(seed);
  std::vector<Waypoint> centroids = kmeanspp_init(endpoints, k, rng);
  std::vector<int> assign(endpoints.size());
  for (std::size_t i = 0; i < endpoints.size(); ++i) {
    assign[i] = nearest_centroid(centroids, endpoints[i]);
  }
  if (sse_history != nullptr) {
    sse_history->push_back(sse_of(endpoints, centroids, assign));
  }

  for (int iter = 0; iter < max_iters; ++iter) {
    // Means of each cluster.
    std::vector<Waypoint> sums(k, {0.0, 0.0});
    std::vector<int> counts(k, 0);
    for (std::size_t i = 0; i < endpoints.size(); ++i) {
      sums[assign[i]][0] += endpoints[i][0];
      sums[assign[i]][1] += endpoints[i][1];
      ++counts[assign[i]];
    }
    for (int c = 0; c < k; ++c) {
      if (counts[c] > 0) {
        centroids[c] = {sums[c][0] / counts[c], sums[c][1] / counts[c]};
      }
    }
    // Re-seed empty clusters at the point farthest from its own centroid.
    for (int c = 0; c < k; ++c) {
      if (counts[c] > 0) {
        continue;
      }
      double worst = -1.0;
      std::size_t worst_i = 0;
      for (std::size_t i = 0; i < endpoints.size(); ++i) {
        const double d = squared_distance(endpoints[i], centroids[assign[i]]);
        if (d > worst) {
          worst = d;
          worst_i = i;
        }
      }
      centroids[c] = endpoints[worst_i];
    }

    std::vector<int> next(endpoints.size());
    for (std::size_t i = 0; i < endpoints.size(); ++i) {
      next[i] = nearest_centroid(centroids, endpoints[i]);
    }
    if (sse_history != nullptr) {
      sse_history->push_back(sse_of(endpoints, centroids, next));
    }
    if (next == assign) {
      break;
    }
    assign = std::move(next);
  }

  // Canonical order: angle, then radius. Keeps serialization deterministic.
  std::stable_sort(centroids.begin(), centroids.end(), [](const Waypoint & a, const Waypoint & b) {
    const double aa = std::atan2(a[1], a[0]);
    const double ab = std::atan2(b[1], b[0]);
    if (aa != ab) {
      return aa < ab;
    }
    return a[0] * a[0] + a[1] * a[1] < b[0] * b[0] + b[1] * b[1];
  });

  IntentionPointSet out;
  out.category = category;
  out.k = k;
  out.seed = seed;
  out.points = std::move(centroids);
  return out;
}

int assign_positive_mode(const IntentionPointSet & intentions, const Waypoint & gt_endpoint)
{
  if (!std::isfinite(gt_endpoint[0]) || !std::isfinite(gt_endpoint[1])) {
    throw std::invalid_argument("assign_positive_mode: non-finite endpoint");
  }
  if (intentions.points.empty()) {
    throw std::invalid_argument("assign_positive_mode: empty intention set");
  }
  int best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < intentions.points.size(); ++i) {
    const double d = squared_distance(intentions.points[i], gt_endpoint);
    if (d < best_d) {
      best_d = d;
      best = static_cast<int>(i);
    }
  }
  return best;
}

bool gt_endpoint_of(const Scene & scene, Waypoint * out)
{
  const AgentTrack * interest = scene.interest_agent();
  if (interest == nullptr) {
    return false;
  }
  for (int t = static_cast<int>(interest->states.size()) - 1; t > scene.current_index; --t) {
    if (interest->states[t].valid) {
      *out = {interest->states[t].x, interest->states[t].y};
      return true;
    }
  }
  return false;
}

const IntentionPointSet & IntentionLibrary::for_category(AgentCategory c) const
{
  auto it = by_category.find(c);
  if (it == by_category.end()) {
    throw std::invalid_argument("no intention points for category '" + to_string(c) + "'");
  }
  return it->second;
}

}  // namespace mtr
