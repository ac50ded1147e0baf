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
#include <cmath>
#include <numbers>
#include <vector>

namespace mtr
{

using Waypoint = std::array<double, 2>;

inline double squared_distance(const Waypoint & a, const Waypoint & b)
{
  const double dx = a[0] - b[0];
  const double dy = a[1] - b[1];
  return dx * dx + dy * dy;
}

inline double distance(const Waypoint & a, const Waypoint & b)
{
  return std::sqrt(squared_distance(a, b));
}

/// Wrap an angle to (-pi, pi].
inline double wrap_angle(double a)
{
  constexpr double pi = std::numbers::pi;
  a = std::fmod(a + pi, 2.0 * pi);
  if (a <= 0.0) {
    a += 2.0 * pi;
  }
  return a - pi;
}

/// Rigid transform from a world frame into an agent-centric frame. Records
/// the agent pose (origin, rotation) the normalization removed.
struct Frame
{
  double origin_x = 0.0;
  double origin_y = 0.0;
  double rotation = 0.0;  // heading of the agent in the source frame

  Waypoint to_local(const Waypoint & p) const
  {
    const double c = std::cos(rotation);
    const double s = std::sin(rotation);
    const double dx = p[0] - origin_x;
    const double dy = p[1] - origin_y;
    return {c * dx + s * dy, -s * dx + c * dy};
  }

  /// Rotate a direction/velocity vector into the local frame (no translation).
  Waypoint rotate_to_local(const Waypoint & v) const
  {
    const double c = std::cos(rotation);
    const double s = std::sin(rotation);
    return {c * v[0] + s * v[1], -s * v[0] + c * v[1]};
  }

  Waypoint to_world(const Waypoint & p) const
  {
    const double c = std::cos(rotation);
    const double s = std::sin(rotation);
    return {origin_x + c * p[0] - s * p[1], origin_y + s * p[0] + c * p[1]};
  }
};

}  // namespace mtr
