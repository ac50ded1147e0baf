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

#include <cassert>
#include <cstddef>
#include <vector>

namespace mtr
{

/// Dense row-major matrix of doubles. The single storage type shared by the
/// numeric stack; kernels and the autodiff layer operate on it directly.
struct Mat
{
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0.0) {}
  Mat(int r, int c, double fill) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, fill)
  {
  }

  static Mat zeros(int r, int c) { return Mat(r, c); }

  double & operator()(int r, int c)
  {
    assert(r >= 0 && r < rows && c >= 0 && c < cols);
    return data[static_cast<std::size_t>(r) * cols + c];
  }
  double operator()(int r, int c) const
  {
    assert(r >= 0 && r < rows && c >= 0 && c < cols);
    return data[static_cast<std::size_t>(r) * cols + c];
  }

  double * row_ptr(int r) { return data.data() + static_cast<std::size_t>(r) * cols; }
  const double * row_ptr(int r) const { return data.data() + static_cast<std::size_t>(r) * cols; }

  std::size_t size() const { return data.size(); }
  bool empty() const { return data.empty(); }
  bool same_shape(const Mat & o) const { return rows == o.rows && cols == o.cols; }

  void fill(double v)
  {
    for (auto & x : data) x = v;
  }
};

}  // namespace mtr
