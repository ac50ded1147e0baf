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
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "mtr/mat.hpp"

namespace mtr::nn
{

// Reverse-mode autodiff over Mat values. Each forward op records its parents
// and a pull-back closure; backward() sweeps the reached subgraph in reverse
// creation order. Graphs are per-forward-pass and freed with their Vars.

struct Node;
using Var = std::shared_ptr<Node>;

struct Node
{
  Mat val;
  Mat grad;  // allocated on first accumulation
  bool requires_grad = false;
  bool is_param = false;
  std::string name;  // parameters only
  std::uint64_t order = 0;
  std::vector<Var> parents;
  std::function<void(Node &)> backprop;
};

/// Thread-local switch; ops created while disabled record no graph.
bool grad_enabled();

/// RAII guard disabling gradient recording (inference forward passes).
struct NoGradGuard
{
  NoGradGuard();
  ~NoGradGuard();
  NoGradGuard(const NoGradGuard &) = delete;
  NoGradGuard & operator=(const NoGradGuard &) = delete;

private:
  bool prev_;
};

/// Destination for leaf (parameter) gradients. When a sink is passed to
/// backward(), parameter grads accumulate here instead of in the shared
/// parameter nodes, so concurrent backward passes over the same parameters
/// do not race.
struct GradSink
{
  std::unordered_map<const Node *, Mat> grads;

  void add(const Node & param, const Mat & delta);
  void merge(const GradSink & other);
  void scale(double s);
};

Var constant(Mat v);
Var make_param(std::string name, Mat v);

/// Backpropagate from a scalar (1x1) root. Parameter gradients go to `sink`
/// when given, otherwise accumulate in each parameter node's `grad`.
void backward(const Var & root, GradSink * sink = nullptr);

// -- elementwise / scalar --
Var add(const Var & a, const Var & b);
Var sub(const Var & a, const Var & b);
Var mul(const Var & a, const Var & b);
Var divide(const Var & a, const Var & b);
Var affine(const Var & a, double scale, double shift);
Var relu(const Var & a);
Var exp(const Var & a);
Var log(const Var & a);
Var tanh(const Var & a);
Var reciprocal(const Var & a);
Var clamp(const Var & a, double lo, double hi);

// -- structure --
Var matmul(const Var & a, const Var & b);
Var add_row(const Var & a, const Var & bias);  // bias is 1 x cols
Var slice_cols(const Var & a, int col0, int ncols);
Var slice_rows(const Var & a, int row0, int nrows);
Var concat_cols(const Var & a, const Var & b);
Var concat_rows(const std::vector<Var> & parts);
Var transpose(const Var & a);
Var mul_col(const Var & a, const Var & col);  // scale row i by col(i, 0)

// -- reductions / normalization --
Var sum_all(const Var & a);
Var softmax_rows(const Var & a);
Var logsumexp_rows(const Var & a);
Var layer_norm(const Var & x, const Var & gamma, const Var & beta, double eps = 1e-5);

/// Max-pool over `points_per_segment` consecutive rows per segment; rows with
/// valid == 0 are excluded, segments with no valid row pool to zero.
Var segment_max_pool(const Var & x, int segments, int points_per_segment,
                     const std::vector<double> & valid);

/// Inverted dropout. Identity when not training or rate == 0.
Var dropout(const Var & a, double rate, std::mt19937_64 & rng, bool training);

enum class Init { kZero, kXavier };

/// Named parameter container. std::map keeps iteration (init, serialization,
/// optimizer order) deterministic.
class ParamStore
{
public:
  Var create(const std::string & name, int rows, int cols, Init init, std::mt19937_64 & rng);
  const Var & at(const std::string & name) const;
  bool contains(const std::string & name) const;
  const std::map<std::string, Var> & all() const { return params_; }
  std::size_t scalar_count() const;
  void zero_grad();

private:
  std::map<std::string, Var> params_;
};

}  // namespace mtr::nn
