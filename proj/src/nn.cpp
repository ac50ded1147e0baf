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

#include "mtr/nn.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "mtr/kernels.hpp"

namespace mtr::nn
{
namespace
{

std::atomic<std::uint64_t> g_order{1};
thread_local bool g_grad_enabled = true;
thread_local GradSink * g_active_sink = nullptr;

Var make_node(Mat val)
{
  auto n = std::make_shared<Node>();
  n->val = std::move(val);
  n->order = g_order.fetch_add(1, std::memory_order_relaxed);
  return n;
}

void ensure_grad(Node & n)
{
  if (n.grad.empty()) {
    n.grad = Mat(n.val.rows, n.val.cols);
  }
}

void add_grad(Node & n, const Mat & delta)
{
  if (!n.requires_grad) {
    return;
  }
  if (n.is_param && g_active_sink != nullptr) {
    g_active_sink->add(n, delta);
    return;
  }
  ensure_grad(n);
  for (std::size_t i = 0; i < delta.data.size(); ++i) {
    n.grad.data[i] += delta.data[i];
  }
}

/// Wire up a node from its parents when gradients are being recorded.
Var attach(Var out, std::vector<Var> parents, std::function<void(Node &)> bp)
{
  bool needs = false;
  if (g_grad_enabled) {
    for (const auto & p : parents) {
      needs = needs || p->requires_grad;
    }
  }
  if (needs) {
    out->requires_grad = true;
    out->parents = std::move(parents);
    out->backprop = std::move(bp);
  }
  return out;
}

void check_same_shape(const Var & a, const Var & b)
{
  if (!a->val.same_shape(b->val)) {
    throw std::invalid_argument("nn: shape mismatch in elementwise op");
  }
}

}  // namespace

bool grad_enabled() { return g_grad_enabled; }

NoGradGuard::NoGradGuard() : prev_(g_grad_enabled) { g_grad_enabled = false; }
NoGradGuard::~NoGradGuard() { g_grad_enabled = prev_; }

void GradSink::add(const Node & param, const Mat & delta)
{
  auto it = grads.find(&param);
  if (it == grads.end()) {
    grads.emplace(&param, delta);
    return;
  }
  for (std::size_t i = 0; i < delta.data.size(); ++i) {
    it->second.data[i] += delta.data[i];
  }
}

void GradSink::merge(const GradSink & other)
{
  for (const auto & [node, g] : other.grads) {
    auto it = grads.find(node);
    if (it == grads.end()) {
      grads.emplace(node, g);
    } else {
      for (std::size_t i = 0; i < g.data.size(); ++i) {
        it->second.data[i] += g.data[i];
      }
    }
  }
}

void GradSink::scale(double s)
{
  for (auto & [node, g] : grads) {
    for (auto & x : g.data) {
      x *= s;
    }
  }
}

Var constant(Mat v) { return make_node(std::move(v)); }

Var make_param(std::string name, Mat v)
{
  auto n = make_node(std::move(v));
  n->requires_grad = true;
  n->is_param = true;
  n->name = std::move(name);
  return n;
}

void backward(const Var & root, GradSink * sink)
{
  if (root->val.rows != 1 || root->val.cols != 1) {
    throw std::invalid_argument("nn::backward: root must be a scalar");
  }
  // Reverse creation order is a valid topological order: parents are always
  // created before children.
  std::vector<Node *> reached;
  std::unordered_set<Node *> seen;
  std::vector<Node *> stack{root.get()};
  seen.insert(root.get());
  while (!stack.empty()) {
    Node * n = stack.back();
    stack.pop_back();
    reached.push_back(n);
    for (const auto & p : n->parents) {
      if (p->requires_grad && seen.insert(p.get()).second) {
        stack.push_back(p.get());
      }
    }
  }
  std::sort(reached.begin(), reached.end(),
            [](const Node * a, const Node * b) { return a->order > b->order; });

  ensure_grad(*root);
  root->grad(0, 0) += 1.0;

  GradSink * prev = g_active_sink;
  g_active_sink = sink;
  for (Node * n : reached) {
    if (n->backprop && !n->grad.empty()) {
      n->backprop(*n);
    }
  }
  g_active_sink = prev;
}

Var add(const Var & a, const Var & b)
{
  check_same_shape(a, b);
  Mat v = a->val;
  for (std::size_t i = 0; i < v.data.size(); ++i) {
    v.data[i] += b->val.data[i];
  }
  return attach(make_node(std::move(v)), {a, b}, [a, b](Node & n) {
    add_grad(*a, n.grad);
    add_grad(*b, n.grad);
  });
}

Var sub(const Var & a, const Var & b)
{
  check_same_shape(a, b);
  Mat v = a->val;
  for (std::size_t i = 0; i < v.data.size(); ++i) {
    v.data[i] -= b->val.data[i];
  }
  return attach(make_node(std::move(v)), {a, b}, [a, b](Node & n) {
    add_grad(*a, n.grad);
    Mat neg = n.grad;
    for (auto & x : neg.data) {
      x = -x;
    }
    add_grad(*b, neg);
  });
}

Var mul(const Var & a, const Var & b)
{
  check_same_shape(a, b);
  Mat v = a->val;
  for (std::size_t i = 0; i < v.data.size(); ++i) {
    v.data[i] *= b->val.data[i];
  }
  return attach(make_node(std::move(v)), {a, b}, [a, b](Node & n) {
    Mat da = n.grad;
    for (std::size_t i = 0; i < da.data.size(); ++i) {
      da.data[i] *= b->val.data[i];
    }
    add_grad(*a, da);
    Mat db = n.grad;
    for (std::size_t i = 0; i < db.data.size(); ++i) {
      db.data[i] *= a->val.data[i];
    }
    add_grad(*b, db);
  });
}

Var divide(const Var & a, const Var & b)
{
  check_same_shape(a, b);
  Mat v = a->val;
  for (std::size_t i = 0; i < v.data.size(); ++i) {
    v.data[i] /= b->val.data[i];
  }
  return attach(make_node(std::move(v)), {a, b}, [a, b](Node & n) {
    Mat da = n.grad;
    for (std::size_t i = 0; i < da.data.size(); ++i) {
      da.data[i] /= b->val.data[i];
    }
    add_grad(*a, da);
    Mat db = n.grad;
    for (std::size_t i = 0; i < db.data.size(); ++i) {
      db.data[i] *= -n.val.data[i] / b->val.data[i];
    }
    add_grad(*b, db);
  });
}

Var affine(const Var & a, double scale, double shift)
{
  Mat v = a->val;
  for (auto & x : v.data) {
    x = scale * x + shift;
  }
  return attach(make_node(std::move(v)), {a}, [a, scale](Node & n) {
    Mat da = n.grad;
    for (auto & x : da.data) {
      x *= scale;
    }
    add_grad(*a, da);
  });
}

Var relu(const Var & a)
{
  Mat v = a->val;
  for (auto & x : v.data) {
    x = x > 0.0 ? x : 0.0;
  }
  return attach(make_node(std::move(v)), {a}, [a](Node & n) {
    Mat da = n.grad;
    for (std::size_t i = 0; i < da.data.size(); ++i) {
      if (a->val.data[i] <= 0.0) {
        da.data[i] = 0.0;
      }
    }
    add_grad(*a, da);
  });
}

Var exp(const Var & a)
{
  Mat v = a->val;
  for (auto & x : v.data) {
    x = std::exp(x);
  }
  auto out = make_node(std::move(v));
  return attach(out, {a}, [a](Node & n) {
    Mat da = n.grad;
    for (std::size_t i = 0; i < da.data.size(); ++i) {
      da.data[i] *= n.val.data[i];
    }
    add_grad(*a, da);
  });
}

Var log(const Var & a)
{
  Mat v = a->val;
  for (auto & x : v.data) {
    x = std::log(x);
  }
  return attach(make_node(std::move(v)), {a}, [a](Node & n) {
    Mat da = n.grad;
    for (std::size_t i = 0; i < da.data.size(); ++i) {
      da.data[i] /= a->val.data[i];
    }
    add_grad(*a, da);
  });
}

Var tanh(const Var & a)
{
  Mat v = a->val;
  for (auto & x : v.data) {
    x = std::tanh(x);
  }
  auto out = make_node(std::move(v));
  return attach(out, {a}, [a](Node & n) {
    Mat da = n.grad;
    for (std::size_t i = 0; i < da.data.size(); ++i) {
      const double y = n.val.data[i];
      da.data[i] *= 1.0 - y * y;
    }
    add_grad(*a, da);
  });
}

Var reciprocal(const Var & a)
{
  Mat v = a->val;
  for (auto & x : v.data) {
    x = 1.0 / x;
  }
  auto out = make_node(std::move(v));
  return attach(out, {a}, [a](Node & n) {
    Mat da = n.grad;
    for (std::size_t i = 0; i < da.data.size(); ++i) {
      const double y = n.val.data[i];
      da.data[i] *= -y * y;
    }
    add_grad(*a, da);
  });
}

Var clamp(const Var & a, double lo, double hi)
{
  Mat v = a->val;
  for (auto & x : v.data) {
    x = std::min(hi, std::max(lo, x));
  }
  return attach(make_node(std::move(v)), {a}, [a, lo, hi](Node & n) {
    Mat da = n.grad;
    for (std::size_t i = 0; i < da.data.size(); ++i) {
      const double x = a->val.data[i];
      if (x <= lo || x >= hi) {
        da.data[i] = 0.0;
      }
    }
    add_grad(*a, da);
  });
}

Var matmul(const Var & a, const Var & b)
{
  if (a->val.cols != b->val.rows) {
    throw std::invalid_argument("nn::matmul: inner dimensions disagree");
  }
  Mat v;
  kernels::matmul(a->val, b->val, v);
  return attach(make_node(std::move(v)), {a, b}, [a, b](Node & n) {
    Mat da;
    kernels::matmul_nt(n.grad, b->val, da);
    add_grad(*a, da);
    Mat db;
    kernels::matmul_tn(a->val, n.grad, db);
    add_grad(*b, db);
  });
}

Var add_row(const Var & a, const Var & bias)
{
  if (bias->val.rows != 1 || bias->val.cols != a->val.cols) {
    throw std::invalid_argument("nn::add_row: bias must be 1 x cols");
  }
  Mat v = a->val;
  for (int i = 0; i < v.rows; ++i) {
    double * r = v.row_ptr(i);
    for (int j = 0; j < v.cols; ++j) {
      r[j] += bias->val.data[j];
    }
  }
  return attach(make_node(std::move(v)), {a, bias}, [a, bias](Node & n) {
    add_grad(*a, n.grad);
    Mat db(1, n.grad.cols);
    for (int i = 0; i < n.grad.rows; ++i) {
      const double * r = n.grad.row_ptr(i);
      for (int j = 0; j < n.grad.cols; ++j) {
        db.data[j] += r[j];
      }
    }
    add_grad(*bias, db);
  });
}

Var slice_cols(const Var & a, int col0, int ncols)
{
  if (col0 < 0 || ncols < 0 || col0 + ncols > a->val.cols) {
    throw std::invalid_argument("nn::slice_cols: range out of bounds");
  }
  Mat v(a->val.rows, ncols);
  for (int i = 0; i < v.rows; ++i) {
    std::copy_n(a->val.row_ptr(i) + col0, ncols, v.row_ptr(i));
  }
  return attach(make_node(std::move(v)), {a}, [a, col0, ncols](Node & n) {
    Mat da(a->val.rows, a->val.cols);
    for (int i = 0; i < n.grad.rows; ++i) {
      std::copy_n(n.grad.row_ptr(i), ncols, da.row_ptr(i) + col0);
    }
    add_grad(*a, da);
  });
}

Var slice_rows(const Var & a, int row0, int nrows)
{
  if (row0 < 0 || nrows < 0 || row0 + nrows > a->val.rows) {
    throw std::invalid_argument("nn::slice_rows: range out of bounds");
  }
  Mat v(nrows, a->val.cols);
  std::copy_n(a->val.row_ptr(row0), static_cast<std::size_t>(nrows) * a->val.cols, v.data.data());
  return attach(make_node(std::move(v)), {a}, [a, row0, nrows](Node & n) {
    Mat da(a->val.rows, a->val.cols);
    std::copy_n(n.grad.data.data(), n.grad.data.size(), da.row_ptr(row0));
    add_grad(*a, da);
  });
}

Var concat_cols(const Var & a, const Var & b)
{
  if (a->val.rows != b->val.rows) {
    throw std::invalid_argument("nn::concat_cols: row counts disagree");
  }
  Mat v(a->val.rows, a->val.cols + b->val.cols);
  for (int i = 0; i < v.rows; ++i) {
    std::copy_n(a->val.row_ptr(i), a->val.cols, v.row_ptr(i));
    std::copy_n(b->val.row_ptr(i), b->val.cols, v.row_ptr(i) + a->val.cols);
  }
  return attach(make_node(std::move(v)), {a, b}, [a, b](Node & n) {
    Mat da(a->val.rows, a->val.cols);
    Mat db(b->val.rows, b->val.cols);
    for (int i = 0; i < n.grad.rows; ++i) {
      std::copy_n(n.grad.row_ptr(i), a->val.cols, da.row_ptr(i));
      std::copy_n(n.grad.row_ptr(i) + a->val.cols, b->val.cols, db.row_ptr(i));
    }
    add_grad(*a, da);
    add_grad(*b, db);
  });
}

Var concat_rows(const std::vector<Var> & parts)
{
  if (parts.empty()) {
    throw std::invalid_argument("nn::concat_rows: no parts");
  }
  int rows = 0;
  const int cols = parts.front()->val.cols;
  for (const auto & p : parts) {
    if (p->val.cols != cols) {
      throw std::invalid_argument("nn::concat_rows: column counts disagree");
    }
    rows += p->val.rows;
  }
  Mat v(rows, cols);
  int r = 0;
  for (const auto & p : parts) {
    std::copy_n(p->val.data.data(), p->val.data.size(), v.row_ptr(r));
    r += p->val.rows;
  }
  return attach(make_node(std::move(v)), parts, [parts](Node & n) {
    int r = 0;
    for (const auto & p : parts) {
      Mat dp(p->val.rows, p->val.cols);
      std::copy_n(n.grad.row_ptr(r), dp.data.size(), dp.data.data());
      add_grad(*p, dp);
      r += p->val.rows;
    }
  });
}

Var transpose(const Var & a)
{
  Mat v(a->val.cols, a->val.rows);
  for (int i = 0; i < a->val.rows; ++i) {
    for (int j = 0; j < a->val.cols; ++j) {
      v(j, i) = a->val(i, j);
    }
  }
  return attach(make_node(std::move(v)), {a}, [a](Node & n) {
    Mat da(a->val.rows, a->val.cols);
    for (int i = 0; i < n.grad.rows; ++i) {
      for (int j = 0; j < n.grad.cols; ++j) {
        da(j, i) = n.grad(i, j);
      }
    }
    add_grad(*a, da);
  });
}

Var mul_col(const Var & a, const Var & col)
{
  if (col->val.cols != 1 || col->val.rows != a->val.rows) {
    throw std::invalid_argument("nn::mul_col: col must be rows x 1");
  }
  Mat v = a->val;
  for (int i = 0; i < v.rows; ++i) {
    const double s = col->val(i, 0);
    double * r = v.row_ptr(i);
    for (int j = 0; j < v.cols; ++j) {
      r[j] *= s;
    }
  }
  return attach(make_node(std::move(v)), {a, col}, [a, col](Node & n) {
    Mat da = n.grad;
    for (int i = 0; i < da.rows; ++i) {
      const double s = col->val(i, 0);
      double * r = da.row_ptr(i);
      for (int j = 0; j < da.cols; ++j) {
        r[j] *= s;
      }
    }
    add_grad(*a, da);
    Mat dc(col->val.rows, 1);
    for (int i = 0; i < n.grad.rows; ++i) {
      const double * g = n.grad.row_ptr(i);
      const double * x = a->val.row_ptr(i);
      double acc = 0.0;
      for (int j = 0; j < n.grad.cols; ++j) {
        acc += g[j] * x[j];
      }
      dc(i, 0) = acc;
    }
    add_grad(*col, dc);
  });
}

Var sum_all(const Var & a)
{
  Mat v(1, 1);
  for (double x : a->val.data) {
    v.data[0] += x;
  }
  return attach(make_node(std::move(v)), {a}, [a](Node & n) {
    Mat da(a->val.rows, a->val.cols, n.grad(0, 0));
    add_grad(*a, da);
  });
}

Var softmax_rows(const Var & a)
{
  Mat v;
  kernels::softmax_rows(a->val, v);
  auto out = make_node(std::move(v));
  return attach(out, {a}, [a](Node & n) {
    Mat da(n.grad.rows, n.grad.cols);
    for (int i = 0; i < n.grad.rows; ++i) {
      const double * g = n.grad.row_ptr(i);
      const double * y = n.val.row_ptr(i);
      double dot = 0.0;
      for (int j = 0; j < n.grad.cols; ++j) {
        dot += g[j] * y[j];
      }
      double * d = da.row_ptr(i);
      for (int j = 0; j < n.grad.cols; ++j) {
        d[j] = y[j] * (g[j] - dot);
      }
    }
    add_grad(*a, da);
  });
}

Var logsumexp_rows(const Var & a)
{
  Mat v(a->val.rows, 1);
  for (int i = 0; i < a->val.rows; ++i) {
    const double * x = a->val.row_ptr(i);
    double mx = x[0];
    for (int j = 1; j < a->val.cols; ++j) {
      mx = std::max(mx, x[j]);
    }
    double s = 0.0;
    for (int j = 0; j < a->val.cols; ++j) {
      s += std::exp(x[j] - mx);
    }
    v(i, 0) = mx + std::log(s);
  }
  auto out = make_node(std::move(v));
  return attach(out, {a}, [a](Node & n) {
    Mat da(a->val.rows, a->val.cols);
    for (int i = 0; i < a->val.rows; ++i) {
      const double g = n.grad(i, 0);
      const double lse = n.val(i, 0);
      const double * x = a->val.row_ptr(i);
      double * d = da.row_ptr(i);
      for (int j = 0; j < a->val.cols; ++j) {
        d[j] = g * std::exp(x[j] - lse);
      }
    }
    add_grad(*a, da);
  });
}

Var layer_norm(const Var & x, const Var & gamma, const Var & beta, double eps)
{
  const int rows = x->val.rows;
  const int cols = x->val.cols;
  if (gamma->val.cols != cols || beta->val.cols != cols || gamma->val.rows != 1 ||
      beta->val.rows != 1) {
    throw std::invalid_argument("nn::layer_norm: gamma/beta must be 1 x cols");
  }
  Mat v(rows, cols);
  Mat xhat(rows, cols);
  std::vector<double> inv_std(rows);
  for (int i = 0; i < rows; ++i) {
    const double * r = x->val.row_ptr(i);
    double mean = 0.0;
    for (int j = 0; j < cols; ++j) {
      mean += r[j];
    }
    mean /= cols;
    double var = 0.0;
    for (int j = 0; j < cols; ++j) {
      const double d = r[j] - mean;
      var += d * d;
    }
    var /= cols;
    const double istd = 1.0 / std::sqrt(var + eps);
    inv_std[i] = istd;
    double * h = xhat.row_ptr(i);
    double * o = v.row_ptr(i);
    for (int j = 0; j < cols; ++j) {
      h[j] = (r[j] - mean) * istd;
      o[j] = h[j] * gamma->val.data[j] + beta->val.data[j];
    }
  }
  return attach(
    make_node(std::move(v)), {x, gamma, beta},
    [x, gamma, beta, xhat = std::move(xhat), inv_std = std::move(inv_std)](Node & n) {
      const int rows = n.grad.rows;
      const int cols = n.grad.cols;
      Mat dx(rows, cols);
      Mat dgamma(1, cols);
      Mat dbeta(1, cols);
      for (int i = 0; i < rows; ++i) {
        const double * g = n.grad.row_ptr(i);
        const double * h = xhat.row_ptr(i);
        // gh = dL/dxhat
        double mean_gh = 0.0;
        double mean_gh_h = 0.0;
        for (int j = 0; j < cols; ++j) {
          const double gh = g[j] * gamma->val.data[j];
          mean_gh += gh;
          mean_gh_h += gh * h[j];
          dgamma.data[j] += g[j] * h[j];
          dbeta.data[j] += g[j];
        }
        mean_gh /= cols;
        mean_gh_h /= cols;
        double * d = dx.row_ptr(i);
        for (int j = 0; j < cols; ++j) {
          const double gh = g[j] * gamma->val.data[j];
          d[j] = (gh - mean_gh - h[j] * mean_gh_h) * inv_std[i];
        }
      }
      add_grad(*x, dx);
      add_grad(*gamma, dgamma);
      add_grad(*beta, dbeta);
    });
}

Var segment_max_pool(const Var & x, int segments, int points_per_segment,
                     const std::vector<double> & valid)
{
  const int cols = x->val.cols;
  if (x->val.rows != segments * points_per_segment) {
    throw std::invalid_argument("nn::segment_max_pool: row count mismatch");
  }
  if (static_cast<int>(valid.size()) != x->val.rows) {
    throw std::invalid_argument("nn::segment_max_pool: valid size mismatch");
  }
  Mat v(segments, cols);
  // argmax row per (segment, channel); -1 when the segment has no valid row.
  std::vector<int> arg(static_cast<std::size_t>(segments) * cols, -1);
  for (int s = 0; s < segments; ++s) {
    double * o = v.row_ptr(s);
    int * as = arg.data() + static_cast<std::size_t>(s) * cols;
    for (int p = 0; p < points_per_segment; ++p) {
      const int row = s * points_per_segment + p;
      if (valid[row] == 0.0) {
        continue;
      }
      const double * r = x->val.row_ptr(row);
      for (int j = 0; j < cols; ++j) {
        if (as[j] < 0 || r[j] > v(s, j)) {
          o[j] = r[j];
          as[j] = row;
        }
      }
    }
    for (int j = 0; j < cols; ++j) {
      if (as[j] < 0) {
        o[j] = 0.0;
      }
    }
  }
  return attach(make_node(std::move(v)), {x},
                [x, segments, cols, arg = std::move(arg)](Node & n) {
                  Mat dx(x->val.rows, x->val.cols);
                  for (int s = 0; s < segments; ++s) {
                    const double * g = n.grad.row_ptr(s);
                    const int * as = arg.data() + static_cast<std::size_t>(s) * cols;
                    for (int j = 0; j < cols; ++j) {
                      if (as[j] >= 0) {
                        dx(as[j], j) += g[j];
                      }
                    }
                  }
                  add_grad(*x, dx);
                });
}

Var dropout(const Var & a, double rate, std::mt19937_64 & rng, bool training)
{
  if (!training || rate <= 0.0) {
    return a;
  }
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Mat mask(a->val.rows, a->val.cols);
  const double keep = 1.0 - rate;
  for (auto & m : mask.data) {
    m = u(rng) < keep ? 1.0 / keep : 0.0;
  }
  Mat v = a->val;
  for (std::size_t i = 0; i < v.data.size(); ++i) {
    v.data[i] *= mask.data[i];
  }
  return attach(make_node(std::move(v)), {a}, [a, mask = std::move(mask)](Node & n) {
    Mat da = n.grad;
    for (std::size_t i = 0; i < da.data.size(); ++i) {
      da.data[i] *= mask.data[i];
    }
    add_grad(*a, da);
  });
}

Var ParamStore::create(const std::string & name, int rows, int cols, Init init,
                       std::mt19937_64 & rng)
{
  if (params_.count(name) != 0) {
    throw std::invalid_argument("ParamStore: duplicate parameter '" + name + "'");
  }
  Mat v(rows, cols);
  if (init == Init::kXavier) {
    const double limit = std::sqrt(6.0 / (rows + cols));
    std::uniform_real_distribution<double> u(-limit, limit);
    for (auto & x : v.data) {
      x = u(rng);
    }
  }
  auto p = make_param(name, std::move(v));
  params_.emplace(name, p);
  return p;
}

const Var & ParamStore::at(const std::string & name) const
{
  auto it = params_.find(name);
  if (it == params_.end()) {
    throw std::invalid_argument("ParamStore: unknown parameter '" + name + "'");
  }
  return it->second;
}

bool ParamStore::contains(const std::string & name) const { return params_.count(name) != 0; }

std::size_t ParamStore::scalar_count() const
{
  std::size_t n = 0;
  for (const auto & [k, p] : params_) {
    n += p->val.size();
  }
  return n;
}

void ParamStore::zero_grad()
{
  for (auto & [k, p] : params_) {
    p->grad = Mat();
  }
}

}  // namespace mtr::nn
