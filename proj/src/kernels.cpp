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

#include "mtr/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>

namespace mtr::kernels
{
namespace
{

// Products below this many multiply-adds are not worth a parallel region.
constexpr long long kParallelFlopThreshold = 1 << 16;

bool use_parallel(long long flops)
{
  return flops >= kParallelFlopThreshold && omp_get_max_threads() > 1 && !omp_in_parallel();
}

inline void matmul_row(
  const double * a_row, const Mat & b, double * c_row, int inner, int out_cols)
{
  std::fill(c_row, c_row + out_cols, 0.0);
  for (int k = 0; k < inner; ++k) {
    const double aik = a_row[k];
    if (aik == 0.0) {
      continue;
    }
    const double * b_row = b.row_ptr(k);
    for (int j = 0; j < out_cols; ++j) {
      c_row[j] += aik * b_row[j];
    }
  }
}

inline void matmul_tn_row(const Mat & a, const Mat & b, double * c_row, int i)
{
  // c(i, :) = sum_m a(m, i) * b(m, :)
  std::fill(c_row, c_row + b.cols, 0.0);
  for (int m = 0; m < a.rows; ++m) {
    const double ami = a(m, i);
    if (ami == 0.0) {
      continue;
    }
    const double * b_row = b.row_ptr(m);
    for (int j = 0; j < b.cols; ++j) {
      c_row[j] += ami * b_row[j];
    }
  }
}

inline void matmul_nt_row(const Mat & a, const Mat & b, double * c_row, int i)
{
  // c(i, j) = dot(a(i, :), b(j, :))
  const double * a_row = a.row_ptr(i);
  for (int j = 0; j < b.rows; ++j) {
    const double * b_row = b.row_ptr(j);
    double acc = 0.0;
    for (int k = 0; k < a.cols; ++k) {
      acc += a_row[k] * b_row[k];
    }
    c_row[j] = acc;
  }
}

inline void softmax_row(const double * x, double * y, int n)
{
  double mx = x[0];
  for (int j = 1; j < n; ++j) {
    mx = std::max(mx, x[j]);
  }
  double sum = 0.0;
  for (int j = 0; j < n; ++j) {
    y[j] = std::exp(x[j] - mx);
    sum += y[j];
  }
  const double inv = 1.0 / sum;
  for (int j = 0; j < n; ++j) {
    y[j] *= inv;
  }
}

}  // namespace

void matmul_serial(const Mat & a, const Mat & b, Mat & c)
{
  assert(a.cols == b.rows);
  c = Mat(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i) {
    matmul_row(a.row_ptr(i), b, c.row_ptr(i), a.cols, b.cols);
  }
}

void matmul_parallel(const Mat & a, const Mat & b, Mat & c)
{
  assert(a.cols == b.rows);
  c = Mat(a.rows, b.cols);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < a.rows; ++i) {
    matmul_row(a.row_ptr(i), b, c.row_ptr(i), a.cols, b.cols);
  }
}

void matmul_tn_serial(const Mat & a, const Mat & b, Mat & c)
{
  assert(a.rows == b.rows);
  c = Mat(a.cols, b.cols);
  for (int i = 0; i < a.cols; ++i) {
    matmul_tn_row(a, b, c.row_ptr(i), i);
  }
}

void matmul_tn_parallel(const Mat & a, const Mat & b, Mat & c)
{
  assert(a.rows == b.rows);
  c = Mat(a.cols, b.cols);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < a.cols; ++i) {
    matmul_tn_row(a, b, c.row_ptr(i), i);
  }
}

void matmul_nt_serial(const Mat & a, const Mat & b, Mat & c)
{
  assert(a.cols == b.cols);
  c = Mat(a.rows, b.rows);
  for (int i = 0; i < a.rows; ++i) {
    matmul_nt_row(a, b, c.row_ptr(i), i);
  }
}

void matmul_nt_parallel(const Mat & a, const Mat & b, Mat & c)
{
  assert(a.cols == b.cols);
  c = Mat(a.rows, b.rows);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < a.rows; ++i) {
    matmul_nt_row(a, b, c.row_ptr(i), i);
  }
}

void softmax_rows_serial(const Mat & x, Mat & y)
{
  y = Mat(x.rows, x.cols);
  for (int i = 0; i < x.rows; ++i) {
    softmax_row(x.row_ptr(i), y.row_ptr(i), x.cols);
  }
}

void softmax_rows_parallel(const Mat & x, Mat & y)
{
  y = Mat(x.rows, x.cols);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < x.rows; ++i) {
    softmax_row(x.row_ptr(i), y.row_ptr(i), x.cols);
  }
}

void matmul(const Mat & a, const Mat & b, Mat & c)
{
  const long long flops = 1LL * a.rows * a.cols * b.cols;
  if (use_parallel(flops)) {
    matmul_parallel(a, b, c);
  } else {
    matmul_serial(a, b, c);
  }
}

void matmul_tn(const Mat & a, const Mat & b, Mat & c)
{
  const long long flops = 1LL * a.cols * a.rows * b.cols;
  if (use_parallel(flops)) {
    matmul_tn_parallel(a, b, c);
  } else {
    matmul_tn_serial(a, b, c);
  }
}

void matmul_nt(const Mat & a, const Mat & b, Mat & c)
{
  const long long flops = 1LL * a.rows * a.cols * b.rows;
  if (use_parallel(flops)) {
    matmul_nt_parallel(a, b, c);
  } else {
    matmul_nt_serial(a, b, c);
  }
}

void softmax_rows(const Mat & x, Mat & y)
{
  const long long flops = 1LL * x.rows * x.cols;
  if (use_parallel(flops)) {
    softmax_rows_parallel(x, y);
  } else {
    softmax_rows_serial(x, y);
  }
}

}  // namespace mtr::kernels
