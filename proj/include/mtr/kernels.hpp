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

#include "mtr/mat.hpp"

namespace mtr::kernels
{

// Matrix products in the three layouts the backward passes need. Each kernel
// has a serial reference implementation and an OpenMP version parallelized
// over output rows. Rows are independent and every element keeps the same
// inner summation order, so the two variants are bit-identical.

/// c = a * b
void matmul_serial(const Mat & a, const Mat & b, Mat & c);
void matmul_parallel(const Mat & a, const Mat & b, Mat & c);

/// c = a^T * b
void matmul_tn_serial(const Mat & a, const Mat & b, Mat & c);
void matmul_tn_parallel(const Mat & a, const Mat & b, Mat & c);

/// c = a * b^T
void matmul_nt_serial(const Mat & a, const Mat & b, Mat & c);
void matmul_nt_parallel(const Mat & a, const Mat & b, Mat & c);

/// Row-wise softmax, serial and parallel variants.
void softmax_rows_serial(const Mat & x, Mat & y);
void softmax_rows_parallel(const Mat & x, Mat & y);

// Dispatchers: pick the parallel kernel for products above a flop threshold
// unless the caller is already inside a parallel region.
void matmul(const Mat & a, const Mat & b, Mat & c);
void matmul_tn(const Mat & a, const Mat & b, Mat & c);
void matmul_nt(const Mat & a, const Mat & b, Mat & c);
void softmax_rows(const Mat & x, Mat & y);

}  // namespace mtr::kernels
