// Copyright 2026 The qhelab authors
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
#include <complex>
#include <span>

namespace qhelab::core {

using cplx = std::complex<double>;

/// Dense 2x2 complex matrix in row-major order.
using Mat2 = std::array<cplx, 4>;
/// Dense 4x4 complex matrix in row-major order.
using Mat4 = std::array<cplx, 16>;

Mat2 mul(const Mat2& a, const Mat2& b);
Mat4 mul(const Mat4& a, const Mat4& b);
Mat2 adjoint(const Mat2& a);
Mat4 adjoint(const Mat4& a);
Mat2 scale(cplx s, const Mat2& a);
Mat4 scale(cplx s, const Mat4& a);
Mat4 kron(const Mat2& a, const Mat2& b);

double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b);

/// True iff a == lambda * b for some unit scalar lambda, in the max norm.
bool equal_up_to_global_phase(std::span<const cplx> a, std::span<const cplx> b,
                              double tol = 1e-10);

/// The unit scalar lambda minimizing the mismatch above (1 if b ~ 0).
cplx relative_phase(std::span<const cplx> a, std::span<const cplx> b);

/// max |(U^dag U - I)_ij| for a dim x dim matrix.
double unitarity_defect(std::span<const cplx> u, int dim);

}  // namespace qhelab::core
