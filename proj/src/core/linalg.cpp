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

#include "core/linalg.hpp"

#include <cmath>
#include <cstddef>

namespace qhelab::core {

namespace {

template <size_t N>
std::array<cplx, N * N> mul_impl(const std::array<cplx, N * N>& a,
                                 const std::array<cplx, N * N>& b) {
    std::array<cplx, N * N> out{};
    for (size_t i = 0; i < N; ++i) {
        for (size_t k = 0; k < N; ++k) {
            const cplx aik = a[i * N + k];
            if (aik == cplx{}) {
                continue;
            }
            for (size_t j = 0; j < N; ++j) {
                out[i * N + j] += aik * b[k * N + j];
            }
        }
    }
    return out;
}

template <size_t N>
std::array<cplx, N * N> adjoint_impl(const std::array<cplx, N * N>& a) {
    std::array<cplx, N * N> out{};
    for (size_t i = 0; i < N; ++i) {
        for (size_t j = 0; j < N; ++j) {
            out[j * N + i] = std::conj(a[i * N + j]);
        }
    }
    return out;
}

}  // namespace

Mat2 mul(const Mat2& a, const Mat2& b) { return mul_impl<2>(a, b); }
Mat4 mul(const Mat4& a, const Mat4& b) { return mul_impl<4>(a, b); }
Mat2 adjoint(const Mat2& a) { return adjoint_impl<2>(a); }
Mat4 adjoint(const Mat4& a) { return adjoint_impl<4>(a); }

Mat2 scale(cplx s, const Mat2& a) {
    Mat2 out = a;
    for (auto& v : out) {
        v *= s;
    }
    return out;
}

Mat4 scale(cplx s, const Mat4& a) {
    Mat4 out = a;
    for (auto& v : out) {
        v *= s;
    }
    return out;
}

Mat4 kron(const Mat2& a, const Mat2& b) {
    Mat4 out{};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 2; ++k) {
                for (int l = 0; l < 2; ++l) {
                    out[(i * 2 + k) * 4 + (j * 2 + l)] = a[i * 2 + j] * b[k * 2 + l];
                }
            }
        }
    }
    return out;
}

double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b) {
    double m = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

cplx relative_phase(std::span<const cplx> a, std::span<const cplx> b) {
    size_t pivot = 0;
    double best = 0.0;
    for (size_t i = 0; i < b.size(); ++i) {
        if (std::abs(b[i]) > best) {
            best = std::abs(b[i]);
            pivot = i;
        }
    }
    if (best < 1e-300) {
        return cplx{1.0, 0.0};
    }
    const cplx ratio = a[pivot] / b[pivot];
    const double mag = std::abs(ratio);
    if (mag < 1e-300) {
        return cplx{1.0, 0.0};
    }
    return ratio / mag;
}

bool equal_up_to_global_phase(std::span<const cplx> a, std::span<const cplx> b, double tol) {
    if (a.size() != b.size()) {
        return false;
    }
    const cplx lambda = relative_phase(a, b);
    double m = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a[i] - lambda * b[i]));
    }
    return m <= tol;
}

double unitarity_defect(std::span<const cplx> u, int dim) {
    double m = 0.0;
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            cplx s{};
            for (int k = 0; k < dim; ++k) {
                s += std::conj(u[k * dim + i]) * u[k * dim + j];
            }
            if (i == j) {
                s -= 1.0;
            }
            m = std::max(m, std::abs(s));
        }
    }
    return m;
}

}  // namespace qhelab::core
