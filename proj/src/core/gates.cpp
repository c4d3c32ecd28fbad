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

#include "core/gates.hpp"

#include <cmath>
#include <stdexcept>

#include "core/pauli.hpp"

namespace qhelab::core::gates {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440084436210485;
}

const Mat2& I2() {
    static const Mat2 m{{cplx{1, 0}, cplx{}, cplx{}, cplx{1, 0}}};
    return m;
}

const Mat2& X() {
    static const Mat2 m{{cplx{}, cplx{1, 0}, cplx{1, 0}, cplx{}}};
    return m;
}

const Mat2& Y() {
    static const Mat2 m{{cplx{}, cplx{0, -1}, cplx{0, 1}, cplx{}}};
    return m;
}

const Mat2& Z() {
    static const Mat2 m{{cplx{1, 0}, cplx{}, cplx{}, cplx{-1, 0}}};
    return m;
}

const Mat2& H() {
    static const Mat2 m{{cplx{kInvSqrt2, 0}, cplx{kInvSqrt2, 0}, cplx{kInvSqrt2, 0},
                         cplx{-kInvSqrt2, 0}}};
    return m;
}

const Mat2& P() {
    static const Mat2 m{{cplx{1, 0}, cplx{}, cplx{}, cplx{0, 1}}};
    return m;
}

const Mat2& Pdag() {
    static const Mat2 m{{cplx{1, 0}, cplx{}, cplx{}, cplx{0, -1}}};
    return m;
}

const Mat2& T() {
    static const Mat2 m{{cplx{1, 0}, cplx{}, cplx{}, cplx{kInvSqrt2, kInvSqrt2}}};
    return m;
}

const Mat2& Tdag() {
    static const Mat2 m{{cplx{1, 0}, cplx{}, cplx{}, cplx{kInvSqrt2, -kInvSqrt2}}};
    return m;
}

const Mat4& CNOT() {
    static const Mat4 m = [] {
        Mat4 v{};
        v[0 * 4 + 0] = 1;
        v[1 * 4 + 1] = 1;
        v[2 * 4 + 3] = 1;
        v[3 * 4 + 2] = 1;
        return v;
    }();
    return m;
}

const Mat4& CZ() {
    static const Mat4 m = [] {
        Mat4 v{};
        v[0 * 4 + 0] = 1;
        v[1 * 4 + 1] = 1;
        v[2 * 4 + 2] = 1;
        v[3 * 4 + 3] = -1;
        return v;
    }();
    return m;
}

const Mat4& G() {
    static const Mat4 m = [] {
        Mat4 v{};
        v[0 * 4 + 0] = 1;
        v[1 * 4 + 1] = cplx{0, -1};
        v[2 * 4 + 2] = cplx{0, -1};
        v[3 * 4 + 3] = 1;
        return v;
    }();
    return m;
}

Mat2 eq1(int theta_quarters, int axis) {
    double c = 0.0;
    double s = 0.0;
    switch (theta_quarters) {
        case 0: c = 1.0; s = 0.0; break;
        case 1: c = kInvSqrt2; s = kInvSqrt2; break;
        case 2: c = 0.0; s = 1.0; break;
        case 3: c = -kInvSqrt2; s = kInvSqrt2; break;
        default: throw std::invalid_argument("theta_quarters must be in {0,1,2,3}");
    }
    const Mat2 sigma = pauli_mat(axis);
    Mat2 out{};
    for (int i = 0; i < 4; ++i) {
        out[i] = cplx{0, s} * sigma[i];
    }
    out[0] += c;
    out[3] += c;
    return out;
}

Mat4 controlled_pauli(int axis) {
    const Mat2 sigma = pauli_mat(axis);
    Mat4 out{};
    out[0 * 4 + 0] = 1;
    out[1 * 4 + 1] = 1;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            out[(2 + i) * 4 + (2 + j)] = sigma[i * 2 + j];
        }
    }
    return out;
}

}  // namespace qhelab::core::gates
