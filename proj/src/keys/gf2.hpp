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

#include <cstdint>
#include <span>
#include <vector>

namespace qhelab::keys {

/// Affine form c + sum a_i x_i over GF(2): a constant bit plus a coefficient
/// bit per variable. Addition is componentwise XOR.
struct GF2Affine {
    uint8_t constant = 0;
    std::vector<uint8_t> coeffs;

    static GF2Affine zero(int num_vars);
    static GF2Affine constant_term(int num_vars, int bit);
    static GF2Affine variable(int num_vars, int index);

    int num_vars() const { return static_cast<int>(coeffs.size()); }

    GF2Affine& operator^=(const GF2Affine& other);
    friend GF2Affine operator^(GF2Affine a, const GF2Affine& b) {
        a ^= b;
        return a;
    }
    bool operator==(const GF2Affine&) const = default;

    void flip_constant(int bit) { constant = static_cast<uint8_t>(constant ^ (bit & 1)); }

    /// constant XOR <coeffs, x>.
    int eval(std::span<const uint8_t> x) const;

    bool is_zero() const;
};

using LinearPoly = GF2Affine;

}  // namespace qhelab::keys
