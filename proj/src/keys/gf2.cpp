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

#include "keys/gf2.hpp"

#include <stdexcept>

namespace qhelab::keys {

GF2Affine GF2Affine::zero(int num_vars) {
    GF2Affine p;
    p.coeffs.assign(static_cast<size_t>(num_vars), 0);
    return p;
}

GF2Affine GF2Affine::constant_term(int num_vars, int bit) {
    GF2Affine p = zero(num_vars);
    p.constant = static_cast<uint8_t>(bit & 1);
    return p;
}

GF2Affine GF2Affine::variable(int num_vars, int index) {
    if (index < 0 || index >= num_vars) {
        throw std::invalid_argument("variable index out of range");
    }
    GF2Affine p = zero(num_vars);
    p.coeffs[static_cast<size_t>(index)] = 1;
    return p;
}

GF2Affine& GF2Affine::operator^=(const GF2Affine& other) {
    if (coeffs.size() != other.coeffs.size()) {
        throw std::invalid_argument("GF2 affine size mismatch");
    }
    constant ^= other.constant;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        coeffs[i] ^= other.coeffs[i];
    }
    return *this;
}

int GF2Affine::eval(std::span<const uint8_t> x) const {
    if (x.size() != coeffs.size()) {
        throw std::invalid_argument("variable vector size mismatch");
    }
    int acc = constant;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        acc ^= coeffs[i] & x[i];
    }
    return acc & 1;
}

bool GF2Affine::is_zero() const {
    if (constant) {
        return false;
    }
    for (const uint8_t c : coeffs) {
        if (c) {
            return false;
        }
    }
    return true;
}

}  // namespace qhelab::keys
