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
#include <vector>

#include "core/linalg.hpp"

namespace qhelab::core {

enum class PauliKind : uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

/// Pauli axis index convention used throughout: 1 = X, 2 = Y, 3 = Z.
PauliKind pauli_from_axis(int axis);

/// An n-qubit Pauli operator with a power-of-i phase, i.e.
/// i^phase * P_0 x P_1 x ... Composition is closed; phase arithmetic mod 4.
struct PauliOp {
    std::vector<PauliKind> kinds;
    int phase_i_pow = 0;  // operator = i^phase_i_pow * tensor(kinds)

    static PauliOp identity(int n_qubits);
    /// Single-qubit operator i^phase * sigma_axis.
    static PauliOp single(int axis, int phase_i_pow = 0);
    /// X^x Z^z on one qubit, phase normalized so XZ = -iY.
    static PauliOp from_xz(int x, int z);

    int n_qubits() const { return static_cast<int>(kinds.size()); }
    bool is_identity() const;

    Mat2 to_mat2() const;  // single-qubit only
};

/// Operator product a * b, with the phase tracked mod 4.
PauliOp compose(const PauliOp& a, const PauliOp& b);

/// Whether two single-qubit Pauli kinds anticommute.
bool anticommutes(PauliKind a, PauliKind b);

/// Dense 2x2 of a bare Pauli kind.
Mat2 pauli_mat(PauliKind k);
Mat2 pauli_mat(int axis);

}  // namespace qhelab::core
