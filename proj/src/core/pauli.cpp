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

#include "core/pauli.hpp"

#include <stdexcept>

namespace qhelab::core {

namespace {

struct KindProduct {
    PauliKind kind;
    int phase;  // power of i
};

// product[a][b] = a * b for single-qubit kinds.
constexpr KindProduct kProducts[4][4] = {
    // I            X              Y              Z
    {{PauliKind::I, 0}, {PauliKind::X, 0}, {PauliKind::Y, 0}, {PauliKind::Z, 0}},   // I*
    {{PauliKind::X, 0}, {PauliKind::I, 0}, {PauliKind::Z, 1}, {PauliKind::Y, 3}},   // X*
    {{PauliKind::Y, 0}, {PauliKind::Z, 3}, {PauliKind::I, 0}, {PauliKind::X, 1}},   // Y*
    {{PauliKind::Z, 0}, {PauliKind::Y, 1}, {PauliKind::X, 3}, {PauliKind::I, 0}},   // Z*
};

}  // namespace

PauliKind pauli_from_axis(int axis) {
    switch (axis) {
        case 1: return PauliKind::X;
        case 2: return PauliKind::Y;
        case 3: return PauliKind::Z;
        default: throw std::invalid_argument("pauli axis must be 1, 2 or 3");
    }
}

PauliOp PauliOp::identity(int n_qubits) {
    PauliOp p;
    p.kinds.assign(static_cast<size_t>(n_qubits), PauliKind::I);
    return p;
}

PauliOp PauliOp::single(int axis, int phase_i_pow) {
    PauliOp p;
    p.kinds = {pauli_from_axis(axis)};
    p.phase_i_pow = ((phase_i_pow % 4) + 4) % 4;
    return p;
}

PauliOp PauliOp::from_xz(int x, int z) {
    // X^x Z^z: for x=z=1 this is XZ = -iY.
    PauliOp p;
    if (x && z) {
        p.kinds = {PauliKind::Y};
        p.phase_i_pow = 3;
    } else if (x) {
        p.kinds = {PauliKind::X};
    } else if (z) {
        p.kinds = {PauliKind::Z};
    } else {
        p.kinds = {PauliKind::I};
    }
    return p;
}

bool PauliOp::is_identity() const {
    for (const PauliKind k : kinds) {
        if (k != PauliKind::I) {
            return false;
        }
    }
    return true;
}

Mat2 PauliOp::to_mat2() const {
    if (kinds.size() != 1) {
        throw std::invalid_argument("to_mat2 requires a single-qubit Pauli");
    }
    constexpr cplx kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return scale(kPhases[phase_i_pow], pauli_mat(kinds[0]));
}

PauliOp compose(const PauliOp& a, const PauliOp& b) {
    if (a.kinds.size() != b.kinds.size()) {
        throw std::invalid_argument("pauli size mismatch");
    }
    PauliOp out;
    out.kinds.resize(a.kinds.size());
    int phase = a.phase_i_pow + b.phase_i_pow;
    for (size_t i = 0; i < a.kinds.size(); ++i) {
        const KindProduct p =
            kProducts[static_cast<int>(a.kinds[i])][static_cast<int>(b.kinds[i])];
        out.kinds[i] = p.kind;
        phase += p.phase;
    }
    out.phase_i_pow = phase % 4;
    return out;
}

bool anticommutes(PauliKind a, PauliKind b) {
    if (a == PauliKind::I || b == PauliKind::I || a == b) {
        return false;
    }
    return true;
}

Mat2 pauli_mat(PauliKind k) {
    switch (k) {
        case PauliKind::I: return Mat2{{cplx{1, 0}, cplx{}, cplx{}, cplx{1, 0}}};
        case PauliKind::X: return Mat2{{cplx{}, cplx{1, 0}, cplx{1, 0}, cplx{}}};
        case PauliKind::Y: return Mat2{{cplx{}, cplx{0, -1}, cplx{0, 1}, cplx{}}};
        case PauliKind::Z: return Mat2{{cplx{1, 0}, cplx{}, cplx{}, cplx{-1, 0}}};
    }
    throw std::invalid_argument("bad pauli kind");
}

Mat2 pauli_mat(int axis) { return pauli_mat(pauli_from_axis(axis)); }

}  // namespace qhelab::core
