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

#include "keys/keytrack.hpp"

#include <stdexcept>

namespace qhelab::keys {

namespace {

void check_qubit(const SymbolicKeys& keys, int q) {
    if (q < 0 || q >= keys.n_qubits()) {
        throw std::invalid_argument("qubit out of range");
    }
}

// sigma_axis as X^jx Z^jz exponents.
std::pair<int, int> axis_xz(int axis) {
    switch (axis) {
        case 1: return {1, 0};
        case 2: return {1, 1};
        case 3: return {0, 1};
        default: throw std::invalid_argument("axis must be 1, 2 or 3");
    }
}

// XORs sigma_axis^flip into the mask of qubit q, where flip is affine.
void fold_pauli(SymbolicKeys& keys, int q, int axis, const GF2Affine& flip) {
    const auto [jx, jz] = axis_xz(axis);
    if (jx) {
        keys.qubits[q].x ^= flip;
    }
    if (jz) {
        keys.qubits[q].z ^= flip;
    }
}

}  // namespace

int num_vars_for(int n, InputClass input_class) {
    return input_class == InputClass::General ? 2 * n : n;
}

std::pair<AliceKeys, SymbolicKeys> init_keys(int n, InputClass input_class, core::Rng& rng) {
    if (n < 1) {
        throw std::invalid_argument("need at least one qubit");
    }
    const int m = num_vars_for(n, input_class);

    AliceKeys alice;
    alice.input_class = input_class;
    alice.vars.resize(static_cast<size_t>(m));
    for (auto& v : alice.vars) {
        v = static_cast<uint8_t>(rng.bit());
    }

    SymbolicKeys bob;
    bob.num_vars = m;
    bob.qubits.resize(static_cast<size_t>(n));
    for (int q = 0; q < n; ++q) {
        if (input_class == InputClass::General) {
            bob.qubits[q].x = GF2Affine::variable(m, 2 * q);
            bob.qubits[q].z = GF2Affine::variable(m, 2 * q + 1);
        } else {
            // Y mask: X and Z exponents share one variable.
            bob.qubits[q].x = GF2Affine::variable(m, q);
            bob.qubits[q].z = GF2Affine::variable(m, q);
        }
    }
    return {std::move(alice), std::move(bob)};
}

GF2Affine anticommutation_indicator(const SymbolicKeys& keys, int q, int axis) {
    const QubitKey& k = keys.qubits[q];
    switch (axis) {
        case 1: return k.z;
        case 2: return k.x ^ k.z;
        case 3: return k.x;
        default: throw std::invalid_argument("axis must be 1, 2 or 3");
    }
}

void update_clifford(SymbolicKeys& keys, const CliffordGate& gate) {
    using Kind = CliffordGate::Kind;
    switch (gate.kind) {
        case Kind::P: {
            check_qubit(keys, gate.q1);
            QubitKey& k = keys.qubits[gate.q1];
            k.z ^= k.x;
            return;
        }
        case Kind::H: {
            check_qubit(keys, gate.q1);
            QubitKey& k = keys.qubits[gate.q1];
            std::swap(k.x, k.z);
            return;
        }
        case Kind::CNOT: {
            check_qubit(keys, gate.q1);
            check_qubit(keys, gate.q2);
            if (gate.q1 == gate.q2) {
                throw std::invalid_argument("CNOT operands must differ");
            }
            QubitKey& c = keys.qubits[gate.q1];
            QubitKey& t = keys.qubits[gate.q2];
            c.z ^= t.z;
            t.x ^= c.x;
            return;
        }
        case Kind::G: {
            check_qubit(keys, gate.q1);
            check_qubit(keys, gate.q2);
            if (gate.q1 == gate.q2) {
                throw std::invalid_argument("G operands must differ");
            }
            QubitKey& a = keys.qubits[gate.q1];
            QubitKey& b = keys.qubits[gate.q2];
            // G = CZ (Pdag x Pdag): each X mask marks a Z on its own qubit
            // and on the partner.
            const GF2Affine xa = a.x;
            const GF2Affine xb = b.x;
            a.z ^= xa;
            a.z ^= xb;
            b.z ^= xb;
            b.z ^= xa;
            return;
        }
        case Kind::Eq1: {
            check_qubit(keys, gate.q1);
            if (gate.theta_quarters % 2 == 0) {
                return;  // Pauli or identity content; masks unchanged
            }
            const GF2Affine t = anticommutation_indicator(keys, gate.q1, gate.axis);
            fold_pauli(keys, gate.q1, gate.axis, t);
            return;
        }
    }
    throw std::invalid_argument("unsupported gate");
}

LinearPoly update_T(SymbolicKeys& keys, int q) {
    check_qubit(keys, q);
    // T X^a Z^b = e^{-i a pi/4} P^a X^a Z^b T: the conditional phase gate is
    // outermost, so once the data holder discharges it with P^dag the pad is
    // exactly what it was. Only the correction polynomial (the x mask) is
    // produced here.
    return keys.qubits[q].x;
}

void incorporate_slot_outcome(SymbolicKeys& keys, const SlotRef& slot, int m, int bob_const) {
    check_qubit(keys, slot.qubit);
    if (m != 0 && m != 1) {
        throw std::invalid_argument("outcome must be a bit");
    }
    if (slot.basis == gadget::BasisTag::Ybasis) {
        GF2Affine flip = anticommutation_indicator(keys, slot.qubit, slot.axis);
        flip.flip_constant(m ^ (bob_const & 1));
        fold_pauli(keys, slot.qubit, slot.axis, flip);
    } else if ((bob_const & 1) != 0) {
        fold_pauli(keys, slot.qubit, slot.axis,
                   GF2Affine::constant_term(keys.num_vars, 1));
    }
    if (keys.pending_slots > 0) {
        --keys.pending_slots;
    }
}

std::vector<QubitKey> final_polys(const SymbolicKeys& keys) {
    if (keys.pending_slots != 0) {
        throw std::logic_error("slot outcomes still pending");
    }
    return keys.qubits;
}

}  // namespace qhelab::keys
