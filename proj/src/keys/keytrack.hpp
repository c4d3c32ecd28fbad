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

#include <utility>
#include <vector>

#include "core/rng.hpp"
#include "gadget/gadget.hpp"
#include "keys/gf2.hpp"

namespace qhelab::keys {

enum class InputClass : uint8_t { General, RealProduct, Classical };

/// Alice's concrete secret: the quantum one-time-pad bits. For general input
/// there are two variables per qubit (X bit, Z bit); for classical or
/// product-real input one variable per qubit encoding a Y mask.
struct AliceKeys {
    std::vector<uint8_t> vars;
    InputClass input_class = InputClass::General;

    int num_vars() const { return static_cast<int>(vars.size()); }
};

/// Bob's symbolic view of one qubit's pad: affine X and Z mask exponents in
/// Alice's variables.
struct QubitKey {
    GF2Affine x;
    GF2Affine z;
};

/// The whole symbolic pad. Evaluating every polynomial at Alice's true
/// variables always reproduces the physical Pauli mask, up to global phase.
struct SymbolicKeys {
    std::vector<QubitKey> qubits;
    int num_vars = 0;
    int pending_slots = 0;  // scheduled gadget slots not yet incorporated

    int n_qubits() const { return static_cast<int>(qubits.size()); }
};

/// Samples Alice's pad uniformly and sets up Bob's symbolic keys as the bare
/// variables. General input: m = 2n, qubit q has x-poly var 2q and z-poly
/// var 2q+1. Classical / product-real input: m = n, qubit q has
/// x-poly = z-poly = var q (a Y mask).
std::pair<AliceKeys, SymbolicKeys> init_keys(int n, InputClass input_class, core::Rng& rng);

/// Number of pad variables implied by the input class.
int num_vars_for(int n, InputClass input_class);

/// Clifford gates with tracked key-update rules.
struct CliffordGate {
    enum class Kind : uint8_t { P, H, CNOT, G, Eq1 } kind;
    int q1 = 0;
    int q2 = 0;              // CNOT control = q1; G is symmetric
    int theta_quarters = 0;  // Eq1 only
    int axis = 0;            // Eq1 only

    static CliffordGate p(int q) { return {Kind::P, q, 0, 0, 0}; }
    static CliffordGate h(int q) { return {Kind::H, q, 0, 0, 0}; }
    static CliffordGate cnot(int control, int target) {
        return {Kind::CNOT, control, target, 0, 0};
    }
    static CliffordGate g(int q1, int q2) { return {Kind::G, q1, q2, 0, 0}; }
    static CliffordGate eq1(int theta_quarters, int axis, int q) {
        return {Kind::Eq1, q, 0, theta_quarters, axis};
    }
};

/// Rewrites the symbolic masks for a directly applied Clifford gate:
///   P:    (x, z) -> (x, x + z)
///   H:    (x, z) -> (z, x)
///   CNOT: (a, b), (c, d) -> (a, b + d), (a + c, d)
///   G:    (a, b), (c, d) -> (a, a + b + c), (c, a + c + d)
///   Eq1:  pi/4-type angles add sigma_axis^t with t the anticommutation
///         indicator; Z-basis angles leave the masks unchanged.
void update_clifford(SymbolicKeys& keys, const CliffordGate& gate);

/// Returns the polynomial deciding the P^dag correction after a T on `q`
/// (the current x mask). The conditional phase factor commutes out of the T
/// outermost, so discharging it leaves the pad polynomials unchanged.
LinearPoly update_T(SymbolicKeys& keys, int q);

/// The slot a gadget outcome refers to.
struct SlotRef {
    int qubit = 0;
    int axis = 3;
    gadget::BasisTag basis = gadget::BasisTag::Zbasis;
};

/// Folds one gadget slot into the keys. `m` is Alice's reported outcome;
/// `bob_const` is the XOR of Bob-known constant flips for this slot (the
/// orthogonal-pair pick and the scheduled element's flip bit). For a
/// pi/4-type slot the mask gains sigma_axis raised to (m + t + bob_const)
/// with t the affine anticommutation indicator; for a Z-basis slot only the
/// constant sigma_axis^bob_const folds in.
void incorporate_slot_outcome(SymbolicKeys& keys, const SlotRef& slot, int m, int bob_const);

/// Final (x, z) polynomial pair per output qubit. Throws if slots remain
/// unincorporated.
std::vector<QubitKey> final_polys(const SymbolicKeys& keys);

/// The affine indicator of whether sigma_axis anticommutes with the current
/// mask of `q`: z for axis 1, x + z for axis 2, x for axis 3.
GF2Affine anticommutation_indicator(const SymbolicKeys& keys, int q, int axis);

}  // namespace qhelab::keys
