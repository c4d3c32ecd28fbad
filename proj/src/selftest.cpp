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

#include "selftest.hpp"

#include <cmath>

#include "circ/decompose.hpp"
#include "circ/schedule.hpp"
#include "core/gates.hpp"
#include "core/pauli.hpp"
#include "gadget/gadget.hpp"
#include "keys/keytrack.hpp"

namespace qhelab::selftest {

namespace {

using core::cplx;
using core::Mat2;
using core::Mat4;
namespace gates = core::gates;

Mat2 mask_mat(int x, int z) {
    Mat2 m = gates::I2();
    if (z) {
        m = core::mul(gates::Z(), m);
    }
    if (x) {
        m = core::mul(gates::X(), m);
    }
    return m;
}

Mat4 mask_mat2(int a, int b, int c, int d) {
    return core::kron(mask_mat(a, b), mask_mat(c, d));
}

/// Residual of a == lambda b with the best unit lambda.
template <typename M>
double phase_residual(const M& a, const M& b) {
    const cplx lambda = core::relative_phase(std::span<const cplx>(a.data(), a.size()),
                                             std::span<const cplx>(b.data(), b.size()));
    M scaled = b;
    for (auto& v : scaled) {
        v *= lambda;
    }
    return core::max_abs_diff(std::span<const cplx>(a.data(), a.size()),
                              std::span<const cplx>(scaled.data(), scaled.size()));
}

Mat2 branch_map(int theta_quarters, int axis, int m) {
    const double c = std::cos(theta_quarters * M_PI / 4);
    const double s = (m == 0 ? 1.0 : -1.0) * std::sin(theta_quarters * M_PI / 4);
    const Mat2 sigma = core::pauli_mat(axis);
    Mat2 out{};
    for (int i = 0; i < 4; ++i) {
        out[i] = cplx{0, s} * sigma[i];
    }
    out[0] += c;
    out[3] += c;
    return out;
}

CheckResult check_eq1_decompositions() {
    CheckResult r{"eq1-clifford-decompositions-24", false, 0.0, 1e-12};
    const auto& reps = circ::clifford_representatives();
    for (const Mat2& u : reps) {
        const auto seq = circ::decompose_clifford(u);
        if (seq.elems.size() > 6) {
            r.max_deviation = 1.0;
            return r;
        }
        r.max_deviation = std::max(r.max_deviation,
                                   core::max_abs_diff(seq.product(), u));
    }
    r.passed = reps.size() == 24 && r.max_deviation < r.tolerance;
    return r;
}

CheckResult check_g_choice_identity() {
    CheckResult r{"g-choice-sequence", false, 0.0, 1e-12};
    const Mat4 ih = core::kron(gates::I2(), gates::H());
    const Mat4 zh = core::kron(gates::Z(), gates::H());
    Mat4 lhs = gates::G();
    lhs = core::mul(zh, lhs);
    lhs = core::mul(gates::G(), lhs);
    lhs = core::mul(ih, lhs);
    lhs = core::mul(gates::G(), lhs);
    lhs = core::mul(ih, lhs);
    lhs = core::mul(gates::G(), lhs);
    const cplx phase{std::cos(-M_PI / 4), std::sin(-M_PI / 4)};
    r.max_deviation = core::max_abs_diff(lhs, core::scale(phase, gates::G()));
    r.passed = r.max_deviation < r.tolerance;
    return r;
}

CheckResult check_g_fourth_power() {
    CheckResult r{"g-fourth-power", false, 0.0, 1e-12};
    const Mat4 g2 = core::mul(gates::G(), gates::G());
    const Mat4 g4 = core::mul(g2, g2);
    Mat4 id{};
    for (int i = 0; i < 4; ++i) {
        id[i * 4 + i] = 1;
    }
    r.max_deviation = core::max_abs_diff(g4, id);
    r.passed = r.max_deviation < r.tolerance;
    return r;
}

CheckResult check_gadget_corrections() {
    CheckResult r{"gadget-correction-24", false, 0.0, 1e-10};
    for (int k = 0; k < 4; ++k) {
        for (int axis = 1; axis <= 3; ++axis) {
            const Mat2 fixed =
                core::mul(gadget::correction_for(k, axis), branch_map(k, axis, 1));
            r.max_deviation =
                std::max(r.max_deviation, core::max_abs_diff(fixed, branch_map(k, axis, 0)));
        }
    }
    r.passed = r.max_deviation < r.tolerance;
    return r;
}

CheckResult check_key_update_single(const char* name, const Mat2& gate,
                                    keys::CliffordGate (*make)(int)) {
    CheckResult r{name, false, 0.0, 1e-12};
    for (int x = 0; x < 2; ++x) {
        for (int z = 0; z < 2; ++z) {
            keys::SymbolicKeys k;
            k.num_vars = 2;
            k.qubits = {{keys::GF2Affine::variable(2, 0), keys::GF2Affine::variable(2, 1)}};
            keys::update_clifford(k, make(0));
            const uint8_t vars[2] = {static_cast<uint8_t>(x), static_cast<uint8_t>(z)};
            const Mat2 lhs = core::mul(gate, mask_mat(x, z));
            const Mat2 rhs = core::mul(
                mask_mat(k.qubits[0].x.eval(vars), k.qubits[0].z.eval(vars)), gate);
            r.max_deviation = std::max(r.max_deviation, phase_residual(lhs, rhs));
        }
    }
    r.passed = r.max_deviation < r.tolerance;
    return r;
}

CheckResult check_key_update_T() {
    CheckResult r{"keyupdate-T-4", false, 0.0, 1e-12};
    for (int x = 0; x < 2; ++x) {
        for (int z = 0; z < 2; ++z) {
            keys::SymbolicKeys k;
            k.num_vars = 2;
            k.qubits = {{keys::GF2Affine::variable(2, 0), keys::GF2Affine::variable(2, 1)}};
            const auto poly = keys::update_T(k, 0);
            const uint8_t vars[2] = {static_cast<uint8_t>(x), static_cast<uint8_t>(z)};
            // T X^x Z^z = e^{-i x pi/4} P^poly X^x' Z^z' T, exactly.
            const Mat2 lhs = core::mul(gates::T(), mask_mat(x, z));
            Mat2 rhs = core::mul(mask_mat(k.qubits[0].x.eval(vars),
                                          k.qubits[0].z.eval(vars)),
                                 gates::T());
            if (poly.eval(vars)) {
                rhs = core::mul(gates::P(), rhs);
            }
            const cplx phase = x ? cplx{std::cos(-M_PI / 4), std::sin(-M_PI / 4)}
                                 : cplx{1, 0};
            r.max_deviation =
                std::max(r.max_deviation, core::max_abs_diff(lhs, core::scale(phase, rhs)));
        }
    }
    r.passed = r.max_deviation < r.tolerance;
    return r;
}

template <typename MakeGate>
CheckResult check_key_update_two(const char* name, const Mat4& gate, MakeGate make) {
    CheckResult r{name, false, 0.0, 1e-12};
    for (int mask = 0; mask < 16; ++mask) {
        const int a = (mask >> 3) & 1;
        const int b = (mask >> 2) & 1;
        const int c = (mask >> 1) & 1;
        const int d = mask & 1;
        keys::SymbolicKeys k;
        k.num_vars = 4;
        k.qubits = {{keys::GF2Affine::variable(4, 0), keys::GF2Affine::variable(4, 1)},
                    {keys::GF2Affine::variable(4, 2), keys::GF2Affine::variable(4, 3)}};
        keys::update_clifford(k, make());
        const uint8_t vars[4] = {static_cast<uint8_t>(a), static_cast<uint8_t>(b),
                                 static_cast<uint8_t>(c), static_cast<uint8_t>(d)};
        const Mat4 lhs = core::mul(gate, mask_mat2(a, b, c, d));
        const Mat4 rhs = core::mul(
            mask_mat2(k.qubits[0].x.eval(vars), k.qubits[0].z.eval(vars),
                      k.qubits[1].x.eval(vars), k.qubits[1].z.eval(vars)),
            gate);
        r.max_deviation = std::max(r.max_deviation, phase_residual(lhs, rhs));
    }
    r.passed = r.max_deviation < r.tolerance;
    return r;
}

CheckResult check_cz_synthesis() {
    CheckResult r{"cz-synthesis", false, 0.0, 1e-12};
    const auto syn = circ::synthesize_cz();
    const Mat2 e = gates::eq1(syn.prefix.theta_quarters, syn.prefix.axis);
    Mat4 built = gates::G();
    built = core::mul(core::kron(e, e), built);
    built = core::scale(syn.phase, built);
    r.max_deviation = core::max_abs_diff(built, gates::CZ());

    const Mat4 ih = core::kron(gates::I2(), gates::H());
    const Mat4 cnot = core::mul(ih, core::mul(gates::CZ(), ih));
    r.max_deviation = std::max(r.max_deviation, phase_residual(cnot, gates::CNOT()));
    r.passed = r.max_deviation < r.tolerance;
    return r;
}

CheckResult check_orthogonal_flips() {
    CheckResult r{"orthogonal-flip-12", false, 0.0, 1e-12};
    for (int k = 0; k < 4; ++k) {
        for (int axis = 1; axis <= 3; ++axis) {
            const auto prog = gadget::ProgramState::make(k, axis);
            const auto [flipped, corr] = gadget::orthogonal_flip(prog);
            const Mat2 lhs = gates::eq1(flipped.theta_quarters, axis);
            const Mat2 rhs = core::mul(corr.to_mat2(), gates::eq1(k, axis));
            r.max_deviation = std::max(r.max_deviation, phase_residual(lhs, rhs));
            // Orthogonality of the pair.
            const auto sa = prog.to_state();
            const auto sb = flipped.to_state();
            r.max_deviation = std::max(r.max_deviation, std::abs(sa.inner(sb)));
        }
    }
    r.passed = r.max_deviation < r.tolerance;
    return r;
}

}  // namespace

std::vector<CheckResult> run_all() {
    std::vector<CheckResult> out;
    out.push_back(check_eq1_decompositions());
    out.push_back(check_g_choice_identity());
    out.push_back(check_g_fourth_power());
    out.push_back(check_cz_synthesis());
    out.push_back(check_gadget_corrections());
    out.push_back(check_key_update_single("keyupdate-P-4", gates::P(),
                                          &keys::CliffordGate::p));
    out.push_back(check_key_update_single("keyupdate-H-4", gates::H(),
                                          &keys::CliffordGate::h));
    out.push_back(check_key_update_T());
    out.push_back(check_key_update_two("keyupdate-CNOT-16", gates::CNOT(),
                                       [] { return keys::CliffordGate::cnot(0, 1); }));
    out.push_back(check_key_update_two("keyupdate-G-16", gates::G(),
                                       [] { return keys::CliffordGate::g(0, 1); }));
    out.push_back(check_orthogonal_flips());
    return out;
}

}  // namespace qhelab::selftest
