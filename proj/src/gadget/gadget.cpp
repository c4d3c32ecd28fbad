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

#include "gadget/gadget.hpp"

#include <stdexcept>

#include "core/gates.hpp"

namespace qhelab::gadget {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440084436210485;
}

ProgramState ProgramState::make(int theta_quarters, int axis) {
    if (theta_quarters < 0 || theta_quarters > 3) {
        throw std::invalid_argument("program state theta must be k pi/4, k in 0..3");
    }
    if (axis < 1 || axis > 3) {
        throw std::invalid_argument("axis must be 1, 2 or 3");
    }
    ProgramState p;
    p.theta_quarters = theta_quarters;
    p.axis = axis;
    p.basis = (theta_quarters % 2 == 0) ? BasisTag::Zbasis : BasisTag::Ybasis;
    return p;
}

core::StateVector ProgramState::to_state() const {
    switch (theta_quarters) {
        case 0: return core::StateVector::qubit(1.0, 0.0);
        case 1: return core::StateVector::qubit(kInvSqrt2, core::cplx{0, kInvSqrt2});
        case 2: return core::StateVector::qubit(0.0, core::cplx{0, 1});
        case 3: return core::StateVector::qubit(-kInvSqrt2, core::cplx{0, kInvSqrt2});
        default: throw std::invalid_argument("bad program state");
    }
}

GadgetOutcome run_gadget(const core::StateVector& state, int data_qubit,
                         const ProgramState& prog, core::Rng& rng) {
    if (data_qubit < 0 || data_qubit >= state.n_qubits()) {
        throw std::invalid_argument("data qubit out of range");
    }
    core::StateVector joint = state;
    joint.append(prog.to_state());
    const int prog_qubit = joint.n_qubits() - 1;

    joint.apply2(core::gates::controlled_pauli(prog.axis), prog_qubit, data_qubit);
    joint.apply1(core::gates::H(), prog_qubit);
    core::MeasureResult r = core::measure_pauli(joint, prog_qubit, 3, rng);

    GadgetOutcome out;
    out.m = r.outcome;
    out.post = std::move(r.post);
    return out;
}

core::Mat2 correction_for(int theta_quarters, int axis) {
    // cos(2 theta) I + i sin(2 theta) sigma = eq1 at doubled angle.
    const int doubled = (2 * theta_quarters) % 4;
    const bool negate = 2 * theta_quarters >= 4;  // theta_quarters 2,3 wrap past pi
    core::Mat2 m = core::gates::eq1(doubled, axis);
    if (negate) {
        m = core::scale(core::cplx{-1, 0}, m);
    }
    return m;
}

std::pair<ProgramState, core::PauliOp> orthogonal_flip(const ProgramState& prog) {
    ProgramState flipped = ProgramState::make((prog.theta_quarters + 2) % 4, prog.axis);
    return {flipped, core::PauliOp::single(prog.axis, 1)};
}

}  // namespace qhelab::gadget
