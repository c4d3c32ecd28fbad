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

#include "core/pauli.hpp"
#include "core/statevector.hpp"

namespace qhelab::gadget {

enum class BasisTag : uint8_t { Zbasis = 0, Ybasis = 1 };

/// One of the four single-qubit program states cos(theta)|0> + i sin(theta)|1>
/// with theta = k pi/4 for k in {0,1,2,3}, paired with the controlled-Pauli
/// axis it will drive. k even <=> Z basis ({|0>,|1>}), k odd <=> Y basis
/// ({|y+>,|y->}).
struct ProgramState {
    int theta_quarters = 0;  // theta = theta_quarters * pi/4
    int axis = 3;            // 1 = X, 2 = Y, 3 = Z
    BasisTag basis = BasisTag::Zbasis;

    static ProgramState make(int theta_quarters, int axis);

    double theta() const { return theta_quarters * 0.78539816339744830961566084581988; }

    /// The realized single-qubit state.
    core::StateVector to_state() const;
};

struct GadgetOutcome {
    int m = 0;
    core::StateVector post;
};

/// Runs the program-state gadget on `data_qubit`: appends the program
/// register, applies controlled-sigma_axis from it onto the data qubit,
/// Hadamard on the program register, measures it in the Z basis and removes
/// it. For m = 0 the effective map on the data qubit is
/// cos(theta) I + i sin(theta) sigma_axis; for m = 1 the sine term flips
/// sign. No correction is applied here; key tracking absorbs it.
GadgetOutcome run_gadget(const core::StateVector& state, int data_qubit,
                         const ProgramState& prog, core::Rng& rng);

/// The m = 1 repair gate cos(2 theta) I + i sin(2 theta) sigma_axis.
/// Composing it after the m = 1 branch map reproduces the m = 0 map exactly.
core::Mat2 correction_for(int theta_quarters, int axis);

/// The orthogonal partner of a program state (theta -> theta + pi/2 mod pi,
/// same basis) together with the Pauli i*sigma_axis relating the two
/// implemented gates: eq1(theta') ~ i sigma_axis eq1(theta) up to global
/// phase. The partner encodes the same program up to this Pauli, which the
/// holder of the choice can fold into key tracking.
std::pair<ProgramState, core::PauliOp> orthogonal_flip(const ProgramState& prog);

}  // namespace qhelab::gadget
