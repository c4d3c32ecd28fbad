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

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "circ/circuit.hpp"
#include "circ/decompose.hpp"
#include "core/rng.hpp"
#include "gadget/gadget.hpp"

namespace qhelab::circ {

/// One gadget use. `qubit` and `axis` are visible to Alice; the basis and
/// element flip are Bob's private slot assignment. The scheduled element is
/// eq1(base + 2*elem_flip, axis) where the base is pi/4 for Y-basis slots
/// and 0 for Z-basis slots.
struct SlotInstr {
    int slot_id = 0;
    int qubit = 0;
    int axis = 3;
    gadget::BasisTag basis = gadget::BasisTag::Zbasis;  // private
    uint8_t elem_flip = 0;                              // private

    /// theta_quarters of the element this slot is scheduled to realize.
    int element_quarters() const {
        return (basis == gadget::BasisTag::Ybasis ? 1 : 0) + 2 * elem_flip;
    }
};

/// Alice applies G herself at a fixed position.
struct FixedGInstr {
    int q1 = 0;
    int q2 = 0;
};

/// Alice applies T, then conditionally P^dag per the preceding poly result.
struct FixedTInstr {
    int qubit = 0;
};

/// Alice reports all gadget outcomes since the previous report.
struct ReportInstr {
    std::vector<int> slot_ids;
};

enum class PolyPurpose : uint8_t { TCorrection, FinalX, FinalZ };

struct PolyEvalInstr {
    int poly_id = 0;
    PolyPurpose purpose = PolyPurpose::TCorrection;
    int qubit = 0;
};

using Instruction =
    std::variant<SlotInstr, FixedGInstr, FixedTInstr, ReportInstr, PolyEvalInstr>;

/// The compiled fixed-structure program. The Alice-visible projection hides
/// only the per-slot basis and element flip; axes, positions and counts are
/// identical for any two circuits of the same shape.
struct Schedule {
    int n_qubits = 0;
    std::vector<Instruction> instrs;
    int slot_count = 0;
    int poly_count = 0;

    /// Line-oriented text of the Alice-visible projection.
    std::string public_projection() const;

    const SlotInstr& slot(int slot_id) const;
};

enum class GChoice : uint8_t { ApplyG, ApplyIdentity };

struct CompileOptions {
    /// Probability of inserting a dummy identity G block after each source
    /// gate (needs >= 2 qubits and an rng when nonzero).
    double dummy_g_density = 0.0;
};

/// The verified CZ construction: CZ = phase * (prefix x prefix) * G with a
/// single-qubit Eq.-1 prefix on each operand.
struct CzSynthesis {
    Eq1Elem prefix;        // applied to each of the two qubits, after G
    int g_count = 1;
    core::cplx phase;      // CZ = phase * (E x E) * G
};

CzSynthesis synthesize_cz();

/// Emits the fixed four-G pattern with three interleaved slot groups that
/// realizes G or the identity depending on Bob's private program-state
/// choices. The projection is identical for both choices.
std::vector<Instruction> g_choice_block(GChoice choice, int q1, int q2, int& next_slot_id);

/// Compiles a source circuit to the fixed-structure schedule: single-qubit
/// Cliffords become slot groups via decompose_clifford, CZ/CNOT expand
/// through the CZ synthesis with a G choice block, every T is preceded by a
/// report and a correction poly, and the run ends with a report plus an X
/// and a Z poly per output qubit.
Schedule compile(const SourceCircuit& circuit, const CompileOptions& options = {},
                 core::Rng* rng = nullptr);

}  // namespace qhelab::circ
