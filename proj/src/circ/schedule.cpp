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

#include "circ/schedule.hpp"

#include <sstream>
#include <stdexcept>

#include "core/gates.hpp"

namespace qhelab::circ {

namespace {

/// Appends the slot group realizing one Eq.-1 element on `qubit`.
void emit_element_slot(std::vector<Instruction>& out, int& next_slot_id, int qubit,
                       const Eq1Elem& elem) {
    SlotInstr s;
    s.slot_id = next_slot_id++;
    s.qubit = qubit;
    s.axis = elem.axis;
    s.basis = (elem.theta_quarters % 2 == 1) ? gadget::BasisTag::Ybasis
                                             : gadget::BasisTag::Zbasis;
    s.elem_flip = static_cast<uint8_t>(elem.theta_quarters >= 2 ? 1 : 0);
    out.push_back(s);
}

/// The fixed 3-slot group with axis pattern (X, Z, X): the canonical H when
/// the elements are the pi/4 primitives, an identity otherwise.
void emit_h_or_identity_group(std::vector<Instruction>& out, int& next_slot_id, int qubit,
                              bool logical_h) {
    static const std::vector<Eq1Elem> h_elems = [] {
        const Eq1Sequence seq = decompose_clifford(core::gates::H());
        return seq.elems;
    }();
    for (const Eq1Elem& e : h_elems) {
        if (logical_h) {
            emit_element_slot(out, next_slot_id, qubit, e);
        } else {
            emit_element_slot(out, next_slot_id, qubit, Eq1Elem{0, e.axis});
        }
    }
}

void emit_clifford(std::vector<Instruction>& out, int& next_slot_id, int qubit,
                   const core::Mat2& u) {
    const Eq1Sequence seq = decompose_clifford(u);
    for (const Eq1Elem& e : seq.elems) {
        emit_element_slot(out, next_slot_id, qubit, e);
    }
}

struct Emitter {
    std::vector<Instruction> instrs;
    std::vector<int> unreported_slots;
    int next_slot_id = 0;
    int next_poly_id = 0;

    void track_new_slots(size_t first_new_index) {
        for (size_t i = first_new_index; i < instrs.size(); ++i) {
            if (const auto* s = std::get_if<SlotInstr>(&instrs[i])) {
                unreported_slots.push_back(s->slot_id);
            }
        }
    }

    void report() {
        ReportInstr r;
        r.slot_ids = unreported_slots;
        unreported_slots.clear();
        instrs.push_back(std::move(r));
    }

    void poly(PolyPurpose purpose, int qubit) {
        instrs.push_back(PolyEvalInstr{next_poly_id++, purpose, qubit});
    }
};

}  // namespace

std::string Schedule::public_projection() const {
    std::ostringstream out;
    for (const Instruction& in : instrs) {
        if (const auto* s = std::get_if<SlotInstr>(&in)) {
            out << "slot " << s->slot_id << " q" << s->qubit << " a" << s->axis << "\n";
        } else if (const auto* g = std::get_if<FixedGInstr>(&in)) {
            out << "g " << g->q1 << " " << g->q2 << "\n";
        } else if (const auto* t = std::get_if<FixedTInstr>(&in)) {
            out << "t " << t->qubit << "\n";
        } else if (const auto* r = std::get_if<ReportInstr>(&in)) {
            out << "report";
            if (r->slot_ids.empty()) {
                out << " -";
            } else {
                for (size_t i = 0; i < r->slot_ids.size(); ++i) {
                    out << (i == 0 ? " " : ",") << r->slot_ids[i];
                }
            }
            out << "\n";
        } else if (const auto* p = std::get_if<PolyEvalInstr>(&in)) {
            out << "poly " << p->poly_id << " ";
            switch (p->purpose) {
                case PolyPurpose::TCorrection: out << "tcorr"; break;
                case PolyPurpose::FinalX: out << "finalx"; break;
                case PolyPurpose::FinalZ: out << "finalz"; break;
            }
            out << " q" << p->qubit << "\n";
        }
    }
    return out.str();
}

const SlotInstr& Schedule::slot(int slot_id) const {
    for (const Instruction& in : instrs) {
        if (const auto* s = std::get_if<SlotInstr>(&in)) {
            if (s->slot_id == slot_id) {
                return *s;
            }
        }
    }
    throw std::invalid_argument("unknown slot id");
}

CzSynthesis synthesize_cz() {
    CzSynthesis syn;
    syn.prefix = Eq1Elem{3, 3};
    syn.g_count = 1;
    syn.phase = core::cplx{0.0, 1.0};  // CZ = i (E x E) G
    return syn;
}

std::vector<Instruction> g_choice_block(GChoice choice, int q1, int q2, int& next_slot_id) {
    std::vector<Instruction> out;
    const bool apply = choice == GChoice::ApplyG;
    // Application order of G (I x H) G (I x H) G (Z x H) G, rightmost first:
    // the first slot group carries the Z factor on q1.
    for (int group = 0; group < 3; ++group) {
        out.push_back(FixedGInstr{q1, q2});
        const bool z_on_q1 = apply && group == 0;
        emit_element_slot(out, next_slot_id, q1, Eq1Elem{z_on_q1 ? 2 : 0, 3});
        emit_h_or_identity_group(out, next_slot_id, q2, apply);
    }
    out.push_back(FixedGInstr{q1, q2});
    return out;
}

Schedule compile(const SourceCircuit& circuit, const CompileOptions& options,
                 core::Rng* rng) {
    circuit.validate();
    if (options.dummy_g_density > 0.0 && rng == nullptr) {
        throw std::invalid_argument("dummy block insertion needs an rng");
    }

    Emitter em;
    const CzSynthesis cz = synthesize_cz();

    auto expand_cz = [&](int q1, int q2) {
        size_t first = em.instrs.size();
        auto block = g_choice_block(GChoice::ApplyG, q1, q2, em.next_slot_id);
        em.instrs.insert(em.instrs.end(), block.begin(), block.end());
        emit_element_slot(em.instrs, em.next_slot_id, q1, cz.prefix);
        emit_element_slot(em.instrs, em.next_slot_id, q2, cz.prefix);
        em.track_new_slots(first);
    };

    for (const Gate& g : circuit.gates) {
        const size_t first = em.instrs.size();
        switch (g.kind) {
            case GateKind::H:
                emit_h_or_identity_group(em.instrs, em.next_slot_id, g.q1, true);
                em.track_new_slots(first);
                break;
            case GateKind::P:
                emit_clifford(em.instrs, em.next_slot_id, g.q1, core::gates::P());
                em.track_new_slots(first);
                break;
            case GateKind::Eq1:
                emit_element_slot(em.instrs, em.next_slot_id, g.q1,
                                  Eq1Elem{g.theta_quarters, g.axis});
                em.track_new_slots(first);
                break;
            case GateKind::T:
                em.report();
                em.poly(PolyPurpose::TCorrection, g.q1);
                em.instrs.push_back(FixedTInstr{g.q1});
                break;
            case GateKind::CZ:
                expand_cz(g.q1, g.q2);
                break;
            case GateKind::CNOT: {
                emit_h_or_identity_group(em.instrs, em.next_slot_id, g.q2, true);
                em.track_new_slots(first);
                expand_cz(g.q1, g.q2);
                const size_t again = em.instrs.size();
                emit_h_or_identity_group(em.instrs, em.next_slot_id, g.q2, true);
                em.track_new_slots(again);
                break;
            }
            case GateKind::G: {
                auto block = g_choice_block(GChoice::ApplyG, g.q1, g.q2, em.next_slot_id);
                em.instrs.insert(em.instrs.end(), block.begin(), block.end());
                em.track_new_slots(first);
                break;
            }
        }

        if (options.dummy_g_density > 0.0 && circuit.n_qubits >= 2 &&
            rng->uniform() < options.dummy_g_density) {
            const int a = static_cast<int>(rng->below(circuit.n_qubits));
            int b = static_cast<int>(rng->below(circuit.n_qubits - 1));
            if (b >= a) {
                ++b;
            }
            const size_t before = em.instrs.size();
            auto block = g_choice_block(GChoice::ApplyIdentity, a, b, em.next_slot_id);
            em.instrs.insert(em.instrs.end(), block.begin(), block.end());
            em.track_new_slots(before);
        }
    }

    em.report();
    for (int q = 0; q < circuit.n_qubits; ++q) {
        em.poly(PolyPurpose::FinalX, q);
        em.poly(PolyPurpose::FinalZ, q);
    }

    Schedule sched;
    sched.n_qubits = circuit.n_qubits;
    sched.instrs = std::move(em.instrs);
    sched.slot_count = em.next_slot_id;
    sched.poly_count = em.next_poly_id;
    return sched;
}

}  // namespace qhelab::circ
