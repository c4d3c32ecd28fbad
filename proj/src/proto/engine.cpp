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

#include "proto/engine.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "core/errors.hpp"
#include "core/gates.hpp"

namespace qhelab::proto {

using wire::MsgKind;
using wire::Party;

const char* mode_name(Mode m) { return m == Mode::Qhe ? "qhe" : "bqc"; }

const char* subproto_name(SubprotoKind s) {
    switch (s) {
        case SubprotoKind::Class1: return "class1";
        case SubprotoKind::Ott: return "ott";
        case SubprotoKind::Ahe: return "ahe";
    }
    return "?";
}

const char* input_class_name(keys::InputClass c) {
    switch (c) {
        case keys::InputClass::General: return "general";
        case keys::InputClass::RealProduct: return "real";
        case keys::InputClass::Classical: return "classical";
    }
    return "?";
}

void Channel::send(Party from, MsgKind kind, std::vector<uint8_t> payload) {
    wire::Message m;
    m.seq = static_cast<uint32_t>(transcript_.messages.size());
    m.sender = from;
    m.kind = kind;
    m.payload = std::move(payload);
    transcript_.messages.push_back(std::move(m));
}

namespace {

bool is_basis_state(const core::StateVector& s) {
    int big = 0;
    for (uint64_t i = 0; i < s.dim(); ++i) {
        const double a = std::abs(s.amp(i));
        if (a > 1e-9) {
            if (a < 1.0 - 1e-9) {
                return false;
            }
            ++big;
        }
    }
    return big == 1;
}

bool is_real_product(const core::StateVector& s) {
    for (int q = 0; q < s.n_qubits(); ++q) {
        const core::Mat2 rho = s.reduced_density(q);
        const core::Mat2 rho2 = core::mul(rho, rho);
        const double purity = (rho2[0] + rho2[3]).real();
        if (purity < 1.0 - 1e-9) {
            return false;
        }
        if (std::abs(rho[1].imag()) > 1e-9) {
            return false;
        }
    }
    return true;
}

void validate_input(const core::StateVector& input, keys::InputClass cls) {
    switch (cls) {
        case keys::InputClass::General: return;
        case keys::InputClass::Classical:
            if (!is_basis_state(input)) {
                throw std::invalid_argument(
                    "classical input class needs a computational basis state");
            }
            return;
        case keys::InputClass::RealProduct:
            if (!is_real_product(input)) {
                throw std::invalid_argument(
                    "real input class needs a product of real-amplitude qubits");
            }
            return;
    }
}

struct FinalBits {
    int x = 0;
    int z = 0;
};

/// Drives one full protocol run. Alice-side state and Bob-side state are kept
/// in separate members; they only meet through the channel and the world.
class ProtocolRun {
  public:
    ProtocolRun(const circ::SourceCircuit& circuit, const core::StateVector& input,
                const RunConfig& config, const Hooks& hooks)
        : circuit_(circuit),
          input_(input),
          cfg_(config),
          hooks_(hooks),
          world_(core::Rng(config.seed, "quantum")),
          alice_rng_(config.seed, "alice"),
          dealer_rng_(config.seed, "dealer") {}

    RunReport run() {
        validate();
        setup();
        RunReport report;
        try {
            execute();
            finish(report);
        } catch (const abort_error& e) {
            std::vector<uint8_t> reason(e.what(), e.what() + std::string_view(e.what()).size());
            channel_.send(Party::Bob, MsgKind::Abort, std::move(reason));
            report.aborted = true;
            report.abort_reason = e.what();
            report.output_holder = Party::Alice;
        }
        report.transcript = channel_.transcript();
        report.privacy = privacy_report(report.transcript, effective_config(), m_);
        return report;
    }

  private:
    RunConfig effective_config() const {
        RunConfig c = cfg_;
        c.k = effective_k_;
        return c;
    }

    void validate() {
        circuit_.validate();
        if (input_.n_qubits() != circuit_.n_qubits) {
            throw std::invalid_argument("input width does not match circuit");
        }
        validate_input(input_, cfg_.input_class);
        n_ = circuit_.n_qubits;
        m_ = keys::num_vars_for(n_, cfg_.input_class);
        if (cfg_.subproto == SubprotoKind::Class1 && (cfg_.k < 0 || cfg_.k > m_)) {
            throw std::invalid_argument("k must be in [0, m]");
        }
    }

    void setup() {
        // Bob compiles and announces the public schedule.
        core::Rng compile_rng(cfg_.seed, "compile");
        circ::CompileOptions copts;
        copts.dummy_g_density = cfg_.dummy_g_density;
        schedule_ = circ::compile(circuit_, copts, &compile_rng);
        slot_by_id_.assign(static_cast<size_t>(schedule_.slot_count), nullptr);
        for (const circ::Instruction& in : schedule_.instrs) {
            if (const auto* s = std::get_if<circ::SlotInstr>(&in)) {
                slot_by_id_[static_cast<size_t>(s->slot_id)] = s;
            }
        }
        const std::string proj = schedule_.public_projection();
        channel_.send(Party::Bob, MsgKind::Schedule,
                      std::vector<uint8_t>(proj.begin(), proj.end()));

        // Alice loads and encrypts her register.
        data_handle_ = world_.add_register(input_, Party::Alice);
        auto [alice, bob] = keys::init_keys(n_, cfg_.input_class, alice_rng_);
        alice_keys_ = std::move(alice);
        bob_keys_ = std::move(bob);
        bob_keys_.pending_slots = schedule_.slot_count;
        for (int q = 0; q < n_; ++q) {
            if (cfg_.input_class == keys::InputClass::General) {
                if (alice_keys_.vars[2 * q + 1]) {
                    world_.apply1(Party::Alice, core::gates::Z(), data_handle_[q]);
                }
                if (alice_keys_.vars[2 * q]) {
                    world_.apply1(Party::Alice, core::gates::X(), data_handle_[q]);
                }
            } else if (alice_keys_.vars[q]) {
                world_.apply1(Party::Alice, core::gates::Y(), data_handle_[q]);
            }
        }

        // Program-state distribution (Scheme-1 step 1).
        const auto delivered =
            distribute_program_states(schedule_, world_, channel_, hooks_.distribution);
        for (const DeliveredSlot& d : delivered) {
            delivered_[d.slot_id] = d;
        }

        // Class-1 reveal phase; in BQC mode the effective reveal is total.
        effective_k_ = 0;
        if (cfg_.subproto == SubprotoKind::Class1) {
            std::vector<int> reveal = cfg_.reveal_set;
            if (cfg_.mode == Mode::Bqc) {
                reveal = subproto::default_reveal_set(m_, m_);
            } else if (reveal.empty()) {
                reveal = subproto::default_reveal_set(m_, cfg_.k);
            }
            for (const int i : reveal) {
                if (i < 0 || i >= m_) {
                    throw std::invalid_argument("reveal index out of range");
                }
            }
            effective_k_ = static_cast<int>(reveal.size());
            subproto::class1_send_reveal(reveal, alice_keys_.vars, channel_);
            port_ = std::make_unique<subproto::Class1Port>(std::move(reveal));
        } else if (cfg_.subproto == SubprotoKind::Ott) {
            const size_t budget =
                cfg_.ott_table_budget >= 0
                    ? static_cast<size_t>(cfg_.ott_table_budget)
                    : static_cast<size_t>(m_) * static_cast<size_t>(schedule_.poly_count);
            port_ = std::make_unique<subproto::DealerOttPort>(
                subproto::TableStore(budget, dealer_rng_));
        } else {
            port_ = std::make_unique<subproto::AdditiveHePort>(
                std::make_unique<subproto::IdentityHeScheme>(), cfg_.seed);
        }
    }

    void execute() {
        for (const circ::Instruction& in : schedule_.instrs) {
            if (const auto* s = std::get_if<circ::SlotInstr>(&in)) {
                run_slot(*s);
            } else if (const auto* g = std::get_if<circ::FixedGInstr>(&in)) {
                world_.apply2(Party::Alice, core::gates::G(), data_handle_[g->q1],
                              data_handle_[g->q2]);
                // Bob's G update joins the queue so it lands in circuit
                // order relative to slot outcomes that are still unreported.
                bob_queue_.push_back(PendingOp{PendingOp::Kind::G, -1, g->q1, g->q2});
            } else if (const auto* t = std::get_if<circ::FixedTInstr>(&in)) {
                world_.apply1(Party::Alice, core::gates::T(), data_handle_[t->qubit]);
                const auto it = alice_pending_pdag_.find(t->qubit);
                if (it == alice_pending_pdag_.end()) {
                    throw internal_error("T gate without a preceding correction poly");
                }
                if (it->second) {
                    world_.apply1(Party::Alice, core::gates::Pdag(), data_handle_[t->qubit]);
                }
                alice_pending_pdag_.erase(it);
            } else if (const auto* r = std::get_if<circ::ReportInstr>(&in)) {
                report_batch(*r);
            } else if (const auto* p = std::get_if<circ::PolyEvalInstr>(&in)) {
                run_poly(*p);
            }
        }
    }

    void run_slot(const circ::SlotInstr& s) {
        const DeliveredSlot& d = delivered_.at(s.slot_id);
        world_.apply2(Party::Alice, core::gates::controlled_pauli(s.axis), d.alice_handle,
                      data_handle_[s.qubit]);
        world_.apply1(Party::Alice, core::gates::H(), d.alice_handle);
        const int m = world_.measure_pauli(Party::Alice, d.alice_handle, 3);
        batch_.emplace_back(s.slot_id, m);
        bob_queue_.push_back(PendingOp{PendingOp::Kind::Slot, s.slot_id, 0, 0});
    }

    void report_batch(const circ::ReportInstr& r) {
        if (batch_.size() != r.slot_ids.size()) {
            throw internal_error("report batch out of sync with schedule");
        }
        std::vector<uint8_t> payload;
        for (size_t i = 0; i < batch_.size(); ++i) {
            if (batch_[i].first != r.slot_ids[i]) {
                throw internal_error("report batch out of sync with schedule");
            }
            wire::put_u16(payload, static_cast<uint16_t>(batch_[i].first));
            payload.push_back(static_cast<uint8_t>(batch_[i].second));
        }
        channel_.send(Party::Alice, MsgKind::OutcomeReport, std::move(payload));

        // Bob now knows every outcome since the previous report; he drains
        // his queued updates in circuit order.
        std::unordered_map<int, int> outcome;
        for (const auto& [slot_id, m] : batch_) {
            outcome[slot_id] = m;
        }
        for (const PendingOp& op : bob_queue_) {
            if (op.kind == PendingOp::Kind::G) {
                keys::update_clifford(bob_keys_, keys::CliffordGate::g(op.q1, op.q2));
                continue;
            }
            const circ::SlotInstr& slot = *slot_by_id_[static_cast<size_t>(op.slot_id)];
            const int pick = delivered_.at(op.slot_id).bob_pick.value_or(0);
            const int bob_const = pick ^ slot.elem_flip;
            keys::incorporate_slot_outcome(bob_keys_,
                                           keys::SlotRef{slot.qubit, slot.axis, slot.basis},
                                           outcome.at(op.slot_id), bob_const);
        }
        bob_queue_.clear();
        if (hooks_.distribution != nullptr) {
            hooks_.distribution->on_outcomes_reported(batch_, world_);
        }
        batch_.clear();
    }

    void run_poly(const circ::PolyEvalInstr& p) {
        keys::LinearPoly poly;
        subproto::Output dir = subproto::Output::ToAlice;
        if (p.purpose == circ::PolyPurpose::TCorrection) {
            poly = keys::update_T(bob_keys_, p.qubit);
        } else {
            if (!final_keys_) {
                final_keys_ = keys::final_polys(bob_keys_);
            }
            const keys::QubitKey& k = (*final_keys_)[static_cast<size_t>(p.qubit)];
            poly = p.purpose == circ::PolyPurpose::FinalX ? k.x : k.z;
            if (cfg_.mode == Mode::Bqc) {
                dir = subproto::Output::ToBob;
            }
        }
        const int y = port_->evaluate(poly, alice_keys_.vars, channel_, p.poly_id, dir);
        if (p.purpose == circ::PolyPurpose::TCorrection) {
            alice_pending_pdag_[p.qubit] = y;
        } else if (cfg_.mode == Mode::Qhe) {
            if (p.purpose == circ::PolyPurpose::FinalX) {
                alice_final_[p.qubit].x = y;
            } else {
                alice_final_[p.qubit].z = y;
            }
        } else {
            if (p.purpose == circ::PolyPurpose::FinalX) {
                bob_final_[p.qubit].x = y;
            } else {
                bob_final_[p.qubit].z = y;
            }
        }
    }

    void finish(RunReport& report) {
        std::vector<int> output_handles;
        if (cfg_.mode == Mode::Qhe) {
            for (int q = 0; q < n_; ++q) {
                const FinalBits fb = alice_final_[q];
                if (fb.z) {
                    world_.apply1(Party::Alice, core::gates::Z(), data_handle_[q]);
                }
                if (fb.x) {
                    world_.apply1(Party::Alice, core::gates::X(), data_handle_[q]);
                }
            }
            output_handles = data_handle_;
            report.output_holder = Party::Alice;
            if (!world_.handles_of(Party::Bob).empty()) {
                throw internal_error("Bob holds qubits at the end of a QHE run");
            }
        } else {
            // Teleport every masked output qubit to Bob, then let him apply
            // the composed teleport + pad corrections.
            std::vector<uint8_t> payload;
            std::vector<std::array<int, 3>> outcomes;
            std::vector<int> bob_handles(static_cast<size_t>(n_));
            for (int q = 0; q < n_; ++q) {
                const auto [ha, hb] = world_.add_epr(Party::Alice, Party::Bob);
                world_.apply2(Party::Alice, core::gates::CNOT(), data_handle_[q], ha);
                world_.apply1(Party::Alice, core::gates::H(), data_handle_[q]);
                const int m1 = world_.measure_pauli(Party::Alice, data_handle_[q], 3);
                const int m2 = world_.measure_pauli(Party::Alice, ha, 3);
                outcomes.push_back({q, m1, m2});
                bob_handles[static_cast<size_t>(q)] = hb;
            }
            for (const auto& [q, m1, m2] : outcomes) {
                wire::put_u16(payload, static_cast<uint16_t>(q));
                payload.push_back(static_cast<uint8_t>(m1));
                payload.push_back(static_cast<uint8_t>(m2));
            }
            channel_.send(Party::Alice, MsgKind::TeleportOutcomes, std::move(payload));

            for (const auto& [q, m1, m2] : outcomes) {
                const FinalBits fb = bob_final_[q];
                const int hb = bob_handles[static_cast<size_t>(q)];
                if (fb.x ^ m2) {
                    world_.apply1(Party::Bob, core::gates::X(), hb);
                }
                if (fb.z ^ m1) {
                    world_.apply1(Party::Bob, core::gates::Z(), hb);
                }
            }
            output_handles = bob_handles;
            report.output_holder = Party::Bob;
            if (!world_.handles_of(Party::Alice).empty()) {
                throw internal_error("Alice holds qubits after the BQC handover");
            }
        }

        report.output = world_.extract_state(output_handles);
        const core::StateVector direct = circ::apply_circuit(circuit_, input_);
        report.fidelity_vs_direct = core::fidelity(direct, report.output);
    }

    const circ::SourceCircuit& circuit_;
    const core::StateVector& input_;
    const RunConfig& cfg_;
    Hooks hooks_;

    QuantumWorld world_;
    Channel channel_;
    core::Rng alice_rng_;
    core::Rng dealer_rng_;

    int n_ = 0;
    int m_ = 0;
    int effective_k_ = 0;
    circ::Schedule schedule_;
    std::vector<const circ::SlotInstr*> slot_by_id_;
    std::vector<int> data_handle_;
    keys::AliceKeys alice_keys_;
    keys::SymbolicKeys bob_keys_;
    std::unordered_map<int, DeliveredSlot> delivered_;
    struct PendingOp {
        enum class Kind : uint8_t { Slot, G } kind;
        int slot_id;
        int q1;
        int q2;
    };
    std::vector<std::pair<int, int>> batch_;
    std::vector<PendingOp> bob_queue_;
    std::unordered_map<int, int> alice_pending_pdag_;
    std::unordered_map<int, FinalBits> alice_final_;
    std::unordered_map<int, FinalBits> bob_final_;
    std::optional<std::vector<keys::QubitKey>> final_keys_;
    std::unique_ptr<subproto::PolyEvalPort> port_;
};

}  // namespace

std::vector<DeliveredSlot> distribute_program_states(const circ::Schedule& schedule,
                                                     QuantumWorld& world, Channel& channel,
                                                     DistributionPolicy* policy) {
    std::vector<DeliveredSlot> out;
    for (const circ::Instruction& in : schedule.instrs) {
        const auto* s = std::get_if<circ::SlotInstr>(&in);
        if (s == nullptr) {
            continue;
        }
        DeliveredSlot d;
        d.slot_id = s->slot_id;
        const auto [ha, hb] = world.add_epr(Party::Alice, Party::Bob);
        d.alice_handle = ha;
        if (policy != nullptr && policy->defer_slot(*s)) {
            d.bob_handle = hb;
            policy->note_deferred(s->slot_id, hb);
        } else {
            // Z-basis measurement realizes {|0>,|1>} on Alice's half; the
            // Y basis realizes {|y+>,|y->} with the pick inverted by the
            // EPR anticorrelation.
            const int axis = s->basis == gadget::BasisTag::Ybasis ? 2 : 3;
            const int raw = world.measure_pauli(Party::Bob, hb, axis);
            d.bob_pick = s->basis == gadget::BasisTag::Ybasis ? raw ^ 1 : raw;
        }
        std::vector<uint8_t> payload;
        wire::put_u16(payload, static_cast<uint16_t>(s->slot_id));
        channel.send(Party::Bob, MsgKind::ProgramState, std::move(payload));
        out.push_back(d);
    }
    return out;
}

RunReport run_scheme1(const circ::SourceCircuit& circuit, const core::StateVector& input,
                      const RunConfig& config, const Hooks& hooks) {
    if (config.mode != Mode::Qhe) {
        throw std::invalid_argument("run_scheme1 runs in QHE mode");
    }
    ProtocolRun run(circuit, input, config, hooks);
    return run.run();
}

RunReport run_bqc_handover(const circ::SourceCircuit& circuit,
                           const core::StateVector& input, const RunConfig& config,
                           const Hooks& hooks) {
    RunConfig cfg = config;
    cfg.mode = Mode::Bqc;
    ProtocolRun run(circuit, input, cfg, hooks);
    return run.run();
}

PrivacyReport privacy_report(const wire::Transcript& transcript, const RunConfig& config,
                             int m) {
    PrivacyReport r;
    r.mode = config.mode;
    r.subproto = config.subproto;
    r.input_class = config.input_class;
    r.m = m;
    r.k = config.subproto == SubprotoKind::Class1 ? config.k : 0;
    r.transcript_messages = static_cast<int>(transcript.messages.size());

    int ones = 0;
    std::vector<bool> poly_seen;
    auto mark_poly = [&poly_seen](int id) {
        if (id >= static_cast<int>(poly_seen.size())) {
            poly_seen.resize(static_cast<size_t>(id) + 1, false);
        }
        poly_seen[static_cast<size_t>(id)] = true;
    };

    for (const wire::Message& msg : transcript.messages) {
        switch (msg.kind) {
            case MsgKind::DataReveal:
                r.data_bits_revealed += static_cast<int>(msg.payload.size() / 3);
                break;
            case MsgKind::OutcomeReport: {
                const int pairs = static_cast<int>(msg.payload.size() / 3);
                r.outcome_bits_sent += pairs;
                for (int i = 0; i < pairs; ++i) {
                    ones += msg.payload[static_cast<size_t>(i) * 3 + 2] & 1;
                }
                break;
            }
            case MsgKind::ReducedPoly: {
                mark_poly(wire::get_u16(msg.payload, 0));
                r.coeff_bits_per_poly = wire::get_u16(msg.payload, 3);
                break;
            }
            case MsgKind::OttBits:
                if (msg.sender == Party::Alice) {
                    mark_poly(wire::get_u16(msg.payload, 0));
                }
                break;
            case MsgKind::Ciphertexts:
                mark_poly(wire::get_u16(msg.payload, 0));
                break;
            default:
                break;
        }
    }
    for (const bool seen : poly_seen) {
        r.polys_evaluated += seen ? 1 : 0;
    }
    r.hidden_coeff_bits_per_poly =
        config.subproto == SubprotoKind::Class1 ? r.k : m;
    r.outcome_ones_fraction =
        r.outcome_bits_sent > 0 ? static_cast<double>(ones) / r.outcome_bits_sent : 0.0;
    return r;
}

std::string PrivacyReport::to_text() const {
    std::ostringstream out;
    out << "mode " << mode_name(mode) << "\n";
    out << "subproto " << subproto_name(subproto) << "\n";
    out << "input_class " << input_class_name(input_class) << "\n";
    out << "m " << m << "\n";
    out << "k " << k << "\n";
    out << "data_bits_revealed " << data_bits_revealed << "\n";
    out << "polys_evaluated " << polys_evaluated << "\n";
    out << "coeff_bits_per_poly " << coeff_bits_per_poly << "\n";
    out << "hidden_coeff_bits_per_poly " << hidden_coeff_bits_per_poly << "\n";
    out << "outcome_bits_sent " << outcome_bits_sent << "\n";
    out << "outcome_ones_fraction " << outcome_ones_fraction << "\n";
    out << "transcript_messages " << transcript_messages << "\n";
    return out.str();
}

}  // namespace qhelab::proto
