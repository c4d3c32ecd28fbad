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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "core/errors.hpp"
#include "core/gates.hpp"
#include "proto/engine.hpp"
#include "support.hpp"

using namespace qhelab;
using core::cplx;
using core::StateVector;
using keys::InputClass;
using proto::Mode;
using proto::RunConfig;
using proto::SubprotoKind;
using wire::MsgKind;
using wire::Party;

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440084436210485;

RunConfig config(SubprotoKind sub, InputClass cls, int k, uint64_t seed) {
    RunConfig cfg;
    cfg.subproto = sub;
    cfg.input_class = cls;
    cfg.k = k;
    cfg.seed = seed;
    return cfg;
}

/// Fidelity of the run output against the dense test-side oracle.
double oracle_fidelity(const circ::SourceCircuit& c, const StateVector& in,
                       const proto::RunReport& report) {
    const auto expect =
        testsupport::dense_apply(testsupport::circuit_unitary(c), in.amps());
    return testsupport::overlap_sq(expect, report.output.amps());
}

}  // namespace

TEST_CASE("empty circuit returns the input") {
    circ::SourceCircuit c;
    c.n_qubits = 2;
    core::Rng rng(40);
    const StateVector in = StateVector::random(2, rng);
    const auto report =
        proto::run_scheme1(c, in, config(SubprotoKind::Class1, InputClass::General, 0, 1));
    CHECK_FALSE(report.aborted);
    CHECK(core::fidelity(report.output, in) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(report.fidelity_vs_direct == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("single T on |+> produces the T-rotated state") {
    circ::SourceCircuit c;
    c.n_qubits = 1;
    c.gates = {circ::Gate::t(0)};
    const StateVector plus = StateVector::qubit(kInvSqrt2, kInvSqrt2);
    const StateVector expect =
        StateVector::qubit(kInvSqrt2, cplx{0.5, 0.5});  // (|0> + e^{i pi/4}|1>)/sqrt2
    for (uint64_t seed = 0; seed < 8; ++seed) {
        const auto report = proto::run_scheme1(
            c, plus, config(SubprotoKind::Class1, InputClass::General, 0, seed));
        CHECK_FALSE(report.aborted);
        CHECK(core::fidelity(report.output, expect) == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("each source gate kind survives a round trip") {
    core::Rng rng(41);
    const std::vector<std::vector<circ::Gate>> programs = {
        {circ::Gate::h(0)},
        {circ::Gate::p(0)},
        {circ::Gate::t(0)},
        {circ::Gate::cz(0, 1)},
        {circ::Gate::cnot(0, 1)},
        {circ::Gate::g(0, 1)},
        {circ::Gate::eq1(1, 2, 0)},
        {circ::Gate::eq1(3, 1, 1)},
    };
    for (const auto& gates : programs) {
        circ::SourceCircuit c;
        c.n_qubits = 2;
        c.gates = gates;
        const StateVector in = StateVector::random(2, rng);
        const auto report = proto::run_scheme1(
            c, in, config(SubprotoKind::Class1, InputClass::General, 0, 5));
        CHECK_FALSE(report.aborted);
        CHECK(oracle_fidelity(c, in, report) == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("random circuits reach oracle fidelity over subprotocols and classes") {
    core::Rng rng(42);
    for (int trial = 0; trial < 24; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(3));
        const auto c = testsupport::random_circuit(n, 12, 2, rng);
        const int m = keys::num_vars_for(n, InputClass::General);

        StateVector in = StateVector::random(n, rng);
        const SubprotoKind sub = static_cast<SubprotoKind>(trial % 3);
        const int k = static_cast<int>(rng.below(m + 1));
        const auto report =
            proto::run_scheme1(c, in, config(sub, InputClass::General, k, trial));
        CHECK_FALSE(report.aborted);
        CHECK(oracle_fidelity(c, in, report) >= 1.0 - 1e-9);
    }
}

TEST_CASE("classical and real-product input classes run with n variables") {
    core::Rng rng(43);
    for (int trial = 0; trial < 8; ++trial) {
        const auto c = testsupport::random_circuit(2, 10, 1, rng);

        const StateVector basis = StateVector::basis_state(2, rng.below(4));
        const auto r1 = proto::run_scheme1(
            c, basis, config(SubprotoKind::Class1, InputClass::Classical, 1, trial));
        CHECK_FALSE(r1.aborted);
        CHECK(oracle_fidelity(c, basis, r1) >= 1.0 - 1e-9);
        CHECK(r1.privacy.m == 2);

        const StateVector real = StateVector::random_real_product(2, rng);
        const auto r2 = proto::run_scheme1(
            c, real, config(SubprotoKind::Ott, InputClass::RealProduct, 0, trial));
        CHECK_FALSE(r2.aborted);
        CHECK(oracle_fidelity(c, real, r2) >= 1.0 - 1e-9);
    }
}

TEST_CASE("input class validation") {
    circ::SourceCircuit c;
    c.n_qubits = 1;
    core::Rng rng(44);
    const StateVector super = StateVector::qubit(kInvSqrt2, cplx{0, kInvSqrt2});
    CHECK_THROWS_AS(proto::run_scheme1(
                        c, super, config(SubprotoKind::Class1, InputClass::Classical, 0, 0)),
                    std::invalid_argument);
    // |y+> is not a real state.
    CHECK_THROWS_AS(
        proto::run_scheme1(c, super,
                           config(SubprotoKind::Class1, InputClass::RealProduct, 0, 0)),
        std::invalid_argument);
    // Entangled input is not a product.
    StateVector bell = StateVector::from_amplitudes(
        {cplx{kInvSqrt2, 0}, {}, {}, cplx{kInvSqrt2, 0}});
    circ::SourceCircuit c2;
    c2.n_qubits = 2;
    CHECK_THROWS_AS(
        proto::run_scheme1(c2, bell,
                           config(SubprotoKind::Class1, InputClass::RealProduct, 0, 0)),
        std::invalid_argument);
    CHECK_THROWS_AS(proto::run_scheme1(
                        c, StateVector::zero(1),
                        config(SubprotoKind::Class1, InputClass::General, 7, 0)),
                    std::invalid_argument);
}

TEST_CASE("bqc handover: identity and H circuits end on Bob") {
    circ::SourceCircuit id;
    id.n_qubits = 1;
    core::Rng rng(45);
    const StateVector in = StateVector::random(1, rng);
    auto cfg = config(SubprotoKind::Ott, InputClass::General, 0, 9);
    const auto r1 = proto::run_bqc_handover(id, in, cfg);
    CHECK_FALSE(r1.aborted);
    CHECK(r1.output_holder == Party::Bob);
    CHECK(core::fidelity(r1.output, in) == doctest::Approx(1.0).epsilon(1e-9));

    circ::SourceCircuit h;
    h.n_qubits = 1;
    h.gates = {circ::Gate::h(0)};
    const StateVector plus = StateVector::qubit(kInvSqrt2, kInvSqrt2);
    const auto r2 = proto::run_bqc_handover(h, StateVector::zero(1), cfg);
    CHECK_FALSE(r2.aborted);
    CHECK(core::fidelity(r2.output, plus) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("bqc handover works across subprotocols on random circuits") {
    core::Rng rng(46);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(2));
        const auto c = testsupport::random_circuit(n, 10, 1, rng);
        const StateVector in = StateVector::random(n, rng);
        const auto sub = static_cast<SubprotoKind>(trial % 3);
        const auto report =
            proto::run_bqc_handover(c, in, config(sub, InputClass::General, 0, trial));
        CHECK_FALSE(report.aborted);
        CHECK(report.output_holder == Party::Bob);
        CHECK(oracle_fidelity(c, in, report) >= 1.0 - 1e-9);
        // Bob never sends Alice the final-correction polynomials: in class-1
        // BQC mode only the per-T polys appear (as bare constants).
        if (sub == SubprotoKind::Class1) {
            int reduced = 0;
            for (const auto& msg : report.transcript.messages) {
                if (msg.kind == MsgKind::ReducedPoly) {
                    ++reduced;
                    CHECK(wire::get_u16(msg.payload, 3) == 0);  // constant only
                }
            }
            CHECK(reduced == c.t_count());
        }
    }
}

TEST_CASE("transcripts replay byte-identically under a fixed seed") {
    core::Rng rng(47);
    const auto c = testsupport::random_circuit(2, 10, 2, rng);
    const StateVector in = StateVector::random(2, rng);
    for (const auto sub : {SubprotoKind::Class1, SubprotoKind::Ott, SubprotoKind::Ahe}) {
        const auto r1 = proto::run_scheme1(c, in, config(sub, InputClass::General, 2, 77));
        const auto r2 = proto::run_scheme1(c, in, config(sub, InputClass::General, 2, 77));
        CHECK(r1.transcript.to_text() == r2.transcript.to_text());
        const auto r3 = proto::run_scheme1(c, in, config(sub, InputClass::General, 2, 78));
        CHECK(r1.transcript.to_text() != r3.transcript.to_text());
    }
}

TEST_CASE("alice's outcome reports do not depend on her input") {
    core::Rng rng(48);
    const auto c = testsupport::random_circuit(2, 8, 1, rng);
    const StateVector in_a = StateVector::random(2, rng);
    const StateVector in_b = StateVector::random(2, rng);

    // Same seed: identical report payloads, because every outcome is an
    // exact coin toss regardless of the data.
    const auto ra = proto::run_scheme1(c, in_a, config(SubprotoKind::Ott,
                                                       InputClass::General, 0, 123));
    const auto rb = proto::run_scheme1(c, in_b, config(SubprotoKind::Ott,
                                                       InputClass::General, 0, 123));
    for (size_t i = 0; i < ra.transcript.messages.size(); ++i) {
        const auto& ma = ra.transcript.messages[i];
        if (ma.kind == MsgKind::OutcomeReport) {
            CHECK(ma.payload == rb.transcript.messages[i].payload);
        }
    }

    // Different seeds: the two outcome-bit samples stay statistically
    // indistinguishable.
    long ones_a = 0;
    long bits_a = 0;
    long ones_b = 0;
    long bits_b = 0;
    for (uint64_t seed = 0; seed < 60; ++seed) {
        const auto r1 =
            proto::run_scheme1(c, in_a, config(SubprotoKind::Class1, InputClass::General,
                                               0, 1000 + seed));
        const auto r2 =
            proto::run_scheme1(c, in_b, config(SubprotoKind::Class1, InputClass::General,
                                               0, 2000 + seed));
        ones_a += std::lround(r1.privacy.outcome_ones_fraction * r1.privacy.outcome_bits_sent);
        bits_a += r1.privacy.outcome_bits_sent;
        ones_b += std::lround(r2.privacy.outcome_ones_fraction * r2.privacy.outcome_bits_sent);
        bits_b += r2.privacy.outcome_bits_sent;
    }
    CHECK(testsupport::chi_square_two_sample(ones_a, bits_a, ones_b, bits_b) < 9.0);
}

TEST_CASE("privacy report counts match the transcript structure") {
    core::Rng rng(49);
    circ::SourceCircuit c;
    c.n_qubits = 2;
    c.gates = {circ::Gate::h(0), circ::Gate::t(0), circ::Gate::cnot(0, 1),
               circ::Gate::t(1)};
    const StateVector in = StateVector::random(2, rng);
    const int m = 4;

    for (const int k : {0, 2, 4}) {
        const auto report = proto::run_scheme1(
            c, in, config(SubprotoKind::Class1, InputClass::General, k, 5));
        CHECK_FALSE(report.aborted);
        CHECK(report.privacy.m == m);
        CHECK(report.privacy.k == k);
        CHECK(report.privacy.data_bits_revealed == k);
        // 2 T polys + 2 finals per qubit.
        CHECK(report.privacy.polys_evaluated == 2 + 2 * c.n_qubits);
        CHECK(report.privacy.coeff_bits_per_poly == m - k);
        CHECK(report.privacy.hidden_coeff_bits_per_poly == k);

        // Recount directly from the messages.
        int reveal_bits = 0;
        int reduced_msgs = 0;
        for (const auto& msg : report.transcript.messages) {
            if (msg.kind == MsgKind::DataReveal) {
                reveal_bits += static_cast<int>(msg.payload.size() / 3);
            } else if (msg.kind == MsgKind::ReducedPoly) {
                ++reduced_msgs;
                CHECK(wire::get_u16(msg.payload, 3) == m - k);
            }
        }
        CHECK(reveal_bits == k);
        CHECK(reduced_msgs == report.privacy.polys_evaluated);
    }
}

TEST_CASE("table shortfall aborts with the transcript intact") {
    core::Rng rng(50);
    const auto c = testsupport::random_circuit(2, 8, 2, rng);
    const StateVector in = StateVector::random(2, rng);
    auto cfg = config(SubprotoKind::Ott, InputClass::General, 0, 3);
    cfg.ott_table_budget = 1;
    const auto report = proto::run_scheme1(c, in, cfg);
    CHECK(report.aborted);
    CHECK(report.abort_reason == "one-time table shortfall");
    CHECK(report.transcript.messages.size() > 0);
    CHECK(report.transcript.messages.back().kind == MsgKind::Abort);
}

TEST_CASE("program state distribution marginals") {
    // Z-basis slots deliver |0> or |1>; Y-basis slots deliver |y+> or |y->;
    // before any message from Bob the average state is maximally mixed.
    circ::SourceCircuit c;
    c.n_qubits = 1;
    c.gates = {circ::Gate::eq1(0, 3, 0), circ::Gate::p(0)};  // one Z slot, one Y slot
    const auto schedule = circ::compile(c);

    int z_zero = 0;
    int y_plus = 0;
    core::Mat2 avg_z{};
    core::Mat2 avg_y{};
    const int trials = 2000;
    for (int i = 0; i < trials; ++i) {
        proto::QuantumWorld world{core::Rng(static_cast<uint64_t>(i), "quantum")};
        proto::Channel channel;
        const auto delivered =
            proto::distribute_program_states(schedule, world, channel, nullptr);
        REQUIRE(delivered.size() == 2);

        const core::Mat2 rho_z = world.reduced_density(delivered[0].alice_handle);
        const core::Mat2 rho_y = world.reduced_density(delivered[1].alice_handle);
        for (int e = 0; e < 4; ++e) {
            avg_z[e] += rho_z[e] / static_cast<double>(trials);
            avg_y[e] += rho_y[e] / static_cast<double>(trials);
        }
        // The realized state matches Bob's recorded pick.
        const auto prog_z = gadget::ProgramState::make(
            0 + 2 * delivered[0].bob_pick.value(), 3);
        CHECK(core::max_abs_diff(rho_z, prog_z.to_state().reduced_density(0)) < 1e-9);
        const auto prog_y = gadget::ProgramState::make(
            1 + 2 * delivered[1].bob_pick.value(), 3);
        CHECK(core::max_abs_diff(rho_y, prog_y.to_state().reduced_density(0)) < 1e-9);
        z_zero += delivered[0].bob_pick.value() == 0 ? 1 : 0;
        y_plus += delivered[1].bob_pick.value() == 0 ? 1 : 0;
    }
    CHECK(std::abs(z_zero / static_cast<double>(trials) - 0.5) < 0.05);
    CHECK(std::abs(y_plus / static_cast<double>(trials) - 0.5) < 0.05);
    const core::Mat2 mixed{{cplx{0.5, 0}, cplx{}, cplx{}, cplx{0.5, 0}}};
    CHECK(core::max_abs_diff(avg_z, mixed) < 0.05);
    CHECK(core::max_abs_diff(avg_y, mixed) < 0.05);
}

namespace {

/// Bob defers measuring his EPR halves on chosen slots, then measures them
/// in the X basis after the outcomes are reported, inferring data bits.
struct DeferredMeasureAttack final : proto::DistributionPolicy {
    std::vector<int> target_slots;
    std::unordered_map<int, int> kept;           // slot -> bob handle
    std::unordered_map<int, int> reported_m;     // slot -> alice outcome
    std::unordered_map<int, int> inferred;       // slot -> b xor m

    bool defer_slot(const circ::SlotInstr& s) override {
        for (const int id : target_slots) {
            if (id == s.slot_id) {
                return true;
            }
        }
        return false;
    }
    void note_deferred(int slot_id, int bob_handle) override {
        kept[slot_id] = bob_handle;
    }
    void on_outcomes_reported(std::span<const std::pair<int, int>> batch,
                              proto::QuantumWorld& world) override {
        for (const auto& [slot_id, m] : batch) {
            reported_m[slot_id] = m;
            const auto it = kept.find(slot_id);
            if (it == kept.end()) {
                continue;
            }
            const int b = world.measure_pauli(Party::Bob, it->second, 1);
            inferred[slot_id] = b ^ m;
            kept.erase(it);
        }
    }
};

}  // namespace

TEST_CASE("deferred-measurement copying of classical input leaves the result intact") {
    // A diagonal circuit on classical input: raw Z-axis slots driven by the
    // Eq.-1 source gates. Bob defers his halves on those slots, measures in
    // X after the reports, and recovers the (masked) data bits, while the
    // computation outcome is unchanged.
    circ::SourceCircuit c;
    c.n_qubits = 2;
    c.gates = {circ::Gate::eq1(2, 3, 0), circ::Gate::eq1(0, 3, 1),
               circ::Gate::eq1(2, 3, 1)};
    const StateVector in = StateVector::basis_state(2, 2);  // |10>

    for (uint64_t seed = 0; seed < 24; ++seed) {
        DeferredMeasureAttack attack;
        attack.target_slots = {0, 1, 2};
        proto::Hooks hooks;
        hooks.distribution = &attack;
        const auto cfg = config(SubprotoKind::Class1, InputClass::Classical, 0, seed);
        const auto report = proto::run_scheme1(c, in, cfg, hooks);
        CHECK_FALSE(report.aborted);
        CHECK(report.fidelity_vs_direct >= 1.0 - 1e-9);
        CHECK(attack.inferred.size() == 3);

        // The inferred bit equals the *encrypted* data bit on the slot's
        // qubit: Bob copied the classical ciphertext.
        const auto honest = proto::run_scheme1(c, in, cfg);
        CHECK(honest.fidelity_vs_direct >= 1.0 - 1e-9);
        CHECK(core::fidelity(honest.output, report.output) ==
              doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("mode separation is structural") {
    core::Rng rng(51);
    const auto c = testsupport::random_circuit(2, 6, 1, rng);
    const StateVector in = StateVector::random(2, rng);
    const auto qhe = proto::run_scheme1(c, in, config(SubprotoKind::Class1,
                                                      InputClass::General, 0, 6));
    CHECK(qhe.output_holder == Party::Alice);
    const auto bqc = proto::run_bqc_handover(c, in, config(SubprotoKind::Class1,
                                                           InputClass::General, 0, 6));
    CHECK(bqc.output_holder == Party::Bob);
    CHECK(bqc.output.n_qubits() == 2);
}

TEST_CASE("teleport outcome bits look uniform across seeds") {
    circ::SourceCircuit c;
    c.n_qubits = 1;
    long ones = 0;
    long total = 0;
    for (uint64_t seed = 0; seed < 400; ++seed) {
        const auto report = proto::run_bqc_handover(
            c, StateVector::qubit(0.6, 0.8),
            config(SubprotoKind::Ott, InputClass::General, 0, seed));
        for (const auto& msg : report.transcript.messages) {
            if (msg.kind == MsgKind::TeleportOutcomes) {
                for (size_t i = 0; i + 4 <= msg.payload.size(); i += 4) {
                    ones += msg.payload[i + 2] + msg.payload[i + 3];
                    total += 2;
                }
            }
        }
    }
    CHECK(testsupport::chi_square_uniform(ones, total) < 9.0);
}
