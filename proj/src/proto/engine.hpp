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

#include <memory>
#include <optional>
#include <string>

#include "circ/schedule.hpp"
#include "keys/keytrack.hpp"
#include "proto/world.hpp"
#include "subproto/subproto.hpp"
#include "wire/wire.hpp"

namespace qhelab::proto {

enum class Mode : uint8_t { Qhe, Bqc };
enum class SubprotoKind : uint8_t { Class1, Ott, Ahe };

const char* mode_name(Mode m);
const char* subproto_name(SubprotoKind s);
const char* input_class_name(keys::InputClass c);

struct RunConfig {
    Mode mode = Mode::Qhe;
    keys::InputClass input_class = keys::InputClass::General;
    SubprotoKind subproto = SubprotoKind::Class1;
    int k = 0;                    // class-1 reveal count; ignored otherwise
    uint64_t seed = 0;
    double dummy_g_density = 0.0;
    long ott_table_budget = -1;   // -1: exactly what the schedule needs
    std::vector<int> reveal_set;  // optional override of the default set
};

/// Structural privacy accounting over a finished (or aborted) transcript.
struct PrivacyReport {
    Mode mode = Mode::Qhe;
    SubprotoKind subproto = SubprotoKind::Class1;
    keys::InputClass input_class = keys::InputClass::General;
    int m = 0;                       // pad variable count
    int k = 0;                       // class-1 reveal count (effective)
    int data_bits_revealed = 0;      // total plaintext pad bits Alice sent
    int polys_evaluated = 0;
    int coeff_bits_per_poly = 0;     // class-1: m - k; 0 otherwise
    int hidden_coeff_bits_per_poly = 0;  // class-1: k; m otherwise
    int outcome_bits_sent = 0;
    double outcome_ones_fraction = 0.0;
    int transcript_messages = 0;

    std::string to_text() const;
};

struct RunReport {
    core::StateVector output;
    wire::Party output_holder = wire::Party::Alice;
    double fidelity_vs_direct = 0.0;
    wire::Transcript transcript;
    PrivacyReport privacy;
    bool aborted = false;
    std::string abort_reason;
};

/// Message channel backed by a transcript.
class Channel final : public wire::MessageSink {
  public:
    void send(wire::Party from, wire::MsgKind kind, std::vector<uint8_t> payload) override;
    const wire::Transcript& transcript() const { return transcript_; }

  private:
    wire::Transcript transcript_;
};

/// Test hook for adversarial program-state distribution. The default is the
/// honest behavior: Bob measures his EPR half immediately in the scheduled
/// basis.
class DistributionPolicy {
  public:
    virtual ~DistributionPolicy() = default;
    /// When true, Bob keeps his half of this slot's pair unmeasured.
    virtual bool defer_slot(const circ::SlotInstr&) { return false; }
    /// Reports the handle Bob kept for a deferred slot.
    virtual void note_deferred(int /*slot_id*/, int /*bob_handle*/) {}
    /// Called after Bob processes an outcome batch; a deferring policy can
    /// measure its kept halves here, acting as Bob.
    virtual void on_outcomes_reported(std::span<const std::pair<int, int>> /*batch*/,
                                      QuantumWorld& /*world*/) {}
};

struct Hooks {
    DistributionPolicy* distribution = nullptr;
};

/// One delivered program state as seen by the two parties: Alice holds a
/// qubit handle; Bob knows which member of the orthogonal pair he prepared
/// (unless he deferred his measurement).
struct DeliveredSlot {
    int slot_id = 0;
    int alice_handle = -1;
    std::optional<int> bob_pick;   // orthogonal-pair flip bit f
    std::optional<int> bob_handle; // set when Bob deferred his measurement
};

/// Simulates Scheme-1 step 1 for every slot: one EPR pair each, Bob
/// measures his half in the slot's scheduled basis, and the delivery is
/// announced on the channel. Alice's halves stay in the world as independent
/// single-qubit factors until their slots run.
std::vector<DeliveredSlot> distribute_program_states(const circ::Schedule& schedule,
                                                     QuantumWorld& world, Channel& channel,
                                                     DistributionPolicy* policy = nullptr);

/// Runs the interactive protocol end to end with the output on Alice.
RunReport run_scheme1(const circ::SourceCircuit& circuit, const core::StateVector& input,
                      const RunConfig& config, const Hooks& hooks = {});

/// The blind-computation variant: Alice teleports the masked outputs to Bob
/// before the final corrections, and Bob resolves them himself.
RunReport run_bqc_handover(const circ::SourceCircuit& circuit,
                           const core::StateVector& input, const RunConfig& config,
                           const Hooks& hooks = {});

/// Recomputes the structural counts from a transcript.
PrivacyReport privacy_report(const wire::Transcript& transcript, const RunConfig& config,
                             int m);

}  // namespace qhelab::proto
