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

#include <cstdint>
#include <string>
#include <vector>

namespace qhelab::wire {

enum class Party : uint8_t { Alice = 0, Bob = 1 };

inline char party_tag(Party p) { return p == Party::Alice ? 'A' : 'B'; }

enum class MsgKind : uint8_t {
    Schedule,          // B->A: public schedule projection (text bytes)
    ProgramState,      // B->A: one program register delivered (slot id)
    OutcomeReport,     // A->B: (slot id, bit) pairs
    DataReveal,        // A->B: (variable index, bit) pairs
    ReducedPoly,       // B->A: constant + coefficients on hidden variables
    OttBits,           // either: masked bit vector for one polynomial
    Ciphertexts,       // A->B: encrypted variables for one polynomial
    CipherResult,      // B->A: homomorphically evaluated ciphertext
    FinalShare,        // either: one plaintext bit finishing a polynomial
    TeleportOutcomes,  // A->B: (qubit, m1, m2) triples
    Abort,             // either: reason text
};

const char* kind_name(MsgKind k);

struct Message {
    uint32_t seq = 0;
    Party sender = Party::Alice;
    MsgKind kind = MsgKind::Schedule;
    std::vector<uint8_t> payload;
};

/// Ordered record of every message exchanged in a run. Serialization is one
/// line per message: `seq sender kind payload-hex` with `-` for an empty
/// payload; identical seeds yield byte-identical text.
struct Transcript {
    std::vector<Message> messages;

    std::string to_text() const;
    size_t total_payload_bytes() const;
};

/// Destination for protocol messages; assigns sequence numbers.
class MessageSink {
  public:
    virtual ~MessageSink() = default;
    virtual void send(Party from, MsgKind kind, std::vector<uint8_t> payload) = 0;
};

/// Little-endian u16 packing helpers shared by payload builders.
void put_u16(std::vector<uint8_t>& out, uint16_t v);
uint16_t get_u16(const std::vector<uint8_t>& in, size_t offset);

}  // namespace qhelab::wire
