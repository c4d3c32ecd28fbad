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

#include "wire/wire.hpp"

#include <sstream>
#include <stdexcept>

namespace qhelab::wire {

const char* kind_name(MsgKind k) {
    switch (k) {
        case MsgKind::Schedule: return "SCHEDULE";
        case MsgKind::ProgramState: return "PROGRAM_STATE";
        case MsgKind::OutcomeReport: return "OUTCOME_REPORT";
        case MsgKind::DataReveal: return "DATA_REVEAL";
        case MsgKind::ReducedPoly: return "REDUCED_POLY";
        case MsgKind::OttBits: return "OTT_BITS";
        case MsgKind::Ciphertexts: return "CIPHERTEXTS";
        case MsgKind::CipherResult: return "CIPHER_RESULT";
        case MsgKind::FinalShare: return "FINAL_SHARE";
        case MsgKind::TeleportOutcomes: return "TELEPORT_OUTCOMES";
        case MsgKind::Abort: return "ABORT";
    }
    return "?";
}

std::string Transcript::to_text() const {
    static const char* hex = "0123456789abcdef";
    std::ostringstream out;
    for (const Message& m : messages) {
        out << m.seq << ' ' << party_tag(m.sender) << ' ' << kind_name(m.kind) << ' ';
        if (m.payload.empty()) {
            out << '-';
        } else {
            for (const uint8_t b : m.payload) {
                out << hex[b >> 4] << hex[b & 0xf];
            }
        }
        out << '\n';
    }
    return out.str();
}

size_t Transcript::total_payload_bytes() const {
    size_t n = 0;
    for (const Message& m : messages) {
        n += m.payload.size();
    }
    return n;
}

void put_u16(std::vector<uint8_t>& out, uint16_t v) {
    out.push_back(static_cast<uint8_t>(v & 0xff));
    out.push_back(static_cast<uint8_t>(v >> 8));
}

uint16_t get_u16(const std::vector<uint8_t>& in, size_t offset) {
    if (offset + 2 > in.size()) {
        throw std::out_of_range("payload truncated");
    }
    return static_cast<uint16_t>(in[offset] | (in[offset + 1] << 8));
}

}  // namespace qhelab::wire
