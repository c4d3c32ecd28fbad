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

#include "subproto/subproto.hpp"

#include <algorithm>
#include <stdexcept>

#include "core/errors.hpp"

namespace qhelab::subproto {

using wire::MsgKind;
using wire::Party;

int eval_plain(const GF2Affine& poly, std::span<const uint8_t> x) {
    return poly.eval(x);
}

std::vector<int> default_reveal_set(int m, int k) {
    if (k < 0 || k > m) {
        throw std::invalid_argument("reveal count must be in [0, m]");
    }
    std::vector<int> s(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
        s[i] = i;
    }
    return s;
}

void class1_send_reveal(std::span<const int> reveal_set, std::span<const uint8_t> x,
                        wire::MessageSink& sink) {
    std::vector<uint8_t> payload;
    for (const int i : reveal_set) {
        if (i < 0 || static_cast<size_t>(i) >= x.size()) {
            throw std::invalid_argument("reveal index out of range");
        }
        wire::put_u16(payload, static_cast<uint16_t>(i));
        payload.push_back(x[i] & 1);
    }
    sink.send(Party::Alice, MsgKind::DataReveal, std::move(payload));
}

int class1_evaluate(const GF2Affine& poly, std::span<const uint8_t> x,
                    std::span<const int> reveal_set, wire::MessageSink& sink, int poly_id,
                    bool send_reveal) {
    if (static_cast<int>(x.size()) != poly.num_vars()) {
        throw std::invalid_argument("variable count mismatch");
    }
    if (send_reveal) {
        class1_send_reveal(reveal_set, x, sink);
    }

    std::vector<uint8_t> revealed(x.size(), 0);
    for (const int i : reveal_set) {
        revealed[static_cast<size_t>(i)] = 1;
    }

    // Bob's reduced polynomial: the constant absorbs his coefficients on the
    // variables Alice told him.
    uint8_t reduced_constant = poly.constant;
    for (const int i : reveal_set) {
        reduced_constant ^= poly.coeffs[static_cast<size_t>(i)] & x[i];
    }
    std::vector<uint8_t> payload;
    wire::put_u16(payload, static_cast<uint16_t>(poly_id));
    payload.push_back(reduced_constant);
    std::vector<std::pair<int, uint8_t>> hidden;
    for (int i = 0; i < poly.num_vars(); ++i) {
        if (!revealed[static_cast<size_t>(i)]) {
            hidden.emplace_back(i, poly.coeffs[static_cast<size_t>(i)]);
        }
    }
    wire::put_u16(payload, static_cast<uint16_t>(hidden.size()));
    for (const auto& [idx, coeff] : hidden) {
        wire::put_u16(payload, static_cast<uint16_t>(idx));
        payload.push_back(coeff);
    }
    sink.send(Party::Bob, MsgKind::ReducedPoly, std::move(payload));

    // Alice evaluates the reduced polynomial on her side.
    int y = reduced_constant;
    for (const auto& [idx, coeff] : hidden) {
        y ^= coeff & x[static_cast<size_t>(idx)];
    }
    return y & 1;
}

TableStore::TableStore(size_t count, core::Rng& dealer_rng) {
    tables_.resize(count);
    for (OneTimeTable& t : tables_) {
        t.r_a = static_cast<uint8_t>(dealer_rng.bit());
        t.r_b = static_cast<uint8_t>(dealer_rng.bit());
        t.s_a = static_cast<uint8_t>(dealer_rng.bit());
        t.s_b = static_cast<uint8_t>((t.r_a & t.r_b) ^ t.s_a);
    }
}

OneTimeTable& TableStore::next() {
    if (cursor_ >= tables_.size()) {
        throw abort_error("one-time table shortfall");
    }
    return tables_[cursor_++];
}

int dealer_ott_evaluate(const GF2Affine& poly, std::span<const uint8_t> x,
                        TableStore& tables, wire::MessageSink& sink, int poly_id,
                        Output output) {
    const int m = poly.num_vars();
    if (static_cast<int>(x.size()) != m) {
        throw std::invalid_argument("variable count mismatch");
    }

    std::vector<uint8_t> u_bits(static_cast<size_t>(m));
    std::vector<uint8_t> v_bits(static_cast<size_t>(m));
    uint8_t z_alice = 0;
    uint8_t z_bob = 0;
    std::vector<const OneTimeTable*> used;
    for (int i = 0; i < m; ++i) {
        OneTimeTable& t = tables.next();
        if (t.consumed) {
            throw abort_error("one-time table reuse");
        }
        t.consumed = true;
        used.push_back(&t);
        u_bits[i] = static_cast<uint8_t>((x[i] ^ t.r_a) & 1);
        v_bits[i] = static_cast<uint8_t>((poly.coeffs[i] ^ t.r_b) & 1);
    }
    for (int i = 0; i < m; ++i) {
        const OneTimeTable& t = *used[i];
        z_alice ^= static_cast<uint8_t>((u_bits[i] & v_bits[i]) ^ (v_bits[i] & t.r_a) ^ t.s_a);
        z_bob ^= static_cast<uint8_t>((u_bits[i] & t.r_b) ^ t.s_b);
    }

    auto bits_payload = [&](const std::vector<uint8_t>& bits) {
        std::vector<uint8_t> p;
        wire::put_u16(p, static_cast<uint16_t>(poly_id));
        wire::put_u16(p, static_cast<uint16_t>(bits.size()));
        p.insert(p.end(), bits.begin(), bits.end());
        return p;
    };
    sink.send(Party::Alice, MsgKind::OttBits, bits_payload(u_bits));
    sink.send(Party::Bob, MsgKind::OttBits, bits_payload(v_bits));

    const int y = (z_alice ^ z_bob ^ poly.constant) & 1;
    std::vector<uint8_t> fin;
    wire::put_u16(fin, static_cast<uint16_t>(poly_id));
    if (output == Output::ToAlice) {
        // Bob closes: his total share plus the constant.
        fin.push_back(static_cast<uint8_t>((z_bob ^ poly.constant) & 1));
        sink.send(Party::Bob, MsgKind::FinalShare, std::move(fin));
    } else {
        // Alice hands Bob her share of the evaluation instead.
        fin.push_back(z_alice & 1);
        sink.send(Party::Alice, MsgKind::FinalShare, std::move(fin));
    }
    return y;
}

Ciphertext IdentityHeScheme::encrypt(int bit, core::Rng& rng) {
    return Ciphertext{static_cast<uint8_t>(bit & 1),
                      static_cast<uint8_t>(rng.next_u64() & 0xff)};
}

Ciphertext IdentityHeScheme::add(const Ciphertext& a, const Ciphertext& b) {
    return Ciphertext{static_cast<uint8_t>(a.value ^ b.value),
                      static_cast<uint8_t>(a.blind ^ b.blind)};
}

int IdentityHeScheme::decrypt(const Ciphertext& ct) { return ct.value & 1; }

Ciphertext IdentityHeScheme::rerandomize(const Ciphertext& ct, core::Rng& rng) {
    return Ciphertext{ct.value, static_cast<uint8_t>(rng.next_u64() & 0xff)};
}

int additive_he_evaluate(const GF2Affine& poly, std::span<const uint8_t> x,
                         AdditiveHeScheme& scheme, core::Rng& alice_rng,
                         core::Rng& bob_rng, wire::MessageSink& sink, int poly_id,
                         Output output) {
    const int m = poly.num_vars();
    if (static_cast<int>(x.size()) != m) {
        throw std::invalid_argument("variable count mismatch");
    }

    std::vector<Ciphertext> cts(static_cast<size_t>(m));
    std::vector<uint8_t> payload;
    wire::put_u16(payload, static_cast<uint16_t>(poly_id));
    wire::put_u16(payload, static_cast<uint16_t>(m));
    for (int i = 0; i < m; ++i) {
        cts[i] = scheme.encrypt(x[i] & 1, alice_rng);
        payload.push_back(cts[i].value);
        payload.push_back(cts[i].blind);
    }
    sink.send(Party::Alice, MsgKind::Ciphertexts, std::move(payload));

    Ciphertext acc = scheme.encrypt(poly.constant & 1, bob_rng);
    for (int i = 0; i < m; ++i) {
        if (poly.coeffs[i] & 1) {
            acc = scheme.add(acc, cts[i]);
        }
    }

    const int blind = output == Output::ToBob ? bob_rng.bit() : 0;
    if (output == Output::ToBob) {
        acc = scheme.add(acc, scheme.encrypt(blind, bob_rng));
    }
    acc = scheme.rerandomize(acc, bob_rng);

    std::vector<uint8_t> result;
    wire::put_u16(result, static_cast<uint16_t>(poly_id));
    result.push_back(acc.value);
    result.push_back(acc.blind);
    sink.send(Party::Bob, MsgKind::CipherResult, std::move(result));

    const int decrypted = scheme.decrypt(acc) & 1;
    if (output == Output::ToAlice) {
        return decrypted;
    }
    // Alice returns the blinded plaintext; Bob removes his blind.
    std::vector<uint8_t> fin;
    wire::put_u16(fin, static_cast<uint16_t>(poly_id));
    fin.push_back(static_cast<uint8_t>(decrypted));
    sink.send(Party::Alice, MsgKind::FinalShare, std::move(fin));
    return decrypted ^ blind;
}

int Class1Port::evaluate(const GF2Affine& poly, std::span<const uint8_t> x,
                         wire::MessageSink& sink, int poly_id, Output output) {
    // Output to Bob is only possible when every variable is revealed; the
    // engine arranges reveal_set accordingly in that mode.
    if (output == Output::ToBob &&
        static_cast<int>(reveal_set_.size()) != poly.num_vars()) {
        throw std::invalid_argument("class-1 output to Bob needs a full reveal set");
    }
    if (output == Output::ToBob) {
        // Bob holds every variable; no polynomial message is needed.
        return eval_plain(poly, x);
    }
    return class1_evaluate(poly, x, reveal_set_, sink, poly_id, false);
}

int DealerOttPort::evaluate(const GF2Affine& poly, std::span<const uint8_t> x,
                            wire::MessageSink& sink, int poly_id, Output output) {
    return dealer_ott_evaluate(poly, x, tables_, sink, poly_id, output);
}

AdditiveHePort::AdditiveHePort(std::unique_ptr<AdditiveHeScheme> scheme, uint64_t seed)
    : scheme_(std::move(scheme)), alice_rng_(seed, "ahe-alice"), bob_rng_(seed, "ahe-bob") {}

int AdditiveHePort::evaluate(const GF2Affine& poly, std::span<const uint8_t> x,
                             wire::MessageSink& sink, int poly_id, Output output) {
    return additive_he_evaluate(poly, x, *scheme_, alice_rng_, bob_rng_, sink, poly_id,
                                output);
}

}  // namespace qhelab::subproto
