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

#include "core/errors.hpp"
#include "subproto/subproto.hpp"
#include "support.hpp"
#include "wire/wire.hpp"

using namespace qhelab;
using keys::GF2Affine;
using subproto::Output;
using wire::MsgKind;
using wire::Party;

namespace {

/// Minimal sink collecting messages for structural checks.
struct SinkSpy final : wire::MessageSink {
    wire::Transcript tr;
    void send(Party from, MsgKind kind, std::vector<uint8_t> payload) override {
        wire::Message m;
        m.seq = static_cast<uint32_t>(tr.messages.size());
        m.sender = from;
        m.kind = kind;
        m.payload = std::move(payload);
        tr.messages.push_back(std::move(m));
    }
};

// Reference evaluator, written as the obvious loop.
int naive_eval(const GF2Affine& poly, std::span<const uint8_t> x) {
    int acc = poly.constant & 1;
    for (int i = 0; i < poly.num_vars(); ++i) {
        acc = (acc + poly.coeffs[i] * x[i]) % 2;
    }
    return acc;
}

GF2Affine random_poly(int m, core::Rng& rng) {
    GF2Affine p = GF2Affine::zero(m);
    p.constant = static_cast<uint8_t>(rng.bit());
    for (auto& c : p.coeffs) {
        c = static_cast<uint8_t>(rng.bit());
    }
    return p;
}

std::vector<uint8_t> random_bits(int m, core::Rng& rng) {
    std::vector<uint8_t> x(static_cast<size_t>(m));
    for (auto& b : x) {
        b = static_cast<uint8_t>(rng.bit());
    }
    return x;
}

}  // namespace

TEST_CASE("eval_plain basics and the reference loop") {
    GF2Affine zero = GF2Affine::zero(3);
    CHECK(subproto::eval_plain(zero, std::vector<uint8_t>{1, 0, 1}) == 0);

    GF2Affine p = GF2Affine::zero(2);
    p.constant = 1;
    p.coeffs = {1, 1};
    CHECK(subproto::eval_plain(p, std::vector<uint8_t>{1, 0}) == 0);

    CHECK_THROWS_AS(subproto::eval_plain(p, std::vector<uint8_t>{1}),
                    std::invalid_argument);

    core::Rng rng(2);
    for (int i = 0; i < 500; ++i) {
        const int m = 1 + static_cast<int>(rng.below(8));
        const GF2Affine poly = random_poly(m, rng);
        const auto x = random_bits(m, rng);
        CHECK(subproto::eval_plain(poly, x) == naive_eval(poly, x));
    }
}

TEST_CASE("class-1 worked example: k=1, m=3") {
    GF2Affine poly = GF2Affine::zero(3);
    poly.constant = 1;
    poly.coeffs = {1, 0, 1};
    const std::vector<uint8_t> x{1, 1, 0};
    const std::vector<int> reveal{0};

    SinkSpy sink;
    const int y = subproto::class1_evaluate(poly, x, reveal, sink, 7, true);
    CHECK(y == 0);
    CHECK(y == subproto::eval_plain(poly, x));

    REQUIRE(sink.tr.messages.size() == 2);
    const auto& reveal_msg = sink.tr.messages[0];
    CHECK(reveal_msg.sender == Party::Alice);
    CHECK(reveal_msg.kind == MsgKind::DataReveal);
    CHECK(reveal_msg.payload.size() == 3);  // one (index, bit) pair
    CHECK(wire::get_u16(reveal_msg.payload, 0) == 0);
    CHECK(reveal_msg.payload[2] == 1);

    const auto& poly_msg = sink.tr.messages[1];
    CHECK(poly_msg.sender == Party::Bob);
    CHECK(poly_msg.kind == MsgKind::ReducedPoly);
    // c' = 1 ^ a_0 x_0 = 0; coefficients on variables 1 and 2 follow.
    CHECK(poly_msg.payload[2] == 0);
    CHECK(wire::get_u16(poly_msg.payload, 3) == 2);
}

TEST_CASE("class-1 extremes: full reveal and no reveal") {
    core::Rng rng(3);
    const int m = 4;
    const GF2Affine poly = random_poly(m, rng);
    const auto x = random_bits(m, rng);

    {
        SinkSpy sink;
        const int y = subproto::class1_evaluate(poly, x, subproto::default_reveal_set(m, m),
                                                sink, 0, false);
        CHECK(y == subproto::eval_plain(poly, x));
        CHECK(wire::get_u16(sink.tr.messages[0].payload, 3) == 0);  // constant only
    }
    {
        SinkSpy sink;
        const int y = subproto::class1_evaluate(poly, x, subproto::default_reveal_set(m, 0),
                                                sink, 0, false);
        CHECK(y == subproto::eval_plain(poly, x));
        CHECK(wire::get_u16(sink.tr.messages[0].payload, 3) == m);  // all coefficients
    }
}

TEST_CASE("class-1 message structure counts coefficients exactly") {
    core::Rng rng(4);
    for (int trial = 0; trial < 50; ++trial) {
        const int m = 2 + static_cast<int>(rng.below(6));
        const int k = static_cast<int>(rng.below(m + 1));
        const GF2Affine poly = random_poly(m, rng);
        const auto x = random_bits(m, rng);
        SinkSpy sink;
        const int y = subproto::class1_evaluate(poly, x, subproto::default_reveal_set(m, k),
                                                sink, 0, true);
        CHECK(y == subproto::eval_plain(poly, x));
        // Alice's reveal: exactly k bits. Bob's reply: (m-k) coefficients
        // plus one constant bit.
        CHECK(sink.tr.messages[0].payload.size() == static_cast<size_t>(3 * k));
        CHECK(wire::get_u16(sink.tr.messages[1].payload, 3) == m - k);
    }
}

TEST_CASE("one-time tables have the AND-share correlation") {
    core::Rng rng(5);
    subproto::TableStore store(200, rng);
    for (int i = 0; i < 200; ++i) {
        const auto& t = store.next();
        CHECK(((t.s_a ^ t.s_b) & 1) == ((t.r_a & t.r_b) & 1));
    }
    CHECK_THROWS_AS(store.next(), abort_error);
}

TEST_CASE("dealer-OTT share identity, exhaustive over one term") {
    // For one multiplication: z_a ^ z_b = a & x over all table contents.
    for (int a = 0; a < 2; ++a) {
        for (int x = 0; x < 2; ++x) {
            for (int ra = 0; ra < 2; ++ra) {
                for (int rb = 0; rb < 2; ++rb) {
                    for (int sa = 0; sa < 2; ++sa) {
                        const int sb = (ra & rb) ^ sa;
                        const int u = x ^ ra;
                        const int v = a ^ rb;
                        const int za = (u & v) ^ (v & ra) ^ sa;
                        const int zb = (u & rb) ^ sb;
                        CHECK(((za ^ zb) & 1) == (a & x));
                    }
                }
            }
        }
    }
}

TEST_CASE("dealer-OTT evaluates correctly and spends one table per variable") {
    core::Rng rng(6);
    for (int trial = 0; trial < 1000; ++trial) {
        const int m = 1 + static_cast<int>(rng.below(6));
        const GF2Affine poly = random_poly(m, rng);
        const auto x = random_bits(m, rng);
        subproto::TableStore store(static_cast<size_t>(m), rng);
        SinkSpy sink;
        const int y = subproto::dealer_ott_evaluate(poly, x, store, sink, 0,
                                                    Output::ToAlice);
        CHECK(y == subproto::eval_plain(poly, x));
        CHECK(store.remaining() == 0);
        REQUIRE(sink.tr.messages.size() == 3);
        CHECK(sink.tr.messages[0].sender == Party::Alice);
        CHECK(sink.tr.messages[1].sender == Party::Bob);
        CHECK(sink.tr.messages[2].kind == MsgKind::FinalShare);
        CHECK(sink.tr.messages[2].sender == Party::Bob);
    }
}

TEST_CASE("dealer-OTT with output to Bob flips the final share direction") {
    core::Rng rng(7);
    const int m = 3;
    const GF2Affine poly = random_poly(m, rng);
    const auto x = random_bits(m, rng);
    subproto::TableStore store(m, rng);
    SinkSpy sink;
    const int y = subproto::dealer_ott_evaluate(poly, x, store, sink, 0, Output::ToBob);
    CHECK(y == subproto::eval_plain(poly, x));
    CHECK(sink.tr.messages[2].kind == MsgKind::FinalShare);
    CHECK(sink.tr.messages[2].sender == Party::Alice);
}

TEST_CASE("constant polynomial needs no tables") {
    GF2Affine poly = GF2Affine::zero(0);
    poly.constant = 1;
    core::Rng rng(8);
    subproto::TableStore store(0, rng);
    SinkSpy sink;
    const int y = subproto::dealer_ott_evaluate(poly, std::vector<uint8_t>{}, store, sink,
                                                0, Output::ToAlice);
    CHECK(y == 1);
}

TEST_CASE("table reuse is rejected") {
    core::Rng rng(9);
    subproto::TableStore store(1, rng);
    store.next().consumed = true;
    GF2Affine poly = GF2Affine::zero(1);
    poly.coeffs = {1};
    // Hand the evaluator a store whose only table was already consumed.
    subproto::TableStore fresh(1, rng);
    fresh.next().consumed = true;
    SinkSpy sink;
    CHECK_THROWS_AS(subproto::dealer_ott_evaluate(poly, std::vector<uint8_t>{1}, store,
                                                  sink, 0, Output::ToAlice),
                    abort_error);
}

TEST_CASE("dealer-OTT shortfall aborts") {
    core::Rng rng(10);
    subproto::TableStore store(1, rng);
    GF2Affine poly = GF2Affine::zero(3);
    poly.coeffs = {1, 1, 1};
    SinkSpy sink;
    CHECK_THROWS_AS(subproto::dealer_ott_evaluate(poly, std::vector<uint8_t>{1, 0, 1},
                                                  store, sink, 0, Output::ToAlice),
                    abort_error);
}

TEST_CASE("pre-final OTT message bits are uniform") {
    core::Rng rng(11);
    const int m = 2;
    GF2Affine poly = GF2Affine::zero(m);
    poly.coeffs = {1, 0};  // fixed coefficients, fixed inputs
    const std::vector<uint8_t> x{1, 1};
    long ones_u = 0;
    long ones_v = 0;
    const long n = 10000;
    for (long i = 0; i < n; ++i) {
        subproto::TableStore store(m, rng);
        SinkSpy sink;
        subproto::dealer_ott_evaluate(poly, x, store, sink, 0, Output::ToAlice);
        ones_u += sink.tr.messages[0].payload[4] & 1;  // first u bit
        ones_v += sink.tr.messages[1].payload[4] & 1;  // first v bit
    }
    CHECK(testsupport::chi_square_uniform(ones_u, n) < 9.0);
    CHECK(testsupport::chi_square_uniform(ones_v, n) < 9.0);
}

TEST_CASE("additive HE route agrees with plain evaluation") {
    core::Rng rng(12);
    subproto::IdentityHeScheme scheme;
    core::Rng alice(13);
    core::Rng bob(14);
    for (int trial = 0; trial < 1000; ++trial) {
        const int m = 1 + static_cast<int>(rng.below(6));
        const GF2Affine poly = random_poly(m, rng);
        const auto x = random_bits(m, rng);
        SinkSpy sink;
        const int y = subproto::additive_he_evaluate(poly, x, scheme, alice, bob, sink, 0,
                                                     Output::ToAlice);
        CHECK(y == subproto::eval_plain(poly, x));
    }
}

TEST_CASE("additive HE details: zero coefficients, rerandomization, Bob output") {
    subproto::IdentityHeScheme scheme;
    core::Rng alice(15);
    core::Rng bob(16);

    GF2Affine poly = GF2Affine::zero(3);
    poly.constant = 1;
    SinkSpy sink;
    CHECK(subproto::additive_he_evaluate(poly, std::vector<uint8_t>{1, 1, 0}, scheme,
                                         alice, bob, sink, 0, Output::ToAlice) == 1);

    const auto ct = scheme.encrypt(1, alice);
    const auto ct2 = scheme.rerandomize(ct, alice);
    CHECK(scheme.decrypt(ct) == scheme.decrypt(ct2));

    core::Rng rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const GF2Affine p = random_poly(4, rng);
        const auto x = random_bits(4, rng);
        SinkSpy s2;
        CHECK(subproto::additive_he_evaluate(p, x, scheme, alice, bob, s2, 0,
                                             Output::ToBob) == subproto::eval_plain(p, x));
        // Alice's reply exists and Bob's ciphertext hides the value under
        // the blind: transcript has 3 messages in this direction.
        CHECK(s2.tr.messages.size() == 3);
    }
}

TEST_CASE("the three ports agree with eval_plain through the common interface") {
    core::Rng rng(18);
    for (int trial = 0; trial < 300; ++trial) {
        const int m = 1 + static_cast<int>(rng.below(5));
        const GF2Affine poly = random_poly(m, rng);
        const auto x = random_bits(m, rng);
        const int expect = subproto::eval_plain(poly, x);

        subproto::Class1Port class1(
            subproto::default_reveal_set(m, static_cast<int>(rng.below(m + 1))));
        core::Rng dealer(trial + 100);
        subproto::DealerOttPort ott(subproto::TableStore(static_cast<size_t>(m), dealer));
        subproto::AdditiveHePort ahe(std::make_unique<subproto::IdentityHeScheme>(), 99);

        SinkSpy s1, s2, s3;
        CHECK(class1.evaluate(poly, x, s1, 0, Output::ToAlice) == expect);
        CHECK(ott.evaluate(poly, x, s2, 0, Output::ToAlice) == expect);
        CHECK(ahe.evaluate(poly, x, s3, 0, Output::ToAlice) == expect);
    }
}
