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

#include "core/rng.hpp"
#include "keys/gf2.hpp"
#include "wire/wire.hpp"

namespace qhelab::subproto {

using keys::GF2Affine;

/// y = c + sum a_i x_i mod 2, evaluated in the clear (the reference all
/// two-party routes must agree with).
int eval_plain(const GF2Affine& poly, std::span<const uint8_t> x);

/// Which party ends up holding the polynomial value.
enum class Output : uint8_t { ToAlice, ToBob };

// ---------------------------------------------------------------------------
// Class 1: plaintext-tradeoff protocol. Alice reveals the variables in S
// once per run; Bob answers each polynomial with a reduced polynomial whose
// constant absorbs his coefficients on the revealed variables.

/// Sends Alice's reveal message for the variables in S (call once per run).
void class1_send_reveal(std::span<const int> reveal_set, std::span<const uint8_t> x,
                        wire::MessageSink& sink);

/// One polynomial under the class-1 protocol. `send_reveal` emits the
/// reveal message first (standalone use); runs keep it separate.
int class1_evaluate(const GF2Affine& poly, std::span<const uint8_t> x,
                    std::span<const int> reveal_set, wire::MessageSink& sink,
                    int poly_id = 0, bool send_reveal = false);

/// Lexicographically-first k variable indices (the default reveal set).
std::vector<int> default_reveal_set(int m, int k);

// ---------------------------------------------------------------------------
// Class 2 stand-in: precomputed one-time tables from a trusted dealer.

/// Shares of one AND: s_a ^ s_b = r_a & r_b, with r_a, r_b uniform.
struct OneTimeTable {
    uint8_t r_a = 0;
    uint8_t s_a = 0;
    uint8_t r_b = 0;
    uint8_t s_b = 0;
    bool consumed = false;
};

/// Dealer-filled pool of single-use tables. The dealer is a distinct role on
/// purpose: anything able to produce correlated randomness with the same
/// contract can replace it.
class TableStore {
  public:
    TableStore() = default;
    TableStore(size_t count, core::Rng& dealer_rng);

    /// Hands out the next fresh table. Throws abort_error on shortfall.
    OneTimeTable& next();
    size_t remaining() const { return tables_.size() - cursor_; }
    size_t consumed_count() const { return cursor_; }

  private:
    std::vector<OneTimeTable> tables_;
    size_t cursor_ = 0;
};

/// Evaluates one polynomial through the one-time-table protocol. One fresh
/// table is consumed per variable index. All messages before the final bit
/// are individually uniform. Throws abort_error on table reuse or shortfall.
int dealer_ott_evaluate(const GF2Affine& poly, std::span<const uint8_t> x,
                        TableStore& tables, wire::MessageSink& sink, int poly_id = 0,
                        Output output = Output::ToAlice);

// ---------------------------------------------------------------------------
// Additive-HE route behind an abstract scheme port.

struct Ciphertext {
    uint8_t value = 0;
    uint8_t blind = 0;  // carried around; ignored by decrypt
};

class AdditiveHeScheme {
  public:
    virtual ~AdditiveHeScheme() = default;
    virtual Ciphertext encrypt(int bit, core::Rng& rng) = 0;
    virtual Ciphertext add(const Ciphertext& a, const Ciphertext& b) = 0;
    virtual int decrypt(const Ciphertext& ct) = 0;
    virtual Ciphertext rerandomize(const Ciphertext& ct, core::Rng& rng) = 0;
};

/// Reference scheme for functional tests only: the plaintext rides in the
/// ciphertext. Deliberately insecure.
class IdentityHeScheme final : public AdditiveHeScheme {
  public:
    Ciphertext encrypt(int bit, core::Rng& rng) override;
    Ciphertext add(const Ciphertext& a, const Ciphertext& b) override;
    int decrypt(const Ciphertext& ct) override;
    Ciphertext rerandomize(const Ciphertext& ct, core::Rng& rng) override;
};

/// Alice encrypts her variables; Bob homomorphically assembles
/// Enc(c + sum a_i x_i). With output to Bob the result is blinded by a
/// random bit r so that Alice decrypts and returns y ^ r without learning y.
int additive_he_evaluate(const GF2Affine& poly, std::span<const uint8_t> x,
                         AdditiveHeScheme& scheme, core::Rng& alice_rng,
                         core::Rng& bob_rng, wire::MessageSink& sink, int poly_id = 0,
                         Output output = Output::ToAlice);

// ---------------------------------------------------------------------------
// Uniform port over the three routes.

class PolyEvalPort {
  public:
    virtual ~PolyEvalPort() = default;
    virtual int evaluate(const GF2Affine& poly, std::span<const uint8_t> x,
                         wire::MessageSink& sink, int poly_id, Output output) = 0;
};

class Class1Port final : public PolyEvalPort {
  public:
    explicit Class1Port(std::vector<int> reveal_set) : reveal_set_(std::move(reveal_set)) {}
    int evaluate(const GF2Affine& poly, std::span<const uint8_t> x,
                 wire::MessageSink& sink, int poly_id, Output output) override;
    const std::vector<int>& reveal_set() const { return reveal_set_; }

  private:
    std::vector<int> reveal_set_;
};

class DealerOttPort final : public PolyEvalPort {
  public:
    explicit DealerOttPort(TableStore tables) : tables_(std::move(tables)) {}
    int evaluate(const GF2Affine& poly, std::span<const uint8_t> x,
                 wire::MessageSink& sink, int poly_id, Output output) override;
    TableStore& tables() { return tables_; }

  private:
    TableStore tables_;
};

class AdditiveHePort final : public PolyEvalPort {
  public:
    AdditiveHePort(std::unique_ptr<AdditiveHeScheme> scheme, uint64_t seed);
    int evaluate(const GF2Affine& poly, std::span<const uint8_t> x,
                 wire::MessageSink& sink, int poly_id, Output output) override;

  private:
    std::unique_ptr<AdditiveHeScheme> scheme_;
    core::Rng alice_rng_;
    core::Rng bob_rng_;
};

}  // namespace qhelab::subproto
