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

#include <unordered_map>
#include <vector>

#include "core/statevector.hpp"
#include "wire/wire.hpp"

namespace qhelab::proto {

/// The shared quantum state of a run. Qubits live in independent tensor
/// factors that merge only when a gate spans them, so transient registers
/// (program states, EPR halves) never inflate the main register. Every qubit
/// carries an owner tag; a party can only act on its own qubits, which is
/// the structural guarantee behind the mode-separation assertions.
class QuantumWorld {
  public:
    explicit QuantumWorld(core::Rng measure_rng) : rng_(std::move(measure_rng)) {}

    /// Adds a whole register owned by one party; returns its qubit handles.
    std::vector<int> add_register(const core::StateVector& state, wire::Party owner);

    /// Adds one qubit c0|0> + c1|1>.
    int add_qubit(core::cplx c0, core::cplx c1, wire::Party owner);

    /// Adds an EPR pair (|00> + |11>)/sqrt(2); first handle owned by `a`,
    /// second by `b`.
    std::pair<int, int> add_epr(wire::Party a, wire::Party b);

    void apply1(wire::Party actor, const core::Mat2& u, int handle);
    /// Two-qubit gate; `handle_hi` is the more significant gate index.
    void apply2(wire::Party actor, const core::Mat4& u, int handle_hi, int handle_lo);

    /// Measures sigma_axis on the qubit and removes it. Outcome 0 is the +1
    /// eigenstate. Measurement randomness comes from the world's own stream.
    int measure_pauli(wire::Party actor, int handle, int axis);

    wire::Party owner(int handle) const;
    bool exists(int handle) const;
    int qubit_count() const;
    std::vector<int> handles_of(wire::Party p) const;

    /// Reduced single-qubit density matrix (diagnostics and tests).
    core::Mat2 reduced_density(int handle) const;

    /// The joint pure state of the given qubits in the given order. They
    /// must exhaust their tensor factors (true at end of run when only the
    /// outputs remain).
    core::StateVector extract_state(std::span<const int> handles) const;

  private:
    struct Factor {
        core::StateVector state;
        std::vector<int> handles;  // position i <-> handles[i]
    };

    struct Location {
        int factor = 0;
        wire::Party owner = wire::Party::Alice;
    };

    int position_of(const Factor& f, int handle) const;
    Factor& factor_of(int handle);
    const Factor& factor_of(int handle) const;
    /// Merges the factors holding the two handles into one (no-op if equal).
    void merge(int handle_a, int handle_b);
    void check_owner(wire::Party actor, int handle) const;

    std::vector<Factor> factors_;
    std::unordered_map<int, Location> where_;
    int next_handle_ = 0;
    core::Rng rng_;
};

}  // namespace qhelab::proto
