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

#include <string>
#include <string_view>
#include <vector>

#include "core/statevector.hpp"

namespace qhelab::circ {

enum class GateKind : uint8_t { H, P, T, CZ, CNOT, G, Eq1 };

struct Gate {
    GateKind kind;
    int q1 = 0;
    int q2 = 0;              // CZ/CNOT/G only; CNOT control = q1
    int theta_quarters = 0;  // Eq1 only
    int axis = 0;            // Eq1 only

    static Gate h(int q) { return {GateKind::H, q, 0, 0, 0}; }
    static Gate p(int q) { return {GateKind::P, q, 0, 0, 0}; }
    static Gate t(int q) { return {GateKind::T, q, 0, 0, 0}; }
    static Gate cz(int a, int b) { return {GateKind::CZ, a, b, 0, 0}; }
    static Gate cnot(int c, int t) { return {GateKind::CNOT, c, t, 0, 0}; }
    static Gate g(int a, int b) { return {GateKind::G, a, b, 0, 0}; }
    static Gate eq1(int theta_quarters, int axis, int q) {
        return {GateKind::Eq1, q, 0, theta_quarters, axis};
    }
};

/// A source Clifford+T circuit as supplied by Bob.
struct SourceCircuit {
    int n_qubits = 0;
    std::vector<Gate> gates;

    void validate() const;  // operand ranges and distinctness

    /// Number of T gates.
    int t_count() const;
};

/// Parses the one-gate-per-line text format: `H q`, `P q`, `T q`,
/// `CZ q1 q2`, `CNOT q1 q2`, `G q1 q2`; `#` starts a comment; an optional
/// `qubits N` directive widens the register beyond the largest index used.
/// Throws parse_error with the offending 1-based line number.
SourceCircuit parse_circuit(std::string_view text);

/// Renders a circuit back to the text format.
std::string to_text(const SourceCircuit& circuit);

/// Applies the circuit to a state directly, gate by gate.
core::StateVector apply_circuit(const SourceCircuit& circuit, core::StateVector state);

}  // namespace qhelab::circ
