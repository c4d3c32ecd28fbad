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

#include "circ/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "core/errors.hpp"
#include "core/gates.hpp"

namespace qhelab::circ {

namespace {

bool parse_int(std::string_view tok, int& out) {
    const auto* end = tok.data() + tok.size();
    const auto res = std::from_chars(tok.data(), end, out);
    return res.ec == std::errc{} && res.ptr == end && out >= 0;
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> toks;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') {
            ++j;
        }
        if (j > i) {
            toks.push_back(line.substr(i, j - i));
        }
        i = j;
    }
    return toks;
}

}  // namespace

void SourceCircuit::validate() const {
    if (n_qubits < 1) {
        throw std::invalid_argument("circuit needs at least one qubit");
    }
    for (const Gate& g : gates) {
        const bool two = g.kind == GateKind::CZ || g.kind == GateKind::CNOT ||
                         g.kind == GateKind::G;
        if (g.q1 < 0 || g.q1 >= n_qubits || (two && (g.q2 < 0 || g.q2 >= n_qubits))) {
            throw std::invalid_argument("gate operand out of range");
        }
        if (two && g.q1 == g.q2) {
            throw std::invalid_argument("two-qubit gate operands must differ");
        }
        if (g.kind == GateKind::Eq1 &&
            (g.theta_quarters < 0 || g.theta_quarters > 3 || g.axis < 1 || g.axis > 3)) {
            throw std::invalid_argument("bad Eq1 parameters");
        }
    }
}

int SourceCircuit::t_count() const {
    return static_cast<int>(
        std::count_if(gates.begin(), gates.end(),
                      [](const Gate& g) { return g.kind == GateKind::T; }));
}

SourceCircuit parse_circuit(std::string_view text) {
    SourceCircuit c;
    int max_index = -1;
    int declared = 0;

    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        const size_t nl = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        if (const size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        const auto toks = split_ws(line);
        if (toks.empty()) {
            continue;
        }

        const std::string_view op = toks[0];
        auto need = [&](size_t n) {
            if (toks.size() != n + 1) {
                throw parse_error(line_no, "expected " + std::to_string(n) +
                                               " operand(s) after '" + std::string(op) + "'");
            }
        };
        auto qubit_arg = [&](size_t i) {
            int q = 0;
            if (!parse_int(toks[i], q)) {
                throw parse_error(line_no, "bad qubit index '" + std::string(toks[i]) + "'");
            }
            max_index = std::max(max_index, q);
            return q;
        };

        if (op == "qubits") {
            need(1);
            if (!parse_int(toks[1], declared) || declared < 1) {
                throw parse_error(line_no, "bad qubit count");
            }
        } else if (op == "H") {
            need(1);
            c.gates.push_back(Gate::h(qubit_arg(1)));
        } else if (op == "P") {
            need(1);
            c.gates.push_back(Gate::p(qubit_arg(1)));
        } else if (op == "T") {
            need(1);
            c.gates.push_back(Gate::t(qubit_arg(1)));
        } else if (op == "CZ") {
            need(2);
            c.gates.push_back(Gate::cz(qubit_arg(1), qubit_arg(2)));
        } else if (op == "CNOT") {
            need(2);
            c.gates.push_back(Gate::cnot(qubit_arg(1), qubit_arg(2)));
        } else if (op == "G") {
            need(2);
            c.gates.push_back(Gate::g(qubit_arg(1), qubit_arg(2)));
        } else {
            throw parse_error(line_no, "unknown gate '" + std::string(op) + "'");
        }

        if (toks.size() == 3 && toks[1] == toks[2]) {
            throw parse_error(line_no, "two-qubit gate operands must differ");
        }
    }

    c.n_qubits = std::max(declared, max_index + 1);
    if (c.n_qubits < 1) {
        c.n_qubits = 1;
    }
    c.validate();
    return c;
}

std::string to_text(const SourceCircuit& circuit) {
    std::ostringstream out;
    out << "qubits " << circuit.n_qubits << "\n";
    for (const Gate& g : circuit.gates) {
        switch (g.kind) {
            case GateKind::H: out << "H " << g.q1 << "\n"; break;
            case GateKind::P: out << "P " << g.q1 << "\n"; break;
            case GateKind::T: out << "T " << g.q1 << "\n"; break;
            case GateKind::CZ: out << "CZ " << g.q1 << " " << g.q2 << "\n"; break;
            case GateKind::CNOT: out << "CNOT " << g.q1 << " " << g.q2 << "\n"; break;
            case GateKind::G: out << "G " << g.q1 << " " << g.q2 << "\n"; break;
            case GateKind::Eq1:
                // Not part of the text format; kept readable for debugging.
                out << "# eq1 k=" << g.theta_quarters << " axis=" << g.axis << " q=" << g.q1
                    << "\n";
                break;
        }
    }
    return out.str();
}

core::StateVector apply_circuit(const SourceCircuit& circuit, core::StateVector state) {
    if (state.n_qubits() != circuit.n_qubits) {
        throw std::invalid_argument("state width does not match circuit");
    }
    using namespace core::gates;
    for (const Gate& g : circuit.gates) {
        switch (g.kind) {
            case GateKind::H: state.apply1(H(), g.q1); break;
            case GateKind::P: state.apply1(P(), g.q1); break;
            case GateKind::T: state.apply1(T(), g.q1); break;
            case GateKind::CZ: state.apply2(CZ(), g.q1, g.q2); break;
            case GateKind::CNOT: state.apply2(CNOT(), g.q1, g.q2); break;
            case GateKind::G: state.apply2(G(), g.q1, g.q2); break;
            case GateKind::Eq1: state.apply1(eq1(g.theta_quarters, g.axis), g.q1); break;
        }
    }
    return state;
}

}  // namespace qhelab::circ
