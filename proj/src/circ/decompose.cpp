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

#include "circ/decompose.hpp"

#include <deque>
#include <stdexcept>

#include "core/gates.hpp"

namespace qhelab::circ {

namespace {

// The Y axis is deliberately absent: X and Z primitives already generate the
// whole group (max length 3) and keep the canonical sequences aligned with
// the fixed slot patterns used by the scheduler.
constexpr Eq1Elem kGenerators[] = {
    {1, 1}, {1, 3}, {2, 1}, {2, 3}, {3, 1}, {3, 3},
};

struct TableEntry {
    core::Mat2 matrix;  // phase-representative product
    std::vector<Eq1Elem> elems;
};

const std::vector<TableEntry>& clifford_table() {
    static const std::vector<TableEntry> table = [] {
        std::vector<TableEntry> found;
        found.push_back({core::gates::I2(), {}});
        std::deque<size_t> frontier{0};
        while (!frontier.empty() && found.size() < 24) {
            const size_t cur = frontier.front();
            frontier.pop_front();
            for (const Eq1Elem& g : kGenerators) {
                const core::Mat2 prod =
                    core::mul(core::gates::eq1(g.theta_quarters, g.axis),
                              found[cur].matrix);
                bool known = false;
                for (const TableEntry& e : found) {
                    if (core::equal_up_to_global_phase(prod, e.matrix, 1e-9)) {
                        known = true;
                        break;
                    }
                }
                if (known) {
                    continue;
                }
                TableEntry entry;
                entry.matrix = prod;
                entry.elems = found[cur].elems;
                entry.elems.push_back(g);
                found.push_back(std::move(entry));
                frontier.push_back(found.size() - 1);
            }
        }
        if (found.size() != 24) {
            throw std::logic_error("clifford closure has unexpected size");
        }
        return found;
    }();
    return table;
}

}  // namespace

core::Mat2 Eq1Sequence::product() const {
    core::Mat2 acc = core::gates::I2();
    for (const Eq1Elem& e : elems) {
        acc = core::mul(core::gates::eq1(e.theta_quarters, e.axis), acc);
    }
    return core::scale(global_phase, acc);
}

Eq1Sequence decompose_clifford(const core::Mat2& u) {
    if (core::unitarity_defect(u, 2) > 1e-8) {
        throw std::invalid_argument("input is not unitary");
    }
    for (const TableEntry& e : clifford_table()) {
        if (core::equal_up_to_global_phase(u, e.matrix, 1e-8)) {
            Eq1Sequence seq;
            seq.elems = e.elems;
            seq.global_phase = core::relative_phase(u, e.matrix);
            return seq;
        }
    }
    throw std::invalid_argument("input is not a single-qubit Clifford");
}

const std::vector<core::Mat2>& clifford_representatives() {
    static const std::vector<core::Mat2> reps = [] {
        std::vector<core::Mat2> out;
        for (const TableEntry& e : clifford_table()) {
            out.push_back(e.matrix);
        }
        return out;
    }();
    return reps;
}

}  // namespace qhelab::circ
