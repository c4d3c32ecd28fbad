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
#include <vector>

namespace qhelab::selftest {

struct CheckResult {
    std::string name;
    bool passed = false;
    double max_deviation = 0.0;
    double tolerance = 0.0;
};

/// Runs the exhaustive algebraic identity suite: the one-qubit primitive
/// decompositions, the two G-gate identities, the gadget correction rule
/// over all 24 cases, the key-update conjugations (P, H, T, CNOT, G) over
/// all masks, and the orthogonal-flip relations.
std::vector<CheckResult> run_all();

}  // namespace qhelab::selftest
