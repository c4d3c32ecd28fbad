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

#include <vector>

#include "core/linalg.hpp"

namespace qhelab::circ {

/// One primitive cos(theta) I + i sin(theta) sigma_axis with
/// theta = theta_quarters * pi/4.
struct Eq1Elem {
    int theta_quarters;
    int axis;

    bool operator==(const Eq1Elem&) const = default;
};

/// A product of primitives realizing a single-qubit Clifford:
/// target = global_phase * (elems[last] * ... * elems[0]); elems[0] is
/// applied first.
struct Eq1Sequence {
    std::vector<Eq1Elem> elems;
    core::cplx global_phase{1.0, 0.0};

    core::Mat2 product() const;
};

/// Canonical shortest decomposition of a single-qubit Clifford over the
/// X- and Z-axis primitives (theta in {pi/4, pi/2, 3pi/4}), found by
/// breadth-first search with lexicographic (theta, axis) tie-breaking.
/// Throws std::invalid_argument if `u` is not a Clifford (nothing matches
/// within length 6).
Eq1Sequence decompose_clifford(const core::Mat2& u);

/// Representatives of the 24 single-qubit Cliffords (up to global phase),
/// in the deterministic order the search discovers them.
const std::vector<core::Mat2>& clifford_representatives();

}  // namespace qhelab::circ
