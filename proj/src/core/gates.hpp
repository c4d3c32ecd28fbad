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

#include "core/linalg.hpp"

namespace qhelab::core::gates {

// Single-qubit constants.
const Mat2& I2();
const Mat2& X();
const Mat2& Y();
const Mat2& Z();
const Mat2& H();
const Mat2& P();      // phase gate diag(1, i)
const Mat2& Pdag();   // diag(1, -i)
const Mat2& T();      // diag(1, e^{i pi/4})
const Mat2& Tdag();

// Two-qubit constants; first tensor factor is the more significant qubit.
const Mat4& CNOT();   // first qubit controls
const Mat4& CZ();
const Mat4& G();      // diag(1, -i, -i, 1)

/// cos(k pi/4) I + i sin(k pi/4) sigma_axis, for k in {0,1,2,3}.
/// These are the one-qubit Clifford primitives the program states realize.
Mat2 eq1(int theta_quarters, int axis);

/// Controlled-sigma_axis with the first tensor factor as control.
Mat4 controlled_pauli(int axis);

}  // namespace qhelab::core::gates
