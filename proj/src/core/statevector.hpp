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
#include "core/rng.hpp"

namespace qhelab::core {

/// Normalized complex amplitude vector over n qubits. Qubit 0 is the most
/// significant bit of the amplitude index, so |q0 q1 ... q_{n-1}> reads the
/// index in binary left to right.
class StateVector {
  public:
    StateVector() = default;

    /// |0...0> on n qubits.
    static StateVector zero(int n_qubits);
    /// The computational basis state with the given index.
    static StateVector basis_state(int n_qubits, uint64_t index);
    /// From raw amplitudes; length must be a power of two. The norm must be
    /// 1 within `norm_tol`; the state is then normalized exactly.
    static StateVector from_amplitudes(std::vector<cplx> amps, double norm_tol = 1e-6);
    /// Single qubit c0|0> + c1|1> (normalized on construction).
    static StateVector qubit(cplx c0, cplx c1);
    /// Haar-random state.
    static StateVector random(int n_qubits, Rng& rng);
    /// Tensor product of random single-qubit states with real amplitudes.
    static StateVector random_real_product(int n_qubits, Rng& rng);

    int n_qubits() const { return n_qubits_; }
    uint64_t dim() const { return uint64_t{1} << n_qubits_; }
    const std::vector<cplx>& amps() const { return amps_; }
    cplx amp(uint64_t i) const { return amps_[i]; }

    double norm_sq() const;

    /// Applies a k-qubit unitary (dense, row-major, dimension 2^k) to the
    /// given distinct target qubits; identity elsewhere. targets[0] is the
    /// most significant bit of the gate's index convention.
    void apply(std::span<const cplx> u, std::span<const int> targets);
    void apply1(const Mat2& u, int target);
    void apply2(const Mat4& u, int target_hi, int target_lo);

    /// Appends `other`'s qubits after this state's qubits (tensor product).
    void append(const StateVector& other);

    /// <this|other>.
    cplx inner(const StateVector& other) const;

    /// Reduced single-qubit density matrix of `qubit`.
    Mat2 reduced_density(int qubit) const;

    /// Reorders qubits: new qubit position i holds old qubit perm[i].
    StateVector permuted(std::span<const int> perm) const;

  private:
    int n_qubits_ = 0;
    std::vector<cplx> amps_;
};

struct MeasureResult {
    int outcome = 0;
    StateVector post;  // measured qubit removed, renormalized
};

/// Projective measurement of sigma_axis on one qubit; outcome 0 maps to the
/// +1 eigenstate (|0>, |+> or |y+>). The measured qubit is removed from the
/// register. Throws internal_error if the sampled branch has probability
/// below 1e-15.
MeasureResult measure_pauli(const StateVector& state, int qubit, int axis, Rng& rng);

/// X-basis measurement: outcome 0 = |+>, outcome 1 = |->.
MeasureResult measure_x_basis(const StateVector& state, int qubit, Rng& rng);

/// Probability of outcome 0 when measuring sigma_axis on `qubit`.
double outcome_zero_probability(const StateVector& state, int qubit, int axis);

/// |<psi|eta>|^2 for equal-dimension states.
double fidelity(const StateVector& psi, const StateVector& eta);

/// Functional form of StateVector::apply, returning the new state.
StateVector apply_gate(const StateVector& state, std::span<const cplx> u,
                       std::span<const int> targets);

}  // namespace qhelab::core
