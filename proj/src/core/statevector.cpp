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

#include "core/statevector.hpp"

#include <cmath>
#include <stdexcept>

#include "core/errors.hpp"
#include "core/gates.hpp"

namespace qhelab::core {

namespace {

bool is_power_of_two(uint64_t x) { return x != 0 && (x & (x - 1)) == 0; }

int log2_exact(uint64_t x) {
    int n = 0;
    while ((uint64_t{1} << n) < x) {
        ++n;
    }
    return n;
}

}  // namespace

StateVector StateVector::zero(int n_qubits) { return basis_state(n_qubits, 0); }

StateVector StateVector::basis_state(int n_qubits, uint64_t index) {
    if (n_qubits < 0 || n_qubits > 24) {
        throw std::invalid_argument("qubit count out of supported range");
    }
    StateVector s;
    s.n_qubits_ = n_qubits;
    s.amps_.assign(uint64_t{1} << n_qubits, cplx{});
    if (index >= s.amps_.size()) {
        throw std::invalid_argument("basis index out of range");
    }
    s.amps_[index] = 1.0;
    return s;
}

StateVector StateVector::from_amplitudes(std::vector<cplx> amps, double norm_tol) {
    if (!is_power_of_two(amps.size())) {
        throw std::invalid_argument("amplitude count must be a power of two");
    }
    StateVector s;
    s.n_qubits_ = log2_exact(amps.size());
    s.amps_ = std::move(amps);
    const double n = s.norm_sq();
    if (std::abs(n - 1.0) > norm_tol) {
        throw std::invalid_argument("state vector is not normalized");
    }
    const double inv = 1.0 / std::sqrt(n);
    for (auto& a : s.amps_) {
        a *= inv;
    }
    return s;
}

StateVector StateVector::qubit(cplx c0, cplx c1) {
    const double n = std::norm(c0) + std::norm(c1);
    if (n < 1e-30) {
        throw std::invalid_argument("zero qubit state");
    }
    const double inv = 1.0 / std::sqrt(n);
    StateVector s;
    s.n_qubits_ = 1;
    s.amps_ = {c0 * inv, c1 * inv};
    return s;
}

StateVector StateVector::random(int n_qubits, Rng& rng) {
    StateVector s;
    s.n_qubits_ = n_qubits;
    s.amps_.resize(uint64_t{1} << n_qubits);
    double norm = 0.0;
    for (auto& a : s.amps_) {
        a = cplx{rng.gaussian(), rng.gaussian()};
        norm += std::norm(a);
    }
    const double inv = 1.0 / std::sqrt(norm);
    for (auto& a : s.amps_) {
        a *= inv;
    }
    return s;
}

StateVector StateVector::random_real_product(int n_qubits, Rng& rng) {
    StateVector s = StateVector::zero(0);
    for (int q = 0; q < n_qubits; ++q) {
        const double theta = rng.uniform() * 6.283185307179586;
        s.append(StateVector::qubit(std::cos(theta), std::sin(theta)));
    }
    return s;
}

double StateVector::norm_sq() const {
    double n = 0.0;
    for (const auto& a : amps_) {
        n += std::norm(a);
    }
    return n;
}

void StateVector::apply(std::span<const cplx> u, std::span<const int> targets) {
    const int k = static_cast<int>(targets.size());
    const uint64_t gdim = uint64_t{1} << k;
    if (u.size() != gdim * gdim) {
        throw std::invalid_argument("gate dimension does not match target count");
    }
    uint64_t targets_mask = 0;
    for (const int t : targets) {
        if (t < 0 || t >= n_qubits_) {
            throw std::invalid_argument("target qubit out of range");
        }
        const uint64_t bit = uint64_t{1} << (n_qubits_ - 1 - t);
        if (targets_mask & bit) {
            throw std::invalid_argument("duplicate target qubit");
        }
        targets_mask |= bit;
    }

    std::vector<uint64_t> bits(k);
    for (int i = 0; i < k; ++i) {
        bits[i] = uint64_t{1} << (n_qubits_ - 1 - targets[i]);
    }

    std::vector<cplx> scratch(gdim);
    const uint64_t dim_all = dim();
    for (uint64_t base = 0; base < dim_all; ++base) {
        if (base & targets_mask) {
            continue;
        }
        for (uint64_t g = 0; g < gdim; ++g) {
            uint64_t idx = base;
            for (int i = 0; i < k; ++i) {
                if (g & (uint64_t{1} << (k - 1 - i))) {
                    idx |= bits[i];
                }
            }
            scratch[g] = amps_[idx];
        }
        for (uint64_t r = 0; r < gdim; ++r) {
            cplx acc{};
            for (uint64_t c = 0; c < gdim; ++c) {
                acc += u[r * gdim + c] * scratch[c];
            }
            uint64_t idx = base;
            for (int i = 0; i < k; ++i) {
                if (r & (uint64_t{1} << (k - 1 - i))) {
                    idx |= bits[i];
                }
            }
            amps_[idx] = acc;
        }
    }
}

void StateVector::apply1(const Mat2& u, int target) {
    const int t[1] = {target};
    apply(std::span<const cplx>(u.data(), 4), t);
}

void StateVector::apply2(const Mat4& u, int target_hi, int target_lo) {
    const int t[2] = {target_hi, target_lo};
    apply(std::span<const cplx>(u.data(), 16), t);
}

void StateVector::append(const StateVector& other) {
    std::vector<cplx> out;
    out.reserve(amps_.size() * other.amps_.size());
    for (const auto& a : amps_) {
        for (const auto& b : other.amps_) {
            out.push_back(a * b);
        }
    }
    amps_ = std::move(out);
    n_qubits_ += other.n_qubits_;
}

cplx StateVector::inner(const StateVector& other) const {
    if (n_qubits_ != other.n_qubits_) {
        throw std::invalid_argument("dimension mismatch");
    }
    cplx s{};
    for (size_t i = 0; i < amps_.size(); ++i) {
        s += std::conj(amps_[i]) * other.amps_[i];
    }
    return s;
}

Mat2 StateVector::reduced_density(int qubit) const {
    if (qubit < 0 || qubit >= n_qubits_) {
        throw std::invalid_argument("qubit out of range");
    }
    const uint64_t bit = uint64_t{1} << (n_qubits_ - 1 - qubit);
    Mat2 rho{};
    for (uint64_t i = 0; i < dim(); ++i) {
        if (i & bit) {
            continue;
        }
        const cplx a0 = amps_[i];
        const cplx a1 = amps_[i | bit];
        rho[0] += a0 * std::conj(a0);
        rho[1] += a0 * std::conj(a1);
        rho[2] += a1 * std::conj(a0);
        rho[3] += a1 * std::conj(a1);
    }
    return rho;
}

StateVector StateVector::permuted(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != n_qubits_) {
        throw std::invalid_argument("permutation size mismatch");
    }
    StateVector out;
    out.n_qubits_ = n_qubits_;
    out.amps_.assign(amps_.size(), cplx{});
    for (uint64_t i = 0; i < dim(); ++i) {
        uint64_t j = 0;
        for (int q = 0; q < n_qubits_; ++q) {
            const uint64_t old_bit = uint64_t{1} << (n_qubits_ - 1 - perm[q]);
            if (i & old_bit) {
                j |= uint64_t{1} << (n_qubits_ - 1 - q);
            }
        }
        out.amps_[j] = amps_[i];
    }
    return out;
}

MeasureResult measure_pauli(const StateVector& state, int qubit, int axis, Rng& rng) {
    StateVector rotated = state;
    // Rotate the +1/-1 eigenbasis onto |0>/|1>.
    switch (axis) {
        case 1: rotated.apply1(gates::H(), qubit); break;
        case 2:
            rotated.apply1(gates::Pdag(), qubit);
            rotated.apply1(gates::H(), qubit);
            break;
        case 3: break;
        default: throw std::invalid_argument("pauli axis must be 1, 2 or 3");
    }

    const int n = rotated.n_qubits();
    const uint64_t bit = uint64_t{1} << (n - 1 - qubit);
    double p0 = 0.0;
    for (uint64_t i = 0; i < rotated.dim(); ++i) {
        if (!(i & bit)) {
            p0 += std::norm(rotated.amp(i));
        }
    }
    const int outcome = rng.uniform() < p0 ? 0 : 1;
    const double p_branch = outcome == 0 ? p0 : 1.0 - p0;
    if (p_branch < 1e-15) {
        throw internal_error("measurement branch probability vanished");
    }

    std::vector<cplx> post;
    post.reserve(rotated.dim() / 2);
    const double inv = 1.0 / std::sqrt(p_branch);
    for (uint64_t i = 0; i < rotated.dim(); ++i) {
        if (((i & bit) != 0) != (outcome == 1)) {
            continue;
        }
        post.push_back(rotated.amp(i) * inv);
    }

    MeasureResult r;
    r.outcome = outcome;
    r.post = StateVector::from_amplitudes(std::move(post), 1e-9);
    return r;
}

MeasureResult measure_x_basis(const StateVector& state, int qubit, Rng& rng) {
    return measure_pauli(state, qubit, 1, rng);
}

double outcome_zero_probability(const StateVector& state, int qubit, int axis) {
    StateVector rotated = state;
    switch (axis) {
        case 1: rotated.apply1(gates::H(), qubit); break;
        case 2:
            rotated.apply1(gates::Pdag(), qubit);
            rotated.apply1(gates::H(), qubit);
            break;
        case 3: break;
        default: throw std::invalid_argument("pauli axis must be 1, 2 or 3");
    }
    const uint64_t bit = uint64_t{1} << (rotated.n_qubits() - 1 - qubit);
    double p0 = 0.0;
    for (uint64_t i = 0; i < rotated.dim(); ++i) {
        if (!(i & bit)) {
            p0 += std::norm(rotated.amp(i));
        }
    }
    return p0;
}

double fidelity(const StateVector& psi, const StateVector& eta) {
    return std::norm(psi.inner(eta));
}

StateVector apply_gate(const StateVector& state, std::span<const cplx> u,
                       std::span<const int> targets) {
    StateVector out = state;
    out.apply(u, targets);
    return out;
}

}  // namespace qhelab::core
