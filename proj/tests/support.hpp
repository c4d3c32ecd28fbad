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

// Test-side oracles, kept independent of the library's gate-application
// path: full 2^n x 2^n matrices are assembled by index arithmetic and
// multiplied directly.

#pragma once

#include <complex>
#include <vector>

#include "circ/circuit.hpp"
#include "core/gates.hpp"
#include "core/rng.hpp"
#include "core/statevector.hpp"

namespace testsupport {

using qhelab::core::cplx;

/// Dense square matrix oracle type.
struct DenseMat {
    int dim = 0;
    std::vector<cplx> a;  // row-major

    static DenseMat identity(int dim) {
        DenseMat m;
        m.dim = dim;
        m.a.assign(static_cast<size_t>(dim) * dim, cplx{});
        for (int i = 0; i < dim; ++i) {
            m.a[static_cast<size_t>(i) * dim + i] = 1.0;
        }
        return m;
    }

    cplx& at(int r, int c) { return a[static_cast<size_t>(r) * dim + c]; }
    cplx at(int r, int c) const { return a[static_cast<size_t>(r) * dim + c]; }
};

inline DenseMat dense_mul(const DenseMat& x, const DenseMat& y) {
    DenseMat out = DenseMat::identity(x.dim);
    for (auto& v : out.a) {
        v = cplx{};
    }
    for (int i = 0; i < x.dim; ++i) {
        for (int k = 0; k < x.dim; ++k) {
            const cplx xik = x.at(i, k);
            if (xik == cplx{}) {
                continue;
            }
            for (int j = 0; j < x.dim; ++j) {
                out.at(i, j) += xik * y.at(k, j);
            }
        }
    }
    return out;
}

inline DenseMat dense_adjoint(const DenseMat& x) {
    DenseMat out = x;
    for (int i = 0; i < x.dim; ++i) {
        for (int j = 0; j < x.dim; ++j) {
            out.at(j, i) = std::conj(x.at(i, j));
        }
    }
    return out;
}

/// Embeds a k-qubit gate (row-major, dimension 2^k) acting on `targets`
/// into the full 2^n space by index arithmetic. targets[0] is the most
/// significant gate bit; register qubit 0 is the most significant index bit.
inline DenseMat embed(std::span<const cplx> gate, std::span<const int> targets, int n) {
    const int k = static_cast<int>(targets.size());
    const int gdim = 1 << k;
    DenseMat out;
    out.dim = 1 << n;
    out.a.assign(static_cast<size_t>(out.dim) * out.dim, cplx{});
    for (int col = 0; col < out.dim; ++col) {
        int gcol = 0;
        for (int i = 0; i < k; ++i) {
            if (col & (1 << (n - 1 - targets[i]))) {
                gcol |= 1 << (k - 1 - i);
            }
        }
        for (int grow = 0; grow < gdim; ++grow) {
            const cplx v = gate[static_cast<size_t>(grow) * gdim + gcol];
            if (v == cplx{}) {
                continue;
            }
            int row = col;
            for (int i = 0; i < k; ++i) {
                const int bit = 1 << (n - 1 - targets[i]);
                row &= ~bit;
                if (grow & (1 << (k - 1 - i))) {
                    row |= bit;
                }
            }
            out.at(row, col) += v;
        }
    }
    return out;
}

inline DenseMat gate_matrix(const qhelab::circ::Gate& g, int n) {
    using namespace qhelab::core::gates;
    using qhelab::circ::GateKind;
    switch (g.kind) {
        case GateKind::H: return embed(H(), std::vector<int>{g.q1}, n);
        case GateKind::P: return embed(P(), std::vector<int>{g.q1}, n);
        case GateKind::T: return embed(T(), std::vector<int>{g.q1}, n);
        case GateKind::CZ: return embed(CZ(), std::vector<int>{g.q1, g.q2}, n);
        case GateKind::CNOT: return embed(CNOT(), std::vector<int>{g.q1, g.q2}, n);
        case GateKind::G: return embed(G(), std::vector<int>{g.q1, g.q2}, n);
        case GateKind::Eq1:
            return embed(eq1(g.theta_quarters, g.axis), std::vector<int>{g.q1}, n);
    }
    return DenseMat::identity(1 << n);
}

/// Full unitary of a circuit (later gates multiplied on the left).
inline DenseMat circuit_unitary(const qhelab::circ::SourceCircuit& c) {
    DenseMat u = DenseMat::identity(1 << c.n_qubits);
    for (const auto& g : c.gates) {
        u = dense_mul(gate_matrix(g, c.n_qubits), u);
    }
    return u;
}

/// Applies a dense oracle matrix to a state, returning plain amplitudes.
inline std::vector<cplx> dense_apply(const DenseMat& u, std::span<const cplx> amps) {
    std::vector<cplx> out(static_cast<size_t>(u.dim), cplx{});
    for (int r = 0; r < u.dim; ++r) {
        for (int c = 0; c < u.dim; ++c) {
            out[static_cast<size_t>(r)] += u.at(r, c) * amps[static_cast<size_t>(c)];
        }
    }
    return out;
}

/// |<a|b>|^2 for raw amplitude vectors.
inline double overlap_sq(std::span<const cplx> a, std::span<const cplx> b) {
    cplx s{};
    for (size_t i = 0; i < a.size(); ++i) {
        s += std::conj(a[i]) * b[i];
    }
    return std::norm(s);
}

/// Random circuit over the full source alphabet with a minimum T count.
inline qhelab::circ::SourceCircuit random_circuit(int n, int max_gates, int min_t,
                                                  qhelab::core::Rng& rng) {
    using qhelab::circ::Gate;
    qhelab::circ::SourceCircuit c;
    c.n_qubits = n;
    const int len = min_t + static_cast<int>(rng.below(
                                static_cast<uint64_t>(std::max(1, max_gates - min_t + 1))));
    int t_left = min_t;
    for (int i = 0; i < len; ++i) {
        const int slots_left = len - i;
        if (slots_left <= t_left) {
            c.gates.push_back(Gate::t(static_cast<int>(rng.below(n))));
            --t_left;
            continue;
        }
        const int pick = static_cast<int>(rng.below(n >= 2 ? 7 : 4));
        const int q1 = static_cast<int>(rng.below(n));
        int q2 = n >= 2 ? static_cast<int>(rng.below(n - 1)) : 0;
        if (q2 >= q1) {
            ++q2;
        }
        switch (pick) {
            case 0: c.gates.push_back(Gate::h(q1)); break;
            case 1: c.gates.push_back(Gate::p(q1)); break;
            case 2:
                c.gates.push_back(Gate::t(q1));
                if (t_left > 0) {
                    --t_left;
                }
                break;
            case 3:
                c.gates.push_back(Gate::eq1(static_cast<int>(rng.below(4)),
                                            1 + static_cast<int>(rng.below(3)), q1));
                break;
            case 4: c.gates.push_back(Gate::cz(q1, q2)); break;
            case 5: c.gates.push_back(Gate::cnot(q1, q2)); break;
            case 6: c.gates.push_back(Gate::g(q1, q2)); break;
        }
    }
    return c;
}

/// One-dof chi-square for observed ones among n uniform bits.
inline double chi_square_uniform(long ones, long n) {
    const double expect = n / 2.0;
    const double d = ones - expect;
    return d * d / expect + d * d / expect;
}

/// 2x2 contingency chi-square for two proportions.
inline double chi_square_two_sample(long ones_a, long n_a, long ones_b, long n_b) {
    const double zeros_a = n_a - ones_a;
    const double zeros_b = n_b - ones_b;
    const double total = static_cast<double>(n_a + n_b);
    const double p1 = (ones_a + ones_b) / total;
    const double p0 = (zeros_a + zeros_b) / total;
    double stat = 0.0;
    const double cells[4][2] = {{static_cast<double>(ones_a), n_a * p1},
                                {static_cast<double>(zeros_a), n_a * p0},
                                {static_cast<double>(ones_b), n_b * p1},
                                {static_cast<double>(zeros_b), n_b * p0}};
    for (const auto& cell : cells) {
        if (cell[1] > 0) {
            const double d = cell[0] - cell[1];
            stat += d * d / cell[1];
        }
    }
    return stat;
}

}  // namespace testsupport
