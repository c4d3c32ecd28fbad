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

#include "tomo/tomo.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "core/errors.hpp"
#include "core/gates.hpp"
#include "core/pauli.hpp"

namespace qhelab::tomo {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440084436210485;
constexpr double kPi = 3.14159265358979323846264338327950;

Mat2 projector(cplx c0, cplx c1) {
    const double n = std::sqrt(std::norm(c0) + std::norm(c1));
    c0 /= n;
    c1 /= n;
    return Mat2{{c0 * std::conj(c0), c0 * std::conj(c1), c1 * std::conj(c0),
                 c1 * std::conj(c1)}};
}

double prob(const Mat2& rho, const Mat2& proj) {
    // tr(P rho), clamped into [0, 1] against roundoff.
    cplx tr{};
    for (int i = 0; i < 2; ++i) {
        for (int k = 0; k < 2; ++k) {
            tr += proj[i * 2 + k] * rho[k * 2 + i];
        }
    }
    return std::min(1.0, std::max(0.0, tr.real()));
}

}  // namespace

std::vector<MeasurementSetting> standard_six_settings(double shots) {
    return {
        {"H", projector(1, 0), shots},
        {"V", projector(0, 1), shots},
        {"D", projector(kInvSqrt2, kInvSqrt2), shots},
        {"A", projector(kInvSqrt2, -kInvSqrt2), shots},
        {"R", projector(kInvSqrt2, cplx{0, kInvSqrt2}), shots},
        {"L", projector(kInvSqrt2, cplx{0, -kInvSqrt2}), shots},
    };
}

std::vector<MeasurementSetting> four_state_settings(double shots) {
    return {
        {"H", projector(1, 0), shots},
        {"V", projector(0, 1), shots},
        {"D", projector(kInvSqrt2, kInvSqrt2), shots},
        {"R", projector(kInvSqrt2, cplx{0, kInvSqrt2}), shots},
    };
}

double DensityMatrix::hermiticity_defect() const {
    double m = 0.0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            m = std::max(m, std::abs(rho[i * 2 + j] - std::conj(rho[j * 2 + i])));
        }
    }
    return m;
}

double DensityMatrix::min_eigenvalue() const {
    const double tr = trace_real();
    const cplx det = rho[0] * rho[3] - rho[1] * rho[2];
    const double disc = std::max(0.0, tr * tr - 4.0 * det.real());
    return (tr - std::sqrt(disc)) / 2.0;
}

double DensityMatrix::fidelity_pure(cplx c0, cplx c1) const {
    return prob(rho, projector(c0, c1));
}

std::array<double, 3> DensityMatrix::bloch() const {
    return {2.0 * rho[1].real(), -2.0 * rho[1].imag(),
            (rho[0] - rho[3]).real()};
}

DensityMatrix simulate_postselected_output(cplx c0, cplx c1, cplx d0, cplx d1, int axis,
                                           int selected, const NoiseModel& noise) {
    if (selected != 0 && selected != 1) {
        throw std::invalid_argument("selected port must be 0 or 1");
    }
    // Two-qubit pure state, data first, path (control) second.
    const double nc = std::sqrt(std::norm(c0) + std::norm(c1));
    const double nd = std::sqrt(std::norm(d0) + std::norm(d1));
    c0 /= nc;
    c1 /= nc;
    d0 /= nd;
    d1 /= nd;
    std::array<cplx, 4> psi = {d0 * c0, d0 * c1, d1 * c0, d1 * c1};

    // Controlled-sigma_axis, path controls data.
    const Mat2 sigma = core::pauli_mat(axis);
    const cplx e0 = psi[1];
    const cplx e1 = psi[3];
    psi[1] = sigma[0] * e0 + sigma[1] * e1;
    psi[3] = sigma[2] * e0 + sigma[3] * e1;

    std::array<cplx, 16> rho{};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            rho[i * 4 + j] = psi[i] * std::conj(psi[j]);
        }
    }

    // Both loops damp the coherence between the two path arms; the path bit
    // is the least significant index bit.
    const double v = noise.visibility_lower * noise.visibility_upper;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if ((i & 1) != (j & 1)) {
                rho[i * 4 + j] *= v;
            }
        }
    }

    // Project the path qubit onto the selected X eigenstate and trace it out.
    const double sign = selected == 0 ? 1.0 : -1.0;
    Mat2 out{};
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            cplx acc{};
            for (int p = 0; p < 2; ++p) {
                for (int q = 0; q < 2; ++q) {
                    const double wp = p == 0 ? 1.0 : sign;
                    const double wq = q == 0 ? 1.0 : sign;
                    acc += 0.5 * wp * wq * rho[(a * 2 + p) * 4 + (b * 2 + q)];
                }
            }
            out[a * 2 + b] = acc;
        }
    }
    const double p_sel = (out[0] + out[3]).real();
    if (p_sel < 1e-12) {
        throw internal_error("post-selection probability vanished");
    }
    for (auto& v2 : out) {
        v2 /= p_sel;
    }
    return DensityMatrix{out};
}

Counts sample_counts(const DensityMatrix& rho, std::span<const MeasurementSetting> settings,
                     core::Rng& rng) {
    Counts counts;
    counts.reserve(settings.size());
    for (const auto& s : settings) {
        const double p = prob(rho.rho, s.projector);
        long hits = 0;
        const long shots = std::lround(s.shots);
        for (long i = 0; i < shots; ++i) {
            if (rng.uniform() < p) {
                ++hits;
            }
        }
        counts.push_back(static_cast<double>(hits));
    }
    return counts;
}

Counts expected_counts(const DensityMatrix& rho,
                       std::span<const MeasurementSetting> settings) {
    Counts counts;
    counts.reserve(settings.size());
    for (const auto& s : settings) {
        counts.push_back(s.shots * prob(rho.rho, s.projector));
    }
    return counts;
}

namespace {

// rho(t) = T^dag T / tr with T = [[t0, 0], [t2 + i t3, t1]].
Mat2 rho_from_params(const std::array<double, 4>& t) {
    const cplx a{t[0], 0};
    const cplx c{t[2], t[3]};
    const cplx b{t[1], 0};
    // T^dag T = [[|a|^2 + |c|^2, conj(c) b], [b conj(c)... ]] worked out:
    Mat2 m{{a * a + std::conj(c) * c, std::conj(c) * b, b * c, b * b}};
    const double tr = (m[0] + m[3]).real();
    const double inv = tr > 1e-300 ? 1.0 / tr : 0.0;
    for (auto& v : m) {
        v *= inv;
    }
    return m;
}

/// Log-likelihood relative to the empirical maximum (a negative KL score).
/// The shift keeps the objective O(1) so that 1e-10 improvements stay above
/// floating-point resolution; the maximizer is unchanged.
double log_likelihood(const std::array<double, 4>& t, const Counts& counts,
                      std::span<const MeasurementSetting> settings) {
    const Mat2 rho = rho_from_params(t);
    double ll = 0.0;
    for (size_t i = 0; i < settings.size(); ++i) {
        const double p = std::min(1.0 - 1e-12, std::max(1e-12, prob(rho, settings[i].projector)));
        const double n = counts[i];
        const double miss = settings[i].shots - n;
        const double f = settings[i].shots > 0
                             ? std::min(1.0 - 1e-12,
                                        std::max(1e-12, n / settings[i].shots))
                             : 0.5;
        ll += n * (std::log(p) - std::log(f)) + miss * (std::log(1.0 - p) - std::log(1.0 - f));
    }
    return ll;
}

}  // namespace

namespace {

/// Linear-inversion seed: least-squares Bloch vector from the measured
/// frequencies, pulled just inside the ball, Cholesky-factored.
std::array<double, 4> linear_inversion_seed(const Counts& counts,
                                            std::span<const MeasurementSetting> settings) {
    double ata[3][3] = {};
    double atb[3] = {};
    for (size_t i = 0; i < settings.size(); ++i) {
        const Mat2& pr = settings[i].projector;
        const double n[3] = {2.0 * pr[1].real(), -2.0 * pr[1].imag(),
                             (pr[0] - pr[3]).real()};
        const double freq = settings[i].shots > 0 ? counts[i] / settings[i].shots : 0.5;
        const double b = freq - 0.5 * (pr[0] + pr[3]).real();
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) {
                ata[r][c] += 0.25 * n[r] * n[c];
            }
            atb[r] += 0.5 * n[r] * b;
        }
    }
    // Solve the 3x3 normal equations by Gaussian elimination with a ridge.
    for (int i = 0; i < 3; ++i) {
        ata[i][i] += 1e-9;
    }
    double r[3] = {atb[0], atb[1], atb[2]};
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        for (int row = col + 1; row < 3; ++row) {
            if (std::abs(ata[row][col]) > std::abs(ata[piv][col])) {
                piv = row;
            }
        }
        std::swap(ata[col], ata[piv]);
        std::swap(r[col], r[piv]);
        for (int row = col + 1; row < 3; ++row) {
            const double f = ata[row][col] / ata[col][col];
            for (int c = col; c < 3; ++c) {
                ata[row][c] -= f * ata[col][c];
            }
            r[row] -= f * r[col];
        }
    }
    double bloch[3];
    for (int row = 2; row >= 0; --row) {
        double acc = r[row];
        for (int c = row + 1; c < 3; ++c) {
            acc -= ata[row][c] * bloch[c];
        }
        bloch[row] = acc / ata[row][row];
    }
    double len = std::sqrt(bloch[0] * bloch[0] + bloch[1] * bloch[1] + bloch[2] * bloch[2]);
    const double cap = 0.999999;
    if (len > cap) {
        for (double& v : bloch) {
            v *= cap / len;
        }
    }
    // rho = (I + r.sigma)/2, then T with rho = T^dag T.
    const double r00 = (1.0 + bloch[2]) / 2.0;
    const double r11 = std::max(1e-9, (1.0 - bloch[2]) / 2.0);
    const cplx r01{bloch[0] / 2.0, -bloch[1] / 2.0};
    const double t1 = std::sqrt(r11);
    const cplx c = std::conj(r01) / t1;
    const double t0 = std::sqrt(std::max(1e-12, r00 - std::norm(c)));
    return {t0, t1, c.real(), c.imag()};
}

}  // namespace

MleResult mle_reconstruct(const Counts& counts,
                          std::span<const MeasurementSetting> settings) {
    if (counts.size() != settings.size()) {
        throw std::invalid_argument("counts do not match settings");
    }
    if (settings.size() < 4) {
        throw std::invalid_argument("need at least 4 projectors");
    }

    std::array<double, 4> t = linear_inversion_seed(counts, settings);
    double ll = log_likelihood(t, counts, settings);
    double step = 1e-3;
    MleResult best;
    best.rho = DensityMatrix{rho_from_params(t)};
    best.log_likelihood = ll;

    int iter = 0;
    for (; iter < 10000; ++iter) {
        // Analytic gradient of the likelihood through the Cholesky map.
        const double tau = t[0] * t[0] + t[1] * t[1] + t[2] * t[2] + t[3] * t[3];
        const Mat2 rho = rho_from_params(t);
        const std::array<Mat2, 4> dm = {
            Mat2{{cplx{2 * t[0], 0}, {}, {}, {}}},
            Mat2{{cplx{}, cplx{t[2], -t[3]}, cplx{t[2], t[3]}, cplx{2 * t[1], 0}}},
            Mat2{{cplx{2 * t[2], 0}, cplx{t[1], 0}, cplx{t[1], 0}, cplx{}}},
            Mat2{{cplx{2 * t[3], 0}, cplx{0, -t[1]}, cplx{0, t[1]}, cplx{}}},
        };
        const std::array<double, 4> dtau = {2 * t[0], 2 * t[1], 2 * t[2], 2 * t[3]};
        std::array<double, 4> grad{};
        for (size_t sidx = 0; sidx < settings.size(); ++sidx) {
            const double p = std::min(1.0 - 1e-12,
                                      std::max(1e-12, prob(rho, settings[sidx].projector)));
            const double w = counts[sidx] / p -
                             (settings[sidx].shots - counts[sidx]) / (1.0 - p);
            for (int i = 0; i < 4; ++i) {
                Mat2 drho;
                for (int e = 0; e < 4; ++e) {
                    drho[e] = (dm[i][e] - rho[e] * dtau[i]) / tau;
                }
                cplx tr{};
                const Mat2& pr = settings[sidx].projector;
                for (int r = 0; r < 2; ++r) {
                    for (int k = 0; k < 2; ++k) {
                        tr += pr[r * 2 + k] * drho[k * 2 + r];
                    }
                }
                grad[i] += w * tr.real();
            }
        }

        bool improved = false;
        double gain = 0.0;
        for (int back = 0; back < 80; ++back) {
            std::array<double, 4> tn = t;
            for (int i = 0; i < 4; ++i) {
                tn[i] += step * grad[i];
            }
            const double lln = log_likelihood(tn, counts, settings);
            if (lln > ll) {
                gain = lln - ll;
                t = tn;
                ll = lln;
                improved = true;
                step *= 2.0;
                break;
            }
            step *= 0.5;
            if (step < 1e-300) {
                break;
            }
        }
        if (ll > best.log_likelihood) {
            best.log_likelihood = ll;
            best.rho = DensityMatrix{rho_from_params(t)};
        }
        if (!improved || gain < 1e-10) {
            best.converged = true;
            break;
        }
    }
    best.iterations = iter;
    return best;
}

std::pair<cplx, cplx> reference_phi1() {
    const double c = std::cos(kPi / 8);
    const double s = std::sin(kPi / 8);
    const double phase = -4.0 * kPi / 5.0;
    return {cplx{c, 0}, s * cplx{std::cos(phase), std::sin(phase)}};
}

std::pair<cplx, cplx> reference_phi2() {
    const double c = std::cos(-kPi / 3);
    const double s = std::sin(-kPi / 3);
    const double phase = kPi / 7.0;
    return {cplx{c, 0}, s * cplx{std::cos(phase), std::sin(phase)}};
}

std::vector<std::pair<cplx, cplx>> default_overlap_test_states() {
    std::vector<std::pair<cplx, cplx>> states;
    for (int i = 0; i < 8; ++i) {
        const double theta = i * kPi / 8;
        states.emplace_back(cplx{std::cos(theta), 0}, cplx{std::sin(theta), 0});
        states.emplace_back(cplx{std::cos(theta), 0}, cplx{0, std::sin(theta)});
    }
    // One generic state off both circles.
    states.emplace_back(cplx{std::cos(0.3), 0},
                        std::sin(0.3) * cplx{std::cos(0.8), std::sin(0.8)});
    return states;
}

namespace {

struct BatchStats {
    double mean = 0.0;
    double stddev = 0.0;
};

BatchStats stats(std::span<const double> xs) {
    BatchStats out;
    for (const double x : xs) {
        out.mean += x;
    }
    out.mean /= static_cast<double>(xs.size());
    if (xs.size() > 1) {
        double ss = 0.0;
        for (const double x : xs) {
            ss += (x - out.mean) * (x - out.mean);
        }
        out.stddev = std::sqrt(ss / static_cast<double>(xs.size() - 1));
    }
    return out;
}

/// Reconstructs the pipeline output for one batch.
DensityMatrix reconstruct_once(const DensityMatrix& out_state, const PipelineConfig& config,
                               core::Rng& rng) {
    const auto settings = standard_six_settings(config.shots);
    const Counts counts = config.exact ? expected_counts(out_state, settings)
                                       : sample_counts(out_state, settings, rng);
    return mle_reconstruct(counts, settings).rho;
}

}  // namespace

std::vector<FigureRow> fig3_fidelity_curve(const PipelineConfig& config) {
    std::vector<FigureRow> rows;
    const int points = 13;
    const int batches = config.exact ? 1 : config.batches;
    for (int i = 0; i < points; ++i) {
        const double theta = i * kPi / (points - 1);
        const cplx d0{std::cos(theta), 0};
        const cplx d1{std::sin(theta), 0};
        // Control |1>, controlled-Z, |-> port; theory output = Z |psi>.
        const DensityMatrix out =
            simulate_postselected_output(0, 1, d0, d1, 3, 1, config.noise);
        const cplx th0 = d0;
        const cplx th1 = -d1;

        std::vector<double> fidelities;
        for (int b = 0; b < batches; ++b) {
            core::Rng rng(config.seed + 1000003ULL * static_cast<uint64_t>(b) +
                              31ULL * static_cast<uint64_t>(i),
                          "tomo-fig3");
            const DensityMatrix rec = reconstruct_once(out, config, rng);
            fidelities.push_back(rec.fidelity_pure(th0, th1));
        }
        const BatchStats st = stats(fidelities);
        rows.push_back(FigureRow{theta, st.mean, st.stddev});
    }
    return rows;
}

std::vector<FigureRow> overlap_curve(cplx ref0, cplx ref1, cplx ctrl0, cplx ctrl1,
                                     std::span<const std::pair<cplx, cplx>> data_states,
                                     const PipelineConfig& config) {
    std::vector<FigureRow> rows;
    const int batches = config.exact ? 1 : config.batches;
    const DensityMatrix ref{projector(ref0, ref1)};
    const auto ref_bloch = ref.bloch();
    int idx = 0;
    for (const auto& [d0, d1] : data_states) {
        const DensityMatrix noiseless = simulate_postselected_output(
            ctrl0, ctrl1, d0, d1, 3, 1, NoiseModel::noiseless());
        const auto th_bloch = noiseless.bloch();
        double dot = 0.0;
        for (int i = 0; i < 3; ++i) {
            dot += ref_bloch[i] * th_bloch[i];
        }
        const double alpha = std::acos(std::min(1.0, std::max(-1.0, dot)));

        const DensityMatrix out =
            simulate_postselected_output(ctrl0, ctrl1, d0, d1, 3, 1, config.noise);
        std::vector<double> overlaps;
        for (int b = 0; b < batches; ++b) {
            core::Rng rng(config.seed + 7000003ULL * static_cast<uint64_t>(b) +
                              101ULL * static_cast<uint64_t>(idx),
                          "tomo-overlap");
            const DensityMatrix rec = reconstruct_once(out, config, rng);
            overlaps.push_back(rec.fidelity_pure(ref0, ref1));
        }
        const BatchStats st = stats(overlaps);
        rows.push_back(FigureRow{alpha, st.mean, st.stddev});
        ++idx;
    }
    return rows;
}

void write_csv(const std::string& path, std::span<const FigureRow> rows,
               const PipelineConfig& config) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << "theta_or_alpha,value,stddev,shots,noise_upper,noise_lower\n";
    char line[256];
    for (const FigureRow& r : rows) {
        std::snprintf(line, sizeof line, "%.9g,%.9g,%.9g,%.9g,%.6g,%.6g\n", r.x, r.value,
                      r.stddev, config.exact ? 0.0 : config.shots,
                      config.noise.visibility_upper, config.noise.visibility_lower);
        out << line;
    }
}

void write_figure_csvs(const std::string& out_dir, const PipelineConfig& config) {
    const auto states = default_overlap_test_states();
    const auto [p10, p11] = reference_phi1();
    const auto [p20, p21] = reference_phi2();

    write_csv(out_dir + "/fig3.csv", fig3_fidelity_curve(config), config);
    // Fig. 4: control |1>; Fig. 5: control |y+>.
    write_csv(out_dir + "/fig4a.csv",
              overlap_curve(p10, p11, 0, 1, states, config), config);
    write_csv(out_dir + "/fig4b.csv",
              overlap_curve(p20, p21, 0, 1, states, config), config);
    write_csv(out_dir + "/fig5a.csv",
              overlap_curve(p10, p11, kInvSqrt2, cplx{0, kInvSqrt2}, states, config),
              config);
    write_csv(out_dir + "/fig5b.csv",
              overlap_curve(p20, p21, kInvSqrt2, cplx{0, kInvSqrt2}, states, config),
              config);
}

}  // namespace qhelab::tomo
