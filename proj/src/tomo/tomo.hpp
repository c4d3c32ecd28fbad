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

#include "core/linalg.hpp"
#include "core/rng.hpp"

namespace qhelab::tomo {

using core::cplx;
using core::Mat2;

/// One polarization analyzer setting: a rank-1 projector measured for a
/// fixed number of trials.
struct MeasurementSetting {
    std::string label;
    Mat2 projector;
    double shots = 0.0;
};

/// The six Pauli projectors H/V, D/A, R/L with equal shots.
std::vector<MeasurementSetting> standard_six_settings(double shots);
/// The four-state alternative H, V, D, R.
std::vector<MeasurementSetting> four_state_settings(double shots);

/// Detected counts aligned with a settings list. Real-valued so that exact
/// (infinite-shot) frequencies can be fed to the estimator.
using Counts = std::vector<double>;

/// Interferometric contrast of the two loops in the optical pipeline;
/// applied as a scaling of the path-coherence terms.
struct NoiseModel {
    double visibility_upper = 0.9983;
    double visibility_lower = 0.9973;

    static NoiseModel noiseless() { return NoiseModel{1.0, 1.0}; }
};

struct DensityMatrix {
    Mat2 rho;

    double trace_real() const { return (rho[0] + rho[3]).real(); }
    double hermiticity_defect() const;
    double min_eigenvalue() const;
    /// <psi| rho |psi> for a pure reference (c0, c1).
    double fidelity_pure(cplx c0, cplx c1) const;
    /// Bloch components (x, y, z).
    std::array<double, 3> bloch() const;
};

/// Runs the gadget pipeline once, exactly: control (c0,c1) on the path
/// qubit drives controlled-sigma_axis onto the data qubit (d0,d1); the
/// lower-loop visibility damps path coherence after the interaction, the
/// upper-loop visibility damps it before the closing Hadamard; the path is
/// then post-selected on X outcome `selected` (0 = |+> port, 1 = |-> port).
/// Returns the normalized data-qubit density matrix. Throws internal_error
/// if the selected port has probability below 1e-12.
DensityMatrix simulate_postselected_output(cplx c0, cplx c1, cplx d0, cplx d1, int axis,
                                           int selected, const NoiseModel& noise);

/// Binomial sampling of detections per setting.
Counts sample_counts(const DensityMatrix& rho, std::span<const MeasurementSetting> settings,
                     core::Rng& rng);
/// Expected (infinite-shot) counts.
Counts expected_counts(const DensityMatrix& rho,
                       std::span<const MeasurementSetting> settings);

struct MleResult {
    DensityMatrix rho;
    bool converged = false;
    int iterations = 0;
    double log_likelihood = 0.0;
};

/// Maximum-likelihood reconstruction over a Cholesky parameterization
/// rho = T^dag T / tr(T^dag T), by gradient ascent with backtracking line
/// search. Convergence: log-likelihood improvement below 1e-10, capped at
/// 10^4 iterations (the best iterate is returned either way). Needs at
/// least 4 linearly independent projectors.
MleResult mle_reconstruct(const Counts& counts,
                          std::span<const MeasurementSetting> settings);

/// Pipeline configuration shared by the figure replications.
struct PipelineConfig {
    double shots = 100000;
    int batches = 5;
    NoiseModel noise;
    bool exact = false;  // infinite-shot frequencies, single batch
    uint64_t seed = 0;
};

struct FigureRow {
    double x = 0.0;       // theta or Bloch angle alpha
    double value = 0.0;   // mean fidelity or squared overlap
    double stddev = 0.0;  // over batches
};

/// Fidelity of the reconstructed output against theory for the pipeline
/// with control |1>, data cos(theta)|0> + sin(theta)|1>, controlled-Z,
/// |-> port; 13 evenly spaced theta in [0, pi].
std::vector<FigureRow> fig3_fidelity_curve(const PipelineConfig& config);

/// Squared overlap between the reconstructed output and a fixed reference,
/// for a list of data states through the controlled-Z pipeline with the
/// given control state; x is the Bloch angle between the theoretical output
/// and the reference.
std::vector<FigureRow> overlap_curve(cplx ref0, cplx ref1, cplx ctrl0, cplx ctrl1,
                                     std::span<const std::pair<cplx, cplx>> data_states,
                                     const PipelineConfig& config);

/// The paper's reference states and standard test-state grid.
std::pair<cplx, cplx> reference_phi1();
std::pair<cplx, cplx> reference_phi2();
std::vector<std::pair<cplx, cplx>> default_overlap_test_states();

/// Writes rows as `theta_or_alpha,value,stddev,shots,noise_upper,noise_lower`.
void write_csv(const std::string& path, std::span<const FigureRow> rows,
               const PipelineConfig& config);

/// Emits fig3.csv, fig4a.csv, fig4b.csv, fig5a.csv, fig5b.csv into a
/// directory.
void write_figure_csvs(const std::string& out_dir, const PipelineConfig& config);

}  // namespace qhelab::tomo
