/**
 * Copyright 2026 The noonsim authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef NOON_OPTIMIZE_HPP
#define NOON_OPTIMIZE_HPP

#include <utility>
#include <vector>

#include "noon/beam_splitter.hpp"
#include "noon/types.hpp"

namespace noon {

/// Sweep description for fidelity-vs-theta curves at fixed (r, N).
struct SweepSpec {
    double r = 0.0;
    int n_total = 0;
    Regime regime = Regime::Weak;
    int theta_points = 64; ///< uniform grid over [0, 2*pi)
    std::vector<double> gamma_values;
    double phi = 0.0;
};

/// Grid sizes of the deterministic nested-refinement optimizer.
struct OptimizerConfig {
    int theta_points = 64; ///< coarse grid on [0, 2*pi)
    int gamma_points = 64; ///< coarse grid on the gamma bounds
    int rounds = 4;        ///< refinement rounds
    double tolerance = 1e-6; ///< stop when a round improves less than this
};

struct Optimum {
    double gamma_star = 0.0;
    double theta_star = 0.0;
    double fidelity_star = 0.0;
    std::vector<std::pair<double, double>> curve; ///< (theta, fidelity) at gamma_star
};

/// Photon-flux bookkeeping for a source configuration.
struct FluxReport {
    double mean_pdc_pairs = 0.0;       ///< sinh^4 r
    double mean_photons_per_mode = 0.0;///< sinh^2 r + |alpha|^2
    double coherent_pair_flux = 0.0;   ///< |alpha|^4
    double gamma = 0.0;
    Regime regime = Regime::Weak;
};

/// Phase-optimized NOON fidelity for every theta on the spec's grid at the
/// given gamma. Degenerate points (empty component, e.g. gamma = 0 with odd
/// N) carry fidelity -1 and are never optima.
std::vector<std::pair<double, double>> fidelity_vs_theta(const SweepSpec& spec, double gamma,
                                                         const BeamSplitter& bs);

/// Deterministic coarse-grid search over (gamma, theta) with nested grid
/// shrinking. Ties break toward the smallest theta, then the smallest gamma.
/// The returned curve is the theta grid at gamma_star with the refined
/// optimum point spliced in.
Optimum optimize_gamma_theta(double r, int n_total, Regime regime,
                             std::pair<double, double> gamma_bounds,
                             const BeamSplitter& bs,
                             const OptimizerConfig& config = {},
                             double phi = 0.0);

FluxReport flux_report(double r, double gamma, Regime regime);

} // namespace noon

#endif
