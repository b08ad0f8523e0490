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
#include <cmath>

#include "noon/fock.hpp"
#include "noon/interferometer.hpp"
#include "noon/kernels.hpp"

namespace noon {
namespace {

// Weights of the fringe phasor sum: the MZ amplitude into |u, N-u> is
// sum_m U[u][m] e^{i m psi} (U c)_m, so w_m = U[u][m] * (U c)_m.
std::vector<cplx> fringe_weights(const PhotonComponent& component,
                                 const DetectionPattern& pattern, const BeamSplitter& bs) {
    if (pattern.n_total() != component.n_total)
        throw domain_error("mz_pattern_probability: pattern photon count does not match component");
    const int dim = component.n_total + 1;
    const BsMatrix& mat = bs.matrix(component.n_total);
    const PhotonComponent inside = bs_transform(component, bs);
    std::vector<cplx> w(dim);
    for (int m = 0; m < dim; ++m) w[m] = mat.at(pattern.upper, m) * inside.amplitudes[m];
    return w;
}

void eval_fringe(const std::vector<cplx>& w, const double* psi, double* out, std::size_t n) {
    const std::size_t dim = w.size();
    std::vector<double> w_re(dim), w_im(dim);
    for (std::size_t m = 0; m < dim; ++m) {
        w_re[m] = w[m].real();
        w_im[m] = w[m].imag();
    }
    kernels::active().fringe_sweep(w_re.data(), w_im.data(), dim, psi, out, n);
}

} // namespace

double mz_pattern_probability(const PhotonComponent& component, double psi,
                              const DetectionPattern& pattern, const BeamSplitter& bs) {
    if (!std::isfinite(psi)) throw domain_error("mz_pattern_probability: non-finite psi");
    const std::vector<cplx> w = fringe_weights(component, pattern, bs);
    double p = 0.0;
    eval_fringe(w, &psi, &p, 1);
    return p;
}

CoincidenceSignal coincidence_signal_sweep(const SourceParams& src, int n_total,
                                           const DetectionPattern& pattern,
                                           const std::vector<double>& psi_grid,
                                           const BeamSplitter& bs) {
    if (pattern.n_total() != n_total)
        throw domain_error("coincidence_signal_sweep: pattern photon count does not match n_total");
    for (double psi : psi_grid)
        if (!std::isfinite(psi)) throw domain_error("coincidence_signal_sweep: non-finite psi");

    const PhotonComponent component = displaced_tmsv_component(src, n_total);
    const std::vector<cplx> w = fringe_weights(component, pattern, bs);

    CoincidenceSignal signal;
    signal.pattern = pattern;
    signal.psi_samples = psi_grid;
    signal.probabilities.assign(psi_grid.size(), 0.0);
    signal.relative_units = true;
    if (!psi_grid.empty())
        eval_fringe(w, psi_grid.data(), signal.probabilities.data(), psi_grid.size());
    return signal;
}

} // namespace noon
