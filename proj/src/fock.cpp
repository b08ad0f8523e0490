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
#include <algorithm>
#include <cmath>

#include "noon/fock.hpp"

#include "detail.hpp"

namespace noon {

cplx tmsv_coefficient(double r, double phi, int m, int n) {
    if (r < 0.0 || m < 0 || n < 0 || !std::isfinite(r) || !std::isfinite(phi))
        throw domain_error("tmsv_coefficient: invalid arguments");
    if (m != n) return {0.0, 0.0};
    cplx base = -std::polar(std::tanh(r), phi);
    cplx pw = 1.0;
    for (int k = 0; k < n; ++k) pw *= base;
    return pw / std::cosh(r);
}

PhotonComponent displaced_tmsv_component(const SourceParams& src, int n_total) {
    src.validate();
    if (n_total < 0) throw domain_error("displaced_tmsv_component: n_total must be >= 0");
    if (n_total > 128) throw domain_error("displaced_tmsv_component: n_total too large");

    const cplx big_g = std::polar(std::tanh(src.r), src.phi);
    const cplx mu = src.alpha0 + big_g * std::conj(src.beta0);
    const cplx nu = src.beta0 + big_g * std::conj(src.alpha0);

    // powers with exact zeros for vanishing seeds (0^0 = 1)
    std::vector<cplx> mu_pow(n_total + 1), nu_pow(n_total + 1), g_pow(n_total / 2 + 1);
    mu_pow[0] = nu_pow[0] = g_pow[0] = 1.0;
    for (int k = 1; k <= n_total; ++k) {
        mu_pow[k] = mu_pow[k - 1] * mu;
        nu_pow[k] = nu_pow[k - 1] * nu;
    }
    for (int p = 1; p <= n_total / 2; ++p) g_pow[p] = g_pow[p - 1] * (-big_g);

    const auto& fact = detail::factorials();
    std::vector<cplx> amps(n_total + 1);
    for (int m = 0; m <= n_total; ++m) {
        const int n = n_total - m;
        cplx sum = 0.0;
        const int p_max = std::min(m, n);
        for (int p = 0; p <= p_max; ++p)
            sum += g_pow[p] * mu_pow[m - p] * nu_pow[n - p] /
                   (fact[p] * fact[m - p] * fact[n - p]);
        amps[m] = std::sqrt(fact[m] * fact[n]) * sum;
        if (!std::isfinite(amps[m].real()) || !std::isfinite(amps[m].imag()))
            throw domain_error("displaced_tmsv_component: amplitude overflow (seeds too large)");
    }
    return PhotonComponent(n_total, std::move(amps), false);
}

FidelityResult noon_fidelity(const PhotonComponent& component, const BeamSplitter& bs) {
    if (!(component.weight > 0.0))
        throw degenerate_input_error("noon_fidelity: component has zero weight");
    const PhotonComponent out = bs_transform(component.unit(), bs);
    const cplx a = out.amplitudes[component.n_total]; // |N,0>
    const cplx b = out.amplitudes[0];                 // |0,N>
    const double na = std::abs(a), nb = std::abs(b);

    FidelityResult res;
    res.fidelity = std::min(0.5 * (na * na + nb * nb) + na * nb, 1.0);
    res.noon_phase = (na > 0.0 && nb > 0.0) ? std::arg(b) - std::arg(a) : 0.0;
    res.fixed_phase_fidelity = std::min(0.5 * std::norm(a + b), res.fidelity);
    return res;
}

} // namespace noon
