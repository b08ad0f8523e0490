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
#include <numbers>

#include "noon/harmonics.hpp"

namespace noon {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_uniform_period(const CoincidenceSignal& signal) {
    const std::size_t n = signal.psi_samples.size();
    if (n < 4 || signal.probabilities.size() != n)
        throw domain_error("fringe_harmonics: need a uniform grid of at least 4 samples");
    const double step = kTwoPi / static_cast<double>(n);
    for (std::size_t i = 1; i < n; ++i) {
        const double expected = signal.psi_samples[0] + step * static_cast<double>(i);
        if (std::abs(signal.psi_samples[i] - expected) > 1e-9)
            throw domain_error("fringe_harmonics: psi grid must be uniform with spacing 2*pi/n");
    }
}

} // namespace

double HarmonicSpectrum::reconstruct(double psi_from_start) const {
    // psi measured from the first grid sample
    double value = 0.0;
    for (const auto& [k, entry] : coefficients)
        value += entry.amplitude * std::cos(k * psi_from_start + entry.phase);
    return value;
}

HarmonicSpectrum fringe_harmonics(const CoincidenceSignal& signal) {
    require_uniform_period(signal);
    const std::size_t n = signal.psi_samples.size();
    const int k_max = static_cast<int>(n / 2);

    HarmonicSpectrum spectrum;
    double best_amp = -1.0;
    for (int k = 0; k <= k_max; ++k) {
        double re = 0.0, im = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            // sample-indexed angles: phases are relative to the grid start,
            // so shifting the grid by delta rotates phase_k by k*delta
            const double angle = k * (kTwoPi * static_cast<double>(j) / static_cast<double>(n));
            re += signal.probabilities[j] * std::cos(angle);
            im -= signal.probabilities[j] * std::sin(angle);
        }
        re /= static_cast<double>(n);
        im /= static_cast<double>(n);
        // one-sided cosine series: interior harmonics carry both +-k bins
        const bool interior = k > 0 && (2 * k < static_cast<int>(n));
        const double scale = interior ? 2.0 : 1.0;
        HarmonicSpectrum::Entry entry;
        entry.amplitude = scale * std::hypot(re, im);
        entry.phase = (entry.amplitude > 0.0) ? std::atan2(im, re) : 0.0;
        spectrum.coefficients[k] = entry;
        if (k >= 1 && entry.amplitude > best_amp) {
            best_amp = entry.amplitude;
            spectrum.dominant_ac = k;
        }
    }
    return spectrum;
}

double visibility(const CoincidenceSignal& signal, int harmonic) {
    if (harmonic < 1) throw domain_error("visibility: harmonic must be >= 1");
    const HarmonicSpectrum spectrum = fringe_harmonics(signal);
    if (harmonic > static_cast<int>(signal.psi_samples.size() / 2))
        throw domain_error("visibility: harmonic not resolvable on this grid");
    const double dc = spectrum.amplitude(0);
    if (!(dc > 0.0))
        throw degenerate_input_error("visibility: signal mean is zero");
    return spectrum.amplitude(harmonic) / dc;
}

} // namespace noon
