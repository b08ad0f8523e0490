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
#ifndef NOON_HARMONICS_HPP
#define NOON_HARMONICS_HPP

#include <map>

#include "noon/interferometer.hpp"

namespace noon {

/// One-sided harmonic decomposition of a real fringe signal:
/// s(psi) ~ sum_k amplitude_k cos(k psi + phase_k).
struct HarmonicSpectrum {
    struct Entry {
        double amplitude = 0.0;
        double phase = 0.0;
    };
    std::map<int, Entry> coefficients; ///< k = 0 .. n/2
    int dominant_ac = 0;               ///< k >= 1 with the largest amplitude

    double amplitude(int k) const {
        auto it = coefficients.find(k);
        return it == coefficients.end() ? 0.0 : it->second.amplitude;
    }
    /// Evaluates the cosine-series reconstruction at psi.
    double reconstruct(double psi) const;
};

/// Discrete Fourier analysis on a uniform grid covering one period.
/// Requires spacing 2*pi/n; the grid may start at any offset.
HarmonicSpectrum fringe_harmonics(const CoincidenceSignal& signal);

/// amplitude_k / amplitude_0. Throws degenerate_input_error when the mean
/// vanishes.
double visibility(const CoincidenceSignal& signal, int harmonic);

} // namespace noon

#endif
