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
#ifndef NOON_INTERFEROMETER_HPP
#define NOON_INTERFEROMETER_HPP

#include <vector>

#include "noon/beam_splitter.hpp"
#include "noon/types.hpp"

namespace noon {

/// Number-resolved detection pattern (upper, lower) at the exit ports.
struct DetectionPattern {
    int upper = 0;
    int lower = 0;

    DetectionPattern() = default;
    DetectionPattern(int up, int low) : upper(up), lower(low) {
        if (up < 0 || low < 0) throw domain_error("DetectionPattern: counts must be >= 0");
    }
    int n_total() const { return upper + lower; }
};

/// Coincidence probability (relative units) sampled over interferometer
/// phase psi.
struct CoincidenceSignal {
    std::vector<double> psi_samples;
    std::vector<double> probabilities;
    DetectionPattern pattern;
    bool relative_units = true;
};

/// |<pattern| U_BS Phi(psi) U_BS |component>|^2 with Phi applying e^{i m psi}
/// in the upper arm. Takes the unnormalized component, so values are in the
/// component's relative units; summed over all patterns they equal its weight.
double mz_pattern_probability(const PhotonComponent& component, double psi,
                              const DetectionPattern& pattern, const BeamSplitter& bs);

/// Full sweep: computes the source component once, then the fringe over the
/// psi grid with the vector kernel.
CoincidenceSignal coincidence_signal_sweep(const SourceParams& src, int n_total,
                                           const DetectionPattern& pattern,
                                           const std::vector<double>& psi_grid,
                                           const BeamSplitter& bs);

} // namespace noon

#endif
