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
#ifndef NOON_ORACLE_HPP
#define NOON_ORACLE_HPP

#include <vector>

#include "noon/displacement.hpp"
#include "noon/types.hpp"

namespace noon {

/// Brute-force amplitudes <j,k| D(alpha0,beta0) S(r,phi) |0> on a truncated
/// Fock space, built from the exact TMSV series against displacement matrix
/// elements. Independent of the closed-form path; practical for r <~ 1 and
/// seeds |alpha| <~ 3.
struct TruncatedState {
    int cutoff = 0;
    std::vector<cplx> amp; ///< (cutoff+1)^2 row-major, row = mode-a count j

    cplx at(int j, int k) const {
        return amp[static_cast<std::size_t>(j) * (cutoff + 1) + k];
    }
    double total_probability() const;

    /// The N-photon diagonal slice as a PhotonComponent (absolute units).
    PhotonComponent n_slice(int n_total) const;
};

/// Cutoff heuristic: max(30, ceil(s + 8 sqrt(s))), s = sinh^2 r + max seed
/// photon number.
int recommended_cutoff(const SourceParams& src);

/// Throws accuracy_error (reporting the estimated missing weight) when the
/// cutoff leaves more than 1e-10 probability outside the table.
TruncatedState truncated_state_oracle(const SourceParams& src, int cutoff);

} // namespace noon

#endif
