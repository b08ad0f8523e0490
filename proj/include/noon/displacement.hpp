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
#ifndef NOON_DISPLACEMENT_HPP
#define NOON_DISPLACEMENT_HPP

#include <vector>

#include "noon/types.hpp"

namespace noon {

/// <m| D(alpha) |k> via the associated-Laguerre closed form with log-gamma
/// prefactors. Exact Kronecker delta at alpha = 0.
cplx displacement_matrix_element(cplx alpha, int m, int k);

/// Dense table d[m][k] = <m| D(alpha) |k> for m, k <= cutoff, filled by the
/// ladder recurrences (one pass, O(cutoff^2)).
struct DisplacementTable {
    int cutoff = 0;
    std::vector<cplx> d; ///< (cutoff+1)^2 row-major, row = m

    cplx at(int m, int k) const {
        return d[static_cast<std::size_t>(m) * (cutoff + 1) + k];
    }
};

DisplacementTable displacement_matrix(cplx alpha, int cutoff);

} // namespace noon

#endif
