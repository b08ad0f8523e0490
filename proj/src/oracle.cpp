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
#include <string>

#include "noon/oracle.hpp"

namespace noon {

namespace {
constexpr int kOracleCutoffCap = 128;
constexpr double kWeightTolerance = 1e-10;
} // namespace

double TruncatedState::total_probability() const {
    double total = 0.0;
    for (const cplx& a : amp) total += std::norm(a);
    return total;
}

PhotonComponent TruncatedState::n_slice(int n_total) const {
    if (n_total < 0 || n_total > cutoff)
        throw domain_error("TruncatedState: slice outside the truncated space");
    std::vector<cplx> amps(n_total + 1);
    for (int m = 0; m <= n_total; ++m) amps[m] = at(m, n_total - m);
    return PhotonComponent(n_total, std::move(amps), false);
}

int recommended_cutoff(const SourceParams& src) {
    const double sh = std::sinh(src.r);
    const double s = sh * sh + std::max(std::norm(src.alpha0), std::norm(src.beta0));
    return std::max(30, static_cast<int>(std::ceil(s + 8.0 * std::sqrt(s))));
}

TruncatedState truncated_state_oracle(const SourceParams& src, int cutoff) {
    src.validate();
    if (cutoff < 0) throw domain_error("truncated_state_oracle: negative cutoff");
    if (cutoff > kOracleCutoffCap)
        throw domain_error("truncated_state_oracle: cutoff beyond the practical envelope (128)");

    const int dim = cutoff + 1;
    const DisplacementTable da = displacement_matrix(src.alpha0, cutoff);
    const DisplacementTable db = displacement_matrix(src.beta0, cutoff);
    const cplx lambda = -std::polar(std::tanh(src.r), src.phi);
    const double inv_cosh = 1.0 / std::cosh(src.r);

    std::vector<cplx> lambda_pow(dim);
    lambda_pow[0] = 1.0;
    for (int n = 1; n < dim; ++n) lambda_pow[n] = lambda_pow[n - 1] * lambda;

    TruncatedState state;
    state.cutoff = cutoff;
    state.amp.assign(static_cast<std::size_t>(dim) * dim, cplx(0.0, 0.0));
    for (int j = 0; j < dim; ++j) {
        const cplx* da_row = &da.d[static_cast<std::size_t>(j) * dim];
        for (int k = 0; k < dim; ++k) {
            const cplx* db_row = &db.d[static_cast<std::size_t>(k) * dim];
            cplx sum = 0.0;
            for (int n = 0; n < dim; ++n) sum += lambda_pow[n] * da_row[n] * db_row[n];
            state.amp[static_cast<std::size_t>(j) * dim + k] = sum * inv_cosh;
        }
    }

    const double total = state.total_probability();
    const double missing = 1.0 - total;
    if (std::abs(missing) > kWeightTolerance)
        throw accuracy_error("truncated_state_oracle: cutoff " + std::to_string(cutoff) +
                                 " leaves estimated probability weight " +
                                 std::to_string(missing) + " outside the table",
                             missing);
    return state;
}

} // namespace noon
