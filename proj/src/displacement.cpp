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

#include "noon/displacement.hpp"

namespace noon {
namespace {

// L_n^(a)(x) by the forward three-term recurrence (stable on this domain:
// x = |alpha|^2 <~ 10, n <~ 130 in the oracle envelope).
double assoc_laguerre(int n, int a, double x) {
    if (n == 0) return 1.0;
    double lm1 = 1.0;
    double l = 1.0 + a - x;
    for (int k = 1; k < n; ++k) {
        const double lp1 = ((2.0 * k + 1.0 + a - x) * l - (k + a) * lm1) / (k + 1.0);
        lm1 = l;
        l = lp1;
    }
    return l;
}

} // namespace

cplx displacement_matrix_element(cplx alpha, int m, int k) {
    if (m < 0 || k < 0) throw domain_error("displacement_matrix_element: negative index");
    if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag()))
        throw domain_error("displacement_matrix_element: non-finite alpha");
    if (alpha == cplx(0.0, 0.0)) return m == k ? cplx(1.0, 0.0) : cplx(0.0, 0.0);

    const int lo = std::min(m, k);
    const int hi = std::max(m, k);
    const int d = hi - lo;
    const double x = std::norm(alpha);
    // <m|D|k> = sqrt(lo!/hi!) u^d e^{-x/2} L_lo^(d)(x), u = alpha (m >= k)
    // or -conj(alpha) (m < k)
    const cplx u = (m >= k) ? alpha : -std::conj(alpha);
    const double log_mag =
        -0.5 * x + 0.5 * (std::lgamma(lo + 1.0) - std::lgamma(hi + 1.0)) +
        d * std::log(std::abs(u));
    const double lag = assoc_laguerre(lo, d, x);
    return std::polar(std::exp(log_mag), d * std::arg(u)) * lag;
}

DisplacementTable displacement_matrix(cplx alpha, int cutoff) {
    if (cutoff < 0) throw domain_error("displacement_matrix: negative cutoff");
    if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag()))
        throw domain_error("displacement_matrix: non-finite alpha");
    const int dim = cutoff + 1;
    DisplacementTable table;
    table.cutoff = cutoff;
    table.d.assign(static_cast<std::size_t>(dim) * dim, cplx(0.0, 0.0));
    auto at = [&](int m, int k) -> cplx& {
        return table.d[static_cast<std::size_t>(m) * dim + k];
    };

    at(0, 0) = std::exp(-0.5 * std::norm(alpha));
    // column k = 0: sqrt(m+1) <m+1|D|0> = alpha <m|D|0>
    for (int m = 0; m < cutoff; ++m) at(m + 1, 0) = alpha * at(m, 0) / std::sqrt(m + 1.0);
    // sqrt(k+1) <m|D|k+1> = sqrt(m) <m-1|D|k> - conj(alpha) <m|D|k>
    for (int k = 0; k < cutoff; ++k)
        for (int m = 0; m <= cutoff; ++m) {
            const cplx up = (m > 0) ? std::sqrt(static_cast<double>(m)) * at(m - 1, k)
                                    : cplx(0.0, 0.0);
            at(m, k + 1) = (up - std::conj(alpha) * at(m, k)) / std::sqrt(k + 1.0);
        }
    return table;
}

} // namespace noon
