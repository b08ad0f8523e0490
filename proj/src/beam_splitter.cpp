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

#include "noon/beam_splitter.hpp"
#include "noon/kernels.hpp"

#include "detail.hpp"

namespace noon {
namespace {

constexpr int kMaxSubspace = 150; // factorial-table headroom for C(N, k)

// U |m, n> = (taa a+ + tab b+)^m (tba a+ + tbb b+)^n |0,0> / sqrt(m! n!)
std::unique_ptr<BsMatrix> build_matrix(int n_total) {
    const int dim = n_total + 1;
    auto mat = std::make_unique<BsMatrix>();
    mat->n_total = n_total;
    mat->re.assign(static_cast<std::size_t>(dim) * dim, 0.0);
    mat->im.assign(static_cast<std::size_t>(dim) * dim, 0.0);

    const double h = 1.0 / std::sqrt(2.0);
    const cplx taa(h, 0.0), tab(0.0, h), tba(0.0, h), tbb(h, 0.0);

    std::vector<cplx> paa(dim), pab(dim), pba(dim), pbb(dim);
    paa[0] = pab[0] = pba[0] = pbb[0] = 1.0;
    for (int k = 1; k < dim; ++k) {
        paa[k] = paa[k - 1] * taa;
        pab[k] = pab[k - 1] * tab;
        pba[k] = pba[k - 1] * tba;
        pbb[k] = pbb[k - 1] * tbb;
    }

    const auto& fact = detail::factorials();
    for (int m = 0; m < dim; ++m) {
        const int n = n_total - m;
        for (int j = 0; j < dim; ++j) {
            cplx sum = 0.0;
            const int s_lo = std::max(0, j - n);
            const int s_hi = std::min(m, j);
            for (int s = s_lo; s <= s_hi; ++s) {
                const int t = j - s;
                const double binom = fact[m] / (fact[s] * fact[m - s]) *
                                     fact[n] / (fact[t] * fact[n - t]);
                sum += binom * paa[s] * pab[m - s] * pba[t] * pbb[n - t];
            }
            const cplx entry =
                sum * std::sqrt(fact[j] * fact[n_total - j] / (fact[m] * fact[n]));
            const std::size_t idx = static_cast<std::size_t>(j) * dim + m;
            mat->re[idx] = entry.real();
            mat->im[idx] = entry.imag();
        }
    }
    return mat;
}

PhotonComponent apply(const PhotonComponent& component, const BsMatrix& mat, bool inverse) {
    const int dim = component.n_total + 1;
    std::vector<double> x_re(dim), x_im(dim), y_re(dim), y_im(dim);
    for (int m = 0; m < dim; ++m) {
        x_re[m] = component.amplitudes[m].real();
        x_im[m] = component.amplitudes[m].imag();
    }
    if (!inverse) {
        kernels::active().cmatvec(mat.re.data(), mat.im.data(), x_re.data(), x_im.data(),
                                  y_re.data(), y_im.data(), dim, dim);
    } else {
        // adjoint: rows of U+ are conjugated columns of U
        std::vector<double> adj_re(static_cast<std::size_t>(dim) * dim);
        std::vector<double> adj_im(adj_re.size());
        for (int j = 0; j < dim; ++j)
            for (int m = 0; m < dim; ++m) {
                adj_re[static_cast<std::size_t>(j) * dim + m] =
                    mat.re[static_cast<std::size_t>(m) * dim + j];
                adj_im[static_cast<std::size_t>(j) * dim + m] =
                    -mat.im[static_cast<std::size_t>(m) * dim + j];
            }
        kernels::active().cmatvec(adj_re.data(), adj_im.data(), x_re.data(), x_im.data(),
                                  y_re.data(), y_im.data(), dim, dim);
    }
    std::vector<cplx> out(dim);
    for (int m = 0; m < dim; ++m) out[m] = cplx(y_re[m], y_im[m]);
    return PhotonComponent(component.n_total, std::move(out), component.normalized);
}

} // namespace

const BsMatrix& BeamSplitter::matrix(int n_total) const {
    if (n_total < 0 || n_total > kMaxSubspace)
        throw domain_error("BeamSplitter: n_total out of range");
    std::lock_guard<std::mutex> lock(mutex_);
    if (cache_.size() <= static_cast<std::size_t>(n_total))
        cache_.resize(n_total + 1);
    if (!cache_[n_total]) cache_[n_total] = build_matrix(n_total);
    return *cache_[n_total];
}

PhotonComponent bs_transform(const PhotonComponent& component, const BeamSplitter& bs) {
    return apply(component, bs.matrix(component.n_total), false);
}

PhotonComponent bs_transform_inverse(const PhotonComponent& component, const BeamSplitter& bs) {
    return apply(component, bs.matrix(component.n_total), true);
}

} // namespace noon
