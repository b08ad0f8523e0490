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

// 256-bit AVX+FMA backend. Complex data is handled split (separate re/im
// vectors); four doubles per lane.

#include <cmath>
#include <immintrin.h>

#include "noon/kernels.hpp"

namespace noon::kernels {
namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d swapped = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, swapped));
}

double norm_sq_avx(const double* re, const double* im, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d r = _mm256_loadu_pd(re + i);
        const __m256d m = _mm256_loadu_pd(im + i);
        acc = _mm256_fmadd_pd(r, r, acc);
        acc = _mm256_fmadd_pd(m, m, acc);
    }
    double total = hsum(acc);
    for (; i < n; ++i) total += re[i] * re[i] + im[i] * im[i];
    return total;
}

void cmatvec_avx(const double* m_re, const double* m_im,
                 const double* x_re, const double* x_im,
                 double* y_re, double* y_im,
                 std::size_t rows, std::size_t cols) {
    for (std::size_t r = 0; r < rows; ++r) {
        const double* row_re = m_re + r * cols;
        const double* row_im = m_im + r * cols;
        __m256d acc_re = _mm256_setzero_pd();
        __m256d acc_im = _mm256_setzero_pd();
        std::size_t c = 0;
        for (; c + 4 <= cols; c += 4) {
            const __m256d ar = _mm256_loadu_pd(row_re + c);
            const __m256d ai = _mm256_loadu_pd(row_im + c);
            const __m256d br = _mm256_loadu_pd(x_re + c);
            const __m256d bi = _mm256_loadu_pd(x_im + c);
            acc_re = _mm256_fmadd_pd(ar, br, acc_re);
            acc_re = _mm256_fnmadd_pd(ai, bi, acc_re);
            acc_im = _mm256_fmadd_pd(ar, bi, acc_im);
            acc_im = _mm256_fmadd_pd(ai, br, acc_im);
        }
        double out_re = hsum(acc_re);
        double out_im = hsum(acc_im);
        for (; c < cols; ++c) {
            out_re += row_re[c] * x_re[c] - row_im[c] * x_im[c];
            out_im += row_re[c] * x_im[c] + row_im[c] * x_re[c];
        }
        y_re[r] = out_re;
        y_im[r] = out_im;
    }
}

void fringe_sweep_avx(const double* w_re, const double* w_im, std::size_t nw,
                      const double* psi, double* out, std::size_t npsi) {
    std::size_t i = 0;
    for (; i + 4 <= npsi; i += 4) {
        // the only transcendentals: one sincos per lane for the step phasor
        alignas(32) double rr[4], ri[4];
        for (int l = 0; l < 4; ++l) {
            rr[l] = std::cos(psi[i + l]);
            ri[l] = std::sin(psi[i + l]);
        }
        const __m256d rot_re = _mm256_load_pd(rr);
        const __m256d rot_im = _mm256_load_pd(ri);
        __m256d cur_re = _mm256_set1_pd(1.0);
        __m256d cur_im = _mm256_setzero_pd();
        __m256d acc_re = _mm256_setzero_pd();
        __m256d acc_im = _mm256_setzero_pd();
        for (std::size_t m = 0; m < nw; ++m) {
            const __m256d wr = _mm256_set1_pd(w_re[m]);
            const __m256d wi = _mm256_set1_pd(w_im[m]);
            acc_re = _mm256_fmadd_pd(wr, cur_re, acc_re);
            acc_re = _mm256_fnmadd_pd(wi, cur_im, acc_re);
            acc_im = _mm256_fmadd_pd(wr, cur_im, acc_im);
            acc_im = _mm256_fmadd_pd(wi, cur_re, acc_im);
            const __m256d next_re =
                _mm256_fnmadd_pd(cur_im, rot_im, _mm256_mul_pd(cur_re, rot_re));
            const __m256d next_im =
                _mm256_fmadd_pd(cur_re, rot_im, _mm256_mul_pd(cur_im, rot_re));
            cur_re = next_re;
            cur_im = next_im;
        }
        const __m256d p = _mm256_fmadd_pd(acc_re, acc_re, _mm256_mul_pd(acc_im, acc_im));
        _mm256_storeu_pd(out + i, p);
    }
    if (i < npsi) scalar().fringe_sweep(w_re, w_im, nw, psi + i, out + i, npsi - i);
}

void noon_sweep_avx(const NoonSweepPlan& plan,
                    const double* mu_re, const double* mu_im,
                    double* fidelity, std::size_t count) {
    const int n = plan.n_total;
    const int pc = plan.p_count;
    alignas(32) double pw_re[(kMaxSweepN + 1) * 4];
    alignas(32) double pw_im[(kMaxSweepN + 1) * 4];
    std::size_t i = 0;
    for (; i + 4 <= count; i += 4) {
        const __m256d mr = _mm256_loadu_pd(mu_re + i);
        const __m256d mi = _mm256_loadu_pd(mu_im + i);
        __m256d cur_re = _mm256_set1_pd(1.0);
        __m256d cur_im = _mm256_setzero_pd();
        _mm256_store_pd(pw_re, cur_re);
        _mm256_store_pd(pw_im, cur_im);
        for (int k = 1; k <= n; ++k) {
            const __m256d next_re = _mm256_fnmadd_pd(cur_im, mi, _mm256_mul_pd(cur_re, mr));
            const __m256d next_im = _mm256_fmadd_pd(cur_re, mi, _mm256_mul_pd(cur_im, mr));
            cur_re = next_re;
            cur_im = next_im;
            _mm256_store_pd(pw_re + 4 * k, cur_re);
            _mm256_store_pd(pw_im + 4 * k, cur_im);
        }
        __m256d w = _mm256_setzero_pd();
        __m256d a_re = _mm256_setzero_pd(), a_im = _mm256_setzero_pd();
        __m256d b_re = _mm256_setzero_pd(), b_im = _mm256_setzero_pd();
        for (int m = 0; m <= n; ++m) {
            const double* krow_re = plan.k_re + static_cast<std::size_t>(m) * pc;
            const double* krow_im = plan.k_im + static_cast<std::size_t>(m) * pc;
            __m256d c_re = _mm256_setzero_pd();
            __m256d c_im = _mm256_setzero_pd();
            for (int p = 0; p < pc; ++p) {
                const int pow_idx = n - 2 * p;
                if (pow_idx < 0) break;
                const __m256d kr = _mm256_set1_pd(krow_re[p]);
                const __m256d ki = _mm256_set1_pd(krow_im[p]);
                const __m256d pr = _mm256_load_pd(pw_re + 4 * pow_idx);
                const __m256d pim = _mm256_load_pd(pw_im + 4 * pow_idx);
                c_re = _mm256_fmadd_pd(kr, pr, c_re);
                c_re = _mm256_fnmadd_pd(ki, pim, c_re);
                c_im = _mm256_fmadd_pd(kr, pim, c_im);
                c_im = _mm256_fmadd_pd(ki, pr, c_im);
            }
            w = _mm256_fmadd_pd(c_re, c_re, w);
            w = _mm256_fmadd_pd(c_im, c_im, w);
            const __m256d ur = _mm256_set1_pd(plan.row_n_re[m]);
            const __m256d ui = _mm256_set1_pd(plan.row_n_im[m]);
            a_re = _mm256_fmadd_pd(ur, c_re, a_re);
            a_re = _mm256_fnmadd_pd(ui, c_im, a_re);
            a_im = _mm256_fmadd_pd(ur, c_im, a_im);
            a_im = _mm256_fmadd_pd(ui, c_re, a_im);
            const __m256d vr = _mm256_set1_pd(plan.row_0_re[m]);
            const __m256d vi = _mm256_set1_pd(plan.row_0_im[m]);
            b_re = _mm256_fmadd_pd(vr, c_re, b_re);
            b_re = _mm256_fnmadd_pd(vi, c_im, b_re);
            b_im = _mm256_fmadd_pd(vr, c_im, b_im);
            b_im = _mm256_fmadd_pd(vi, c_re, b_im);
        }
        const __m256d na2 = _mm256_div_pd(
            _mm256_fmadd_pd(a_re, a_re, _mm256_mul_pd(a_im, a_im)), w);
        const __m256d nb2 = _mm256_div_pd(
            _mm256_fmadd_pd(b_re, b_re, _mm256_mul_pd(b_im, b_im)), w);
        const __m256d half = _mm256_set1_pd(0.5);
        __m256d fid = _mm256_fmadd_pd(half, _mm256_add_pd(na2, nb2),
                                      _mm256_sqrt_pd(_mm256_mul_pd(na2, nb2)));
        // degenerate lanes (w == 0) -> -1
        const __m256d zero = _mm256_setzero_pd();
        const __m256d degenerate = _mm256_cmp_pd(w, zero, _CMP_LE_OQ);
        fid = _mm256_blendv_pd(fid, _mm256_set1_pd(-1.0), degenerate);
        _mm256_storeu_pd(fidelity + i, fid);
    }
    if (i < count) scalar().noon_sweep(plan, mu_re + i, mu_im + i, fidelity + i, count - i);
}

constexpr Ops kAvxOps{
    "avx",
    &norm_sq_avx,
    &cmatvec_avx,
    &fringe_sweep_avx,
    &noon_sweep_avx,
};

} // namespace

namespace detail {
const Ops* avx_ops() { return &kAvxOps; }
} // namespace detail

} // namespace noon::kernels
