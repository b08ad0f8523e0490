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

#include "noon/kernels.hpp"

namespace noon::kernels {
namespace {

double norm_sq_scalar(const double* re, const double* im, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += re[i] * re[i] + im[i] * im[i];
    return acc;
}

void cmatvec_scalar(const double* m_re, const double* m_im,
                    const double* x_re, const double* x_im,
                    double* y_re, double* y_im,
                    std::size_t rows, std::size_t cols) {
    for (std::size_t r = 0; r < rows; ++r) {
        const double* row_re = m_re + r * cols;
        const double* row_im = m_im + r * cols;
        double acc_re = 0.0, acc_im = 0.0;
        for (std::size_t c = 0; c < cols; ++c) {
            acc_re += row_re[c] * x_re[c] - row_im[c] * x_im[c];
            acc_im += row_re[c] * x_im[c] + row_im[c] * x_re[c];
        }
        y_re[r] = acc_re;
        y_im[r] = acc_im;
    }
}

void fringe_sweep_scalar(const double* w_re, const double* w_im, std::size_t nw,
                         const double* psi, double* out, std::size_t npsi) {
    for (std::size_t i = 0; i < npsi; ++i) {
        const double rot_re = std::cos(psi[i]);
        const double rot_im = std::sin(psi[i]);
        // phasor recurrence: cur = e^{i m psi}
        double cur_re = 1.0, cur_im = 0.0;
        double acc_re = 0.0, acc_im = 0.0;
        for (std::size_t m = 0; m < nw; ++m) {
            acc_re += w_re[m] * cur_re - w_im[m] * cur_im;
            acc_im += w_re[m] * cur_im + w_im[m] * cur_re;
            const double next_re = cur_re * rot_re - cur_im * rot_im;
            const double next_im = cur_re * rot_im + cur_im * rot_re;
            cur_re = next_re;
            cur_im = next_im;
        }
        out[i] = acc_re * acc_re + acc_im * acc_im;
    }
}

void noon_sweep_scalar(const NoonSweepPlan& plan,
                       const double* mu_re, const double* mu_im,
                       double* fidelity, std::size_t count) {
    const int n = plan.n_total;
    const int pc = plan.p_count;
    double pw_re[kMaxSweepN + 1], pw_im[kMaxSweepN + 1];
    for (std::size_t i = 0; i < count; ++i) {
        pw_re[0] = 1.0;
        pw_im[0] = 0.0;
        for (int k = 1; k <= n; ++k) {
            pw_re[k] = pw_re[k - 1] * mu_re[i] - pw_im[k - 1] * mu_im[i];
            pw_im[k] = pw_re[k - 1] * mu_im[i] + pw_im[k - 1] * mu_re[i];
        }
        double w = 0.0;
        double a_re = 0.0, a_im = 0.0, b_re = 0.0, b_im = 0.0;
        for (int m = 0; m <= n; ++m) {
            const double* krow_re = plan.k_re + static_cast<std::size_t>(m) * pc;
            const double* krow_im = plan.k_im + static_cast<std::size_t>(m) * pc;
            double c_re = 0.0, c_im = 0.0;
            for (int p = 0; p < pc; ++p) {
                const int pow_idx = n - 2 * p;
                if (pow_idx < 0) break;
                c_re += krow_re[p] * pw_re[pow_idx] - krow_im[p] * pw_im[pow_idx];
                c_im += krow_re[p] * pw_im[pow_idx] + krow_im[p] * pw_re[pow_idx];
            }
            w += c_re * c_re + c_im * c_im;
            a_re += plan.row_n_re[m] * c_re - plan.row_n_im[m] * c_im;
            a_im += plan.row_n_re[m] * c_im + plan.row_n_im[m] * c_re;
            b_re += plan.row_0_re[m] * c_re - plan.row_0_im[m] * c_im;
            b_im += plan.row_0_re[m] * c_im + plan.row_0_im[m] * c_re;
        }
        if (!(w > 0.0)) {
            fidelity[i] = -1.0;
            continue;
        }
        const double na2 = (a_re * a_re + a_im * a_im) / w;
        const double nb2 = (b_re * b_re + b_im * b_im) / w;
        fidelity[i] = 0.5 * (na2 + nb2) + std::sqrt(na2 * nb2);
    }
}

constexpr Ops kScalarOps{
    "scalar",
    &norm_sq_scalar,
    &cmatvec_scalar,
    &fringe_sweep_scalar,
    &noon_sweep_scalar,
};

} // namespace

const Ops& scalar() { return kScalarOps; }

} // namespace noon::kernels
