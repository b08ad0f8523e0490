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
#ifndef NOON_KERNELS_HPP
#define NOON_KERNELS_HPP

#include <cstddef>
#include <string_view>

namespace noon::kernels {

/// Largest n_total the sweep kernels accept (stack-buffer bound).
inline constexpr int kMaxSweepN = 64;

/// Shared inputs of the theta-sweep fidelity kernel. All arrays are
/// split-complex (separate re/im). The N-photon amplitudes of the symmetric
/// seeded source are c_m = sum_p K[m][p] * mu^(N-2p) with mu the effective
/// displacement per sweep point; the kernel folds the beam-splitter rows for
/// |N,0> and |0,N> and the phase-optimized NOON overlap on top.
struct NoonSweepPlan {
    int n_total = 0;         ///< N
    int p_count = 0;         ///< floor(N/2) + 1 (columns of K)
    const double* k_re = nullptr; ///< (N+1) x p_count, row-major; zero-padded
    const double* k_im = nullptr;
    const double* row_n_re = nullptr; ///< BS row for |N,0>, length N+1
    const double* row_n_im = nullptr;
    const double* row_0_re = nullptr; ///< BS row for |0,N>, length N+1
    const double* row_0_im = nullptr;
};

/// One dispatchable backend. Function pointers so the scalar and the SIMD
/// builds stay strictly interchangeable and equivalence-testable.
struct Ops {
    const char* name;

    /// sum over i of re[i]^2 + im[i]^2
    double (*norm_sq)(const double* re, const double* im, std::size_t n);

    /// y = M x, complex, row-major M of shape rows x cols
    void (*cmatvec)(const double* m_re, const double* m_im,
                    const double* x_re, const double* x_im,
                    double* y_re, double* y_im,
                    std::size_t rows, std::size_t cols);

    /// out[i] = |sum_m w_m e^{i m psi[i]}|^2
    void (*fringe_sweep)(const double* w_re, const double* w_im, std::size_t nw,
                         const double* psi, double* out, std::size_t npsi);

    /// Phase-optimized NOON fidelity for a batch of effective displacements.
    /// Writes -1.0 for zero-weight (degenerate) points.
    void (*noon_sweep)(const NoonSweepPlan& plan,
                       const double* mu_re, const double* mu_im,
                       double* fidelity, std::size_t count);
};

const Ops& scalar();

/// Backend picked at runtime from CPU features (AVX+FMA when available).
const Ops& active();

/// Lookup by name ("scalar", "avx"); nullptr when the backend is not built
/// in or the CPU cannot run it. Intended for tests and benchmarks.
const Ops* by_name(std::string_view name);

bool avx_supported();

} // namespace noon::kernels

#endif
