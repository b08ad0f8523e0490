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
#ifndef NOON_FOCK_HPP
#define NOON_FOCK_HPP

#include "noon/beam_splitter.hpp"
#include "noon/types.hpp"

namespace noon {

/// Spontaneous two-mode squeezed vacuum coefficient
/// C(m,n) = delta_mn (-e^{i phi} tanh r)^n / cosh r.
cplx tmsv_coefficient(double r, double phi, int m, int n);

/// The N-photon component of D(alpha0, beta0) S(r, phi) |0>, with amplitudes
/// correct up to one complex factor common to all m (the m-independent
/// normalization-and-phase prefactor is dropped so that high gain and large
/// seeds stay finite). The component is exact for any gain: the amplitude of
/// |m, N-m> is a finite sum of min(m, N-m)+1 terms in the effective
/// displacements mu = alpha0 + G conj(beta0), nu = beta0 + G conj(alpha0),
/// G = e^{i phi} tanh r. No Fock-space truncation is involved.
PhotonComponent displaced_tmsv_component(const SourceParams& src, int n_total);

/// NOON fidelity of a component after the beam splitter: fidelity is
/// maximized over the NOON relative phase; fixed_phase_fidelity is the
/// overlap with (|N,0> + |0,N>)/sqrt(2).
FidelityResult noon_fidelity(const PhotonComponent& component, const BeamSplitter& bs);

} // namespace noon

#endif
