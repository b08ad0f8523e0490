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
#ifndef NOON_BEAM_SPLITTER_HPP
#define NOON_BEAM_SPLITTER_HPP

#include <cstddef>
#include <memory>
#include <mutex>
#include <vector>

#include "noon/types.hpp"

namespace noon {

/// The project-wide 50/50 convention: a -> (a + i b)/sqrt(2),
/// b -> (i a + b)/sqrt(2).
enum class BsConvention { SymmetricI };

/// Unitary of the 50/50 splitter restricted to the N-photon subspace,
/// stored split-complex row-major on the |m, N-m> basis (row j = output
/// |j, N-j>).
struct BsMatrix {
    int n_total = 0;
    std::vector<double> re; ///< (N+1)^2
    std::vector<double> im;

    cplx at(int j, int m) const {
        const std::size_t idx = static_cast<std::size_t>(j) * (n_total + 1) + m;
        return {re[idx], im[idx]};
    }
};

/// Caches the per-N matrices. Concurrent read access is guarded; matrices
/// are immutable once built.
class BeamSplitter {
  public:
    explicit BeamSplitter(BsConvention conv = BsConvention::SymmetricI) : conv_(conv) {}

    BsConvention convention() const { return conv_; }

    /// The cached (N+1)x(N+1) unitary. Reference stays valid for the
    /// lifetime of this object.
    const BsMatrix& matrix(int n_total) const;

  private:
    BsConvention conv_;
    mutable std::vector<std::unique_ptr<BsMatrix>> cache_; // index N
    mutable std::mutex mutex_;
};

/// Applies the splitter to an N-photon component. Preserves the squared
/// norm; the inverse (conjugate-transpose) application recovers the input.
PhotonComponent bs_transform(const PhotonComponent& component, const BeamSplitter& bs);

/// Applies the inverse splitter.
PhotonComponent bs_transform_inverse(const PhotonComponent& component, const BeamSplitter& bs);

} // namespace noon

#endif
