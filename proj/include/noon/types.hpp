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
#ifndef NOON_TYPES_HPP
#define NOON_TYPES_HPP

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace noon {

using cplx = std::complex<double>;

/// Bad or non-finite inputs.
struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An operation was asked to extract information from a state with no weight
/// (e.g. the NOON fidelity of an empty photon-number component).
struct degenerate_input_error : domain_error {
    using domain_error::domain_error;
};

/// A truncated computation cannot reach the requested accuracy. Carries the
/// estimated probability weight lost to truncation.
struct accuracy_error : std::runtime_error {
    accuracy_error(const std::string& msg, double missing)
        : std::runtime_error(msg), missing_weight(missing) {}
    double missing_weight;
};

/// Coherent-to-PDC strength regimes. Weak maps gamma -> |alpha|^2 = gamma*r,
/// strong maps gamma -> |alpha|^2 = gamma*sinh^2(r).
enum class Regime { Weak, Strong };

inline const char* to_string(Regime reg) {
    return reg == Regime::Weak ? "weak" : "strong";
}

/// Pair amplitude ratio of the coherent seed to the PDC source.
struct PairAmplitudeRatio {
    double gamma = 0.0;
    Regime regime = Regime::Weak;

    PairAmplitudeRatio() = default;
    PairAmplitudeRatio(double g, Regime reg) : gamma(g), regime(reg) {
        if (!(g >= 0.0)) throw domain_error("PairAmplitudeRatio: gamma must be >= 0");
    }

    double alpha_mag_sq(double r) const {
        const double scale = regime == Regime::Weak ? r : std::sinh(r) * std::sinh(r);
        return gamma * scale;
    }
    double alpha_mag(double r) const { return std::sqrt(alpha_mag_sq(r)); }

    static PairAmplitudeRatio from_alpha_mag(double alpha_mag, double r, Regime reg) {
        if (!(alpha_mag >= 0.0)) throw domain_error("PairAmplitudeRatio: |alpha| must be >= 0");
        const double scale = reg == Regime::Weak ? r : std::sinh(r) * std::sinh(r);
        if (!(scale > 0.0)) throw domain_error("PairAmplitudeRatio: r must be > 0 to map back to gamma");
        return PairAmplitudeRatio(alpha_mag * alpha_mag / scale, reg);
    }
};

/// Physical description of the coherent-beam-stimulated PDC source:
/// the state D(alpha0, beta0) S(r, phi) |0>.
struct SourceParams {
    double r = 0.0;        ///< squeeze gain, >= 0
    double phi = 0.0;      ///< PDC phase (radians)
    cplx alpha0{0.0, 0.0}; ///< seed amplitude of mode a
    cplx beta0{0.0, 0.0};  ///< seed amplitude of mode b

    SourceParams() = default;
    SourceParams(double r_, double phi_, cplx a0, cplx b0)
        : r(r_), phi(phi_), alpha0(a0), beta0(b0) {
        validate();
    }

    /// Symmetric seeding alpha0 = beta0 = |alpha| e^{i theta}.
    static SourceParams symmetric(double r, double alpha_mag, double theta, double phi = 0.0) {
        if (!(alpha_mag >= 0.0)) throw domain_error("SourceParams: |alpha| must be >= 0");
        const cplx seed = std::polar(alpha_mag, theta);
        return SourceParams(r, phi, seed, seed);
    }

    double alpha_mag() const { return std::abs(alpha0); }
    double theta() const { return std::arg(alpha0); }

    void validate() const {
        if (!(r >= 0.0)) throw domain_error("SourceParams: r must be >= 0 and finite");
        if (!std::isfinite(r) || !std::isfinite(phi) ||
            !std::isfinite(alpha0.real()) || !std::isfinite(alpha0.imag()) ||
            !std::isfinite(beta0.real()) || !std::isfinite(beta0.imag()))
            throw domain_error("SourceParams: non-finite parameter");
    }
};

/// The N-photon slice of a two-mode state: amplitudes[m] multiplies |m, N-m>.
/// Amplitudes are relative (a single complex prefactor common to all m is
/// dropped by the closed-form construction); weight records sum |c_m|^2 in
/// those relative units.
struct PhotonComponent {
    int n_total = 0;
    std::vector<cplx> amplitudes; ///< size n_total + 1
    bool normalized = false;
    double weight = 0.0;

    PhotonComponent() = default;
    PhotonComponent(int n, std::vector<cplx> amps, bool norm = false)
        : n_total(n), amplitudes(std::move(amps)), normalized(norm) {
        if (n < 0 || amplitudes.size() != static_cast<size_t>(n) + 1)
            throw domain_error("PhotonComponent: amplitudes must have n_total+1 entries");
        weight = 0.0;
        for (const cplx& c : amplitudes) weight += std::norm(c);
    }

    /// Returns the unit-norm copy; weight keeps the pre-normalization value.
    PhotonComponent unit() const {
        if (!(weight > 0.0))
            throw degenerate_input_error("PhotonComponent: cannot normalize zero-weight component");
        PhotonComponent out = *this;
        const double inv = 1.0 / std::sqrt(weight);
        for (cplx& c : out.amplitudes) c *= inv;
        out.normalized = true;
        out.weight = weight;
        return out;
    }
};

/// NOON-state overlap of a component after the beam splitter.
struct FidelityResult {
    double fidelity = 0.0;             ///< max over the NOON relative phase
    double noon_phase = 0.0;           ///< the phase Lambda attaining the max
    double fixed_phase_fidelity = 0.0; ///< against (|N,0> + |0,N>)/sqrt(2)
};

} // namespace noon

#endif
