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
#include <limits>
#include <numbers>

#include "noon/kernels.hpp"
#include "noon/optimize.hpp"

#include "detail.hpp"

namespace noon {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double canonical_angle(double theta) {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    return t;
}

// Owning storage behind a kernels::NoonSweepPlan: coefficient table
// K[m][p] = sqrt(m! n!) (-G)^p / (p! (m-p)! (n-p)!) and the two
// beam-splitter rows picking the |N,0> / |0,N> output amplitudes.
struct SweepPlan {
    std::vector<double> k_re, k_im;
    std::vector<double> row_n_re, row_n_im, row_0_re, row_0_im;
    kernels::NoonSweepPlan view;
    cplx big_g;
};

SweepPlan build_plan(int n_total, double r, double phi, const BeamSplitter& bs) {
    if (n_total < 0 || n_total > kernels::kMaxSweepN)
        throw domain_error("sweep: n_total out of kernel range");
    if (!(r >= 0.0) || !std::isfinite(r) || !std::isfinite(phi))
        throw domain_error("sweep: invalid r or phi");

    SweepPlan plan;
    plan.big_g = std::polar(std::tanh(r), phi);
    const int dim = n_total + 1;
    const int p_count = n_total / 2 + 1;
    plan.k_re.assign(static_cast<std::size_t>(dim) * p_count, 0.0);
    plan.k_im.assign(plan.k_re.size(), 0.0);

    const auto& fact = detail::factorials();
    std::vector<cplx> g_pow(p_count);
    g_pow[0] = 1.0;
    for (int p = 1; p < p_count; ++p) g_pow[p] = g_pow[p - 1] * (-plan.big_g);

    for (int m = 0; m < dim; ++m) {
        const int n = n_total - m;
        const double root = std::sqrt(fact[m] * fact[n]);
        for (int p = 0; p <= std::min({m, n, p_count - 1}); ++p) {
            const cplx value = root * g_pow[p] / (fact[p] * fact[m - p] * fact[n - p]);
            plan.k_re[static_cast<std::size_t>(m) * p_count + p] = value.real();
            plan.k_im[static_cast<std::size_t>(m) * p_count + p] = value.imag();
        }
    }

    const BsMatrix& mat = bs.matrix(n_total);
    plan.row_n_re.resize(dim);
    plan.row_n_im.resize(dim);
    plan.row_0_re.resize(dim);
    plan.row_0_im.resize(dim);
    for (int m = 0; m < dim; ++m) {
        const cplx top = mat.at(n_total, m);
        const cplx bottom = mat.at(0, m);
        plan.row_n_re[m] = top.real();
        plan.row_n_im[m] = top.imag();
        plan.row_0_re[m] = bottom.real();
        plan.row_0_im[m] = bottom.imag();
    }

    plan.view.n_total = n_total;
    plan.view.p_count = p_count;
    plan.view.k_re = plan.k_re.data();
    plan.view.k_im = plan.k_im.data();
    plan.view.row_n_re = plan.row_n_re.data();
    plan.view.row_n_im = plan.row_n_im.data();
    plan.view.row_0_re = plan.row_0_re.data();
    plan.view.row_0_im = plan.row_0_im.data();
    return plan;
}

// mu(theta) = amag (e^{i theta} + G e^{-i theta})
void eval_thetas(const SweepPlan& plan, double amag, const std::vector<double>& thetas,
                 std::vector<double>& fids) {
    const std::size_t n = thetas.size();
    std::vector<double> mu_re(n), mu_im(n);
    const double gr = plan.big_g.real(), gi = plan.big_g.imag();
    for (std::size_t i = 0; i < n; ++i) {
        const double c = std::cos(thetas[i]);
        const double s = std::sin(thetas[i]);
        mu_re[i] = amag * (c + gr * c + gi * s);
        mu_im[i] = amag * (s + gi * c - gr * s);
    }
    fids.assign(n, -1.0);
    if (n > 0)
        kernels::active().noon_sweep(plan.view, mu_re.data(), mu_im.data(), fids.data(), n);
}

struct Incumbent {
    double fidelity = -std::numeric_limits<double>::infinity();
    double theta = 0.0; // canonical
    double gamma = 0.0;

    // deterministic under ties: smallest theta, then smallest gamma
    void offer(double f, double theta_raw, double g) {
        if (f < 0.0) return; // degenerate point
        const double t = canonical_angle(theta_raw);
        if (f > fidelity || (f == fidelity && (t < theta || (t == theta && g < gamma)))) {
            fidelity = f;
            theta = t;
            gamma = g;
        }
    }
};

std::vector<double> linspace_inclusive(double lo, double hi, int count) {
    std::vector<double> v(count);
    if (count == 1) {
        v[0] = lo;
        return v;
    }
    const double step = (hi - lo) / (count - 1);
    for (int i = 0; i < count; ++i) v[i] = lo + step * i;
    return v;
}

} // namespace

std::vector<std::pair<double, double>> fidelity_vs_theta(const SweepSpec& spec, double gamma,
                                                         const BeamSplitter& bs) {
    if (spec.theta_points < 1) throw domain_error("fidelity_vs_theta: empty theta grid");
    if (!(gamma >= 0.0) || !std::isfinite(gamma))
        throw domain_error("fidelity_vs_theta: gamma must be >= 0");
    const SweepPlan plan = build_plan(spec.n_total, spec.r, spec.phi, bs);
    const double amag = PairAmplitudeRatio(gamma, spec.regime).alpha_mag(spec.r);

    std::vector<double> thetas(spec.theta_points);
    for (int i = 0; i < spec.theta_points; ++i)
        thetas[i] = kTwoPi * i / spec.theta_points;
    std::vector<double> fids;
    eval_thetas(plan, amag, thetas, fids);

    std::vector<std::pair<double, double>> curve(thetas.size());
    for (std::size_t i = 0; i < thetas.size(); ++i) curve[i] = {thetas[i], fids[i]};
    return curve;
}

Optimum optimize_gamma_theta(double r, int n_total, Regime regime,
                             std::pair<double, double> gamma_bounds, const BeamSplitter& bs,
                             const OptimizerConfig& config, double phi) {
    const auto [g_lo, g_hi] = gamma_bounds;
    if (!std::isfinite(g_lo) || !std::isfinite(g_hi) || g_lo > g_hi || g_lo < 0.0)
        throw domain_error("optimize_gamma_theta: invalid gamma bounds");
    if (config.theta_points < 2 || config.gamma_points < 1 || config.rounds < 0)
        throw domain_error("optimize_gamma_theta: invalid grid config");
    if (g_hi > g_lo && config.gamma_points < 2)
        throw domain_error("optimize_gamma_theta: a gamma interval needs gamma_points >= 2");

    const SweepPlan plan = build_plan(n_total, r, phi, bs);
    auto amag_of = [&](double gamma) {
        return PairAmplitudeRatio(gamma, regime).alpha_mag(r);
    };

    Incumbent best;
    std::vector<double> fids;

    auto sweep_grid = [&](const std::vector<double>& gammas, const std::vector<double>& thetas) {
        for (double g : gammas) {
            eval_thetas(plan, amag_of(g), thetas, fids);
            for (std::size_t i = 0; i < thetas.size(); ++i) best.offer(fids[i], thetas[i], g);
        }
    };

    // coarse pass: theta periodic-exclusive, gamma inclusive of both bounds
    std::vector<double> thetas(config.theta_points);
    for (int i = 0; i < config.theta_points; ++i)
        thetas[i] = kTwoPi * i / config.theta_points;
    const bool gamma_fixed = g_hi == g_lo;
    std::vector<double> gammas = gamma_fixed
                                     ? std::vector<double>{g_lo}
                                     : linspace_inclusive(g_lo, g_hi, config.gamma_points);
    sweep_grid(gammas, thetas);
    if (!std::isfinite(best.fidelity))
        throw degenerate_input_error("optimize_gamma_theta: every grid point is degenerate");

    double theta_spacing = kTwoPi / config.theta_points;
    double gamma_spacing = gamma_fixed ? 0.0 : (g_hi - g_lo) / (config.gamma_points - 1);

    auto refine_rounds = [&](bool refine_gamma) {
        double t_step = theta_spacing;
        double g_step = gamma_spacing;
        for (int round = 0; round < config.rounds; ++round) {
            const double prev = best.fidelity;
            const std::vector<double> t_grid = linspace_inclusive(
                best.theta - 2.0 * t_step, best.theta + 2.0 * t_step, config.theta_points);
            std::vector<double> g_grid;
            if (refine_gamma && g_step > 0.0)
                g_grid = linspace_inclusive(std::max(g_lo, best.gamma - 2.0 * g_step),
                                            std::min(g_hi, best.gamma + 2.0 * g_step),
                                            config.gamma_points);
            else
                g_grid = {best.gamma};
            sweep_grid(g_grid, t_grid);
            t_step = 4.0 * t_step / (config.theta_points - 1);
            if (refine_gamma && g_step > 0.0 && config.gamma_points > 1)
                g_step = 4.0 * g_step / (config.gamma_points - 1);
            if (best.fidelity - prev < config.tolerance) break;
        }
    };
    refine_rounds(true);

    // final theta curve at gamma*; also guards the curve-max invariant when
    // the gamma refinement moved off the coarse gamma grid
    SweepSpec curve_spec;
    curve_spec.r = r;
    curve_spec.n_total = n_total;
    curve_spec.regime = regime;
    curve_spec.theta_points = config.theta_points;
    curve_spec.phi = phi;
    std::vector<std::pair<double, double>> curve =
        fidelity_vs_theta(curve_spec, best.gamma, bs);
    bool curve_beat_incumbent = false;
    for (const auto& [theta, fid] : curve)
        if (fid > best.fidelity) curve_beat_incumbent = true;
    if (curve_beat_incumbent) {
        for (const auto& [theta, fid] : curve) best.offer(fid, theta, best.gamma);
        refine_rounds(false);
    }

    Optimum optimum;
    optimum.gamma_star = best.gamma;
    optimum.theta_star = best.theta;
    optimum.fidelity_star = best.fidelity;
    optimum.curve = std::move(curve);

    auto pos = std::lower_bound(optimum.curve.begin(), optimum.curve.end(), best.theta,
                                [](const auto& pt, double t) { return pt.first < t; });
    if (pos != optimum.curve.end() && pos->first == best.theta)
        pos->second = std::max(pos->second, best.fidelity);
    else
        optimum.curve.insert(pos, {best.theta, best.fidelity});
    return optimum;
}

FluxReport flux_report(double r, double gamma, Regime regime) {
    if (!(r >= 0.0) || !(gamma >= 0.0) || !std::isfinite(r) || !std::isfinite(gamma))
        throw domain_error("flux_report: r and gamma must be finite and >= 0");
    const double sh2 = std::sinh(r) * std::sinh(r);
    const double alpha_sq = PairAmplitudeRatio(gamma, regime).alpha_mag_sq(r);
    FluxReport report;
    report.mean_pdc_pairs = sh2 * sh2;
    report.mean_photons_per_mode = sh2 + alpha_sq;
    report.coherent_pair_flux = alpha_sq * alpha_sq;
    report.gamma = gamma;
    report.regime = regime;
    return report;
}

} // namespace noon
