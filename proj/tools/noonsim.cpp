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

// noonsim: command-line front end. Subcommands: fidelity, sweep, signal,
// optimize, flux. Emits CSV or JSON; all angles in radians; output is
// deterministic and written atomically when a path is given.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "noon/fock.hpp"
#include "noon/harmonics.hpp"
#include "noon/interferometer.hpp"
#include "noon/optimize.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;
constexpr int kMaxN = 20; // performance / factorial-accuracy guard
constexpr double kTwoPi = 2.0 * std::numbers::pi;

enum class Format { Json, Csv };

struct OutputTarget {
    Format format = Format::Json;
    std::string path; // empty = stdout
};

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_output(const OutputTarget& target, const std::string& content) {
    if (target.path.empty()) {
        std::fwrite(content.data(), 1, content.size(), stdout);
        return;
    }
    const std::filesystem::path final_path(target.path);
    const std::filesystem::path tmp_path(target.path + ".tmp");
    {
        std::ofstream out(tmp_path, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp_path.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw std::runtime_error("short write to " + tmp_path.string());
    }
    std::filesystem::rename(tmp_path, final_path);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---- shared source options --------------------------------------------------

struct SourceOptions {
    int n = 0;
    double r = 0.0;
    double phi = 0.0;
    double theta = 0.0;
    std::optional<double> gamma;
    std::string regime_name;
    std::optional<double> alpha_mag;
    std::optional<double> beta_mag;   // escape hatch: independent second seed
    std::optional<double> beta_theta;

    noon::Regime regime() const {
        if (regime_name == "weak") return noon::Regime::Weak;
        if (regime_name == "strong") return noon::Regime::Strong;
        throw CLI::ValidationError("--regime", "must be weak or strong");
    }

    void check() const {
        if (gamma && alpha_mag)
            throw CLI::ValidationError(
                "--gamma/--alpha-mag",
                "give either --gamma with --regime or --alpha-mag, not both");
        if (!gamma && !alpha_mag)
            throw CLI::ValidationError(
                "--gamma/--alpha-mag",
                "one of --gamma (with --regime) or --alpha-mag is required");
        if (gamma && regime_name.empty())
            throw CLI::ValidationError("--regime", "--gamma needs --regime weak|strong");
        if (n < 1 || n > kMaxN)
            throw CLI::ValidationError("--n", "photon number must be in [1, 20]");
        for (double v : {r, phi, theta, gamma.value_or(0.0), alpha_mag.value_or(0.0),
                         beta_mag.value_or(0.0), beta_theta.value_or(0.0)})
            if (!std::isfinite(v)) throw CLI::ValidationError("numeric option", "must be finite");
        if ((beta_mag && !beta_theta) || (!beta_mag && beta_theta))
            throw CLI::ValidationError("--beta-mag/--beta-theta", "give both or neither");
    }

    double resolved_alpha_mag() const {
        if (alpha_mag) return *alpha_mag;
        return noon::PairAmplitudeRatio(*gamma, regime()).alpha_mag(r);
    }

    noon::SourceParams params() const {
        const double amag = resolved_alpha_mag();
        if (beta_mag)
            return noon::SourceParams(r, phi, std::polar(amag, theta),
                                      std::polar(*beta_mag, *beta_theta));
        return noon::SourceParams::symmetric(r, amag, theta, phi);
    }

    json params_json() const {
        json p;
        p["n"] = n;
        p["r"] = r;
        p["phi"] = phi;
        p["theta"] = theta;
        if (gamma) {
            p["regime"] = regime_name;
            p["gamma"] = *gamma;
        } else {
            p["regime"] = nullptr;
            p["gamma"] = nullptr;
        }
        p["alpha_mag"] = resolved_alpha_mag();
        if (beta_mag) {
            p["beta_mag"] = *beta_mag;
            p["beta_theta"] = *beta_theta;
        }
        return p;
    }

    void attach(CLI::App* cmd) {
        cmd->add_option("--n", n, "total photon number N")->required();
        cmd->add_option("--r", r, "squeeze gain r")->required();
        cmd->add_option("--phi", phi, "PDC phase (radians), default 0");
        cmd->add_option("--theta", theta, "coherent phase (radians), default 0");
        cmd->add_option("--gamma", gamma, "pair amplitude ratio (needs --regime)");
        cmd->add_option("--regime", regime_name, "weak|strong mapping for --gamma");
        cmd->add_option("--alpha-mag", alpha_mag, "coherent amplitude |alpha| directly");
        cmd->add_option("--beta-mag", beta_mag, "independent |beta0| (default: symmetric seeds)");
        cmd->add_option("--beta-theta", beta_theta, "phase of beta0 when --beta-mag is given");
    }
};

void attach_output(CLI::App* cmd, OutputTarget& target, std::string& format_name) {
    cmd->add_option("--format", format_name, "csv|json (default json)");
    cmd->add_option("--output", target.path, "output path (default stdout)");
}

Format parse_format(const std::string& name) {
    if (name.empty() || name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    throw CLI::ValidationError("--format", "must be csv or json");
}

// ---- subcommands --------------------------------------------------------------

std::string run_fidelity(const SourceOptions& src_opts, const OutputTarget& target) {
    const noon::BeamSplitter bs;
    const noon::SourceParams src = src_opts.params();
    const noon::PhotonComponent component = noon::displaced_tmsv_component(src, src_opts.n);
    const noon::FidelityResult res = noon::noon_fidelity(component, bs);

    if (target.format == Format::Csv) {
        std::string out =
            "n,r,phi,regime,gamma,alpha_mag,theta,fidelity,fixed_phase_fidelity,noon_phase\n";
        out += std::to_string(src_opts.n) + "," + fmt17(src_opts.r) + "," + fmt17(src_opts.phi) +
               "," + (src_opts.gamma ? src_opts.regime_name : "") + "," +
               (src_opts.gamma ? fmt17(*src_opts.gamma) : "") + "," +
               fmt17(src_opts.resolved_alpha_mag()) + "," + fmt17(src_opts.theta) + "," +
               fmt17(res.fidelity) + "," + fmt17(res.fixed_phase_fidelity) + "," +
               fmt17(res.noon_phase) + "\n";
        return out;
    }
    json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "fidelity";
    j["params"] = src_opts.params_json();
    j["result"] = {{"fidelity", res.fidelity},
                   {"fixed_phase_fidelity", res.fixed_phase_fidelity},
                   {"noon_phase", res.noon_phase}};
    return dump(j);
}

std::string run_sweep(int n, double r, double phi, const std::string& regime_name,
                      const std::vector<double>& gammas, int theta_points,
                      const OutputTarget& target) {
    if (n < 1 || n > kMaxN)
        throw CLI::ValidationError("--n", "photon number must be in [1, 20]");
    if (theta_points < 1 || theta_points > (1 << 20))
        throw CLI::ValidationError("--theta-points", "must be in [1, 1048576]");
    if (gammas.empty()) throw CLI::ValidationError("--gamma", "at least one gamma value");
    if (regime_name != "weak" && regime_name != "strong")
        throw CLI::ValidationError("--regime", "must be weak or strong");
    const noon::BeamSplitter bs;
    noon::SweepSpec spec;
    spec.n_total = n;
    spec.r = r;
    spec.phi = phi;
    spec.theta_points = theta_points;
    spec.regime = regime_name == "strong" ? noon::Regime::Strong : noon::Regime::Weak;

    std::vector<std::pair<double, std::vector<std::pair<double, double>>>> curves;
    for (double gamma : gammas) {
        if (!(gamma >= 0.0) || !std::isfinite(gamma))
            throw CLI::ValidationError("--gamma", "values must be finite and >= 0");
        curves.emplace_back(gamma, noon::fidelity_vs_theta(spec, gamma, bs));
    }

    if (target.format == Format::Csv) {
        std::string out = "gamma,theta,fidelity\n";
        for (const auto& [gamma, curve] : curves)
            for (const auto& [theta, fid] : curve) {
                out += fmt17(gamma) + "," + fmt17(theta) + ",";
                out += fid >= 0.0 ? fmt17(fid) : std::string(); // empty = degenerate point
                out += "\n";
            }
        return out;
    }
    json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "sweep";
    j["params"] = {{"n", n},
                   {"r", r},
                   {"phi", phi},
                   {"regime", regime_name},
                   {"theta_points", theta_points}};
    j["curves"] = json::array();
    for (const auto& [gamma, curve] : curves) {
        json jc;
        jc["gamma"] = gamma;
        jc["points"] = json::array();
        for (const auto& [theta, fid] : curve) {
            json pt;
            pt["theta"] = theta;
            if (fid >= 0.0)
                pt["fidelity"] = fid;
            else
                pt["fidelity"] = nullptr;
            jc["points"].push_back(pt);
        }
        j["curves"].push_back(jc);
    }
    return dump(j);
}

json harmonics_json(const noon::CoincidenceSignal& signal) {
    const noon::HarmonicSpectrum spectrum = noon::fringe_harmonics(signal);
    json h;
    h["coefficients"] = json::array();
    for (const auto& [k, entry] : spectrum.coefficients)
        h["coefficients"].push_back(
            {{"k", k}, {"amplitude", entry.amplitude}, {"phase", entry.phase}});
    h["dominant_ac"] = spectrum.dominant_ac;
    const double dc = spectrum.amplitude(0);
    if (dc > 0.0)
        h["visibility"] = spectrum.amplitude(spectrum.dominant_ac) / dc;
    else
        h["visibility"] = nullptr;
    return h;
}

std::string run_signal(const SourceOptions& src_opts, int upper, int lower, int psi_points,
                       bool selftest, const std::string& harmonics_out,
                       const OutputTarget& target) {
    noon::CoincidenceSignal signal;
    json params;
    if (selftest) {
        if (psi_points < 16 || psi_points > (1 << 20))
            throw CLI::ValidationError("--psi-points", "selftest needs [16, 1048576] points");
        signal.psi_samples.resize(psi_points);
        signal.probabilities.resize(psi_points);
        for (int i = 0; i < psi_points; ++i) {
            signal.psi_samples[i] = kTwoPi * i / psi_points;
            signal.probabilities[i] = 1.0 + std::cos(4.0 * signal.psi_samples[i]);
        }
        signal.relative_units = false;
        params = {{"selftest", true}, {"psi_points", psi_points}};
    } else {
        src_opts.check();
        if (upper < 0 || lower < 0 || upper + lower != src_opts.n)
            throw CLI::ValidationError("--upper/--lower", "pattern must sum to --n");
        const int min_points = std::max(8, 4 * src_opts.n);
        if (psi_points < min_points || psi_points > (1 << 20))
            throw CLI::ValidationError("--psi-points", "need at least max(8, 4N) points");
        std::vector<double> grid(psi_points);
        for (int i = 0; i < psi_points; ++i) grid[i] = kTwoPi * i / psi_points;
        const noon::BeamSplitter bs;
        signal = noon::coincidence_signal_sweep(src_opts.params(), src_opts.n,
                                                noon::DetectionPattern(upper, lower), grid, bs);
        params = src_opts.params_json();
        params["upper"] = upper;
        params["lower"] = lower;
        params["psi_points"] = psi_points;
        params["relative_units"] = true;
    }

    const json harm = harmonics_json(signal);
    if (!harmonics_out.empty()) {
        json hj;
        hj["schema_version"] = kSchemaVersion;
        hj["command"] = "signal-harmonics";
        hj["params"] = params;
        hj["harmonics"] = harm;
        write_output({Format::Json, harmonics_out}, dump(hj));
    }

    if (target.format == Format::Csv) {
        std::string out = "psi,probability\n";
        for (std::size_t i = 0; i < signal.psi_samples.size(); ++i)
            out += fmt17(signal.psi_samples[i]) + "," + fmt17(signal.probabilities[i]) + "\n";
        return out;
    }
    json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "signal";
    j["params"] = params;
    j["signal"] = json::array();
    for (std::size_t i = 0; i < signal.psi_samples.size(); ++i)
        j["signal"].push_back(
            {{"psi", signal.psi_samples[i]}, {"probability", signal.probabilities[i]}});
    j["harmonics"] = harm;
    return dump(j);
}

std::string run_optimize(int n, double r, double phi, const std::string& regime_name,
                         double gamma_min, double gamma_max, int theta_points, int gamma_points,
                         int rounds, const OutputTarget& target) {
    if (target.format == Format::Csv)
        throw CLI::ValidationError("--format", "optimize emits a JSON record only");
    if (n < 1 || n > kMaxN)
        throw CLI::ValidationError("--n", "photon number must be in [1, 20]");
    if (regime_name != "weak" && regime_name != "strong")
        throw CLI::ValidationError("--regime", "must be weak or strong");
    noon::OptimizerConfig config;
    config.theta_points = theta_points;
    config.gamma_points = gamma_points;
    config.rounds = rounds;
    const noon::BeamSplitter bs;
    const noon::Optimum opt = noon::optimize_gamma_theta(
        r, n, regime_name == "weak" ? noon::Regime::Weak : noon::Regime::Strong,
        {gamma_min, gamma_max}, bs, config, phi);

    json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "optimize";
    j["params"] = {{"n", n},
                   {"r", r},
                   {"phi", phi},
                   {"regime", regime_name},
                   {"gamma_min", gamma_min},
                   {"gamma_max", gamma_max},
                   {"theta_points", theta_points},
                   {"gamma_points", gamma_points},
                   {"rounds", rounds}};
    j["result"] = {{"gamma_star", opt.gamma_star},
                   {"theta_star", opt.theta_star},
                   {"fidelity_star", opt.fidelity_star}};
    j["curve"] = json::array();
    for (const auto& [theta, fid] : opt.curve) {
        json pt;
        pt["theta"] = theta;
        if (fid >= 0.0)
            pt["fidelity"] = fid;
        else
            pt["fidelity"] = nullptr;
        j["curve"].push_back(pt);
    }
    return dump(j);
}

std::string run_flux(double r, double gamma, const std::string& regime_name,
                     const OutputTarget& target) {
    if (target.format == Format::Csv)
        throw CLI::ValidationError("--format", "flux emits a JSON record only");
    if (regime_name != "weak" && regime_name != "strong")
        throw CLI::ValidationError("--regime", "must be weak or strong");
    const noon::FluxReport report = noon::flux_report(
        r, gamma, regime_name == "weak" ? noon::Regime::Weak : noon::Regime::Strong);
    json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "flux";
    j["params"] = {{"r", r}, {"gamma", gamma}, {"regime", regime_name}};
    j["result"] = {{"mean_pdc_pairs", report.mean_pdc_pairs},
                   {"mean_photons_per_mode", report.mean_photons_per_mode},
                   {"coherent_pair_flux", report.coherent_pair_flux}};
    return dump(j);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"NOON-state source simulator for coherent-beam-stimulated "
                 "two-mode parametric down conversion"};
    app.require_subcommand(1);

    SourceOptions fid_src;
    OutputTarget fid_out;
    std::string fid_format;
    CLI::App* fid = app.add_subcommand("fidelity", "NOON fidelity of the N-photon component");
    fid_src.attach(fid);
    attach_output(fid, fid_out, fid_format);

    int sw_n = 0, sw_points = 64;
    double sw_r = 0.0, sw_phi = 0.0;
    std::string sw_regime, sw_format;
    std::vector<double> sw_gammas;
    OutputTarget sw_out;
    CLI::App* sweep = app.add_subcommand("sweep", "fidelity vs theta curves per gamma");
    sweep->add_option("--n", sw_n, "total photon number N")->required();
    sweep->add_option("--r", sw_r, "squeeze gain r")->required();
    sweep->add_option("--phi", sw_phi, "PDC phase (radians), default 0");
    sweep->add_option("--regime", sw_regime, "weak|strong")->required();
    sweep->add_option("--gamma", sw_gammas, "comma-separated gamma list")
        ->required()
        ->delimiter(',');
    sweep->add_option("--theta-points", sw_points, "uniform theta grid size (default 64)");
    attach_output(sweep, sw_out, sw_format);

    SourceOptions sig_src;
    int sig_upper = 0, sig_lower = 0, sig_points = 256;
    bool sig_selftest = false;
    std::string sig_format, sig_harm_out;
    OutputTarget sig_out;
    CLI::App* signal = app.add_subcommand("signal", "coincidence fringe over the MZ phase");
    sig_src.attach(signal);
    signal->add_option("--upper", sig_upper, "photons at the upper exit port");
    signal->add_option("--lower", sig_lower, "photons at the lower exit port");
    signal->add_option("--psi-points", sig_points, "psi grid size over [0, 2 pi) (default 256)");
    signal->add_flag("--selftest", sig_selftest, "analyze the internal 1 + cos(4 psi) tone");
    signal->add_option("--harmonics-out", sig_harm_out,
                       "also write the harmonic summary JSON to this path");
    attach_output(signal, sig_out, sig_format);
    for (auto* opt : {signal->get_option("--n"), signal->get_option("--r")})
        opt->required(false);

    int op_n = 0, op_tp = 64, op_gp = 64, op_rounds = 4;
    double op_r = 0.0, op_phi = 0.0, op_gmin = 0.0, op_gmax = 0.0;
    std::string op_regime, op_format;
    OutputTarget op_out;
    CLI::App* optimize = app.add_subcommand("optimize", "grid optimization over (gamma, theta)");
    optimize->add_option("--n", op_n, "total photon number N")->required();
    optimize->add_option("--r", op_r, "squeeze gain r")->required();
    optimize->add_option("--phi", op_phi, "PDC phase (radians), default 0");
    optimize->add_option("--regime", op_regime, "weak|strong")->required();
    optimize->add_option("--gamma-min", op_gmin, "lower gamma bound")->required();
    optimize->add_option("--gamma-max", op_gmax, "upper gamma bound")->required();
    optimize->add_option("--theta-points", op_tp, "coarse theta grid (default 64)");
    optimize->add_option("--gamma-points", op_gp, "coarse gamma grid (default 64)");
    optimize->add_option("--rounds", op_rounds, "refinement rounds (default 4)");
    attach_output(optimize, op_out, op_format);

    double fx_r = 0.0, fx_gamma = 0.0;
    std::string fx_regime, fx_format;
    OutputTarget fx_out;
    CLI::App* flux = app.add_subcommand("flux", "photon-flux accounting");
    flux->add_option("--r", fx_r, "squeeze gain r")->required();
    flux->add_option("--gamma", fx_gamma, "pair amplitude ratio")->required();
    flux->add_option("--regime", fx_regime, "weak|strong")->required();
    attach_output(flux, fx_out, fx_format);

    try {
        app.parse(argc, argv);

        std::string content;
        OutputTarget target;
        if (fid->parsed()) {
            fid_src.check();
            target = fid_out;
            target.format = parse_format(fid_format);
            content = run_fidelity(fid_src, target);
        } else if (sweep->parsed()) {
            target = sw_out;
            target.format = parse_format(sw_format);
            content = run_sweep(sw_n, sw_r, sw_phi, sw_regime, sw_gammas, sw_points, target);
        } else if (signal->parsed()) {
            target = sig_out;
            target.format = parse_format(sig_format);
            content = run_signal(sig_src, sig_upper, sig_lower, sig_points, sig_selftest,
                                 sig_harm_out, target);
        } else if (optimize->parsed()) {
            target = op_out;
            target.format = parse_format(op_format);
            content = run_optimize(op_n, op_r, op_phi, op_regime, op_gmin, op_gmax, op_tp, op_gp,
                                   op_rounds, target);
        } else if (flux->parsed()) {
            target = fx_out;
            target.format = parse_format(fx_format);
            content = run_flux(fx_r, fx_gamma, fx_regime, target);
        }
        write_output(target, content);
        return 0;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2; // help/version exit 0; bad arguments exit 2
    } catch (const noon::accuracy_error& e) {
        std::cerr << "noonsim: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "noonsim: " << e.what() << "\n";
        return 3;
    }
}
