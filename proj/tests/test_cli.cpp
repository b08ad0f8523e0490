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
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "noon/fock.hpp"
#include "noon/optimize.hpp"

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run(const std::string& args) {
    const std::string cmd = std::string(NOONSIM_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult res;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) res.out.append(buf, got);
    res.exit_code = WEXITSTATUS(pclose(pipe));
    return res;
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

} // namespace

TEST_CASE("fidelity json output matches the library pipeline") {
    const auto res = run("fidelity --n 4 --r 0.1 --gamma 2.26 --regime weak --theta 0");
    REQUIRE(res.exit_code == 0);
    const auto j = nlohmann::json::parse(res.out);
    CHECK(j.at("schema_version") == 1);
    CHECK(j.at("command") == "fidelity");

    const noon::BeamSplitter bs;
    const auto src = noon::SourceParams::symmetric(0.1, std::sqrt(0.226), 0.0);
    const auto expected = noon::noon_fidelity(noon::displaced_tmsv_component(src, 4), bs);
    CHECK(j.at("result").at("fidelity").get<double>() ==
          doctest::Approx(expected.fidelity).epsilon(1e-15));
    CHECK(j.at("params").at("alpha_mag").get<double>() ==
          doctest::Approx(std::sqrt(0.226)).epsilon(1e-15));
}

TEST_CASE("fidelity csv has the documented header and round-trips at 17 digits") {
    const auto res = run("fidelity --n 2 --r 0.3 --alpha-mag 0.7 --theta 1.25 --format csv");
    REQUIRE(res.exit_code == 0);
    const auto rows = lines(res.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == "n,r,phi,regime,gamma,alpha_mag,theta,fidelity,fixed_phase_fidelity,noon_phase");

    // parse the fidelity column back and compare bit-exactly with the library
    std::vector<std::string> fields;
    std::istringstream in(rows[1]);
    std::string f;
    while (std::getline(in, f, ',')) fields.push_back(f);
    REQUIRE(fields.size() == 10);
    CHECK(fields[3].empty()); // no regime when --alpha-mag is given
    CHECK(fields[4].empty());
    const noon::BeamSplitter bs;
    const auto src = noon::SourceParams::symmetric(0.3, 0.7, 1.25);
    const auto expected = noon::noon_fidelity(noon::displaced_tmsv_component(src, 2), bs);
    CHECK(std::stod(fields[7]) == expected.fidelity); // %.17g round-trips exactly
}

TEST_CASE("bad arguments exit 2 with no stdout payload") {
    CHECK(run("fidelity --n 4 --r 0.1 --gamma 1 --regime weak --alpha-mag 0.5").exit_code == 2);
    CHECK(run("fidelity --n 4 --r 0.1").exit_code == 2);               // neither gamma nor alpha
    CHECK(run("fidelity --n 4 --r 0.1 --gamma 1").exit_code == 2);     // gamma without regime
    CHECK(run("fidelity --n 40 --r 0.1 --gamma 1 --regime weak").exit_code == 2); // N > 20
    CHECK(run("fidelity --n 4 --r 0.1 --gamma 1 --regime tepid").exit_code == 2);
    CHECK(run("optimize --n 4 --r 0.1 --regime weak --gamma-min 0 --gamma-max 1 --format csv")
              .exit_code == 2);
    CHECK(run("nonsense").exit_code == 2);
}

TEST_CASE("domain failures exit 3") {
    // vacuum source: the N-photon component is empty
    CHECK(run("fidelity --n 3 --r 0 --alpha-mag 0").exit_code == 3);
    // odd N with gamma = 0 pinned: every optimizer grid point is degenerate
    CHECK(run("optimize --n 5 --r 0.1 --regime weak --gamma-min 0 --gamma-max 0").exit_code == 3);
}

TEST_CASE("sweep csv reproduces gamma = 0 constancy") {
    const auto res =
        run("sweep --n 4 --r 0.1 --regime weak --gamma 0 --theta-points 16 --format csv");
    REQUIRE(res.exit_code == 0);
    const auto rows = lines(res.out);
    REQUIRE(rows.size() == 17);
    CHECK(rows[0] == "gamma,theta,fidelity");
    std::string first_fid;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto pos = rows[i].rfind(',');
        const std::string fid = rows[i].substr(pos + 1);
        if (first_fid.empty()) first_fid = fid;
        CHECK(fid == first_fid);
    }
    CHECK(std::stod(first_fid) == doctest::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("signal selftest emits the exact pure-tone spectrum") {
    const auto res = run("signal --selftest --psi-points 64");
    REQUIRE(res.exit_code == 0);
    const auto j = nlohmann::json::parse(res.out);
    CHECK(j.at("harmonics").at("dominant_ac") == 4);
    CHECK(j.at("harmonics").at("visibility").get<double>() == doctest::Approx(1.0).epsilon(1e-12));
    for (const auto& entry : j.at("harmonics").at("coefficients")) {
        const int k = entry.at("k").get<int>();
        const double amp = entry.at("amplitude").get<double>();
        if (k == 0 || k == 4)
            CHECK(amp == doctest::Approx(1.0).epsilon(1e-12));
        else
            CHECK(amp < 1e-12);
    }
    CHECK(j.at("signal").size() == 64);
}

TEST_CASE("signal harmonics sidecar and csv table") {
    const auto tmp = std::filesystem::temp_directory_path() / "noonsim_harm.json";
    std::filesystem::remove(tmp);
    const auto res = run("signal --n 4 --r 0.1 --gamma 0 --regime weak --upper 2 --lower 2 "
                         "--psi-points 64 --format csv --harmonics-out " +
                         tmp.string());
    REQUIRE(res.exit_code == 0);
    const auto rows = lines(res.out);
    REQUIRE(rows.size() == 65);
    CHECK(rows[0] == "psi,probability");
    REQUIRE(std::filesystem::exists(tmp));
    std::ifstream in(tmp);
    const auto j = nlohmann::json::parse(in);
    CHECK(j.at("command") == "signal-harmonics");
    CHECK(j.at("harmonics").at("dominant_ac") == 2); // PDC-only (2,2): 12:9 ratio
    std::filesystem::remove(tmp);
}

TEST_CASE("pattern super-resolution through the CLI: PDC-only 3-1") {
    const auto res =
        run("signal --n 4 --r 0.1 --gamma 0 --regime weak --upper 3 --lower 1 --psi-points 64");
    REQUIRE(res.exit_code == 0);
    const auto j = nlohmann::json::parse(res.out);
    CHECK(j.at("harmonics").at("dominant_ac") == 4);
    CHECK(j.at("harmonics").at("visibility").get<double>() == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("optimize json record carries the curve and the optimum") {
    const auto res = run("optimize --n 2 --r 0.1 --regime weak --gamma-min 0 --gamma-max 10 "
                         "--theta-points 32 --gamma-points 16 --rounds 3");
    REQUIRE(res.exit_code == 0);
    const auto j = nlohmann::json::parse(res.out);
    CHECK(j.at("result").at("gamma_star").get<double>() == 0.0);
    CHECK(j.at("result").at("fidelity_star").get<double>() == doctest::Approx(1.0).epsilon(1e-12));
    double best = -1.0;
    for (const auto& pt : j.at("curve"))
        if (!pt.at("fidelity").is_null()) best = std::max(best, pt.at("fidelity").get<double>());
    CHECK(best == doctest::Approx(j.at("result").at("fidelity_star").get<double>()).epsilon(1e-12));
}

TEST_CASE("atomic file output: written once, no temp left behind, errors leave nothing") {
    const auto dir = std::filesystem::temp_directory_path();
    const auto target = dir / "noonsim_out.json";
    std::filesystem::remove(target);
    std::filesystem::remove(target.string() + ".tmp");

    const auto res = run("flux --r 4.5 --gamma 50 --regime strong --output " + target.string());
    REQUIRE(res.exit_code == 0);
    CHECK(res.out.empty()); // payload went to the file
    REQUIRE(std::filesystem::exists(target));
    CHECK(!std::filesystem::exists(target.string() + ".tmp"));
    std::ifstream in(target);
    const auto j = nlohmann::json::parse(in);
    CHECK(j.at("result").at("mean_pdc_pairs").get<double>() ==
          doctest::Approx(4.1017e6).epsilon(1e-3));
    std::filesystem::remove(target);

    // a failing command must not create the output file
    const auto bad = dir / "noonsim_never.json";
    std::filesystem::remove(bad);
    const auto err = run("fidelity --n 3 --r 0 --alpha-mag 0 --output " + bad.string());
    CHECK(err.exit_code == 3);
    CHECK(!std::filesystem::exists(bad));
    CHECK(!std::filesystem::exists(bad.string() + ".tmp"));
}

TEST_CASE("general-seed escape hatch changes the result") {
    const auto sym = run("fidelity --n 3 --r 0.2 --alpha-mag 0.5 --theta 0.3");
    const auto gen = run("fidelity --n 3 --r 0.2 --alpha-mag 0.5 --theta 0.3 "
                         "--beta-mag 0.4 --beta-theta 1.0");
    REQUIRE(sym.exit_code == 0);
    REQUIRE(gen.exit_code == 0);
    const double f_sym =
        nlohmann::json::parse(sym.out).at("result").at("fidelity").get<double>();
    const double f_gen =
        nlohmann::json::parse(gen.out).at("result").at("fidelity").get<double>();
    CHECK(f_sym != f_gen);
}

TEST_CASE("help exits zero") {
    CHECK(run("--help").exit_code == 0);
    CHECK(run("fidelity --help").exit_code == 0);
}
