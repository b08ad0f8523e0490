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

#include <atomic>
#include <cmath>
#include <complex>
#include <thread>
#include <vector>

#include "noon/beam_splitter.hpp"

#include "test_support.hpp"

using noon::BeamSplitter;
using noon::bs_transform;
using noon::bs_transform_inverse;
using noon::cplx;
using noon::PhotonComponent;

namespace {

PhotonComponent basis_state(int n_total, int m) {
    std::vector<cplx> amps(n_total + 1, cplx(0.0, 0.0));
    amps[m] = 1.0;
    return PhotonComponent(n_total, std::move(amps), true);
}

PhotonComponent random_component(int n_total) {
    std::vector<cplx> amps(n_total + 1);
    for (cplx& a : amps) a = cplx(noon::test::uniform(-1.0, 1.0), noon::test::uniform(-1.0, 1.0));
    return PhotonComponent(n_total, std::move(amps), false);
}

} // namespace

TEST_CASE("cached matrices are unitary") {
    BeamSplitter bs;
    for (int n : {0, 1, 2, 5, 10}) {
        const auto& mat = bs.matrix(n);
        for (int c1 = 0; c1 <= n; ++c1)
            for (int c2 = 0; c2 <= n; ++c2) {
                cplx dot = 0.0;
                for (int j = 0; j <= n; ++j) dot += std::conj(mat.at(j, c1)) * mat.at(j, c2);
                const cplx expected(c1 == c2 ? 1.0 : 0.0, 0.0);
                CHECK(std::abs(dot - expected) < 1e-12);
            }
    }
}

TEST_CASE("single photon splits as |1,0> -> (|1,0> + i|0,1>)/sqrt(2)") {
    BeamSplitter bs;
    const auto out = bs_transform(basis_state(1, 1), bs);
    const double invrt2 = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(out.amplitudes[1] - cplx(invrt2, 0.0)) < 1e-14);
    CHECK(std::abs(out.amplitudes[0] - cplx(0.0, invrt2)) < 1e-14);
}

TEST_CASE("Hong-Ou-Mandel: |1,1> bunches with no |1,1> output") {
    BeamSplitter bs;
    const auto out = bs_transform(basis_state(2, 1), bs);
    CHECK(std::abs(out.amplitudes[1]) < 1e-14);
    CHECK(std::norm(out.amplitudes[0]) == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(std::norm(out.amplitudes[2]) == doctest::Approx(0.5).epsilon(1e-13));
    // under this convention the pair exits as i(|2,0> + |0,2>)/sqrt(2)
    CHECK(std::abs(out.amplitudes[2] - out.amplitudes[0]) < 1e-14);
}

TEST_CASE("|2,2> splits with the 3/8, 1/4, 3/8 de Broglie pattern") {
    BeamSplitter bs;
    const auto out = bs_transform(basis_state(4, 2), bs);
    CHECK(std::norm(out.amplitudes[4]) == doctest::Approx(3.0 / 8.0).epsilon(1e-13));
    CHECK(std::norm(out.amplitudes[0]) == doctest::Approx(3.0 / 8.0).epsilon(1e-13));
    CHECK(std::norm(out.amplitudes[2]) == doctest::Approx(1.0 / 4.0).epsilon(1e-13));
    CHECK(std::abs(out.amplitudes[1]) < 1e-14);
    CHECK(std::abs(out.amplitudes[3]) < 1e-14);
}

TEST_CASE("norm preservation and inverse recovery on random components") {
    BeamSplitter bs;
    for (int n : {1, 3, 6, 10}) {
        const PhotonComponent input = random_component(n);
        const PhotonComponent out = bs_transform(input, bs);
        CHECK(out.weight == doctest::Approx(input.weight).epsilon(1e-12));
        const PhotonComponent back = bs_transform_inverse(out, bs);
        for (int m = 0; m <= n; ++m)
            CHECK(std::abs(back.amplitudes[m] - input.amplitudes[m]) < 1e-12);
    }
}

TEST_CASE("matrix cache bounds") {
    BeamSplitter bs;
    CHECK_THROWS_AS(bs.matrix(-1), noon::domain_error);
    CHECK_THROWS_AS(bs.matrix(100000), noon::domain_error);
}

TEST_CASE("matrix cache is safe under concurrent use") {
    BeamSplitter bs;
    std::vector<std::thread> workers;
    std::atomic<int> mismatches{0};
    for (int t = 0; t < 4; ++t)
        workers.emplace_back([&bs, &mismatches] {
            for (int rep = 0; rep < 50; ++rep)
                for (int n : {1, 2, 3, 5, 8}) {
                    const auto out = bs_transform(basis_state(n, n / 2), bs);
                    double w = 0.0;
                    for (const auto& c : out.amplitudes) w += std::norm(c);
                    if (std::abs(w - 1.0) > 1e-12) ++mismatches;
                }
        });
    for (auto& w : workers) w.join();
    CHECK(mismatches == 0);
}
