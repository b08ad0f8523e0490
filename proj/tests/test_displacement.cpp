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
#include <complex>

#include "noon/displacement.hpp"

#include "test_support.hpp"

using noon::cplx;
using noon::displacement_matrix;
using noon::displacement_matrix_element;

TEST_CASE("D(0) is the identity") {
    for (int m = 0; m < 6; ++m)
        for (int k = 0; k < 6; ++k) {
            const cplx v = displacement_matrix_element(cplx(0.0, 0.0), m, k);
            CHECK(v == cplx(m == k ? 1.0 : 0.0, 0.0));
        }
}

TEST_CASE("vacuum-to-vacuum amplitude is exp(-|alpha|^2/2)") {
    const cplx alpha(0.7, -0.4);
    const cplx v = displacement_matrix_element(alpha, 0, 0);
    CHECK(v.real() == doctest::Approx(std::exp(-0.5 * std::norm(alpha))).epsilon(1e-14));
    CHECK(v.imag() == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("column from vacuum is the coherent-state amplitude") {
    const cplx alpha(0.9, 0.35);
    for (int m = 0; m < 8; ++m) {
        cplx expected = std::exp(-0.5 * std::norm(alpha));
        for (int j = 1; j <= m; ++j) expected *= alpha / std::sqrt(static_cast<double>(j));
        const cplx got = displacement_matrix_element(alpha, m, 0);
        CHECK(std::abs(got - expected) < 1e-13);
    }
}

TEST_CASE("matrix element against the matrix-exponential oracle") {
    // expm of alpha a+ - conj(alpha) a on a cutoff-60 space
    const int dim = 61;
    const cplx alpha(1.0, 0.0);
    noon::test::DenseMatrix gen(dim);
    const noon::test::DenseMatrix a = noon::test::annihilation(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            gen.at(i, j) = alpha * std::conj(a.at(j, i)) - std::conj(alpha) * a.at(i, j);
    const noon::test::DenseMatrix d = noon::test::expm(gen);

    CHECK(std::abs(displacement_matrix_element(alpha, 2, 1) - d.at(2, 1)) < 1e-10);
    for (int m = 0; m < 12; ++m)
        for (int k = 0; k < 12; ++k)
            CHECK(std::abs(displacement_matrix_element(alpha, m, k) - d.at(m, k)) < 1e-10);
}

TEST_CASE("element and table construction agree on a complex displacement") {
    const cplx alpha(0.8, -1.1);
    const auto table = displacement_matrix(alpha, 24);
    for (int m = 0; m <= 24; ++m)
        for (int k = 0; k <= 24; ++k)
            CHECK(std::abs(table.at(m, k) - displacement_matrix_element(alpha, m, k)) < 1e-11);
}

TEST_CASE("columns are normalized when summed to convergence") {
    const cplx alpha(1.2, 0.5);
    const auto table = displacement_matrix(alpha, 60);
    for (int k : {0, 1, 5, 11}) {
        double total = 0.0;
        for (int m = 0; m <= 60; ++m) total += std::norm(table.at(m, k));
        CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("unitarity of single elements summed over the row index") {
    const cplx alpha(0.6, 0.9);
    for (int k : {0, 3, 7}) {
        double total = 0.0;
        for (int m = 0; m < 70; ++m) total += std::norm(displacement_matrix_element(alpha, m, k));
        CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("invalid inputs are rejected") {
    CHECK_THROWS_AS(displacement_matrix_element(cplx(1.0, 0.0), -1, 0), noon::domain_error);
    CHECK_THROWS_AS(displacement_matrix(cplx(std::nan(""), 0.0), 10), noon::domain_error);
}
