// Copyright 2026 The qsdc developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "qsdc/demux.hpp"
#include "qsdc/verifier.hpp"
#include "test_data.hpp"

using namespace qsdc;

namespace {

double rebuild_residual(const DemuxResult& r, const Matrix& u0, const Matrix& u1) {
    const Matrix d = r.d.asDiagonal();
    return std::max(max_abs(r.v * d * r.w - u0),
                    max_abs(r.v * d.adjoint() * r.w - u1));
}

}  // namespace

TEST_CASE("demultiplexing a degenerate multiplexer") {
    const Matrix a = random_unitary(2, 8);
    const auto r = demultiplex(a, a);
    for (Eigen::Index i = 0; i < r.d.size(); ++i) {
        CHECK(std::abs(r.d(i) - Complex(1.0, 0.0)) <= 1e-12);
    }
    CHECK(max_abs(r.v * r.w - a) <= 1e-12);
}

TEST_CASE("demultiplexing the reference multiplexer blocks") {
    const auto r = demultiplex(testdata::reference_l0(), testdata::reference_l1(), 1e-2);
    REQUIRE(r.d.size() == 2);
    CHECK(rebuild_residual(r, testdata::reference_l0(), testdata::reference_l1()) <=
          1e-2);

    // The printed diagonal matches as a multiset up to conjugation.
    const std::vector<Complex> printed = {Complex(0.682, 0.731), Complex(0.067, -0.998)};
    for (const Complex& want : printed) {
        bool found = false;
        for (Eigen::Index i = 0; i < r.d.size(); ++i) {
            found = found || std::abs(r.d(i) - want) <= 2e-3 ||
                    std::abs(std::conj(r.d(i)) - want) <= 2e-3;
        }
        CHECK(found);
    }
}

TEST_CASE("demultiplexing 200 random pairs, dims 2 to 32") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + int(rng() % 5);
        const Matrix u0 = random_unitary(n, 4000 + std::uint64_t(trial));
        const Matrix u1 = random_unitary(n, 5000 + std::uint64_t(trial));
        const auto r = demultiplex(u0, u1);
        CHECK(rebuild_residual(r, u0, u1) <= 1e-9);
        for (Eigen::Index i = 0; i < r.d.size(); ++i) {
            CHECK(std::abs(std::abs(r.d(i)) - 1.0) <= 1e-10);
        }
        // eigendecomposition consistency
        const Matrix x = u0 * u1.adjoint();
        const Matrix d2 = (r.d.array() * r.d.array()).matrix().asDiagonal();
        CHECK(max_abs(r.v * d2 * r.v.adjoint() - x) <= 1e-9);
        // the square-root branch keeps arguments in (-pi/2, pi/2]
        for (Eigen::Index i = 0; i < r.d.size(); ++i) {
            const double arg = std::arg(r.d(i));
            CHECK(arg > -M_PI / 2 - 1e-12);
            CHECK(arg <= M_PI / 2 + 1e-12);
        }
    }
}

TEST_CASE("demultiplex input validation") {
    const Matrix a = random_unitary(1, 1);
    Matrix shear(2, 2);
    shear << 1, 1, 0, 1;
    CHECK_THROWS_AS(demultiplex(a, shear), NotUnitaryError);
    CHECK_THROWS_AS(demultiplex(a, random_unitary(2, 2)), DimensionMismatchError);
}

TEST_CASE("demultiplex is deterministic") {
    const Matrix u0 = random_unitary(2, 21), u1 = random_unitary(2, 22);
    const auto a = demultiplex(u0, u1);
    const auto b = demultiplex(u0, u1);
    CHECK(max_abs(a.v - b.v) == 0.0);
    CHECK(max_abs(a.w - b.w) == 0.0);
    CHECK((a.d - b.d).cwiseAbs().maxCoeff() == 0.0);
}
