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

#include "qsdc/verifier.hpp"
#include "qsdc/zyz.hpp"
#include "test_data.hpp"

using namespace qsdc;

TEST_CASE("rotation gate matrices match their closed forms") {
    CHECK(max_abs(gate_matrix_rz(0) - Matrix::Identity(2, 2)) == 0.0);
    CHECK(max_abs(gate_matrix_ry(0) - Matrix::Identity(2, 2)) == 0.0);

    Matrix rz_pi(2, 2);
    rz_pi << Complex(0, -1), 0, 0, Complex(0, 1);
    CHECK(max_abs(gate_matrix_rz(M_PI) - rz_pi) <= 1e-15);

    CHECK(max_abs(gate_matrix_rz(2 * M_PI) + Matrix::Identity(2, 2)) <= 1e-15);

    Matrix ry_pi(2, 2);
    ry_pi << 0, 1, -1, 0;
    CHECK(max_abs(gate_matrix_ry(M_PI) - ry_pi) <= 1e-15);

    const double h = std::sqrt(2.0) / 2;
    Matrix ry_half(2, 2);
    ry_half << h, h, -h, h;
    CHECK(max_abs(gate_matrix_ry(M_PI / 2) - ry_half) <= 1e-15);
}

TEST_CASE("rotations compose additively") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> dist(-6.0, 6.0);
    for (int i = 0; i < 50; ++i) {
        const double a = dist(rng), b = dist(rng);
        CHECK(max_abs(gate_matrix_rz(a) * gate_matrix_rz(b) - gate_matrix_rz(a + b)) <=
              1e-12);
        CHECK(max_abs(gate_matrix_ry(a) * gate_matrix_ry(b) - gate_matrix_ry(a + b)) <=
              1e-12);
    }
}

TEST_CASE("zyz of identity and of a pure Ry") {
    const auto zi = zyz_decompose(Matrix::Identity(2, 2));
    CHECK(zi.alpha == 0.0);
    CHECK(zi.beta == 0.0);
    CHECK(zi.gamma == 0.0);
    CHECK(zi.phase == 0.0);

    const auto zr = zyz_decompose(gate_matrix_ry(0.7));
    CHECK(zr.alpha == Catch::Approx(0.0).margin(1e-14));
    CHECK(zr.beta == Catch::Approx(0.7).margin(1e-14));
    CHECK(zr.gamma == 0.0);
    CHECK(zr.phase == Catch::Approx(0.0).margin(1e-14));
}

TEST_CASE("zyz of Rz keeps beta zero and folds the angle into alpha") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    for (int i = 0; i < 25; ++i) {
        const double theta = dist(rng);
        const auto z = zyz_decompose(gate_matrix_rz(theta));
        CHECK(z.beta == 0.0);
        CHECK(z.gamma == 0.0);
        const double folded = std::remainder(z.alpha + z.gamma - theta, 4 * M_PI);
        // the phase term absorbs a possible 2pi ambiguity from the root branch
        CHECK((std::abs(folded) <= 1e-12 ||
               std::abs(std::abs(folded) - 2 * M_PI) <= 1e-12));
        CHECK(max_abs(zyz_reconstruct(z) - gate_matrix_rz(theta)) <= 1e-12);
    }
}

TEST_CASE("zyz reconstructs 1000 Haar-random 1-qubit unitaries") {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const Matrix u = random_unitary(1, seed);
        const auto z = zyz_decompose(u);
        CHECK(z.beta >= 0.0);
        CHECK(z.beta <= M_PI);
        CHECK(distance_up_to_global_phase(zyz_reconstruct(z), u) <= 1e-10);
        CHECK(max_abs(zyz_reconstruct(z) - u) <= 1e-10);
    }
}

TEST_CASE("zyz of the reference W factor") {
    const Matrix w = testdata::reference_w();
    const auto z = zyz_decompose(w, 1e-2);
    // Canonical branch pins beta into [0, pi]; the reference generator's
    // printed -0.848687 corresponds to pi - beta under its own conventions.
    CHECK(z.beta == Catch::Approx(2.292204).margin(1e-4));
    // Input is printed to 3 decimals, so reconstruction is limited by that.
    CHECK(max_abs(zyz_reconstruct(z) - w) <= 1e-2);
}

TEST_CASE("zyz input validation") {
    Matrix shear(2, 2);
    shear << 1, 1, 0, 1;
    CHECK_THROWS_AS(zyz_decompose(shear), NotUnitaryError);
    CHECK_THROWS_AS(zyz_decompose(Matrix::Identity(4, 4)), WrongDimensionError);
}

TEST_CASE("zyz is deterministic") {
    const Matrix u = random_unitary(1, 99);
    const auto a = zyz_decompose(u);
    const auto b = zyz_decompose(u);
    CHECK(a.alpha == b.alpha);
    CHECK(a.beta == b.beta);
    CHECK(a.gamma == b.gamma);
    CHECK(a.phase == b.phase);
}
