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
#include <cstdint>
#include <map>
#include <random>

#include "qsdc/mux_rot.hpp"
#include "qsdc/verifier.hpp"
#include "qsdc/zyz.hpp"

using namespace qsdc;

namespace {

// Brute-force multiplexed-rotation matrix: R(alpha_j) applied to the MSB
// target for control value j on the lower k qubits. Built directly from the
// block-diagonal definition, independently of the Gray-code expansion.
Matrix mux_reference_matrix(RotationAxis axis, const std::vector<double>& alphas) {
    const Eigen::Index blocks = Eigen::Index(alphas.size());
    const Eigen::Index dim = 2 * blocks;
    Matrix m = Matrix::Zero(dim, dim);
    for (Eigen::Index j = 0; j < blocks; ++j) {
        const Matrix r = axis == RotationAxis::Y ? gate_matrix_ry(alphas[std::size_t(j)])
                                                 : gate_matrix_rz(alphas[std::size_t(j)]);
        for (Eigen::Index bo = 0; bo < 2; ++bo) {
            for (Eigen::Index bi = 0; bi < 2; ++bi) {
                m(bo * blocks + j, bi * blocks + j) = r(bo, bi);
            }
        }
    }
    return m;
}

std::vector<double> random_angles(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-M_PI, M_PI);
    std::vector<double> out(count);
    for (auto& a : out) {
        a = dist(rng);
    }
    return out;
}

}  // namespace

TEST_CASE("mk matrix values") {
    const auto& m1 = mk_matrix(1);
    CHECK(m1.entries(0, 0) == 1);
    CHECK(m1.entries(0, 1) == 1);
    CHECK(m1.entries(1, 0) == 1);
    CHECK(m1.entries(1, 1) == -1);

    const auto& m2 = mk_matrix(2);
    Eigen::MatrixXi expect(4, 4);
    expect << 1, 1, 1, 1,
              1, -1, -1, 1,
              1, 1, -1, -1,
              1, -1, 1, -1;
    CHECK(m2.entries == expect);
}

TEST_CASE("mk orthogonality is exact in integer arithmetic") {
    for (int k = 1; k <= 8; ++k) {
        const auto& m = mk_matrix(k);
        const Eigen::MatrixXi prod = m.entries * m.entries.transpose();
        const Eigen::MatrixXi expect =
            Eigen::MatrixXi::Identity(1 << k, 1 << k) * (1 << k);
        CHECK(prod == expect);
    }
}

TEST_CASE("mk cache returns the same object") {
    const auto* a = &mk_matrix(3);
    const auto* b = &mk_matrix(3);
    CHECK(a == b);
    CHECK_THROWS_AS(mk_matrix(0), KTooLargeError);
    CHECK_THROWS_AS(mk_matrix(17), KTooLargeError);
}

TEST_CASE("gray control sequence") {
    CHECK(gray_control_sequence(1) == std::vector<int>{0, 0});
    CHECK(gray_control_sequence(2) == std::vector<int>{0, 1, 0, 1});
    CHECK(gray_control_sequence(3) == std::vector<int>{0, 1, 0, 2, 0, 1, 0, 2});

    for (int k = 1; k <= 6; ++k) {
        const auto seq = gray_control_sequence(k);
        REQUIRE(seq.size() == std::size_t(1) << k);
        std::map<int, int> uses;
        for (int c : seq) {
            uses[c]++;
        }
        // nearest control appears 2^(k-1) times (k=1 uses its only control
        // twice); every count is a power of two
        CHECK(uses[0] == (k == 1 ? 2 : 1 << (k - 1)));
        for (const auto& [bit, count] : uses) {
            CHECK((count & (count - 1)) == 0);
        }
    }
}

TEST_CASE("solve_rotation_angles") {
    SECTION("uniform multiplexer degenerates to a plain rotation") {
        const auto theta = solve_rotation_angles({0.83, 0.83});
        CHECK(theta[0] == Catch::Approx(0.83).margin(1e-15));
        CHECK(theta[1] == Catch::Approx(0.0).margin(1e-15));
    }
    SECTION("reference k=1 angles") {
        const auto theta = solve_rotation_angles({-1.5738, -0.7666});
        CHECK(theta[0] == Catch::Approx(-1.1702).margin(1e-12));
        CHECK(theta[1] == Catch::Approx(-0.4036).margin(1e-12));
    }
    SECTION("round trip against the dense matrix, k=3") {
        const auto alphas = random_angles(8, 77);
        const auto theta = solve_rotation_angles(alphas);
        const auto& m = mk_matrix(3);
        for (int i = 0; i < 8; ++i) {
            double acc = 0;
            for (int j = 0; j < 8; ++j) {
                acc += m.entries(i, j) * theta[std::size_t(j)];
            }
            CHECK(acc == Catch::Approx(alphas[std::size_t(i)]).margin(1e-12));
        }
    }
    SECTION("fast transform path agrees with the dense solve at k=10") {
        const auto alphas = random_angles(1024, 78);
        const auto fast = solve_rotation_angles(alphas);
        const auto& m = mk_matrix(10);
        for (int j = 0; j < 1024; j += 37) {
            double acc = 0;
            for (int i = 0; i < 1024; ++i) {
                acc += m.entries(i, j) * alphas[std::size_t(i)];
            }
            CHECK(fast[std::size_t(j)] == Catch::Approx(acc / 1024.0).margin(1e-12));
        }
    }
    SECTION("length must be a power of two") {
        CHECK_THROWS_AS(solve_rotation_angles({1.0, 2.0, 3.0}), BadLengthError);
        CHECK_THROWS_AS(solve_rotation_angles({}), BadLengthError);
    }
}

TEST_CASE("expansion with no controls is a single rotation") {
    MuxRotation m;
    m.axis = RotationAxis::Y;
    m.target = 2;
    m.alphas = {0.4};
    const Circuit c = expand_multiplexed_rotation(m);
    REQUIRE(c.gates.size() == 1);
    CHECK(c.gates[0].kind == GateKind::Ry);
    CHECK(c.gates[0].target == 2);
    CHECK(c.gates[0].angle == 0.4);
}

TEST_CASE("k=1 Z expansion layout") {
    MuxRotation m;
    m.axis = RotationAxis::Z;
    m.target = 1;
    m.controls = {0};
    m.alphas = {0.9, 0.3};
    const Circuit c = expand_multiplexed_rotation(m);
    REQUIRE(c.gates.size() == 4);
    CHECK(c.gates[0].kind == GateKind::Rz);
    CHECK(c.gates[0].angle == Catch::Approx(0.6).margin(1e-15));
    CHECK(c.gates[1].kind == GateKind::Cnot);
    CHECK(c.gates[1].control == 0);
    CHECK(c.gates[1].target == 1);
    CHECK(c.gates[2].angle == Catch::Approx(0.3).margin(1e-15));
    CHECK(c.gates[3].kind == GateKind::Cnot);

    const Matrix want = mux_reference_matrix(RotationAxis::Z, m.alphas);
    CHECK(distance_up_to_global_phase(circuit_to_matrix(c), want) <= 1e-12);
}

TEST_CASE("expanded circuits match the block-diagonal definition, k=1..5") {
    for (int k = 1; k <= 5; ++k) {
        for (RotationAxis axis : {RotationAxis::Y, RotationAxis::Z}) {
            MuxRotation m;
            m.axis = axis;
            m.target = k;  // MSB of a (k+1)-qubit block
            for (int c = 0; c < k; ++c) {
                m.controls.push_back(c);
            }
            m.alphas = random_angles(std::size_t(1) << k,
                                     std::uint64_t(100 * k + int(axis)));
            const Circuit c = expand_multiplexed_rotation(m);

            const auto counts = gate_counts(c);
            CHECK(counts.rotations == 1 << k);
            CHECK(counts.cnots == 1 << k);

            const Matrix want = mux_reference_matrix(axis, m.alphas);
            CHECK(distance_up_to_global_phase(circuit_to_matrix(c), want) <= 1e-10);
        }
    }
}

TEST_CASE("expansion validates its inputs") {
    MuxRotation m;
    m.axis = RotationAxis::Z;
    m.target = 0;
    m.controls = {0};
    m.alphas = {0.1, 0.2};
    CHECK_THROWS_AS(expand_multiplexed_rotation(m), QubitOutOfRangeError);
    m.controls = {1};
    m.alphas = {0.1, 0.2, 0.3};
    CHECK_THROWS_AS(expand_multiplexed_rotation(m), BadLengthError);
}
