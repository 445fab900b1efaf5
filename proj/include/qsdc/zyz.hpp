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

#pragma once

#include <cmath>

#include "qsdc/matrix.hpp"

namespace qsdc {

/// Euler angles of a 1-qubit unitary: U = exp(-i*phase) Rz(alpha) Ry(beta) Rz(gamma).
struct ZyzAngles {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double phase = 0.0;
};

/// Rz(theta) = [[exp(-i theta/2), 0], [0, exp(i theta/2)]].
inline Matrix gate_matrix_rz(double theta) {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = std::exp(Complex(0.0, -theta / 2));
    m(1, 1) = std::exp(Complex(0.0, theta / 2));
    return m;
}

/// Ry(theta) = [[cos(theta/2), sin(theta/2)], [-sin(theta/2), cos(theta/2)]].
inline Matrix gate_matrix_ry(double theta) {
    const double c = std::cos(theta / 2), s = std::sin(theta / 2);
    Matrix m(2, 2);
    m << c, s, -s, c;
    return m;
}

inline Matrix zyz_reconstruct(const ZyzAngles& z) {
    return std::exp(Complex(0.0, -z.phase)) *
           (gate_matrix_rz(z.alpha) * gate_matrix_ry(z.beta) * gate_matrix_rz(z.gamma))
               .eval();
}

namespace detail {

// Angle extraction without the unitarity pre-check; used by the recursion,
// which validates its input once up front.
inline ZyzAngles zyz_angles_of(const Matrix& u) {
    // Pull the global phase out via the principal square root of det(U),
    // bringing the remainder into SU(2).
    const Complex det = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
    const Complex root = std::sqrt(det);
    const Matrix v = (root == Complex(0.0, 0.0)) ? u : (u / root).eval();

    ZyzAngles z;
    z.phase = -std::arg(root);
    z.beta = 2.0 * std::atan2(std::abs(v(1, 0)), std::abs(v(0, 0)));

    // When beta is 0 or pi one of alpha/gamma is free: pin gamma = 0.
    constexpr double kBranchEps = 1e-11;
    if (z.beta < kBranchEps) {
        z.alpha = -2.0 * std::arg(v(0, 0));
        z.gamma = 0.0;
    } else if (z.beta > M_PI - kBranchEps) {
        z.alpha = -2.0 * std::arg(v(0, 1));
        z.gamma = 0.0;
    } else {
        const double p = -std::arg(v(0, 0));
        const double m = -std::arg(v(0, 1));
        z.alpha = p + m;
        z.gamma = p - m;
    }
    return z;
}

}  // namespace detail

/// ZYZ decomposition of a 1-qubit unitary. Deterministic; beta lands in
/// [0, pi] under the canonical branch.
inline ZyzAngles zyz_decompose(const Matrix& u, double tol = kDefaultTolerance) {
    if (u.rows() != 2 || u.cols() != 2) {
        throw WrongDimensionError("zyz_decompose expects a 2x2 matrix");
    }
    if (!is_unitary(u, tol)) {
        throw NotUnitaryError("zyz_decompose input is not unitary");
    }
    return detail::zyz_angles_of(u);
}

}  // namespace qsdc
