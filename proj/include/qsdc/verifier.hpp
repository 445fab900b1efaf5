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
#include <cstdint>
#include <random>

#include "qsdc/circuit.hpp"
#include "qsdc/matrix.hpp"

namespace qsdc {

/// Dense-reconstruction guard: a 2^12 matrix is the largest we materialize.
inline constexpr int kMaxVerifierQubits = 12;

namespace detail {

// Left-multiplies m in place by the embedding of a rotation on qubit t.
inline void apply_rotation_rows(Matrix& m, GateKind kind, int t, double angle) {
    const Eigen::Index dim = m.rows();
    const Eigen::Index bit = Eigen::Index(1) << t;
    if (kind == GateKind::Rz) {
        const Complex lo = std::exp(Complex(0.0, -angle / 2));
        const Complex hi = std::exp(Complex(0.0, angle / 2));
        for (Eigen::Index r = 0; r < dim; ++r) {
            m.row(r) *= (r & bit) ? hi : lo;
        }
        return;
    }
    const double c = std::cos(angle / 2), s = std::sin(angle / 2);
    for (Eigen::Index r0 = 0; r0 < dim; ++r0) {
        if (r0 & bit) {
            continue;
        }
        const Eigen::Index r1 = r0 | bit;
        for (Eigen::Index col = 0; col < dim; ++col) {
            const Complex a = m(r0, col), b = m(r1, col);
            m(r0, col) = c * a + s * b;
            m(r1, col) = -s * a + c * b;
        }
    }
}

inline void apply_cnot_rows(Matrix& m, int control, int target) {
    const Eigen::Index dim = m.rows();
    const Eigen::Index cbit = Eigen::Index(1) << control;
    const Eigen::Index tbit = Eigen::Index(1) << target;
    for (Eigen::Index r = 0; r < dim; ++r) {
        if ((r & cbit) && !(r & tbit)) {
            m.row(r).swap(m.row(r | tbit));
        }
    }
}

}  // namespace detail

/// The full 2^n matrix of a circuit: the product of the per-gate embeddings,
/// applied in gate order (so the last gate is the leftmost factor).
inline Matrix circuit_to_matrix(const Circuit& c) {
    if (c.n_qubits > kMaxVerifierQubits) {
        throw TooManyQubitsError("dense reconstruction supports at most " +
                                 std::to_string(kMaxVerifierQubits) + " qubits");
    }
    const Eigen::Index dim = Eigen::Index(1) << c.n_qubits;
    Matrix m = Matrix::Identity(dim, dim);
    for (const Gate& g : c.gates) {
        if (g.kind == GateKind::Cnot) {
            detail::apply_cnot_rows(m, g.control, g.target);
        } else {
            detail::apply_rotation_rows(m, g.kind, g.target, g.angle);
        }
    }
    return m;
}

struct VerificationReport {
    int n_qubits = 0;
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

/// Compare a circuit's reconstructed matrix against a target unitary up to
/// global phase.
inline VerificationReport verify(const Circuit& c, const Matrix& u,
                                 double tol = 1e-8) {
    if ((Eigen::Index(1) << c.n_qubits) != u.rows() || u.rows() != u.cols()) {
        throw DimensionMismatchError("circuit and matrix dimensions do not match");
    }
    VerificationReport report;
    report.n_qubits = c.n_qubits;
    report.tolerance = tol;
    report.residual = distance_up_to_global_phase(circuit_to_matrix(c), u);
    report.passed = report.residual <= tol;
    return report;
}

/// Haar-distributed random n-qubit unitary: QR of a complex Gaussian matrix
/// with R's diagonal phases divided out. Deterministic per seed.
inline Matrix random_unitary(int n, std::uint64_t seed) {
    if (n < 1 || n > kMaxVerifierQubits) {
        throw TooManyQubitsError("random_unitary supports 1 <= n <= " +
                                 std::to_string(kMaxVerifierQubits));
    }
    const Eigen::Index dim = Eigen::Index(1) << n;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    Matrix a(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            a(i, j) = Complex(re, im);
        }
    }
    Eigen::HouseholderQR<Matrix> qr(a);
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < dim; ++j) {
        const Complex d = r(j, j);
        const double mod = std::abs(d);
        q.col(j) *= mod == 0.0 ? Complex(1.0, 0.0) : d / mod;
    }
    return q;
}

}  // namespace qsdc
