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

#include <Eigen/Dense>
#include <complex>

#include "qsdc/errors.hpp"

namespace qsdc {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Default tolerance for unitarity checks and residual verification.
inline constexpr double kDefaultTolerance = 1e-9;

inline double max_abs(const Matrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline bool is_power_of_two(Eigen::Index d) {
    return d >= 1 && (d & (d - 1)) == 0;
}

/// Number of qubits for a 2^n x 2^n matrix; throws if dim is not a power
/// of two or the matrix is not square.
inline int qubit_count(const Matrix& m) {
    if (m.rows() != m.cols()) {
        throw WrongDimensionError("matrix is not square");
    }
    if (m.rows() < 2 || !is_power_of_two(m.rows())) {
        throw NotPowerOfTwoError("matrix dimension " + std::to_string(m.rows()) +
                                 " is not a power of two >= 2");
    }
    int n = 0;
    for (Eigen::Index d = m.rows(); d > 1; d >>= 1) ++n;
    return n;
}

/// True iff max|M M^dag - I| <= tol. The check is symmetric in M vs M^dag.
inline bool is_unitary(const Matrix& m, double tol = kDefaultTolerance) {
    if (m.rows() != m.cols()) {
        return false;
    }
    Matrix g = m * m.adjoint();
    g.diagonal().array() -= 1.0;
    return max_abs(g) <= tol;
}

/// Kronecker product; (A kron B)[i*dimB+k, j*dimB+l] = A[i,j] * B[k,l].
inline Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

/// The four half-size blocks of a matrix, split on the most significant
/// qubit: u00 holds the rows and columns whose MSB is 0.
struct Quadrants {
    Matrix u00, u01, u10, u11;
};

inline Quadrants split_quadrants(const Matrix& m) {
    if (m.rows() != m.cols()) {
        throw WrongDimensionError("matrix is not square");
    }
    if (m.rows() % 2 != 0) {
        throw OddDimensionError("cannot split matrix of odd dimension " +
                                std::to_string(m.rows()));
    }
    const Eigen::Index p = m.rows() / 2;
    return Quadrants{m.topLeftCorner(p, p), m.topRightCorner(p, p),
                     m.bottomLeftCorner(p, p), m.bottomRightCorner(p, p)};
}

inline Matrix assemble_quadrants(const Quadrants& q) {
    const Eigen::Index p = q.u00.rows();
    Matrix out(2 * p, 2 * p);
    out.topLeftCorner(p, p) = q.u00;
    out.topRightCorner(p, p) = q.u01;
    out.bottomLeftCorner(p, p) = q.u10;
    out.bottomRightCorner(p, p) = q.u11;
    return out;
}

/// Max-abs difference between A and exp(i*phi)*B with the phase chosen from
/// arg(trace(B^dag A)). A zero trace degenerates to phi = 0, i.e. a plain
/// max-abs difference.
inline double distance_up_to_global_phase(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatchError("cannot compare matrices of different shapes");
    }
    const Complex tr = (b.adjoint() * a).trace();
    if (tr == Complex(0.0, 0.0)) {
        return max_abs(a - b);
    }
    const Complex phase = std::exp(Complex(0.0, std::arg(tr)));
    return max_abs(a - phase * b);
}

}  // namespace qsdc
