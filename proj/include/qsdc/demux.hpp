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
#include <cmath>

#include "qsdc/matrix.hpp"

namespace qsdc {

/// Factors of a quantum multiplexer diag(U0, U1) = (I x V) diag(D, D^dag) (I x W):
/// V D W = U0 and V D^dag W = U1, with D = diag(d) of unit-modulus values.
struct DemuxResult {
    Matrix v, w;
    Vector d;
};

namespace detail {

struct DemuxWithResidual {
    DemuxResult result;
    double residual = 0.0;
};

// X = u0 u1^dag is unitary, hence normal, so its Schur form is diagonal and
// doubles as the eigendecomposition with an always-orthonormal basis.
inline DemuxWithResidual demux_core(const Matrix& u0, const Matrix& u1) {
    const Matrix x = u0 * u1.adjoint();
    Eigen::ComplexSchur<Matrix> schur(x);

    DemuxResult res;
    res.v = schur.matrixU();
    res.d.resize(x.rows());
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        // Principal square root: halved argument lands in (-pi/2, pi/2].
        Complex r = std::sqrt(schur.matrixT()(i, i));
        const double mod = std::abs(r);
        res.d(i) = mod == 0.0 ? Complex(1.0, 0.0) : r / mod;
    }
    res.w = res.d.conjugate().asDiagonal() * res.v.adjoint() * u0;

    const Matrix d_diag = res.d.asDiagonal();
    const double residual =
        std::max(max_abs(res.v * d_diag * res.w - u0),
                 max_abs(res.v * d_diag.adjoint() * res.w - u1));
    return DemuxWithResidual{std::move(res), residual};
}

}  // namespace detail

/// Demultiplex diag(u0, u1) via eigendecomposition of u0 u1^dag. Throws
/// NumericalFailureError when the factors fail to reconstruct the blocks.
inline DemuxResult demultiplex(const Matrix& u0, const Matrix& u1,
                               double tol = kDefaultTolerance) {
    if (u0.rows() != u0.cols() || u1.rows() != u1.cols() || u0.rows() != u1.rows()) {
        throw DimensionMismatchError("demultiplex expects two square matrices of equal size");
    }
    if (!is_unitary(u0, tol) || !is_unitary(u1, tol)) {
        throw NotUnitaryError("demultiplex inputs are not unitary");
    }
    auto out = detail::demux_core(u0, u1);
    if (out.residual > std::max(tol, kDefaultTolerance)) {
        throw NumericalFailureError("demultiplex residual " +
                                    std::to_string(out.residual) + " exceeds tolerance");
    }
    return std::move(out.result);
}

}  // namespace qsdc
