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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "qsdc/matrix.hpp"

namespace qsdc {

/// Cosine-sine decomposition of a unitary U into
///   [r0 0; 0 r1] * [C -S; S C] * [l0 0; 0 l1]
/// with C = diag(cos theta_i), S = diag(sin theta_i), theta in [0, pi/2]
/// sorted descending. The corner factors are unitary but not unique.
struct CsdResult {
    Matrix l0, l1, r0, r1;
    std::vector<double> thetas;
};

namespace detail {

// Removes the components of v along the first n_fixed columns of basis.
// Two projection passes keep the result orthogonal to working precision
// even when v is left with a tiny norm.
inline void orthogonalize_against(Vector& v, const Matrix& basis,
                                  Eigen::Index n_fixed) {
    if (n_fixed == 0) {
        return;
    }
    const auto fixed = basis.leftCols(n_fixed);
    for (int pass = 0; pass < 2; ++pass) {
        v.noalias() -= fixed * (fixed.adjoint() * v).eval();
    }
}

struct CsdWithResidual {
    CsdResult result;
    double residual = 0.0;
};

// Construction: SVD u00 = r0 C l0 with singular values ascending (thetas
// descending); r1 columns from u10 l0^dag via modified Gram-Schmidt in
// descending-norm order, completing zero columns to an orthonormal basis;
// l1 rows from whichever of r1^dag u11 (scale cos) or -r0^dag u01 (scale
// sin) has the better-conditioned divisor, at least one of which is
// >= sqrt(2)/2 per index.
inline CsdWithResidual csd_core(const Matrix& u) {
    const Eigen::Index p = u.rows() / 2;
    const Matrix u00 = u.topLeftCorner(p, p);
    const Matrix u01 = u.topRightCorner(p, p);
    const Matrix u10 = u.bottomLeftCorner(p, p);
    const Matrix u11 = u.bottomRightCorner(p, p);

    Eigen::BDCSVD<Matrix> svd(u00, Eigen::ComputeFullU | Eigen::ComputeFullV);

    CsdResult res;
    // Eigen sorts singular values descending; reverse for ascending cosines.
    res.r0 = svd.matrixU().rowwise().reverse();
    res.l0 = svd.matrixV().rowwise().reverse().adjoint();
    Eigen::VectorXd c = svd.singularValues().reverse();
    for (Eigen::Index i = 0; i < p; ++i) {
        c(i) = std::min(c(i), 1.0);
    }

    const Matrix q = u10 * res.l0.adjoint();  // columns scale with sin(theta_i)
    Eigen::VectorXd s = Eigen::VectorXd::Zero(p);

    std::vector<Eigen::Index> order(static_cast<std::size_t>(p));
    std::iota(order.begin(), order.end(), Eigen::Index(0));
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
        return q.col(a).norm() > q.col(b).norm();
    });

    // Columns are orthogonalized against a contiguous basis block and then
    // scattered into their final slots.
    Matrix basis(p, p);
    Eigen::Index n_fixed = 0;
    std::vector<Eigen::Index> slot_of(static_cast<std::size_t>(p));
    std::vector<Eigen::Index> pending;
    for (Eigen::Index i : order) {
        Vector v = q.col(i);
        orthogonalize_against(v, basis, n_fixed);
        const double nv = v.norm();
        if (nv > 1e-12) {
            s(i) = nv;
            slot_of[std::size_t(n_fixed)] = i;
            basis.col(n_fixed++) = v / nv;
        } else {
            pending.push_back(i);
        }
    }
    // Complete rank-deficient columns (sin ~ 0) to an orthonormal basis.
    for (Eigen::Index i : pending) {
        for (Eigen::Index e = 0; e < p; ++e) {
            Vector v = Vector::Zero(p);
            v(e) = 1.0;
            orthogonalize_against(v, basis, n_fixed);
            const double nv = v.norm();
            if (nv > 0.5) {
                slot_of[std::size_t(n_fixed)] = i;
                basis.col(n_fixed++) = v / nv;
                break;
            }
        }
    }
    res.r1.resize(p, p);
    for (Eigen::Index j = 0; j < p; ++j) {
        res.r1.col(slot_of[std::size_t(j)]) = basis.col(j);
    }

    res.thetas.resize(std::size_t(p));
    for (Eigen::Index i = 0; i < p; ++i) {
        res.thetas[std::size_t(i)] = std::atan2(s(i), c(i));
    }

    const Matrix from_u11 = res.r1.adjoint() * u11;   // rows scale with cos
    const Matrix from_u01 = -(res.r0.adjoint() * u01);  // rows scale with sin
    // Rows of l1 are built as columns of l1^adj so the same contiguous
    // orthogonalization applies.
    Matrix l1_adj(p, p);
    for (Eigen::Index i = 0; i < p; ++i) {
        Vector v = (c(i) >= s(i) ? from_u11.row(i) : from_u01.row(i)).adjoint();
        orthogonalize_against(v, l1_adj, i);
        l1_adj.col(i) = v / v.norm();
    }
    res.l1 = l1_adj.adjoint();

    // Reassemble and measure the residual.
    Matrix rebuilt(2 * p, 2 * p);
    Vector cd(p), sd(p);
    for (Eigen::Index i = 0; i < p; ++i) {
        cd(i) = std::cos(res.thetas[std::size_t(i)]);
        sd(i) = std::sin(res.thetas[std::size_t(i)]);
    }
    rebuilt.topLeftCorner(p, p) = res.r0 * cd.asDiagonal() * res.l0;
    rebuilt.topRightCorner(p, p) = res.r0 * (-sd).asDiagonal() * res.l1;
    rebuilt.bottomLeftCorner(p, p) = res.r1 * sd.asDiagonal() * res.l0;
    rebuilt.bottomRightCorner(p, p) = res.r1 * cd.asDiagonal() * res.l1;

    return CsdWithResidual{std::move(res), max_abs(rebuilt - u)};
}

}  // namespace detail

/// CSD of an even-dimensional unitary. Deterministic for a given input;
/// throws NumericalFailureError if the reassembled factors miss the input
/// by more than the tolerance.
inline CsdResult cosine_sine_decompose(const Matrix& u,
                                       double tol = kDefaultTolerance) {
    if (u.rows() != u.cols()) {
        throw WrongDimensionError("cosine_sine_decompose expects a square matrix");
    }
    if (u.rows() % 2 != 0) {
        throw OddDimensionError("cosine_sine_decompose expects an even dimension");
    }
    if (!is_unitary(u, tol)) {
        throw NotUnitaryError("cosine_sine_decompose input is not unitary");
    }
    auto out = detail::csd_core(u);
    if (out.residual > std::max(tol, kDefaultTolerance)) {
        throw NumericalFailureError("CSD reassembly residual " +
                                    std::to_string(out.residual) + " exceeds tolerance");
    }
    return std::move(out.result);
}

}  // namespace qsdc
