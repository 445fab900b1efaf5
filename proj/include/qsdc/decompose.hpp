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
#include <cstring>
#include <optional>
#include <utility>

#include "qsdc/csd.hpp"
#include "qsdc/demux.hpp"
#include "qsdc/plan.hpp"

namespace qsdc {

struct DecomposeOptions {
    bool optimize = true;
    double tol = kDefaultTolerance;
    bool verify_steps = true;
};

/// The diagonal blocks of U when both off-diagonal quadrants vanish within
/// tol, i.e. when U is already a quantum multiplexer.
inline std::optional<std::pair<Matrix, Matrix>> detect_multiplexer(
    const Matrix& u, double tol = kDefaultTolerance) {
    if (u.rows() % 2 != 0) {
        throw OddDimensionError("detect_multiplexer expects an even dimension");
    }
    const Eigen::Index p = u.rows() / 2;
    if (max_abs(u.topRightCorner(p, p)) <= tol &&
        max_abs(u.bottomLeftCorner(p, p)) <= tol) {
        return std::make_pair(Matrix(u.topLeftCorner(p, p)),
                              Matrix(u.bottomRightCorner(p, p)));
    }
    return std::nullopt;
}

/// Detects U = kron(I2, A) (MSB unaffected) or U = kron(A, I2) (LSB
/// unaffected) within tol and returns the reduced matrix A.
inline std::optional<std::pair<QubitEnd, Matrix>> detect_unaffected_qubit(
    const Matrix& u, double tol = kDefaultTolerance) {
    if (u.rows() < 4) {
        throw WrongDimensionError("detect_unaffected_qubit expects dim >= 4");
    }
    const Eigen::Index p = u.rows() / 2;

    if (max_abs(u.topRightCorner(p, p)) <= tol &&
        max_abs(u.bottomLeftCorner(p, p)) <= tol &&
        max_abs(u.topLeftCorner(p, p) - u.bottomRightCorner(p, p)) <= tol) {
        return std::make_pair(QubitEnd::Msb, Matrix(u.topLeftCorner(p, p)));
    }

    const auto even = Eigen::seqN(0, p, 2);
    const auto odd = Eigen::seqN(1, p, 2);
    if (max_abs(u(even, odd)) <= tol && max_abs(u(odd, even)) <= tol &&
        max_abs(u(even, even) - u(odd, odd)) <= tol) {
        return std::make_pair(QubitEnd::Lsb, Matrix(u(even, even)));
    }
    return std::nullopt;
}

/// Multiplexed-Ry angles from CSD thetas. Under the Ry convention in use
/// ([[cos, sin], [-sin, cos]]) the central CSD factor [C -S; S C] is the
/// multiplexed rotation with alpha_i = -2 theta_i.
inline std::vector<double> ry_angles(const std::vector<double>& thetas) {
    std::vector<double> alphas(thetas.size());
    for (std::size_t i = 0; i < thetas.size(); ++i) {
        alphas[i] = -2.0 * thetas[i];
    }
    return alphas;
}

/// Multiplexed-Rz angles from the demultiplexing diagonal: alpha_i = -2 arg(d_i).
inline std::vector<double> rz_angles(const Vector& d) {
    std::vector<double> alphas(static_cast<std::size_t>(d.size()));
    for (Eigen::Index i = 0; i < d.size(); ++i) {
        // Loose misuse guard; values read back from low-precision prints
        // stay acceptable since only the argument matters.
        if (std::abs(std::abs(d(i)) - 1.0) > 1e-2) {
            throw NonUnitModulusError("rz_angles expects unit-modulus diagonal values");
        }
        alphas[std::size_t(i)] = -2.0 * std::arg(d(i));
    }
    return alphas;
}

namespace detail {

inline std::uint64_t fnv1a_matrix_hash(const Matrix& m) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](const void* data, std::size_t len) {
        const auto* bytes = static_cast<const unsigned char*>(data);
        for (std::size_t i = 0; i < len; ++i) {
            h ^= bytes[i];
            h *= 1099511628211ull;
        }
    };
    const std::uint64_t dim = std::uint64_t(m.rows());
    mix(&dim, sizeof(dim));
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            const double re = m(i, j).real(), im = m(i, j).imag();
            mix(&re, sizeof(re));
            mix(&im, sizeof(im));
        }
    }
    return h;
}

class QsdRecursion {
public:
    QsdRecursion(const DecomposeOptions& opts, std::vector<PlanStep>& steps)
        : opts_(opts), steps_(steps),
          residual_tol_(std::max(opts.tol, kDefaultTolerance)) {}

    void run(const Matrix& u, int n_qubits) { block(u, n_qubits); }

private:
    void block(const Matrix& u, int m) {
        if (m == 1) {
            steps_.push_back(ZyzStep{detail::zyz_angles_of(u)});
            return;
        }
        if (opts_.optimize) {
            if (auto skip = detect_unaffected_qubit(u, opts_.tol)) {
                steps_.push_back(SkipQubitStep{skip->first});
                block(skip->second, m - 1);
                return;
            }
            if (auto mux = detect_multiplexer(u, opts_.tol)) {
                steps_.push_back(MultiplexerShortcutStep{});
                demux_level(mux->first, mux->second, m);
                return;
            }
        }

        auto csd = csd_core(u);
        check_step(csd.residual, m, "csd");

        // Circuit order: l multiplexer, central multiplexed Ry, r multiplexer.
        demux_level(csd.result.l0, csd.result.l1, m);
        steps_.push_back(MuxRyStep{ry_angles(csd.result.thetas)});
        demux_level(csd.result.r0, csd.result.r1, m);
    }

    // diag(u0, u1) -> (I x V) MuxRz (I x W); emits W's subtree, the MuxRz,
    // then V's subtree.
    void demux_level(const Matrix& u0, const Matrix& u1, int m) {
        auto demux = demux_core(u0, u1);
        check_step(demux.residual, m, "demux");

        block(demux.result.w, m - 1);
        steps_.push_back(MuxRzStep{rz_angles(demux.result.d)});
        block(demux.result.v, m - 1);
    }

    void check_step(double residual, int level, const char* kind) const {
        if (opts_.verify_steps && residual > residual_tol_) {
            throw StepVerificationError(level, kind, residual);
        }
    }

    const DecomposeOptions& opts_;
    std::vector<PlanStep>& steps_;
    double residual_tol_;
};

}  // namespace detail

/// Quantum Shannon Decomposition of a 2^n x 2^n unitary into an instruction
/// stream of ZYZ triples and multiplexed rotations. Unitarity is checked
/// once on the input; when verify_steps is set every CSD/demultiplexing is
/// validated by multiplying its factors back together.
inline DecompositionPlan decompose(const Matrix& u,
                                   const DecomposeOptions& opts = {}) {
    if (!is_unitary(u, opts.tol)) {
        throw NotUnitaryError("decompose input is not unitary");
    }
    DecompositionPlan plan;
    plan.n_qubits = qubit_count(u);
    plan.unitary_hash = detail::fnv1a_matrix_hash(u);

    detail::QsdRecursion rec(opts, plan.steps);
    rec.run(u, plan.n_qubits);
    return plan;
}

}  // namespace qsdc
