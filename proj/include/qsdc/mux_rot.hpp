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
#include <bit>
#include <cstdint>
#include <map>
#include <mutex>
#include <vector>

#include "qsdc/circuit.hpp"
#include "qsdc/errors.hpp"

namespace qsdc {

/// j-th value of the binary-reflected Gray code.
inline std::uint32_t gray_code(std::uint32_t j) { return j ^ (j >> 1); }

/// The +-1 matrix linking multiplexer angles to physical rotation angles:
/// M[i][j] = (-1)^<b_i, gray_j> with the bitwise inner product in the
/// exponent. Satisfies M * M^T = 2^k * I exactly.
struct MkMatrix {
    int k = 0;
    Eigen::MatrixXi entries;
};

namespace detail {

inline MkMatrix build_mk(int k) {
    const std::uint32_t n = std::uint32_t(1) << k;
    MkMatrix m;
    m.k = k;
    m.entries.resize(n, n);
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = 0; j < n; ++j) {
            m.entries(i, j) = (std::popcount(i & gray_code(j)) & 1) ? -1 : 1;
        }
    }
    return m;
}

}  // namespace detail

/// Memoized M^k lookup. Safe to call from multiple threads; the returned
/// reference stays valid for the lifetime of the program.
inline const MkMatrix& mk_matrix(int k) {
    if (k < 1 || k > 16) {
        throw KTooLargeError("mk_matrix supports 1 <= k <= 16, got " + std::to_string(k));
    }
    static std::mutex mutex;
    static std::map<int, MkMatrix> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(k);
    if (it == cache.end()) {
        it = cache.emplace(k, detail::build_mk(k)).first;
    }
    return it->second;
}

/// Control-bit positions of the CNOTs in the Gray-code expansion: entry i is
/// the bit differing between gray(i) and gray(i+1), with the final entry
/// wrapping around to gray(0).
inline std::vector<int> gray_control_sequence(int k) {
    if (k < 1) {
        throw KTooLargeError("gray_control_sequence needs k >= 1");
    }
    const std::uint32_t n = std::uint32_t(1) << k;
    std::vector<int> seq(n);
    for (std::uint32_t i = 0; i + 1 < n; ++i) {
        seq[i] = std::countr_zero(gray_code(i) ^ gray_code(i + 1));
    }
    seq[n - 1] = std::countr_zero(gray_code(n - 1) ^ gray_code(0));
    return seq;
}

/// Solve M^k theta = alpha. Because M^k (M^k)^T = 2^k I the solve is the
/// exact linear map theta = (M^k)^T alpha / 2^k; for large k the same map is
/// evaluated via a fast Walsh-Hadamard transform.
inline std::vector<double> solve_rotation_angles(const std::vector<double>& alphas) {
    const std::size_t n = alphas.size();
    if (n == 0 || (n & (n - 1)) != 0) {
        throw BadLengthError("angle count " + std::to_string(n) +
                             " is not a power of two");
    }
    if (n == 1) {
        return alphas;
    }
    int k = 0;
    for (std::size_t d = n; d > 1; d >>= 1) ++k;

    if (k < 10) {
        const MkMatrix& m = mk_matrix(k);
        std::vector<double> theta(n, 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            double acc = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                acc += m.entries(Eigen::Index(i), Eigen::Index(j)) * alphas[i];
            }
            theta[j] = acc / double(n);
        }
        return theta;
    }

    // theta_j = WHT(alpha)[gray(j)] / 2^k
    std::vector<double> wht = alphas;
    for (std::size_t h = 1; h < n; h <<= 1) {
        for (std::size_t i = 0; i < n; i += h << 1) {
            for (std::size_t j = i; j < i + h; ++j) {
                const double x = wht[j], y = wht[j + h];
                wht[j] = x + y;
                wht[j + h] = x - y;
            }
        }
    }
    std::vector<double> theta(n);
    for (std::size_t j = 0; j < n; ++j) {
        theta[j] = wht[gray_code(std::uint32_t(j))] / double(n);
    }
    return theta;
}

enum class RotationAxis { Y, Z };

/// A multiplexed rotation F^k(R_a): a rotation about one axis on the target
/// whose angle alphas[j] is selected by the classical value j of the control
/// qubits (controls[0] is the least significant bit of j).
struct MuxRotation {
    RotationAxis axis = RotationAxis::Z;
    int target = 0;
    std::vector<int> controls;
    std::vector<double> alphas;
};

/// Expand a multiplexed rotation into the alternating rotation/CNOT sequence:
/// 2^k rotations on the target interleaved with 2^k CNOTs whose controls
/// follow the Gray-code sequence.
inline Circuit expand_multiplexed_rotation(const MuxRotation& m) {
    const std::size_t n = m.alphas.size();
    if (n == 0 || (n & (n - 1)) != 0 || n != (std::size_t(1) << m.controls.size())) {
        throw BadLengthError("multiplexed rotation needs 2^k angles for k controls");
    }
    int max_q = m.target;
    for (int c : m.controls) {
        if (c == m.target) {
            throw QubitOutOfRangeError("control equals target in multiplexed rotation");
        }
        max_q = std::max(max_q, c);
    }
    Circuit c(max_q + 1);

    const auto theta = solve_rotation_angles(m.alphas);
    const auto make_rot = m.axis == RotationAxis::Y ? Gate::ry : Gate::rz;
    if (m.controls.empty()) {
        c.add(make_rot(m.target, theta[0]));
        return c;
    }
    const auto controls = gray_control_sequence(int(m.controls.size()));
    for (std::size_t i = 0; i < n; ++i) {
        c.add(make_rot(m.target, theta[i]));
        c.add(Gate::cnot(m.controls[std::size_t(controls[i])], m.target));
    }
    return c;
}

}  // namespace qsdc
