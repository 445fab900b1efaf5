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
#include <string>
#include <vector>

#include "qsdc/errors.hpp"

namespace qsdc {

enum class GateKind { Rz, Ry, Cnot };

/// One elementary gate: an Rz/Ry rotation on a target qubit, or a CNOT.
struct Gate {
    GateKind kind = GateKind::Rz;
    int target = 0;
    double angle = 0.0;  // rotations only
    int control = -1;    // CNOT only

    static Gate rz(int qubit, double angle) { return {GateKind::Rz, qubit, angle, -1}; }
    static Gate ry(int qubit, double angle) { return {GateKind::Ry, qubit, angle, -1}; }
    static Gate cnot(int control, int target) {
        return {GateKind::Cnot, target, 0.0, control};
    }

    bool is_rotation() const { return kind != GateKind::Cnot; }
};

/// An ordered gate sequence over n qubits. The circuit's matrix is the
/// product of the gate embeddings in reverse order (last gate leftmost).
struct Circuit {
    int n_qubits = 1;
    std::string name = "kernel";
    std::vector<Gate> gates;

    Circuit() = default;
    Circuit(int n, std::string kernel_name = "kernel")
        : n_qubits(n), name(std::move(kernel_name)) {
        if (n < 1) {
            throw WrongDimensionError("circuit needs at least one qubit");
        }
    }

    void add(const Gate& g) {
        if (g.target < 0 || g.target >= n_qubits) {
            throw QubitOutOfRangeError("gate target " + std::to_string(g.target) +
                                       " out of range for " + std::to_string(n_qubits) +
                                       " qubits");
        }
        if (g.kind == GateKind::Cnot) {
            if (g.control < 0 || g.control >= n_qubits) {
                throw QubitOutOfRangeError("cnot control " + std::to_string(g.control) +
                                           " out of range");
            }
            if (g.control == g.target) {
                throw QubitOutOfRangeError("cnot control equals target");
            }
        } else if (!std::isfinite(g.angle)) {
            throw Error("rotation angle is not finite");
        }
        gates.push_back(g);
    }
};

struct GateCounts {
    std::int64_t total = 0;
    std::int64_t rotations = 0;
    std::int64_t cnots = 0;

    bool operator==(const GateCounts&) const = default;
};

inline GateCounts gate_counts(const Circuit& c) {
    GateCounts counts;
    for (const Gate& g : c.gates) {
        (g.is_rotation() ? counts.rotations : counts.cnots)++;
    }
    counts.total = counts.rotations + counts.cnots;
    return counts;
}

/// Closed-form gate counts of an unoptimized n-qubit decomposition:
/// total 9/4*4^n - 3*2^n, rotations 3/2*4^n - 3/2*2^n, CNOTs 3/4*4^n - 3/2*2^n.
inline GateCounts predicted_counts(int n) {
    if (n < 1) {
        throw WrongDimensionError("predicted_counts needs n >= 1");
    }
    const std::int64_t p4 = std::int64_t(1) << (2 * n);
    const std::int64_t p2 = std::int64_t(1) << n;
    GateCounts counts;
    counts.rotations = 3 * (p4 - p2) / 2;
    counts.cnots = 3 * p4 / 4 - 3 * p2 / 2;
    counts.total = counts.rotations + counts.cnots;
    return counts;
}

}  // namespace qsdc
