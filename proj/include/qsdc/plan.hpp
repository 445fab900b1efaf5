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

#include <cstdint>
#include <variant>
#include <vector>

#include "qsdc/zyz.hpp"

namespace qsdc {

enum class QubitEnd { Msb, Lsb };

/// Base-case 1-qubit step.
struct ZyzStep {
    ZyzAngles angles;
};

/// Multiplexed Ry on the block's most significant qubit; 2^k angles indexed
/// by the value of the k lower qubits.
struct MuxRyStep {
    std::vector<double> alphas;
};

/// Multiplexed Rz, same layout as MuxRyStep.
struct MuxRzStep {
    std::vector<double> alphas;
};

/// The block was already a multiplexer; CSD was skipped and the level
/// continues with a single demultiplexing.
struct MultiplexerShortcutStep {};

/// The block leaves one end qubit unaffected; the recursion continues on the
/// remaining qubits.
struct SkipQubitStep {
    QubitEnd position;
};

using PlanStep = std::variant<ZyzStep, MuxRyStep, MuxRzStep,
                              MultiplexerShortcutStep, SkipQubitStep>;

/// Ordered, self-describing instruction stream produced by decompose() and
/// replayed by synthesize(). Steps appear in circuit order (first-applied
/// first).
struct DecompositionPlan {
    int n_qubits = 0;
    std::vector<PlanStep> steps;
    std::uint64_t unitary_hash = 0;
};

}  // namespace qsdc
