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
#include <set>
#include <string>
#include <vector>

#include "qsdc/circuit.hpp"
#include "qsdc/mux_rot.hpp"
#include "qsdc/plan.hpp"

namespace qsdc {

namespace detail {

class PlanWalker {
public:
    PlanWalker(const DecompositionPlan& plan, Circuit& circuit)
        : plan_(plan), circuit_(circuit) {}

    // window holds the physical qubit indices of the current block,
    // least significant first.
    void block(const std::vector<int>& window) {
        if (window.size() == 1) {
            const auto* z = std::get_if<ZyzStep>(&next("zyz step"));
            if (z == nullptr) {
                throw MalformedPlanError("expected a zyz step for a 1-qubit block");
            }
            // Matrix Rz(a) Ry(b) Rz(g) corresponds to gamma first in time.
            circuit_.add(Gate::rz(window[0], z->angles.gamma));
            circuit_.add(Gate::ry(window[0], z->angles.beta));
            circuit_.add(Gate::rz(window[0], z->angles.alpha));
            return;
        }

        const PlanStep& head = peek("block step");
        if (const auto* skip = std::get_if<SkipQubitStep>(&head)) {
            ++pos_;
            block(shrink(window, skip->position));
            return;
        }
        if (std::holds_alternative<MultiplexerShortcutStep>(head)) {
            ++pos_;
            const auto lower = shrink(window, QubitEnd::Msb);
            block(lower);
            mux_rz(window);
            block(lower);
            return;
        }

        const auto lower = shrink(window, QubitEnd::Msb);
        block(lower);
        mux_rz(window);
        block(lower);
        mux_ry(window);
        block(lower);
        mux_rz(window);
        block(lower);
    }

    bool done() const { return pos_ == plan_.steps.size(); }

private:
    const PlanStep& peek(const char* what) {
        if (pos_ >= plan_.steps.size()) {
            throw MalformedPlanError(std::string("plan ended early, expected ") + what);
        }
        return plan_.steps[pos_];
    }

    const PlanStep& next(const char* what) {
        const PlanStep& s = peek(what);
        ++pos_;
        return s;
    }

    static std::vector<int> shrink(const std::vector<int>& window, QubitEnd end) {
        if (end == QubitEnd::Msb) {
            return {window.begin(), window.end() - 1};
        }
        return {window.begin() + 1, window.end()};
    }

    void mux_rz(const std::vector<int>& window) {
        const auto* step = std::get_if<MuxRzStep>(&next("multiplexed rz"));
        if (step == nullptr) {
            throw MalformedPlanError("expected a multiplexed-rz step");
        }
        expand(RotationAxis::Z, step->alphas, window);
    }

    void mux_ry(const std::vector<int>& window) {
        const auto* step = std::get_if<MuxRyStep>(&next("multiplexed ry"));
        if (step == nullptr) {
            throw MalformedPlanError("expected a multiplexed-ry step");
        }
        expand(RotationAxis::Y, step->alphas, window);
    }

    void expand(RotationAxis axis, const std::vector<double>& alphas,
                const std::vector<int>& window) {
        if (alphas.size() != (std::size_t(1) << (window.size() - 1))) {
            throw MalformedPlanError("multiplexed rotation has wrong angle count");
        }
        MuxRotation m;
        m.axis = axis;
        m.target = window.back();
        m.controls.assign(window.begin(), window.end() - 1);
        m.alphas = alphas;
        for (const Gate& g : expand_multiplexed_rotation(m).gates) {
            circuit_.add(g);
        }
    }

    const DecompositionPlan& plan_;
    Circuit& circuit_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Replay a decomposition plan onto concrete qubits: plan position j maps to
/// qubits[j], least significant first. The gate order is a deterministic
/// function of the plan.
inline Circuit synthesize(const DecompositionPlan& plan, const std::vector<int>& qubits,
                          const std::string& name = "kernel") {
    if (plan.n_qubits < 1 || plan.steps.empty()) {
        throw MalformedPlanError("plan is empty");
    }
    if (int(qubits.size()) != plan.n_qubits) {
        throw WrongQubitCountError("plan spans " + std::to_string(plan.n_qubits) +
                                   " qubits but " + std::to_string(qubits.size()) +
                                   " were given");
    }
    if (std::set<int>(qubits.begin(), qubits.end()).size() != qubits.size()) {
        throw WrongQubitCountError("qubit indices must be distinct");
    }
    const int max_q = *std::max_element(qubits.begin(), qubits.end());
    const int min_q = *std::min_element(qubits.begin(), qubits.end());
    if (min_q < 0) {
        throw QubitOutOfRangeError("negative qubit index");
    }

    Circuit circuit(max_q + 1, name);
    detail::PlanWalker walker(plan, circuit);
    walker.block(qubits);
    if (!walker.done()) {
        throw MalformedPlanError("plan has trailing steps");
    }
    return circuit;
}

}  // namespace qsdc
