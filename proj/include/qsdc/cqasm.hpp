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

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "qsdc/circuit.hpp"

namespace qsdc {

namespace detail {

// Fixed six decimals; "-0.000000" is normalized to "0.000000".
inline std::string format_angle(double a) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", a);
    std::string s(buf);
    if (s == "-0.000000") {
        s = "0.000000";
    }
    return s;
}

}  // namespace detail

/// Serialize a circuit to cQASM v1.0 text. The gate dialect is exactly
/// rz/ry/cnot; rotation angles are printed with six digits after the
/// decimal point.
inline std::string emit_cqasm(const Circuit& c) {
    std::ostringstream out;
    out << "version 1.0\n";
    out << "# generated by qsdc\n";
    out << "qubits " << c.n_qubits << "\n";
    out << "\n";
    out << "." << c.name << "\n";
    for (const Gate& g : c.gates) {
        switch (g.kind) {
            case GateKind::Rz:
                out << "    rz q[" << g.target << "], " << detail::format_angle(g.angle)
                    << "\n";
                break;
            case GateKind::Ry:
                out << "    ry q[" << g.target << "], " << detail::format_angle(g.angle)
                    << "\n";
                break;
            case GateKind::Cnot:
                out << "    cnot q[" << g.control << "],q[" << g.target << "]\n";
                break;
        }
    }
    return out.str();
}

namespace detail {

inline std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) {
        return "";
    }
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

inline int parse_qubit_ref(const std::string& tok, int line) {
    if (tok.size() < 4 || tok.compare(0, 2, "q[") != 0 || tok.back() != ']') {
        throw QasmSyntaxError(line, "expected qubit reference, got '" + tok + "'");
    }
    const std::string digits = tok.substr(2, tok.size() - 3);
    if (digits.empty() ||
        digits.find_first_not_of("0123456789") != std::string::npos) {
        throw QasmSyntaxError(line, "bad qubit index in '" + tok + "'");
    }
    return std::stoi(digits);
}

// Splits "q[0],q[1]" or "q[0], -1.25" into comma-separated operands.
inline std::vector<std::string> split_operands(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(trim(cur));
    return out;
}

}  // namespace detail

/// Parse the cQASM dialect produced by emit_cqasm. The parse is the left
/// inverse of emit up to the 6-decimal angle quantization; gates outside
/// {rz, ry, cnot} are rejected.
inline Circuit parse_cqasm(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    bool saw_version = false;
    bool saw_qubits = false;
    bool saw_kernel = false;
    Circuit c;

    while (std::getline(in, raw)) {
        ++lineno;
        const std::string line = detail::trim(raw);
        if (line.empty() || line[0] == '#') {
            continue;
        }

        std::istringstream ls(line);
        std::string head;
        ls >> head;

        if (!saw_version) {
            if (head != "version") {
                throw QasmSyntaxError(lineno, "expected version header");
            }
            std::string ver;
            ls >> ver;
            if (ver != "1.0") {
                throw QasmSyntaxError(lineno, "unsupported cQASM version '" + ver + "'");
            }
            saw_version = true;
            continue;
        }
        if (head == "qubits") {
            if (saw_qubits) {
                throw QasmSyntaxError(lineno, "duplicate qubits declaration");
            }
            int n = 0;
            if (!(ls >> n) || n < 1) {
                throw QasmSyntaxError(lineno, "bad qubit count");
            }
            c.n_qubits = n;
            saw_qubits = true;
            continue;
        }
        if (head[0] == '.') {
            if (!saw_qubits) {
                throw QasmSyntaxError(lineno, "kernel before qubits declaration");
            }
            if (saw_kernel) {
                throw QasmSyntaxError(lineno, "multiple kernels are not supported");
            }
            c.name = head.substr(1);
            if (c.name.empty()) {
                throw QasmSyntaxError(lineno, "empty kernel name");
            }
            saw_kernel = true;
            continue;
        }

        // Gate line.
        if (!saw_qubits) {
            throw QasmSyntaxError(lineno, "gate before qubits declaration");
        }
        std::string rest;
        std::getline(ls, rest);
        const auto ops = detail::split_operands(detail::trim(rest));
        try {
            if (head == "rz" || head == "ry") {
                if (ops.size() != 2 || ops[0].empty() || ops[1].empty()) {
                    throw QasmSyntaxError(lineno, "rotation expects a qubit and an angle");
                }
                const int q = detail::parse_qubit_ref(ops[0], lineno);
                std::size_t used = 0;
                double angle = 0.0;
                try {
                    angle = std::stod(ops[1], &used);
                } catch (const std::exception&) {
                    throw QasmSyntaxError(lineno, "bad angle '" + ops[1] + "'");
                }
                if (used != ops[1].size()) {
                    throw QasmSyntaxError(lineno, "bad angle '" + ops[1] + "'");
                }
                c.add(head == "rz" ? Gate::rz(q, angle) : Gate::ry(q, angle));
            } else if (head == "cnot") {
                if (ops.size() != 2 || ops[0].empty() || ops[1].empty()) {
                    throw QasmSyntaxError(lineno, "cnot expects two qubits");
                }
                const int ctl = detail::parse_qubit_ref(ops[0], lineno);
                const int tgt = detail::parse_qubit_ref(ops[1], lineno);
                c.add(Gate::cnot(ctl, tgt));
            } else {
                throw UnsupportedGateError(head);
            }
        } catch (const QubitOutOfRangeError&) {
            throw QubitOutOfRangeError("qubit index out of range on line " +
                                       std::to_string(lineno));
        }
    }

    if (!saw_version || !saw_qubits) {
        throw QasmSyntaxError(lineno, "missing version or qubits declaration");
    }
    return c;
}

}  // namespace qsdc
