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

#include <cctype>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qsdc/circuit.hpp"
#include "qsdc/matrix.hpp"
#include "qsdc/plan.hpp"

namespace qsdc {

namespace detail {

inline void check_matrix_entries(const Matrix& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) {
                throw ParseError("matrix entry is not finite");
            }
        }
    }
    qubit_count(m);  // enforces square, power-of-two dim
}

// "a+bi" / "a-bi" with i or j accepted; plain reals and pure imaginaries
// ("0.5", "-0.25j") also parse.
inline Complex parse_complex_token(const std::string& tok) {
    const char* s = tok.c_str();
    char* end = nullptr;
    const double first = std::strtod(s, &end);
    if (end == s) {
        throw ParseError("bad complex value '" + tok + "'");
    }
    if (*end == '\0') {
        return Complex(first, 0.0);
    }
    if ((*end == 'i' || *end == 'j') && end[1] == '\0') {
        return Complex(0.0, first);
    }
    const char* s2 = end;
    const double second = std::strtod(s2, &end);
    if (end == s2 || !(*end == 'i' || *end == 'j') || end[1] != '\0') {
        throw ParseError("bad complex value '" + tok + "'");
    }
    return Complex(first, second);
}

inline std::string format_complex_token(const Complex& z) {
    char buf[80];
    std::snprintf(buf, sizeof(buf), "%.17g%+.17gi", z.real(), z.imag());
    return buf;
}

}  // namespace detail

/// {"dim": D, "matrix": [[[re, im], ...], ...]} with row-major rows.
inline std::string write_matrix_json(const Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            row.push_back({m(i, j).real(), m(i, j).imag()});
        }
        rows.push_back(std::move(row));
    }
    nlohmann::json doc{{"dim", m.rows()}, {"matrix", std::move(rows)}};
    return doc.dump(2) + "\n";
}

inline Matrix parse_matrix_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("dim") || !doc.contains("matrix")) {
        throw ParseError("matrix JSON needs 'dim' and 'matrix' fields");
    }
    const auto dim = doc["dim"].get<Eigen::Index>();
    const auto& rows = doc["matrix"];
    if (!rows.is_array() || Eigen::Index(rows.size()) != dim) {
        throw ParseError("matrix row count does not match dim");
    }
    Matrix m(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        const auto& row = rows[std::size_t(i)];
        if (!row.is_array() || Eigen::Index(row.size()) != dim) {
            throw ParseError("matrix column count does not match dim");
        }
        for (Eigen::Index j = 0; j < dim; ++j) {
            const auto& entry = row[std::size_t(j)];
            if (!entry.is_array() || entry.size() != 2) {
                throw ParseError("matrix entries must be [re, im] pairs");
            }
            m(i, j) = Complex(entry[0].get<double>(), entry[1].get<double>());
        }
    }
    detail::check_matrix_entries(m);
    return m;
}

/// First line is the dimension, then one whitespace-separated row per line
/// with entries like "0.077+0.669i".
inline std::string write_matrix_txt(const Matrix& m) {
    std::ostringstream out;
    out << m.rows() << "\n";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            out << (j ? " " : "") << detail::format_complex_token(m(i, j));
        }
        out << "\n";
    }
    return out.str();
}

inline Matrix parse_matrix_txt(const std::string& text) {
    std::istringstream in(text);
    Eigen::Index dim = 0;
    if (!(in >> dim) || dim < 1) {
        throw ParseError("matrix text must start with a positive dimension");
    }
    Matrix m(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            std::string tok;
            if (!(in >> tok)) {
                throw ParseError("matrix text ended early");
            }
            m(i, j) = detail::parse_complex_token(tok);
        }
    }
    detail::check_matrix_entries(m);
    return m;
}

enum class MatrixFileFormat { Json, Txt };

inline MatrixFileFormat matrix_format_for_path(const std::string& path) {
    const auto dot = path.rfind('.');
    const std::string ext = dot == std::string::npos ? "" : path.substr(dot);
    return ext == ".txt" ? MatrixFileFormat::Txt : MatrixFileFormat::Json;
}

inline Matrix read_matrix_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open matrix file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();

    const auto start = text.find_first_not_of(" \t\r\n");
    if (start == std::string::npos) {
        throw ParseError("matrix file '" + path + "' is empty");
    }
    return text[start] == '{' ? parse_matrix_json(text) : parse_matrix_txt(text);
}

inline void write_matrix_file(const std::string& path, const Matrix& m,
                              MatrixFileFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot write matrix file '" + path + "'");
    }
    out << (format == MatrixFileFormat::Json ? write_matrix_json(m)
                                             : write_matrix_txt(m));
}

/// Optimization tags applied in a plan, in stream order.
inline std::vector<std::string> optimization_tags(const DecompositionPlan& plan) {
    std::vector<std::string> tags;
    for (const PlanStep& step : plan.steps) {
        if (std::holds_alternative<MultiplexerShortcutStep>(step)) {
            tags.emplace_back("multiplexer_shortcut");
        } else if (const auto* skip = std::get_if<SkipQubitStep>(&step)) {
            tags.emplace_back(skip->position == QubitEnd::Msb ? "skip_qubit_msb"
                                                              : "skip_qubit_lsb");
        }
    }
    return tags;
}

struct PhaseTimings {
    double parse = 0.0;
    double decompose = 0.0;
    double synthesize = 0.0;
    double emit = 0.0;
};

struct StatsReport {
    int n_qubits = 0;
    GateCounts counts;
    GateCounts predicted;
    std::vector<std::string> optimizations;
    std::optional<double> residual;
    PhaseTimings timings;
};

inline nlohmann::json stats_to_json(const StatsReport& stats) {
    nlohmann::json doc;
    doc["n_qubits"] = stats.n_qubits;
    doc["counts"] = {{"total", stats.counts.total},
                     {"rotations", stats.counts.rotations},
                     {"cnots", stats.counts.cnots}};
    doc["predicted"] = {{"total", stats.predicted.total},
                        {"rotations", stats.predicted.rotations},
                        {"cnots", stats.predicted.cnots}};
    doc["optimizations"] = stats.optimizations;
    if (stats.residual) {
        doc["residual"] = *stats.residual;
    } else {
        doc["residual"] = nullptr;
    }
    doc["timings"] = {{"parse", stats.timings.parse},
                      {"decompose", stats.timings.decompose},
                      {"synthesize", stats.timings.synthesize},
                      {"emit", stats.timings.emit}};
    return doc;
}

}  // namespace qsdc
