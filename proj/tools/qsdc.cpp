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

#include <chrono>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qsdc/qsdc.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

struct DecomposeArgs {
    std::string input;
    std::string name = "kernel";
    std::string out;
    std::vector<int> qubits;
    double tolerance = qsdc::kDefaultTolerance;
    bool no_optimize = false;
    bool no_verify = false;
    std::string stats_path;
};

int run_decompose(const DecomposeArgs& args) {
    using clock = std::chrono::steady_clock;
    qsdc::StatsReport stats;

    auto t = clock::now();
    const qsdc::Matrix u = qsdc::read_matrix_file(args.input);
    stats.timings.parse = seconds_since(t);

    qsdc::DecomposeOptions opts;
    opts.optimize = !args.no_optimize;
    opts.tol = args.tolerance;

    t = clock::now();
    const qsdc::DecompositionPlan plan = qsdc::decompose(u, opts);
    stats.timings.decompose = seconds_since(t);

    std::vector<int> qubits = args.qubits;
    if (qubits.empty()) {
        qubits.resize(std::size_t(plan.n_qubits));
        std::iota(qubits.begin(), qubits.end(), 0);
    }

    t = clock::now();
    const qsdc::Circuit circuit = qsdc::synthesize(plan, qubits, args.name);
    stats.timings.synthesize = seconds_since(t);

    t = clock::now();
    const std::string qasm = qsdc::emit_cqasm(circuit);
    stats.timings.emit = seconds_since(t);

    if (args.out.empty()) {
        std::cout << qasm;
    } else {
        std::ofstream out(args.out, std::ios::binary);
        if (!out) {
            throw qsdc::IoError("cannot write output file '" + args.out + "'");
        }
        out << qasm;
    }

    stats.n_qubits = plan.n_qubits;
    stats.counts = qsdc::gate_counts(circuit);
    stats.predicted = qsdc::predicted_counts(plan.n_qubits);
    stats.optimizations = qsdc::optimization_tags(plan);

    bool verify_ok = true;
    if (!args.no_verify) {
        // The synthesized circuit uses physical indices; compare on the plan's
        // own qubits so remapped outputs verify against the same matrix.
        std::vector<int> identity(static_cast<std::size_t>(plan.n_qubits));
        std::iota(identity.begin(), identity.end(), 0);
        const qsdc::Circuit canonical = qsdc::synthesize(plan, identity, args.name);
        const double verify_tol = std::max(1e-8, args.tolerance);
        const auto report = qsdc::verify(canonical, u, verify_tol);
        stats.residual = report.residual;
        verify_ok = report.passed;
        std::cerr << "verification residual " << report.residual << " (tolerance "
                  << verify_tol << "): " << (report.passed ? "ok" : "FAILED") << "\n";
    }

    if (!args.stats_path.empty()) {
        std::ofstream sout(args.stats_path, std::ios::binary);
        if (!sout) {
            throw qsdc::IoError("cannot write stats file '" + args.stats_path + "'");
        }
        sout << qsdc::stats_to_json(stats).dump(2) << "\n";
    }
    return verify_ok ? kExitOk : kExitVerifyFailed;
}

int run_verify(const std::string& matrix_path, const std::string& qasm_path,
               std::optional<double> tolerance) {
    const qsdc::Matrix u = qsdc::read_matrix_file(matrix_path);

    std::ifstream in(qasm_path, std::ios::binary);
    if (!in) {
        throw qsdc::IoError("cannot open circuit file '" + qasm_path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    const qsdc::Circuit circuit = qsdc::parse_cqasm(buf.str());

    // Angles in the file carry six decimals, so the reconstruction can be
    // off by up to 0.25e-6 per rotation; the default threshold budgets for
    // that and is overridable.
    const double tol = tolerance.value_or(
        std::max(1e-8, 5e-7 * double(qsdc::gate_counts(circuit).rotations)));
    const auto report = qsdc::verify(circuit, u, tol);
    std::cout << "residual " << report.residual << " (tolerance " << report.tolerance
              << "): " << (report.passed ? "ok" : "FAILED") << "\n";
    return report.passed ? kExitOk : kExitVerifyFailed;
}

int run_random(int n, std::uint64_t seed, const std::string& out,
               const std::string& format) {
    const qsdc::Matrix u = qsdc::random_unitary(n, seed);
    qsdc::MatrixFileFormat fmt = qsdc::MatrixFileFormat::Json;
    if (format == "txt") {
        fmt = qsdc::MatrixFileFormat::Txt;
    } else if (format.empty() && !out.empty()) {
        fmt = qsdc::matrix_format_for_path(out);
    }
    if (out.empty()) {
        std::cout << (fmt == qsdc::MatrixFileFormat::Json ? qsdc::write_matrix_json(u)
                                                          : qsdc::write_matrix_txt(u));
    } else {
        qsdc::write_matrix_file(out, u, fmt);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qsdc: decompose unitary matrices into rz/ry/cnot circuits"};
    app.require_subcommand(1);

    DecomposeArgs dargs;
    auto* dec = app.add_subcommand(
        "decompose", "Decompose a unitary matrix file and emit cQASM");
    dec->add_option("input", dargs.input, "matrix file (JSON or txt)")->required();
    dec->add_option("--name", dargs.name, "kernel name in the emitted cQASM");
    dec->add_option("--out", dargs.out, "output cQASM path (default: stdout)");
    dec->add_option("--qubits", dargs.qubits,
                    "physical qubit indices, least significant first")
        ->delimiter(',');
    dec->add_option("--tolerance", dargs.tolerance,
                    "unitarity / structure-detection tolerance");
    dec->add_flag("--no-optimize", dargs.no_optimize,
                  "disable multiplexer and unaffected-qubit shortcuts");
    dec->add_flag("--no-verify", dargs.no_verify,
                  "skip reconstruction of the circuit matrix");
    dec->add_option("--stats", dargs.stats_path, "write a JSON stats report here");

    std::string v_matrix, v_qasm;
    double v_tol = 0.0;
    auto* ver = app.add_subcommand("verify",
                                   "Check a cQASM circuit against a matrix file");
    ver->add_option("matrix", v_matrix, "matrix file")->required();
    ver->add_option("qasm", v_qasm, "cQASM file")->required();
    auto* v_tol_opt = ver->add_option(
        "--tolerance", v_tol,
        "pass/fail threshold (default scales with the circuit's rotation count)");

    int r_n = 0;
    std::uint64_t r_seed = 1;
    std::string r_out, r_format;
    auto* rnd = app.add_subcommand("random", "Write a Haar-random unitary matrix");
    rnd->add_option("n", r_n, "number of qubits (1..12)")->required();
    rnd->add_option("--seed", r_seed, "RNG seed");
    rnd->add_option("--out", r_out, "output path (default: stdout)");
    rnd->add_option("--format", r_format, "json or txt")
        ->check(CLI::IsMember({"json", "txt"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (dec->parsed()) {
            return run_decompose(dargs);
        }
        if (ver->parsed()) {
            return run_verify(v_matrix, v_qasm,
                              v_tol_opt->count() ? std::optional<double>(v_tol)
                                                 : std::nullopt);
        }
        return run_random(r_n, r_seed, r_out, r_format);
    } catch (const qsdc::NotUnitaryError& e) {
        std::cerr << "error: input matrix is not unitary (" << e.what() << ")\n";
        return kExitInputError;
    } catch (const qsdc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
