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

#include <stdexcept>
#include <string>

namespace qsdc {

/// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotUnitaryError : Error {
    using Error::Error;
};
struct DimensionMismatchError : Error {
    using Error::Error;
};
struct OddDimensionError : Error {
    using Error::Error;
};
struct WrongDimensionError : Error {
    using Error::Error;
};
struct NotPowerOfTwoError : Error {
    using Error::Error;
};

/// A decomposition step reassembled to something other than its input.
struct NumericalFailureError : Error {
    using Error::Error;
};

struct KTooLargeError : Error {
    using Error::Error;
};
struct BadLengthError : Error {
    using Error::Error;
};
struct NonUnitModulusError : Error {
    using Error::Error;
};

/// Raised by decompose() when verify_steps is on and an intermediate
/// factorization fails its residual check.
struct StepVerificationError : Error {
    StepVerificationError(int level_, std::string kind_, double residual_)
        : Error("step verification failed at level " + std::to_string(level_) +
                " (" + kind_ + "), residual " + std::to_string(residual_)),
          level(level_), kind(std::move(kind_)), residual(residual_) {}
    int level;
    std::string kind;
    double residual;
};

struct TooManyQubitsError : Error {
    using Error::Error;
};
struct WrongQubitCountError : Error {
    using Error::Error;
};
struct MalformedPlanError : Error {
    using Error::Error;
};

struct QasmSyntaxError : Error {
    QasmSyntaxError(int line_, const std::string& what_)
        : Error("syntax error on line " + std::to_string(line_) + ": " + what_),
          line(line_) {}
    int line;
};

struct UnsupportedGateError : Error {
    explicit UnsupportedGateError(const std::string& gate_)
        : Error("unsupported gate: " + gate_), gate(gate_) {}
    std::string gate;
};

struct QubitOutOfRangeError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};

}  // namespace qsdc
