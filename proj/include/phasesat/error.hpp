// Copyright 2026 The phasesat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace phasesat {

enum class ErrorKind {
    NotHermitian,
    NotSquare,
    NotUnitary,
    DimensionMismatch,
    IndexOutOfRange,
    SizeOverflow,
    ComplexGram,
    BasisMismatch,
    IncompleteSet,
    LimitNonConvergent,
    LimitUnavailable,
    StepTooLarge,
    WeakCommutativityViolated,
    MixInfeasible,
    InternalInconsistency,
    InvalidArgument,
    ParseError,
};

std::string_view error_kind_name(ErrorKind kind);

/// Single exception type for the library. `value()` carries the offending
/// numeric quantity where one exists (e.g. max|Im Omega| for
/// WeakCommutativityViolated), otherwise 0.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what, double value = 0.0)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
          kind_(kind),
          value_(value) {}

    ErrorKind kind() const noexcept { return kind_; }
    double value() const noexcept { return value_; }

private:
    ErrorKind kind_;
    double value_;
};

}  // namespace phasesat
