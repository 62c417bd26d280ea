// Copyright 2026 The mglab Authors
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

namespace mglab {

enum class ErrorKind {
    InvalidArgument,
    NonUnitary,
    InvalidWire,
    OverlappingGates,
    NotAMatchgate,
    TooLarge,
    DimensionMismatch,
    LengthMismatch,
    DegenerateState,
    RangeViolation,
    ToleranceRisk,
    Inconsistent,
    NotFound,
    PromiseViolated,
    ParseError,
};

inline const char *error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidArgument:
            return "InvalidArgument";
        case ErrorKind::NonUnitary:
            return "NonUnitary";
        case ErrorKind::InvalidWire:
            return "InvalidWire";
        case ErrorKind::OverlappingGates:
            return "OverlappingGates";
        case ErrorKind::NotAMatchgate:
            return "NotAMatchgate";
        case ErrorKind::TooLarge:
            return "TooLarge";
        case ErrorKind::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorKind::LengthMismatch:
            return "LengthMismatch";
        case ErrorKind::DegenerateState:
            return "DegenerateState";
        case ErrorKind::RangeViolation:
            return "RangeViolation";
        case ErrorKind::ToleranceRisk:
            return "ToleranceRisk";
        case ErrorKind::Inconsistent:
            return "Inconsistent";
        case ErrorKind::NotFound:
            return "NotFound";
        case ErrorKind::PromiseViolated:
            return "PromiseViolated";
        case ErrorKind::ParseError:
            return "ParseError";
    }
    return "Unknown";
}

/// All failures raised by the library carry a machine-checkable kind.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {
    }

    ErrorKind kind() const noexcept {
        return kind_;
    }

   private:
    ErrorKind kind_;
};

}  // namespace mglab
