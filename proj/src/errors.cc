// Copyright 2026 The cwsenum Authors
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

#include "cwsenum/errors.h"

namespace cwsenum {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::LengthMismatch:
            return "LengthMismatch";
        case ErrorKind::NotCommuting:
            return "NotCommuting";
        case ErrorKind::NotIndependent:
            return "NotIndependent";
        case ErrorKind::NonHermitianGenerator:
            return "NonHermitianGenerator";
        case ErrorKind::WrongGeneratorCount:
            return "WrongGeneratorCount";
        case ErrorKind::RowCountMismatch:
            return "RowCountMismatch";
        case ErrorKind::CosetCollision:
            return "CosetCollision";
        case ErrorKind::WordsNotCommuting:
            return "WordsNotCommuting";
        case ErrorKind::EmptyCode:
            return "EmptyCode";
        case ErrorKind::ZeroSize:
            return "ZeroSize";
        case ErrorKind::OracleTooLarge:
            return "OracleTooLarge";
        case ErrorKind::NullProjection:
            return "NullProjection";
        case ErrorKind::SnapFailure:
            return "SnapFailure";
        case ErrorKind::Syntax:
            return "Syntax";
        case ErrorKind::UnknownName:
            return "UnknownName";
    }
    return "Unknown";
}

CodeError::CodeError(ErrorKind kind, const std::string &message, std::vector<size_t> indices)
    : std::invalid_argument(std::string(error_kind_name(kind)) + ": " + message),
      kind_(kind),
      indices_(std::move(indices)) {
}

}  // namespace cwsenum
