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

#ifndef CWSENUM_ERRORS_H
#define CWSENUM_ERRORS_H

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cwsenum {

enum class ErrorKind {
    LengthMismatch,
    NotCommuting,
    NotIndependent,
    NonHermitianGenerator,
    WrongGeneratorCount,
    RowCountMismatch,
    CosetCollision,
    WordsNotCommuting,
    EmptyCode,
    ZeroSize,
    OracleTooLarge,
    NullProjection,
    SnapFailure,
    Syntax,
    UnknownName,
};

std::string_view error_kind_name(ErrorKind kind);

/// Raised for every invalid input or failed precondition in the library.
///
/// `indices` carries the offending positions where the kind has them: the
/// generator pair for NotCommuting, the dependent generator subset for
/// NotIndependent, the word pair for CosetCollision / WordsNotCommuting, the
/// coefficient index for SnapFailure, and the 1-based line for Syntax.
class CodeError : public std::invalid_argument {
   public:
    CodeError(ErrorKind kind, const std::string &message, std::vector<size_t> indices = {});

    ErrorKind kind() const noexcept {
        return kind_;
    }
    const std::vector<size_t> &indices() const noexcept {
        return indices_;
    }

   private:
    ErrorKind kind_;
    std::vector<size_t> indices_;
};

}  // namespace cwsenum

#endif
