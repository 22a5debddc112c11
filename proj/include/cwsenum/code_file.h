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

#ifndef CWSENUM_CODE_FILE_H
#define CWSENUM_CODE_FILE_H

#include <string>
#include <string_view>
#include <vector>

#include "cwsenum/cws_code.h"
#include "cwsenum/gf2.h"

namespace cwsenum {

/// Contents of a `.cws` file.
///
///     # comment
///     n 2
///     K 2
///     [stabilizer]
///     11|00          binary row, '|' optional, '-' prefix negates
///     +ZZ            or a Pauli string with optional sign
///     [words]
///     00|00
///     XI
///
/// Stabilizer rows carry a sign relative to the Hermitian lift of their
/// body. Word rows are bodies only; any sign on them is dropped.
struct CodeFile {
    size_t num_qubits = 0;
    size_t dimension = 0;
    Gf2Matrix stabilizer_rows;
    std::vector<int> stabilizer_signs;
    Gf2Matrix word_rows;
    /// Non-fatal findings such as a nonzero first word. Not compared.
    std::vector<std::string> warnings;

    bool operator==(const CodeFile &other) const {
        return num_qubits == other.num_qubits && dimension == other.dimension &&
               stabilizer_rows == other.stabilizer_rows && stabilizer_signs == other.stabilizer_signs &&
               word_rows == other.word_rows;
    }
};

/// Throws CodeError: Syntax (indices hold the 1-based line), LengthMismatch,
/// RowCountMismatch, NonHermitianGenerator.
CodeFile parse_code_file(std::string_view text);

/// Canonical text. `comment`, when nonempty, is emitted as leading '#' lines.
std::string render_code_file(const CodeFile &file, std::string_view comment = {});

CodeFile code_file_from(const CwsCode &code);

CwsCode build_code(const CodeFile &file, const BuildOptions &options = {});

/// Reads a file from disk; throws CodeError(Syntax) when it cannot be read.
std::string read_text_file(const std::string &path);

}  // namespace cwsenum

#endif
