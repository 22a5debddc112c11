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

#include "cwsenum/code_file.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "cwsenum/errors.h"
#include "cwsenum/pauli.h"

namespace cwsenum {

namespace {

enum class Section { None, Stabilizer, Words };

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

[[noreturn]] void fail(ErrorKind kind, size_t line, const std::string &message) {
    throw CodeError(kind, "line " + std::to_string(line) + ": " + message, {line});
}

size_t parse_count(std::string_view value, size_t line) {
    if (value.empty() || !std::all_of(value.begin(), value.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        fail(ErrorKind::Syntax, line, "expected a positive integer, got '" + std::string(value) + "'");
    }
    size_t v = std::stoul(std::string(value));
    if (v == 0) {
        fail(ErrorKind::Syntax, line, "count must be positive");
    }
    return v;
}

struct ParsedRow {
    BinaryVector body;
    int sign = 1;
};

ParsedRow parse_row(std::string_view text, size_t num_qubits, bool is_stabilizer, size_t line) {
    bool binary = std::all_of(text.begin(), text.end(), [](char c) { return c == '0' || c == '1' || c == '|' || c == '+' || c == '-'; });
    try {
        if (binary) {
            int sign = 1;
            if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
                sign = text.front() == '-' ? -1 : 1;
                text.remove_prefix(1);
            }
            BinaryVector body = BinaryVector::from_string(text);
            if (body.size() != 2 * num_qubits) {
                fail(
                    ErrorKind::LengthMismatch, line,
                    "row has " + std::to_string(body.size()) + " bits, expected " + std::to_string(2 * num_qubits));
            }
            return {std::move(body), sign};
        }
        PauliOperator op = PauliOperator::from_str(text);
        if (op.num_qubits() != num_qubits) {
            fail(
                ErrorKind::LengthMismatch, line,
                "Pauli string has " + std::to_string(op.num_qubits()) + " qubits, expected " +
                    std::to_string(num_qubits));
        }
        uint8_t relative = (op.phase_exp + 4 - canonical_hermitian(op.body).phase_exp) & 3;
        if (is_stabilizer && (relative & 1)) {
            fail(ErrorKind::NonHermitianGenerator, line, "generator '" + std::string(text) + "' is not Hermitian");
        }
        return {std::move(op.body), relative == 2 ? -1 : 1};
    } catch (const CodeError &e) {
        if (!e.indices().empty() && e.indices().front() == line) {
            throw;
        }
        fail(e.kind(), line, e.what());
    }
}

}  // namespace

CodeFile parse_code_file(std::string_view text) {
    CodeFile file;
    Section section = Section::None;
    bool seen_stabilizer = false;
    bool seen_words = false;
    size_t line_number = 0;

    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        line_number++;
        std::string_view line = raw;
        if (size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }

        if (line == "[stabilizer]" || line == "[words]") {
            bool &seen = line == "[words]" ? seen_words : seen_stabilizer;
            if (seen) {
                fail(ErrorKind::Syntax, line_number, "duplicate section " + std::string(line));
            }
            seen = true;
            section = line == "[words]" ? Section::Words : Section::Stabilizer;
            continue;
        }
        if (line.front() == '[') {
            fail(ErrorKind::Syntax, line_number, "unknown section " + std::string(line));
        }

        if (line.starts_with("n ") || line.starts_with("K ") || line == "n" || line == "K") {
            if (section != Section::None) {
                fail(ErrorKind::Syntax, line_number, "header lines must precede the sections");
            }
            size_t &slot = line.front() == 'n' ? file.num_qubits : file.dimension;
            if (slot != 0) {
                fail(ErrorKind::Syntax, line_number, "duplicate '" + std::string(1, line.front()) + "' line");
            }
            slot = parse_count(trim(line.substr(1)), line_number);
            continue;
        }

        if (section == Section::None) {
            fail(ErrorKind::Syntax, line_number, "unexpected '" + std::string(line) + "' outside a section");
        }
        if (file.num_qubits == 0) {
            fail(ErrorKind::Syntax, line_number, "'n' must be declared before any row");
        }
        ParsedRow row = parse_row(line, file.num_qubits, section == Section::Stabilizer, line_number);
        if (section == Section::Stabilizer) {
            file.stabilizer_rows.push_back(std::move(row.body));
            file.stabilizer_signs.push_back(row.sign);
        } else {
            file.word_rows.push_back(std::move(row.body));
        }
    }

    if (file.num_qubits == 0) {
        throw CodeError(ErrorKind::Syntax, "missing 'n' line");
    }
    if (file.dimension == 0) {
        throw CodeError(ErrorKind::Syntax, "missing 'K' line");
    }
    if (!seen_stabilizer || !seen_words) {
        throw CodeError(ErrorKind::Syntax, "both [stabilizer] and [words] sections are required");
    }
    if (file.stabilizer_rows.size() != file.num_qubits) {
        throw CodeError(
            ErrorKind::RowCountMismatch, "n = " + std::to_string(file.num_qubits) + " but " +
                                             std::to_string(file.stabilizer_rows.size()) + " stabilizer rows");
    }
    if (file.word_rows.size() != file.dimension) {
        throw CodeError(
            ErrorKind::RowCountMismatch,
            "K = " + std::to_string(file.dimension) + " but " + std::to_string(file.word_rows.size()) + " word rows");
    }
    if (!file.word_rows.front().is_zero()) {
        file.warnings.push_back("first word is not the zero vector; words will be translated by it");
    }
    return file;
}

std::string render_code_file(const CodeFile &file, std::string_view comment) {
    std::ostringstream out;
    if (!comment.empty()) {
        std::istringstream lines{std::string(comment)};
        std::string line;
        while (std::getline(lines, line)) {
            out << "# " << line << "\n";
        }
    }
    out << "n " << file.num_qubits << "\n";
    out << "K " << file.dimension << "\n";
    out << "[stabilizer]\n";
    for (size_t k = 0; k < file.stabilizer_rows.size(); k++) {
        bool negative = k < file.stabilizer_signs.size() && file.stabilizer_signs[k] == -1;
        out << (negative ? "-" : "") << file.stabilizer_rows[k].str(true) << "\n";
    }
    out << "[words]\n";
    for (const auto &w : file.word_rows) {
        out << w.str(true) << "\n";
    }
    return out.str();
}

CodeFile code_file_from(const CwsCode &code) {
    CodeFile file;
    file.num_qubits = code.num_qubits();
    file.dimension = code.dimension();
    for (const auto &g : code.stabilizer().generators()) {
        file.stabilizer_rows.push_back(g.body);
        file.stabilizer_signs.push_back(g.phase_exp == canonical_hermitian(g.body).phase_exp ? 1 : -1);
    }
    file.word_rows = code.words();
    return file;
}

CwsCode build_code(const CodeFile &file, const BuildOptions &options) {
    std::optional<std::vector<int>> signs;
    if (!file.stabilizer_signs.empty()) {
        signs = file.stabilizer_signs;
    }
    return CwsCode::build(file.num_qubits, file.stabilizer_rows, file.word_rows, signs, options);
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw CodeError(ErrorKind::Syntax, "cannot read '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace cwsenum
