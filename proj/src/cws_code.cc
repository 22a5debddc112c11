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

#include "cwsenum/cws_code.h"

#include <bit>
#include <map>
#include <set>

#include "cwsenum/errors.h"
#include "cwsenum/pauli.h"

namespace cwsenum {

CwsCode CwsCode::build(
    size_t num_qubits,
    const Gf2Matrix &stabilizer_rows,
    const Gf2Matrix &word_rows,
    const std::optional<std::vector<int>> &signs,
    const BuildOptions &options) {
    if (num_qubits == 0) {
        throw CodeError(ErrorKind::RowCountMismatch, "a code needs at least one qubit");
    }
    if (stabilizer_rows.size() != num_qubits) {
        throw CodeError(
            ErrorKind::RowCountMismatch, "expected " + std::to_string(num_qubits) + " stabilizer rows, got " +
                                             std::to_string(stabilizer_rows.size()));
    }
    if (word_rows.empty()) {
        throw CodeError(ErrorKind::RowCountMismatch, "a code needs at least one word");
    }
    if (signs && signs->size() != num_qubits) {
        throw CodeError(ErrorKind::RowCountMismatch, "sign list does not match the stabilizer rows");
    }
    for (const auto *block : {&stabilizer_rows, &word_rows}) {
        for (const auto &row : *block) {
            if (row.size() != 2 * num_qubits) {
                throw CodeError(
                    ErrorKind::LengthMismatch,
                    "row of length " + std::to_string(row.size()) + " in a code on " + std::to_string(num_qubits) +
                        " qubits");
            }
        }
    }

    std::vector<PauliOperator> generators;
    generators.reserve(num_qubits);
    for (size_t k = 0; k < num_qubits; k++) {
        PauliOperator g = canonical_hermitian(stabilizer_rows[k]);
        if (signs) {
            int s = (*signs)[k];
            if (s != 1 && s != -1) {
                throw CodeError(ErrorKind::Syntax, "generator signs must be +1 or -1", {k});
            }
            if (s == -1) {
                g.phase_exp = (g.phase_exp + 2) & 3;
            }
        }
        generators.push_back(std::move(g));
    }

    CwsCode code;
    code.stabilizer_ = StabilizerGroup::validate(std::move(generators));
    code.words_ = word_rows;
    if (!code.words_.front().is_zero()) {
        BinaryVector shift = code.words_.front();
        for (auto &w : code.words_) {
            w ^= shift;
        }
        code.warnings_.push_back("first word " + shift.str(true) + " is not zero; all words translated by it");
    }

    std::map<BinaryVector, size_t> seen;
    for (size_t i = 0; i < code.words_.size(); i++) {
        BinaryVector key = reduce_modulo(code.words_[i], code.stabilizer_.reduced_bodies());
        auto [it, inserted] = seen.emplace(key, i);
        if (!inserted) {
            throw CodeError(
                ErrorKind::CosetCollision,
                "words " + std::to_string(it->second) + " and " + std::to_string(i) + " lie in the same coset",
                {it->second, i});
        }
        code.coset_keys_.push_back(std::move(key));
    }

    for (size_t i = 0; i < code.words_.size(); i++) {
        for (size_t j = i + 1; j < code.words_.size(); j++) {
            if (!symplectic_product(code.words_[i], code.words_[j])) {
                continue;
            }
            std::string msg = "words " + std::to_string(i) + " and " + std::to_string(j) + " anticommute";
            if (!options.allow_noncommuting_words) {
                throw CodeError(ErrorKind::WordsNotCommuting, msg, {i, j});
            }
            code.warnings_.push_back(msg);
        }
    }
    return code;
}

Gf2Matrix ClassicalCodeView::span_elements() const {
    Gf2Matrix result;
    uint64_t count = uint64_t{1} << generators.size();
    result.reserve(count);
    result.emplace_back(2 * num_qubits);
    for (uint64_t subset = 1; subset < count; subset++) {
        result.push_back(result[subset & (subset - 1)] ^ generators[std::countr_zero(subset)]);
    }
    return result;
}

Gf2Matrix ClassicalCodeView::codewords() const {
    Gf2Matrix result;
    result.reserve(size());
    for_each_codeword([&](BinaryVector v) { result.push_back(std::move(v)); });
    return result;
}

ClassicalCodeView classical_code(const CwsCode &code) {
    ClassicalCodeView view;
    view.num_qubits = code.num_qubits();
    view.dimension = code.dimension();
    for (const auto &g : code.stabilizer().generators()) {
        view.generators.push_back(g.body);
    }
    view.words = code.words();
    return view;
}

bool is_additive(const CwsCode &code) {
    const auto &basis = code.stabilizer().reduced_bodies();
    std::set<BinaryVector> keys(code.coset_keys().begin(), code.coset_keys().end());
    const auto &words = code.words();
    for (size_t i = 0; i < words.size(); i++) {
        for (size_t j = i + 1; j < words.size(); j++) {
            if (!keys.contains(reduce_modulo(words[i] ^ words[j], basis))) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace cwsenum
