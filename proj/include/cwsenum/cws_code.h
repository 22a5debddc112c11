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

#ifndef CWSENUM_CWS_CODE_H
#define CWSENUM_CWS_CODE_H

#include <optional>
#include <string>
#include <vector>

#include "cwsenum/gf2.h"
#include "cwsenum/stabilizer.h"

namespace cwsenum {

struct BuildOptions {
    /// Report pairs of anticommuting codeword operators as warnings instead
    /// of throwing WordsNotCommuting.
    bool allow_noncommuting_words = false;
};

/// A codeword stabilized quantum code: the stabilizer state fixed by
/// `stabilizer` together with K codeword operators, one per coset of the
/// stabilizer, given by their bodies t_1 = 0, t_2, ..., t_K.
///
/// Codeword operators are stored without phases. Every enumerator depends on
/// them only through bodies; the dense oracle lifts them with
/// canonical_hermitian.
class CwsCode {
   public:
    /// Builds and validates a code from binary rows. Stabilizer rows are
    /// lifted with canonical_hermitian and then multiplied by the optional
    /// per-row sign (+1 or -1). If the first word is nonzero, every word is
    /// translated by it and a warning is recorded.
    ///
    /// Throws CodeError: RowCountMismatch, LengthMismatch, CosetCollision
    /// (i, j), WordsNotCommuting (i, j), and the StabilizerGroup::validate
    /// errors.
    static CwsCode build(
        size_t num_qubits,
        const Gf2Matrix &stabilizer_rows,
        const Gf2Matrix &word_rows,
        const std::optional<std::vector<int>> &signs = std::nullopt,
        const BuildOptions &options = {});

    size_t num_qubits() const noexcept {
        return stabilizer_.num_qubits();
    }
    size_t dimension() const noexcept {
        return words_.size();
    }
    const StabilizerGroup &stabilizer() const noexcept {
        return stabilizer_;
    }
    const Gf2Matrix &words() const noexcept {
        return words_;
    }
    const std::vector<std::string> &warnings() const noexcept {
        return warnings_;
    }
    /// Canonical coset representative of each word modulo the stabilizer bodies.
    const Gf2Matrix &coset_keys() const noexcept {
        return coset_keys_;
    }

   private:
    StabilizerGroup stabilizer_;
    Gf2Matrix words_;
    Gf2Matrix coset_keys_;
    std::vector<std::string> warnings_;
};

/// The classical symplectic code TS = union of the cosets t_i + D, where D is
/// the linear code spanned by the stabilizer bodies.
struct ClassicalCodeView {
    size_t num_qubits = 0;
    size_t dimension = 0;
    /// Generator matrix of D: the stabilizer generator bodies in input order.
    Gf2Matrix generators;
    /// Coset representatives t_1..t_K.
    Gf2Matrix words;

    uint64_t size() const noexcept {
        return static_cast<uint64_t>(dimension) << num_qubits;
    }

    /// Visits t_i + s for every word i (in order) and every element s of D
    /// (in subset-index order over the generators).
    template <typename Callback>
    void for_each_codeword(Callback &&callback) const {
        Gf2Matrix span = span_elements();
        for (const auto &t : words) {
            for (const auto &s : span) {
                callback(t ^ s);
            }
        }
    }

    Gf2Matrix codewords() const;
    /// All 2^n elements of D in subset-index order.
    Gf2Matrix span_elements() const;
};

ClassicalCodeView classical_code(const CwsCode &code);

/// True iff TS is closed under addition, i.e. the code is a stabilizer code.
bool is_additive(const CwsCode &code);

}  // namespace cwsenum

#endif
