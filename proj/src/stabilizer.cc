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

#include "cwsenum/stabilizer.h"

#include <bit>
#include <string>

#include "cwsenum/errors.h"

namespace cwsenum {

namespace {

std::string join_indices(const std::vector<size_t> &indices) {
    std::string out;
    for (size_t k = 0; k < indices.size(); k++) {
        out += (k ? ", " : "") + std::to_string(indices[k]);
    }
    return out;
}

}  // namespace

StabilizerGroup StabilizerGroup::validate(std::vector<PauliOperator> generators) {
    if (generators.empty()) {
        throw CodeError(ErrorKind::WrongGeneratorCount, "no generators given");
    }
    size_t n = generators.front().num_qubits();
    if (generators.size() != n) {
        throw CodeError(
            ErrorKind::WrongGeneratorCount,
            std::to_string(generators.size()) + " generators for " + std::to_string(n) + " qubits");
    }
    for (size_t i = 0; i < n; i++) {
        if (generators[i].body.size() != 2 * n) {
            throw CodeError(ErrorKind::LengthMismatch, "generator " + std::to_string(i) + " has the wrong length");
        }
        if (!generators[i].is_hermitian()) {
            throw CodeError(
                ErrorKind::NonHermitianGenerator, "generator " + std::to_string(i) + " (" + generators[i].str() +
                                                      ") is not Hermitian",
                {i});
        }
    }
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) {
            if (!commutes(generators[i], generators[j])) {
                throw CodeError(
                    ErrorKind::NotCommuting,
                    "generators " + std::to_string(i) + " and " + std::to_string(j) + " anticommute", {i, j});
            }
        }
    }

    // Reduced row echelon form on the signed operators, tracking which input
    // generators make up each row so a dependency can be reported.
    std::vector<PauliOperator> rows = generators;
    std::vector<std::vector<bool>> combos(n, std::vector<bool>(n, false));
    for (size_t i = 0; i < n; i++) {
        combos[i][i] = true;
    }
    size_t next = 0;
    for (size_t col = 0; col < 2 * n && next < n; col++) {
        size_t found = next;
        while (found < n && !rows[found].body[col]) {
            found++;
        }
        if (found == n) {
            continue;
        }
        std::swap(rows[next], rows[found]);
        std::swap(combos[next], combos[found]);
        for (size_t r = 0; r < n; r++) {
            if (r != next && rows[r].body[col]) {
                rows[r] = multiply(rows[r], rows[next]);
                for (size_t k = 0; k < n; k++) {
                    combos[r][k] = combos[r][k] != combos[next][k];
                }
            }
        }
        next++;
    }
    if (next < n) {
        std::vector<size_t> subset;
        for (size_t k = 0; k < n; k++) {
            if (combos[next][k]) {
                subset.push_back(k);
            }
        }
        throw CodeError(ErrorKind::NotIndependent, "generators {" + join_indices(subset) + "} are dependent", subset);
    }

    StabilizerGroup group;
    group.num_qubits_ = n;
    group.generators_ = std::move(generators);
    group.reduced_ = std::move(rows);
    for (const auto &r : group.reduced_) {
        group.reduced_bodies_.push_back(r.body);
    }
    return group;
}

PauliOperator StabilizerGroup::element(uint64_t subset) const {
    PauliOperator result = PauliOperator::identity(num_qubits_);
    for (size_t k = 0; k < num_qubits_; k++) {
        if ((subset >> k) & 1) {
            result = multiply(result, generators_[k]);
        }
    }
    return result;
}

std::vector<PauliOperator> StabilizerGroup::elements() const {
    std::vector<PauliOperator> result;
    result.reserve(size());
    result.push_back(PauliOperator::identity(num_qubits_));
    for (uint64_t subset = 1; subset < size(); subset++) {
        result.push_back(multiply(result[subset & (subset - 1)], generators_[std::countr_zero(subset)]));
    }
    return result;
}

Gf2Matrix StabilizerGroup::element_bodies() const {
    Gf2Matrix result;
    result.reserve(size());
    result.emplace_back(2 * num_qubits_);
    for (uint64_t subset = 1; subset < size(); subset++) {
        result.push_back(result[subset & (subset - 1)] ^ generators_[std::countr_zero(subset)].body);
    }
    return result;
}

std::optional<uint8_t> StabilizerGroup::membership_phase(const PauliOperator &e) const {
    if (e.body.size() != 2 * num_qubits_) {
        throw CodeError(ErrorKind::LengthMismatch, "operator size does not match the group");
    }
    auto coefficients = solve_membership(e.body, reduced_bodies_);
    if (!coefficients) {
        return std::nullopt;
    }
    PauliOperator match = PauliOperator::identity(num_qubits_);
    for (size_t r = 0; r < reduced_.size(); r++) {
        if ((*coefficients)[r]) {
            match = multiply(match, reduced_[r]);
        }
    }
    return static_cast<uint8_t>((e.phase_exp + 4 - match.phase_exp) & 3);
}

}  // namespace cwsenum
