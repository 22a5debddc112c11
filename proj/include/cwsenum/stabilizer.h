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

#ifndef CWSENUM_STABILIZER_H
#define CWSENUM_STABILIZER_H

#include <cstdint>
#include <optional>
#include <vector>

#include "cwsenum/gf2.h"
#include "cwsenum/pauli.h"

namespace cwsenum {

/// A maximal stabilizer group: n commuting, independent, Hermitian generators
/// on n qubits. It fixes a unique stabilizer state and never contains -I.
class StabilizerGroup {
   public:
    /// Checks the generators and builds the group. Throws CodeError with kind
    /// WrongGeneratorCount, LengthMismatch, NonHermitianGenerator,
    /// NotCommuting (indices i, j) or NotIndependent (the dependent subset).
    static StabilizerGroup validate(std::vector<PauliOperator> generators);

    size_t num_qubits() const noexcept {
        return num_qubits_;
    }
    const std::vector<PauliOperator> &generators() const noexcept {
        return generators_;
    }
    /// Row-reduced generator bodies (the linear code of the group's bodies).
    const Gf2Matrix &reduced_bodies() const noexcept {
        return reduced_bodies_;
    }
    uint64_t size() const noexcept {
        return uint64_t{1} << num_qubits_;
    }

    /// Product of the generators selected by the bits of `subset`.
    PauliOperator element(uint64_t subset) const;
    /// All 2^n elements, in subset-index order.
    std::vector<PauliOperator> elements() const;
    /// Element bodies only, in subset-index order.
    Gf2Matrix element_bodies() const;

    template <typename Callback>
    void for_each_element(Callback &&callback) const {
        for (uint64_t subset = 0; subset < size(); subset++) {
            callback(element(subset));
        }
    }

    /// If e = i^l s for a group element s, returns l; otherwise nullopt.
    /// The expectation <phi|e|phi> is then i^l, and zero when absent.
    std::optional<uint8_t> membership_phase(const PauliOperator &e) const;

   private:
    size_t num_qubits_ = 0;
    std::vector<PauliOperator> generators_;
    std::vector<PauliOperator> reduced_;
    Gf2Matrix reduced_bodies_;
};

}  // namespace cwsenum

#endif
