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

#ifndef CWSENUM_PAULI_H
#define CWSENUM_PAULI_H

#include <cstdint>
#include <string>
#include <string_view>

#include "cwsenum/gf2.h"

namespace cwsenum {

/// The operator i^phase_exp * X^a Z^b on n qubits, with body = (a|b).
///
/// Phases are relative to the X-before-Z normal order, so the Hermitian
/// single-qubit Y = iXZ has phase_exp 1.
struct PauliOperator {
    uint8_t phase_exp = 0;
    BinaryVector body;

    PauliOperator() = default;
    PauliOperator(uint8_t phase, BinaryVector b) : phase_exp(phase & 3), body(std::move(b)) {
    }

    static PauliOperator identity(size_t num_qubits);

    size_t num_qubits() const {
        return body.num_qubits();
    }
    bool is_hermitian() const;

    /// Pauli string such as "+XIZ", "-YY" or "iX" (the sign is the overall
    /// scalar in front of the I/X/Y/Z tensor product).
    std::string str() const;
    /// Inverse of str(). Accepts an optional sign prefix "+", "-", "i", "-i"
    /// (also "+i" and the unicode minus); the tensor factors use I, X, Y, Z.
    static PauliOperator from_str(std::string_view text);

    bool operator==(const PauliOperator &other) const = default;
};

PauliOperator multiply(const PauliOperator &p, const PauliOperator &q);
bool commutes(const PauliOperator &p, const PauliOperator &q);
PauliOperator adjoint(const PauliOperator &p);

/// The Hermitian lift i^(a.b mod 2) X^a Z^b, which squares to +I.
PauliOperator canonical_hermitian(const BinaryVector &body);

/// Sign s such that t* e t = s e.
int conjugation_sign(const PauliOperator &e, const PauliOperator &t);

}  // namespace cwsenum

#endif
