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

#include "cwsenum/pauli.h"

#include <bit>

#include "cwsenum/errors.h"

namespace cwsenum {

namespace {

// popcount(x(p) & z(q)) mod 2, i.e. the dot product a_p . b_q.
bool cross_parity(const BinaryVector &x_side, const BinaryVector &z_side) {
    size_t n = x_side.num_qubits();
    uint64_t acc = 0;
    for (size_t c = 0; c < n; c += 64) {
        size_t len = std::min<size_t>(64, n - c);
        acc ^= x_side.bits_at(c, len) & z_side.bits_at(n + c, len);
    }
    return std::popcount(acc) & 1;
}

size_t y_count(const BinaryVector &body) {
    size_t n = body.num_qubits();
    size_t total = 0;
    for (size_t c = 0; c < n; c += 64) {
        size_t len = std::min<size_t>(64, n - c);
        total += std::popcount(body.bits_at(c, len) & body.bits_at(n + c, len));
    }
    return total;
}

void require_same_qubits(const PauliOperator &p, const PauliOperator &q) {
    if (p.body.size() != q.body.size()) {
        throw CodeError(
            ErrorKind::LengthMismatch,
            "Pauli operators on " + std::to_string(p.body.size() / 2) + " and " +
                std::to_string(q.body.size() / 2) + " qubits");
    }
}

}  // namespace

PauliOperator PauliOperator::identity(size_t num_qubits) {
    return {0, BinaryVector(2 * num_qubits)};
}

bool PauliOperator::is_hermitian() const {
    return (phase_exp & 1) == cross_parity(body, body);
}

std::string PauliOperator::str() const {
    size_t n = body.num_qubits();
    static constexpr const char *prefixes[] = {"+", "i", "-", "-i"};
    std::string out = prefixes[(phase_exp + 4 - y_count(body) % 4) & 3];
    for (size_t k = 0; k < n; k++) {
        out.push_back("IXZY"[body.x(k) + 2 * body.z(k)]);
    }
    return out;
}

PauliOperator PauliOperator::from_str(std::string_view text) {
    uint8_t scalar = 0;
    auto consume = [&](std::string_view prefix) {
        if (text.starts_with(prefix)) {
            text.remove_prefix(prefix.size());
            return true;
        }
        return false;
    };
    if (consume("-") || consume("−")) {
        scalar = 2;
    } else {
        consume("+");
    }
    if (consume("i")) {
        scalar += 1;
    }
    if (text.empty()) {
        throw CodeError(ErrorKind::Syntax, "empty Pauli string");
    }
    size_t n = text.size();
    BinaryVector body(2 * n);
    size_t ys = 0;
    for (size_t k = 0; k < n; k++) {
        switch (text[k]) {
            case 'I':
            case '_':
                break;
            case 'X':
                body.set(k, true);
                break;
            case 'Z':
                body.set(n + k, true);
                break;
            case 'Y':
                body.set(k, true);
                body.set(n + k, true);
                ys++;
                break;
            default:
                throw CodeError(ErrorKind::Syntax, "unexpected character '" + std::string(1, text[k]) + "' in Pauli string");
        }
    }
    return {static_cast<uint8_t>(scalar + ys), std::move(body)};
}

PauliOperator multiply(const PauliOperator &p, const PauliOperator &q) {
    require_same_qubits(p, q);
    // X^a Z^b X^c Z^d = (-1)^(b.c) X^(a+c) Z^(b+d)
    uint8_t phase = p.phase_exp + q.phase_exp + 2 * cross_parity(q.body, p.body);
    return {phase, p.body ^ q.body};
}

bool commutes(const PauliOperator &p, const PauliOperator &q) {
    require_same_qubits(p, q);
    return !symplectic_product(p.body, q.body);
}

PauliOperator adjoint(const PauliOperator &p) {
    // (i^l X^a Z^b)* = i^-l Z^b X^a = i^-l (-1)^(a.b) X^a Z^b
    uint8_t phase = 4 - p.phase_exp + 2 * cross_parity(p.body, p.body);
    return {phase, p.body};
}

PauliOperator canonical_hermitian(const BinaryVector &body) {
    return {static_cast<uint8_t>(cross_parity(body, body)), body};
}

int conjugation_sign(const PauliOperator &e, const PauliOperator &t) {
    require_same_qubits(e, t);
    return symplectic_product(e.body, t.body) ? -1 : 1;
}

}  // namespace cwsenum
