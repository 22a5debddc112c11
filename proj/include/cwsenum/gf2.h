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

#ifndef CWSENUM_GF2_H
#define CWSENUM_GF2_H

#include <boost/container/small_vector.hpp>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cwsenum {

/// A fixed-length bit string over GF(2).
///
/// Vectors that describe Pauli operators on n qubits have 2n bits in the
/// symplectic layout (a_1..a_n | b_1..b_n): bit k is the X exponent and bit
/// n+k the Z exponent of qubit k. Up to 128 bits (n = 64) are stored inline.
class BinaryVector {
   public:
    BinaryVector() = default;
    explicit BinaryVector(size_t num_bits);

    /// Parses '0'/'1' characters. A single '|' separator is allowed and must
    /// sit exactly in the middle.
    static BinaryVector from_string(std::string_view text);
    /// Symplectic vector from the two halves, each given as n characters.
    static BinaryVector from_xz(std::string_view x_bits, std::string_view z_bits);

    size_t size() const noexcept {
        return num_bits_;
    }
    /// n for a 2n-bit symplectic vector. Throws LengthMismatch on odd lengths.
    size_t num_qubits() const;

    bool operator[](size_t index) const noexcept {
        return (words_[index >> 6] >> (index & 63)) & 1;
    }
    void set(size_t index, bool value) noexcept;
    void flip(size_t index) noexcept {
        words_[index >> 6] ^= uint64_t{1} << (index & 63);
    }

    bool x(size_t qubit) const {
        return (*this)[qubit];
    }
    bool z(size_t qubit) const {
        return (*this)[num_bits_ / 2 + qubit];
    }

    /// `count` (<= 64) bits starting at `start`, packed into the low bits.
    uint64_t bits_at(size_t start, size_t count) const noexcept;

    BinaryVector &operator^=(const BinaryVector &other);
    friend BinaryVector operator^(BinaryVector lhs, const BinaryVector &rhs) {
        lhs ^= rhs;
        return lhs;
    }

    bool is_zero() const noexcept;
    size_t popcount() const noexcept;
    /// Index of the lowest set bit, or size() when zero.
    size_t first_set() const noexcept;

    std::span<const uint64_t> words() const noexcept {
        return {words_.data(), words_.size()};
    }

    /// Bits as '0'/'1', optionally with a '|' between the X and Z halves.
    std::string str(bool split = false) const;

    bool operator==(const BinaryVector &other) const noexcept;
    std::strong_ordering operator<=>(const BinaryVector &other) const noexcept;

   private:
    size_t num_bits_ = 0;
    boost::container::small_vector<uint64_t, 2> words_;
};

using Gf2Matrix = std::vector<BinaryVector>;

size_t hamming_weight(const BinaryVector &v);
size_t hamming_distance(const BinaryVector &x, const BinaryVector &y);

/// Number of qubits k with (a_k, b_k) != (0, 0).
size_t symplectic_weight(const BinaryVector &v);
/// Number of qubits on which the two bodies differ; equals the weight of u ^ v.
size_t symplectic_distance(const BinaryVector &u, const BinaryVector &v);
/// a.b' + a'.b mod 2. Zero iff the corresponding Pauli operators commute.
bool symplectic_product(const BinaryVector &u, const BinaryVector &v);

struct RowReduction {
    size_t rank = 0;
    /// Reduced row echelon form: one row per pivot, ordered by pivot column,
    /// every pivot column cleared in all other rows.
    Gf2Matrix basis;
    std::vector<size_t> pivots;
};

RowReduction row_reduce(const Gf2Matrix &rows);

/// Expresses `v` over a reduced basis (as returned by row_reduce). Returns one
/// coefficient per basis row, or nullopt when v is outside the row space.
std::optional<std::vector<bool>> solve_membership(const BinaryVector &v, const Gf2Matrix &basis);

/// Remainder of `v` after eliminating against a reduced basis: the canonical
/// representative of the coset v + span(basis).
BinaryVector reduce_modulo(const BinaryVector &v, const Gf2Matrix &basis);

}  // namespace cwsenum

#endif
