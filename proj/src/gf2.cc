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

#include "cwsenum/gf2.h"

#include <algorithm>
#include <bit>

#include "cwsenum/errors.h"

namespace cwsenum {

namespace {

size_t word_count(size_t num_bits) {
    return (num_bits + 63) >> 6;
}

uint64_t low_mask(size_t count) {
    return count >= 64 ? ~uint64_t{0} : (uint64_t{1} << count) - 1;
}

void require_same_size(const BinaryVector &u, const BinaryVector &v) {
    if (u.size() != v.size()) {
        throw CodeError(
            ErrorKind::LengthMismatch,
            "vectors of length " + std::to_string(u.size()) + " and " + std::to_string(v.size()));
    }
}

}  // namespace

BinaryVector::BinaryVector(size_t num_bits) : num_bits_(num_bits), words_(word_count(num_bits), 0) {
}

BinaryVector BinaryVector::from_string(std::string_view text) {
    size_t bar = text.find('|');
    std::string bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c == '0' || c == '1') {
            bits.push_back(c);
        } else if (c != '|') {
            throw CodeError(ErrorKind::Syntax, "unexpected character '" + std::string(1, c) + "' in bit string");
        }
    }
    if (bar != std::string_view::npos) {
        if (text.find('|', bar + 1) != std::string_view::npos || bar * 2 != bits.size()) {
            throw CodeError(ErrorKind::Syntax, "'|' must separate two halves of equal length");
        }
    }
    BinaryVector result(bits.size());
    for (size_t k = 0; k < bits.size(); k++) {
        result.set(k, bits[k] == '1');
    }
    return result;
}

BinaryVector BinaryVector::from_xz(std::string_view x_bits, std::string_view z_bits) {
    if (x_bits.size() != z_bits.size()) {
        throw CodeError(ErrorKind::LengthMismatch, "X and Z halves differ in length");
    }
    std::string joined(x_bits);
    joined += '|';
    joined += z_bits;
    return from_string(joined);
}

size_t BinaryVector::num_qubits() const {
    if (num_bits_ % 2 != 0) {
        throw CodeError(ErrorKind::LengthMismatch, "odd-length vector has no symplectic layout");
    }
    return num_bits_ / 2;
}

void BinaryVector::set(size_t index, bool value) noexcept {
    uint64_t bit = uint64_t{1} << (index & 63);
    if (value) {
        words_[index >> 6] |= bit;
    } else {
        words_[index >> 6] &= ~bit;
    }
}

uint64_t BinaryVector::bits_at(size_t start, size_t count) const noexcept {
    if (count == 0) {
        return 0;
    }
    size_t w = start >> 6;
    size_t offset = start & 63;
    uint64_t result = words_[w] >> offset;
    if (offset != 0 && offset + count > 64 && w + 1 < words_.size()) {
        result |= words_[w + 1] << (64 - offset);
    }
    return result & low_mask(count);
}

BinaryVector &BinaryVector::operator^=(const BinaryVector &other) {
    require_same_size(*this, other);
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

bool BinaryVector::is_zero() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](uint64_t w) { return w == 0; });
}

size_t BinaryVector::popcount() const noexcept {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

size_t BinaryVector::first_set() const noexcept {
    for (size_t k = 0; k < words_.size(); k++) {
        if (words_[k] != 0) {
            return (k << 6) + std::countr_zero(words_[k]);
        }
    }
    return num_bits_;
}

std::string BinaryVector::str(bool split) const {
    std::string out;
    out.reserve(num_bits_ + 1);
    for (size_t k = 0; k < num_bits_; k++) {
        if (split && k * 2 == num_bits_) {
            out.push_back('|');
        }
        out.push_back((*this)[k] ? '1' : '0');
    }
    return out;
}

bool BinaryVector::operator==(const BinaryVector &other) const noexcept {
    return num_bits_ == other.num_bits_ && std::equal(words_.begin(), words_.end(), other.words_.begin());
}

std::strong_ordering BinaryVector::operator<=>(const BinaryVector &other) const noexcept {
    if (auto c = num_bits_ <=> other.num_bits_; c != 0) {
        return c;
    }
    for (size_t k = 0; k < words_.size(); k++) {
        if (auto c = words_[k] <=> other.words_[k]; c != 0) {
            return c;
        }
    }
    return std::strong_ordering::equal;
}

size_t hamming_weight(const BinaryVector &v) {
    return v.popcount();
}

size_t hamming_distance(const BinaryVector &x, const BinaryVector &y) {
    require_same_size(x, y);
    size_t total = 0;
    auto xw = x.words();
    auto yw = y.words();
    for (size_t k = 0; k < xw.size(); k++) {
        total += std::popcount(xw[k] ^ yw[k]);
    }
    return total;
}

size_t symplectic_weight(const BinaryVector &v) {
    size_t n = v.num_qubits();
    size_t total = 0;
    for (size_t c = 0; c < n; c += 64) {
        size_t len = std::min<size_t>(64, n - c);
        total += std::popcount(v.bits_at(c, len) | v.bits_at(n + c, len));
    }
    return total;
}

size_t symplectic_distance(const BinaryVector &u, const BinaryVector &v) {
    require_same_size(u, v);
    size_t n = u.num_qubits();
    size_t total = 0;
    for (size_t c = 0; c < n; c += 64) {
        size_t len = std::min<size_t>(64, n - c);
        uint64_t dx = u.bits_at(c, len) ^ v.bits_at(c, len);
        uint64_t dz = u.bits_at(n + c, len) ^ v.bits_at(n + c, len);
        total += std::popcount(dx | dz);
    }
    return total;
}

bool symplectic_product(const BinaryVector &u, const BinaryVector &v) {
    require_same_size(u, v);
    size_t n = u.num_qubits();
    uint64_t acc = 0;
    for (size_t c = 0; c < n; c += 64) {
        size_t len = std::min<size_t>(64, n - c);
        acc ^= (u.bits_at(c, len) & v.bits_at(n + c, len)) ^ (v.bits_at(c, len) & u.bits_at(n + c, len));
    }
    return std::popcount(acc) & 1;
}

RowReduction row_reduce(const Gf2Matrix &rows) {
    RowReduction result;
    if (rows.empty()) {
        return result;
    }
    size_t width = rows.front().size();
    Gf2Matrix work;
    work.reserve(rows.size());
    for (const auto &r : rows) {
        require_same_size(rows.front(), r);
        work.push_back(r);
    }

    size_t next = 0;
    for (size_t col = 0; col < width && next < work.size(); col++) {
        size_t found = next;
        while (found < work.size() && !work[found][col]) {
            found++;
        }
        if (found == work.size()) {
            continue;
        }
        std::swap(work[next], work[found]);
        for (size_t r = 0; r < work.size(); r++) {
            if (r != next && work[r][col]) {
                work[r] ^= work[next];
            }
        }
        result.pivots.push_back(col);
        next++;
    }
    work.resize(next);
    result.rank = next;
    result.basis = std::move(work);
    return result;
}

std::optional<std::vector<bool>> solve_membership(const BinaryVector &v, const Gf2Matrix &basis) {
    std::vector<bool> coefficients(basis.size(), false);
    BinaryVector rest = v;
    for (size_t r = 0; r < basis.size(); r++) {
        require_same_size(v, basis[r]);
        size_t pivot = basis[r].first_set();
        if (pivot < rest.size() && rest[pivot]) {
            rest ^= basis[r];
            coefficients[r] = true;
        }
    }
    if (!rest.is_zero()) {
        return std::nullopt;
    }
    return coefficients;
}

BinaryVector reduce_modulo(const BinaryVector &v, const Gf2Matrix &basis) {
    BinaryVector rest = v;
    for (const auto &row : basis) {
        require_same_size(v, row);
        size_t pivot = row.first_set();
        if (pivot < rest.size() && rest[pivot]) {
            rest ^= row;
        }
    }
    return rest;
}

}  // namespace cwsenum
