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

#ifndef CWSENUM_ENUMERATORS_H
#define CWSENUM_ENUMERATORS_H

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cwsenum/cws_code.h"
#include "cwsenum/gf2.h"

namespace cwsenum {

using Rational = mpq_class;

/// Polynomial sum_{i=0}^{n} c_i z^i with exact rational coefficients.
///
/// Coefficients are always kept in lowest terms. Equality ignores trailing
/// zero coefficients, so the degree bound is informational.
class EnumeratorPolynomial {
   public:
    EnumeratorPolynomial() = default;
    explicit EnumeratorPolynomial(size_t degree_bound);
    explicit EnumeratorPolynomial(std::vector<Rational> coefficients);

    /// c_i = counts[i] / denominator.
    static EnumeratorPolynomial from_counts(std::span<const mpz_class> counts, const mpz_class &denominator);

    size_t degree_bound() const noexcept {
        return coefficients_.empty() ? 0 : coefficients_.size() - 1;
    }
    const std::vector<Rational> &coefficients() const noexcept {
        return coefficients_;
    }
    /// Coefficient of z^i; zero past the degree bound.
    Rational coefficient(size_t i) const;
    void set_coefficient(size_t i, Rational value);

    /// p(1), the sum of all coefficients.
    Rational at_one() const;

    /// Ascending powers, zero terms omitted except the constant, e.g.
    /// "1 + 2/3 z^4 + 9z^8".
    std::string str() const;
    /// Same layout with coefficients as decimal approximations.
    std::string decimal_str() const;

    /// Accepts the str() layout (whitespace and '*' optional, "-" terms
    /// allowed, repeated powers summed) or a coefficient list such as
    /// "1, 0, 2/3" or "[1, 0, 2/3]".
    static EnumeratorPolynomial parse(std::string_view text);

    bool operator==(const EnumeratorPolynomial &other) const;

   private:
    std::vector<Rational> coefficients_;
};

enum class Metric { Hamming, Symplectic };

/// A_i = |{(x, y) : d(x, y) = i}| / M over ordered pairs of a code of size M.
/// Duplicated codewords are counted as distinct, so A_0 > 1 flags them.
EnumeratorPolynomial distance_enumerator(std::span<const BinaryVector> codewords, Metric metric);

/// Number of codewords of each weight, unnormalized.
EnumeratorPolynomial weight_distribution(std::span<const BinaryVector> codewords, Metric metric);

/// Shor-Laflamme A(z) of a CWS code.
///
/// With P = sum_j T_j|phi><phi|T_j*, Tr(EP) = sum_j <phi|T_j* E T_j|phi>.
/// Conjugation gives T_j* E T_j = (-1)^<e, t_j> E, and <phi|E|phi> is a unit
/// scalar when E is a stabilizer element up to phase and vanishes otherwise.
/// So only the 2^n stabilizer bodies contribute, each with
/// Tr(EP) Tr(E*P) = (sum_j (-1)^<e, t_j>)^2, giving
///
///     A_i = 1/K^2 * sum_{e in S, wt(e) = i} (sum_j (-1)^<e, t_j>)^2.
EnumeratorPolynomial shor_laflamme_A(const CwsCode &code);

/// Shor-Laflamme B(z) of a CWS code as the distance enumerator of TS,
/// counted over triples:
///
///     B_d = 1/K * |{(i, j, w) : wt(t_i + t_j + w) = d, w in S}|.
///
/// Pairs (i, j) with equal sums t_i + t_j are deliberately counted once each.
EnumeratorPolynomial shor_laflamme_B(const CwsCode &code);

/// Distance enumerator of TS from the full pairwise scan over its K 2^n
/// codewords. Independent of shor_laflamme_B; used to cross-check it.
EnumeratorPolynomial pairwise_B(const CwsCode &code);

/// ((1 + (q-1)z)^n / M) * p((1 - z) / (1 + (q-1)z)). Throws ZeroSize for
/// M = 0 or q < 2, and LengthMismatch when p has degree above n.
EnumeratorPolynomial macwilliams_transform(
    const EnumeratorPolynomial &p, size_t n, const Rational &code_size, unsigned alphabet_size);

/// min{i >= 1 : b_i > a_i}, the minimum distance read off a pair of
/// Shor-Laflamme enumerators.
std::optional<size_t> quantum_distance(const EnumeratorPolynomial &a, const EnumeratorPolynomial &b);

/// min{i >= 1 : p_i != 0}.
std::optional<size_t> classical_distance(const EnumeratorPolynomial &p);

bool is_integral(const EnumeratorPolynomial &p);

}  // namespace cwsenum

#endif
