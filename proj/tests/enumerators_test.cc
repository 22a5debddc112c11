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

#include "cwsenum/enumerators.h"

#include <random>

#include "cwsenum/catalog.h"
#include "cwsenum/code_file.h"
#include "cwsenum/errors.h"
#include "gtest/gtest.h"
#include "support/random_codes.h"

using namespace cwsenum;

namespace {

EnumeratorPolynomial poly(std::string_view text) {
    return EnumeratorPolynomial::parse(text);
}

Gf2Matrix rows(std::initializer_list<const char *> texts) {
    Gf2Matrix out;
    for (const char *t : texts) {
        out.push_back(BinaryVector::from_string(t));
    }
    return out;
}

CwsCode catalog_code(std::string_view name) {
    return build_code(parse_code_file(*catalog_text(name)));
}

CwsCode bell_code() {
    return CwsCode::build(2, rows({"11|00", "00|11"}), rows({"00|00", "10|00"}));
}

Rational two_to(size_t n) {
    mpz_class v = 1;
    v <<= n;
    return Rational(v);
}

const char *const kNineQubitA = "1 + 2/3 z^4 + 32/3 z^6 + 64/3 z^7 + 9z^8";
const char *const kNineQubitB = "1 + 68z^3 + 242z^4 + 684z^5 + 1464z^6 + 1852z^7 + 1365z^8 + 468z^9";

}  // namespace

TEST(enumerators, polynomial_rendering) {
    EnumeratorPolynomial p({Rational(1), Rational(0), Rational(0), Rational(0), Rational(2, 3), Rational(0), Rational(9)});
    EXPECT_EQ(p.str(), "1 + 2/3 z^4 + 9z^6");
    EXPECT_EQ(poly("1 + z").str(), "1 + z");
    EXPECT_EQ(poly("z^2").str(), "0 + z^2");
    EXPECT_EQ(poly("1 - 3z").str(), "1 - 3z");
    EXPECT_EQ(poly("1 + 2/3 z").decimal_str(), "1 + 0.6666666667 z");
    EXPECT_EQ(EnumeratorPolynomial().str(), "0");
}

TEST(enumerators, polynomial_parsing) {
    EXPECT_EQ(poly(kNineQubitB).str(), kNineQubitB);
    EXPECT_EQ(poly(kNineQubitA).str(), kNineQubitA);
    EXPECT_EQ(poly("1+z^2"), poly("1, 0, 1"));
    EXPECT_EQ(poly("[1, 0, 1]"), poly("1 + z^2"));
    EXPECT_EQ(poly("2/4*z + 1 + z"), poly("1 + 3/2 z"));
    EXPECT_EQ(poly("-1/2 + z^3").coefficient(0), Rational(-1, 2));
    EXPECT_EQ(poly("1 + z^2"), poly("1 + 0z + z^2 + 0z^5"));
    for (const char *bad : {"", "1 +", "1/0", "z^", "2a", "[1, 2", "1 + z^x", "1,,2"}) {
        EXPECT_THROW(poly(bad), CodeError) << bad;
    }
}

TEST(enumerators, distance_enumerator_examples) {
    EXPECT_EQ(distance_enumerator(rows({"00"}), Metric::Hamming), poly("1"));
    EXPECT_EQ(distance_enumerator(rows({"00", "11"}), Metric::Hamming), poly("1 + z^2"));
    // {0|0, 1|1} as one-qubit bodies: I and Y are at symplectic distance 1.
    EXPECT_EQ(distance_enumerator(rows({"0|0", "1|1"}), Metric::Symplectic), poly("1 + z"));
    // Duplicates push A_0 above 1.
    EXPECT_EQ(distance_enumerator(rows({"01", "01"}), Metric::Hamming), poly("2"));
    EXPECT_THROW(distance_enumerator(Gf2Matrix{}, Metric::Hamming), CodeError);
    EXPECT_THROW(distance_enumerator(rows({"00", "000"}), Metric::Hamming), CodeError);
}

TEST(enumerators, weight_distribution_examples) {
    EXPECT_EQ(weight_distribution(rows({"00"}), Metric::Hamming), poly("1"));
    EXPECT_EQ(weight_distribution(rows({"00", "11"}), Metric::Hamming), poly("1 + z^2"));
    // Bodies of II, XX, ZZ, YY.
    EXPECT_EQ(weight_distribution(rows({"00|00", "11|00", "00|11", "11|11"}), Metric::Symplectic), poly("1 + 3z^2"));
}

TEST(enumerators, shor_laflamme_small_codes) {
    CwsCode zero = CwsCode::build(1, rows({"0|1"}), rows({"0|0"}));
    EXPECT_EQ(shor_laflamme_A(zero), poly("1 + z"));
    EXPECT_EQ(shor_laflamme_B(zero), poly("1 + z"));

    EXPECT_EQ(shor_laflamme_A(bell_code()), poly("1 + z^2"));
    EXPECT_EQ(shor_laflamme_B(bell_code()), poly("1 + 2z + 5z^2"));

    CwsCode full = catalog_code("full_2_4");
    EXPECT_EQ(shor_laflamme_A(full), poly("1"));
    EXPECT_EQ(shor_laflamme_B(full), poly("1 + 6z + 9z^2"));

    CwsCode five = catalog_code("five_qubit_5_2");
    EXPECT_EQ(shor_laflamme_A(five), poly("1 + 15z^4"));
    EXPECT_EQ(shor_laflamme_B(five), poly("1 + 30z^3 + 15z^4 + 18z^5"));
}

TEST(enumerators, nine_qubit_code_exact_values) {
    CwsCode code = catalog_code("cws_9_12_3");
    EnumeratorPolynomial a = shor_laflamme_A(code);
    EnumeratorPolynomial b = shor_laflamme_B(code);
    EXPECT_EQ(a.str(), kNineQubitA);
    EXPECT_EQ(b.str(), kNineQubitB);
    EXPECT_EQ(quantum_distance(a, b), 3u);
    EXPECT_EQ(classical_distance(b), 3u);
    EXPECT_TRUE(is_integral(b));
    EXPECT_FALSE(is_integral(a));
    EXPECT_EQ(a.at_one(), Rational(128, 3));
    EXPECT_EQ(b.at_one(), Rational(6144));
    EXPECT_EQ(macwilliams_transform(a, 9, Rational(512, 12), 4), b);
}

TEST(enumerators, macwilliams_examples) {
    EXPECT_EQ(macwilliams_transform(poly("1"), 1, 1, 2), poly("1 + z"));
    EXPECT_EQ(macwilliams_transform(poly("1 + z^2"), 2, 2, 2), poly("1 + z^2"));
    EXPECT_EQ(macwilliams_transform(poly("1 + z^2"), 2, 2, 4), poly("1 + 2z + 5z^2"));
    EXPECT_EQ(macwilliams_transform(poly("1"), 3, 1, 4), poly("1 + 9z + 27z^2 + 27z^3"));
    EXPECT_THROW(macwilliams_transform(poly("1"), 3, 0, 4), CodeError);
    EXPECT_THROW(macwilliams_transform(poly("1"), 3, 1, 1), CodeError);
    EXPECT_THROW(macwilliams_transform(poly("1 + z^4"), 3, 1, 2), CodeError);
}

TEST(enumerators, macwilliams_involution_randomized) {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 100; trial++) {
        size_t n = 1 + rng() % 10;
        unsigned q = 2 + rng() % 3;
        std::vector<Rational> coefficients;
        for (size_t i = 0; i <= n; i++) {
            coefficients.emplace_back(static_cast<long>(rng() % 50), static_cast<long>(1 + rng() % 7));
        }
        EnumeratorPolynomial p(coefficients);
        Rational m(static_cast<long>(1 + rng() % 100), static_cast<long>(1 + rng() % 9));
        mpz_class qn;
        mpz_ui_pow_ui(qn.get_mpz_t(), q, n);
        Rational dual_m = Rational(qn) / m;
        ASSERT_EQ(macwilliams_transform(macwilliams_transform(p, n, m, q), n, dual_m, q), p);
    }
}

TEST(enumerators, distance_helpers) {
    EXPECT_EQ(quantum_distance(poly("1 + z"), poly("1 + z")), std::nullopt);
    EXPECT_EQ(quantum_distance(poly("1 + z^2"), poly("1 + 2z + 5z^2")), 1u);
    EXPECT_EQ(classical_distance(poly("1")), std::nullopt);
    EXPECT_EQ(classical_distance(poly("1 + z")), 1u);
    EXPECT_TRUE(is_integral(poly("1")));
}

TEST(enumerators, pairwise_and_identities_on_random_codes) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 60; trial++) {
        size_t n = 1 + rng() % 8;
        size_t k = 1 + rng() % std::min<size_t>(12, size_t{1} << n);
        if ((k << n) > (size_t{1} << 16)) {
            continue;
        }
        CwsCode code = cwsenum::testing::random_cws_code(rng, n, k);
        EnumeratorPolynomial a = shor_laflamme_A(code);
        EnumeratorPolynomial b = shor_laflamme_B(code);
        Rational kk(static_cast<long>(k));

        ASSERT_EQ(b, pairwise_B(code));
        ASSERT_EQ(a.coefficient(0), 1);
        ASSERT_EQ(b.coefficient(0), 1);
        ASSERT_EQ(a.at_one(), two_to(n) / kk);
        ASSERT_EQ(b.at_one(), two_to(n) * kk);
        for (size_t i = 0; i <= n; i++) {
            ASSERT_GE(b.coefficient(i), a.coefficient(i));
            ASSERT_GE(a.coefficient(i), 0);
            ASSERT_EQ(Rational(kk * kk * a.coefficient(i)).get_den(), 1);
            ASSERT_EQ(Rational(kk * b.coefficient(i)).get_den(), 1);
        }
        ASSERT_EQ(macwilliams_transform(a, n, two_to(n) / kk, 4), b);
        ASSERT_EQ(macwilliams_transform(b, n, two_to(n) * kk, 4), a);
    }
}

TEST(enumerators, stabilizer_specialization) {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 10; trial++) {
        size_t n = 1 + rng() % 8;
        CwsCode code = cwsenum::testing::random_cws_code(rng, n, 1);
        EnumeratorPolynomial weights = weight_distribution(code.stabilizer().element_bodies(), Metric::Symplectic);
        ASSERT_EQ(shor_laflamme_A(code), weights);
        ASSERT_EQ(shor_laflamme_B(code), weights);
    }
}

TEST(enumerators, generator_signs_do_not_change_enumerators) {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 20; trial++) {
        size_t n = 1 + rng() % 6;
        size_t k = 1 + rng() % std::min<size_t>(6, size_t{1} << n);
        CwsCode code = cwsenum::testing::random_cws_code(rng, n, k);
        CodeFile file = code_file_from(code);
        file.stabilizer_signs[rng() % n] *= -1;
        CwsCode flipped = build_code(file);
        ASSERT_NE(flipped.stabilizer().generators(), code.stabilizer().generators());
        ASSERT_EQ(shor_laflamme_A(flipped), shor_laflamme_A(code));
        ASSERT_EQ(shor_laflamme_B(flipped), shor_laflamme_B(code));
    }
}
