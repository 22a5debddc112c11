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

#include "cwsenum/dense_oracle.h"

#include <cmath>
#include <cstdlib>
#include <random>

#include "cwsenum/catalog.h"
#include "cwsenum/code_file.h"
#include "cwsenum/errors.h"
#include "gtest/gtest.h"
#include "support/random_codes.h"

using namespace cwsenum;

namespace {

constexpr double kTol = 1e-12;

StabilizerGroup group(std::initializer_list<const char *> texts) {
    std::vector<PauliOperator> gens;
    for (const char *t : texts) {
        gens.push_back(PauliOperator::from_str(t));
    }
    return StabilizerGroup::validate(gens);
}

void expect_amplitudes(const DenseState &s, std::vector<std::complex<double>> expected) {
    ASSERT_EQ(s.amplitudes.size(), expected.size());
    for (size_t k = 0; k < expected.size(); k++) {
        EXPECT_NEAR(std::abs(s.amplitudes[k] - expected[k]), 0.0, kTol) << "index " << k;
    }
}

CwsCode catalog_code(std::string_view name) {
    return build_code(parse_code_file(*catalog_text(name)));
}

}  // namespace

TEST(dense_oracle, statevector_examples) {
    double h = 1 / std::sqrt(2.0);
    expect_amplitudes(statevector(group({"Z"})), {1, 0});
    expect_amplitudes(statevector(group({"X"})), {h, h});
    expect_amplitudes(statevector(group({"XX", "ZZ"})), {h, 0, 0, h});
    // -Z fixes |1>, so the |0> seed projects to zero and the next seed is used.
    expect_amplitudes(statevector(group({"-Z"})), {0, 1});
}

TEST(dense_oracle, apply_pauli_examples) {
    double h = 1 / std::sqrt(2.0);
    DenseState zero{1, {1, 0}};
    expect_amplitudes(apply_pauli(PauliOperator::identity(1), zero), {1, 0});
    expect_amplitudes(apply_pauli(PauliOperator::from_str("X"), zero), {0, 1});
    expect_amplitudes(apply_pauli(PauliOperator::from_str("Z"), DenseState{1, {h, h}}), {h, -h});
    expect_amplitudes(apply_pauli(PauliOperator::from_str("Y"), zero), {0, std::complex<double>(0, 1)});
    EXPECT_THROW(apply_pauli(PauliOperator::identity(2), zero), CodeError);
}

TEST(dense_oracle, statevector_is_fixed_by_every_element) {
    std::mt19937_64 rng(53);
    for (size_t n = 1; n <= 5; n++) {
        for (int trial = 0; trial < 5; trial++) {
            auto rows = cwsenum::testing::random_stabilizer_rows(rng, n);
            CwsCode code = CwsCode::build(n, rows.rows, {BinaryVector(2 * n)}, rows.signs);
            DenseState phi = statevector(code.stabilizer());
            EXPECT_NEAR(phi.norm(), 1.0, kTol);
            code.stabilizer().for_each_element([&](const PauliOperator &s) {
                DenseState moved = apply_pauli(s, phi);
                for (size_t k = 0; k < phi.amplitudes.size(); k++) {
                    ASSERT_NEAR(std::abs(moved.amplitudes[k] - phi.amplitudes[k]), 0.0, 1e-10);
                }
            });
        }
    }
}

TEST(dense_oracle, oracle_examples) {
    CwsCode zero = catalog_code("zero_1_1");
    OracleResult r = oracle_enumerators(zero);
    EXPECT_EQ(r.A, EnumeratorPolynomial::parse("1 + z"));
    EXPECT_EQ(r.B, EnumeratorPolynomial::parse("1 + z"));

    r = oracle_enumerators(catalog_code("bell_2_2"));
    EXPECT_EQ(r.A, EnumeratorPolynomial::parse("1 + z^2"));
    EXPECT_EQ(r.B, EnumeratorPolynomial::parse("1 + 2z + 5z^2"));

    r = oracle_enumerators(catalog_code("full_2_4"));
    EXPECT_EQ(r.A, EnumeratorPolynomial::parse("1"));
    EXPECT_EQ(r.B, EnumeratorPolynomial::parse("1 + 6z + 9z^2"));
    EXPECT_LE(r.max_overlap_deviation, 1e-10);

    r = oracle_enumerators(catalog_code("five_qubit_5_2"));
    EXPECT_EQ(r.A, EnumeratorPolynomial::parse("1 + 15z^4"));
    EXPECT_EQ(r.B, EnumeratorPolynomial::parse("1 + 30z^3 + 15z^4 + 18z^5"));
}

TEST(dense_oracle, size_guard) {
    CwsCode big = catalog_code("cws_9_12_3");
    try {
        oracle_enumerators(big);
        FAIL() << "expected OracleTooLarge";
    } catch (const CodeError &e) {
        EXPECT_EQ(e.kind(), ErrorKind::OracleTooLarge);
    }
    OracleLimits raised = OracleLimits::raised_to(40);
    EXPECT_EQ(raised.max_qubits, kStateVectorMaxQubits);
    EXPECT_TRUE(raised.overridden);
}

TEST(dense_oracle, limits_from_environment) {
    ::unsetenv("CWSENUM_ORACLE_MAX_N");
    EXPECT_EQ(OracleLimits::from_environment().max_qubits, 6u);
    ::setenv("CWSENUM_ORACLE_MAX_N", "8", 1);
    EXPECT_EQ(OracleLimits::from_environment().max_qubits, 8u);
    ::setenv("CWSENUM_ORACLE_MAX_N", "eight", 1);
    EXPECT_THROW(OracleLimits::from_environment(), CodeError);
    ::unsetenv("CWSENUM_ORACLE_MAX_N");
}

TEST(dense_oracle, agrees_with_combinatorial_engines) {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 30; trial++) {
        size_t n = 1 + rng() % 4;
        size_t k = 1 + rng() % std::min<size_t>(8, size_t{1} << n);
        CwsCode code = cwsenum::testing::random_cws_code(rng, n, k);
        OracleResult r = oracle_enumerators(code);
        ASSERT_EQ(r.A, shor_laflamme_A(code)) << render_code_file(code_file_from(code));
        ASSERT_EQ(r.B, shor_laflamme_B(code));
        ASSERT_LE(r.max_overlap_deviation, 1e-10);
        ASSERT_LE(r.max_orthonormality_error, 1e-10);
    }
}

TEST(dense_oracle, generator_signs_do_not_change_trace_enumerators) {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 10; trial++) {
        size_t n = 1 + rng() % 4;
        size_t k = 1 + rng() % std::min<size_t>(4, size_t{1} << n);
        CwsCode code = cwsenum::testing::random_cws_code(rng, n, k);
        CodeFile file = code_file_from(code);
        file.stabilizer_signs[rng() % n] *= -1;
        OracleResult original = oracle_enumerators(code);
        OracleResult flipped = oracle_enumerators(build_code(file));
        ASSERT_EQ(original.A, flipped.A);
        ASSERT_EQ(original.B, flipped.B);
    }
}
