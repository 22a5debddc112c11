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

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <string>

#include "cwsenum/errors.h"

namespace cwsenum {

namespace {

using Complex = std::complex<double>;

constexpr Complex kPhases[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

Rational snap(double value, const mpz_class &denominator, size_t index) {
    double scaled = value * denominator.get_d();
    double rounded = std::round(scaled);
    if (std::abs(value - rounded / denominator.get_d()) > kSnapTolerance || rounded < 0) {
        throw CodeError(
            ErrorKind::SnapFailure,
            "coefficient " + std::to_string(index) + " = " + std::to_string(value) +
                " is not a multiple of 1/" + denominator.get_str(),
            {index});
    }
    Rational r(mpz_class(static_cast<long>(rounded)), denominator);
    r.canonicalize();
    return r;
}

}  // namespace

double DenseState::norm() const {
    double total = 0;
    for (const auto &a : amplitudes) {
        total += std::norm(a);
    }
    return std::sqrt(total);
}

Complex DenseState::inner(const DenseState &other) const {
    Complex total = 0;
    for (size_t k = 0; k < amplitudes.size(); k++) {
        total += std::conj(amplitudes[k]) * other.amplitudes[k];
    }
    return total;
}

OracleLimits OracleLimits::raised_to(size_t n) {
    OracleLimits limits;
    limits.max_qubits = std::min(n, kStateVectorMaxQubits);
    limits.max_dimension = size_t{1} << limits.max_qubits;
    limits.overridden = true;
    return limits;
}

OracleLimits OracleLimits::from_environment() {
    const char *value = std::getenv("CWSENUM_ORACLE_MAX_N");
    if (value == nullptr || *value == '\0') {
        return {};
    }
    char *end = nullptr;
    unsigned long n = std::strtoul(value, &end, 10);
    if (*end != '\0') {
        throw CodeError(ErrorKind::Syntax, "CWSENUM_ORACLE_MAX_N must be an integer");
    }
    return raised_to(n);
}

DenseState apply_pauli(const PauliOperator &p, const DenseState &s) {
    size_t n = s.num_qubits;
    if (p.body.size() != 2 * n) {
        throw CodeError(ErrorKind::LengthMismatch, "operator and state differ in qubit count");
    }
    uint64_t x_mask = p.body.bits_at(0, n);
    uint64_t z_mask = p.body.bits_at(n, n);
    Complex phase = kPhases[p.phase_exp & 3];
    DenseState out{n, std::vector<Complex>(s.amplitudes.size())};
    for (uint64_t x = 0; x < s.amplitudes.size(); x++) {
        Complex a = s.amplitudes[x] * phase;
        out.amplitudes[x ^ x_mask] = (std::popcount(x & z_mask) & 1) ? -a : a;
    }
    return out;
}

DenseState statevector(const StabilizerGroup &group) {
    size_t n = group.num_qubits();
    if (n > kStateVectorMaxQubits) {
        throw CodeError(ErrorKind::OracleTooLarge, std::to_string(n) + " qubits is too many for a state vector");
    }
    size_t dim = size_t{1} << n;
    for (size_t seed = 0; seed < dim; seed++) {
        DenseState state{n, std::vector<Complex>(dim, 0)};
        state.amplitudes[seed] = 1;
        for (const auto &g : group.generators()) {
            DenseState moved = apply_pauli(g, state);
            for (size_t k = 0; k < dim; k++) {
                state.amplitudes[k] = (state.amplitudes[k] + moved.amplitudes[k]) * 0.5;
            }
        }
        double norm = state.norm();
        // A nonzero projection of a basis state has squared norm at least 2^-n.
        if (norm * norm < 0.5 / static_cast<double>(dim)) {
            continue;
        }
        for (auto &a : state.amplitudes) {
            a /= norm;
        }
        return state;
    }
    throw CodeError(ErrorKind::NullProjection, "no basis state has a nonzero projection onto the group");
}

std::vector<DenseState> code_basis(const CwsCode &code) {
    DenseState phi = statevector(code.stabilizer());
    std::vector<DenseState> basis;
    basis.reserve(code.dimension());
    for (const auto &t : code.words()) {
        basis.push_back(apply_pauli(canonical_hermitian(t), phi));
    }
    return basis;
}

OracleResult oracle_enumerators(const CwsCode &code, const OracleLimits &limits) {
    size_t n = code.num_qubits();
    size_t k = code.dimension();
    if (n > limits.max_qubits || k > limits.max_dimension) {
        throw CodeError(
            ErrorKind::OracleTooLarge, "oracle limited to n <= " + std::to_string(limits.max_qubits) + " and K <= " +
                                           std::to_string(limits.max_dimension) + "; got n = " + std::to_string(n) +
                                           ", K = " + std::to_string(k));
    }

    OracleResult result;
    std::vector<DenseState> basis = code_basis(code);
    for (size_t i = 0; i < k; i++) {
        for (size_t j = 0; j < k; j++) {
            double expected = i == j ? 1.0 : 0.0;
            result.max_orthonormality_error =
                std::max(result.max_orthonormality_error, std::abs(basis[i].inner(basis[j]) - expected));
        }
    }

    std::vector<double> a_sums(n + 1, 0.0);
    std::vector<double> b_sums(n + 1, 0.0);
    uint64_t num_bodies = uint64_t{1} << (2 * n);
    for (uint64_t bits = 0; bits < num_bodies; bits++) {
        BinaryVector body(2 * n);
        for (size_t q = 0; q < 2 * n; q++) {
            body.set(q, (bits >> q) & 1);
        }
        PauliOperator e{0, body};
        PauliOperator e_dagger = adjoint(e);
        size_t weight = symplectic_weight(body);

        std::vector<DenseState> moved;
        moved.reserve(k);
        for (const auto &psi : basis) {
            moved.push_back(apply_pauli(e, psi));
        }

        Complex trace_e = 0;
        Complex trace_e_dagger = 0;
        double b_term = 0;
        for (size_t j = 0; j < k; j++) {
            for (size_t i = 0; i < k; i++) {
                Complex overlap = basis[j].inner(moved[i]);
                double magnitude = std::abs(overlap);
                result.max_overlap_deviation =
                    std::max(result.max_overlap_deviation, std::min(magnitude, std::abs(magnitude - 1.0)));
                b_term += std::norm(overlap);
                if (i == j) {
                    trace_e += overlap;
                }
            }
            trace_e_dagger += basis[j].inner(apply_pauli(e_dagger, basis[j]));
        }
        a_sums[weight] += (trace_e * trace_e_dagger).real();
        b_sums[weight] += b_term;
    }

    mpz_class kk(static_cast<unsigned long>(k));
    mpz_class k_squared = kk * kk;
    std::vector<Rational> a_coefficients;
    std::vector<Rational> b_coefficients;
    for (size_t w = 0; w <= n; w++) {
        a_coefficients.push_back(snap(a_sums[w] / k_squared.get_d(), k_squared, w));
        b_coefficients.push_back(snap(b_sums[w] / kk.get_d(), kk, w));
    }
    result.A = EnumeratorPolynomial(std::move(a_coefficients));
    result.B = EnumeratorPolynomial(std::move(b_coefficients));
    return result;
}

}  // namespace cwsenum
