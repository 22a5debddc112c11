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

#ifndef CWSENUM_DENSE_ORACLE_H
#define CWSENUM_DENSE_ORACLE_H

#include <complex>
#include <vector>

#include "cwsenum/cws_code.h"
#include "cwsenum/enumerators.h"
#include "cwsenum/pauli.h"
#include "cwsenum/stabilizer.h"

namespace cwsenum {

// Brute-force evaluation of the trace definitions of A(z) and B(z) with
// explicit state vectors. Slow and floating point on purpose: it shares no
// code path with the combinatorial engines beyond Pauli bookkeeping.

/// Amplitudes over the computational basis; bit k of the index is qubit k.
struct DenseState {
    size_t num_qubits = 0;
    std::vector<std::complex<double>> amplitudes;

    double norm() const;
    std::complex<double> inner(const DenseState &other) const;  // <this|other>
};

/// The largest number of qubits a state vector may be built for.
inline constexpr size_t kStateVectorMaxQubits = 12;
/// Oracle coefficients snap to a rational with the expected denominator when
/// within this distance of it.
inline constexpr double kSnapTolerance = 1e-6;

struct OracleLimits {
    size_t max_qubits = 6;
    size_t max_dimension = 16;
    bool overridden = false;

    /// Raises max_qubits to `n` (at most kStateVectorMaxQubits) and lifts the
    /// dimension limit accordingly.
    static OracleLimits raised_to(size_t n);
    /// Defaults, or raised_to($CWSENUM_ORACLE_MAX_N) when that is set.
    static OracleLimits from_environment();
};

/// The state fixed by the group: prod_g (I + g)/2 applied to the first basis
/// state with a nonzero projection, then normalized.
DenseState statevector(const StabilizerGroup &group);

/// p|s>: |x> goes to i^l (-1)^(b.x) |x ^ a>.
DenseState apply_pauli(const PauliOperator &p, const DenseState &s);

/// The orthonormal basis T_i|phi> of the code space.
std::vector<DenseState> code_basis(const CwsCode &code);

struct OracleResult {
    EnumeratorPolynomial A;
    EnumeratorPolynomial B;
    /// Largest distance of any |<phi|T_j* E T_i|phi>| from the nearer of 0 and 1.
    double max_overlap_deviation = 0;
    /// Largest deviation of the code basis Gram matrix from the identity.
    double max_orthonormality_error = 0;
};

/// Evaluates A_i = 1/K^2 sum Tr(EP) Tr(E*P) and
/// B_i = 1/K sum_{i,j} |<phi|T_j* E T_i|phi>|^2 over all 4^n phase-free E,
/// then snaps the sums to multiples of 1/K^2 and 1/K.
///
/// Throws OracleTooLarge outside `limits` and SnapFailure when a coefficient
/// is not within kSnapTolerance of such a rational.
OracleResult oracle_enumerators(const CwsCode &code, const OracleLimits &limits = {});

}  // namespace cwsenum

#endif
