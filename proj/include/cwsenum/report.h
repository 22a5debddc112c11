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

#ifndef CWSENUM_REPORT_H
#define CWSENUM_REPORT_H

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cwsenum/cws_code.h"
#include "cwsenum/dense_oracle.h"
#include "cwsenum/enumerators.h"
#include "json.hpp"

namespace cwsenum {

enum class Method { Combinatorial, Pairwise, Oracle };
enum class EnumeratorChoice { A, B, Both };

std::string_view method_name(Method method);

struct Check {
    std::string name;
    bool pass = false;
    bool skipped = false;
    std::string detail;
};

struct Report {
    std::string code_name;
    size_t num_qubits = 0;
    size_t dimension = 0;
    std::string method;
    std::optional<EnumeratorPolynomial> A;
    std::optional<EnumeratorPolynomial> B;
    std::optional<size_t> distance;
    std::vector<Check> checks;
    std::vector<std::string> warnings;
    double elapsed_ms = 0;

    /// True when no check failed (skipped checks do not count against it).
    bool passed() const;
};

/// Enumerators by one method. For the pairwise method B is the full pairwise
/// distance enumerator of TS and A is recovered from it by the inverse
/// quaternary MacWilliams transform (M = K 2^n).
Report compute_report(
    const CwsCode &code, EnumeratorChoice which, Method method, const OracleLimits &limits = {},
    std::string code_name = {});

/// Cross-checks every computation path and the enumerator identities.
/// The oracle comparison is skipped, not failed, when the code is outside
/// `limits`.
Report verify_report(const CwsCode &code, const OracleLimits &limits = {}, std::string code_name = {});

/// {"n", "K", "method", "A", "B", "distance", "checks", "elapsed_ms", ...}
/// with coefficients as [["num", "den"], ...].
nlohmann::json report_json(const Report &report);
std::string report_text(const Report &report, bool decimal = false);

nlohmann::json polynomial_json(const EnumeratorPolynomial &p);

}  // namespace cwsenum

#endif
