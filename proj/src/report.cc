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

#include "cwsenum/report.h"

#include <chrono>
#include <iomanip>
#include <sstream>

#include "cwsenum/errors.h"

namespace cwsenum {

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Rational power_of_two(size_t n) {
    mpz_class v = 1;
    v <<= n;
    return Rational(v);
}

bool dominates(const EnumeratorPolynomial &b, const EnumeratorPolynomial &a) {
    size_t len = std::max(a.coefficients().size(), b.coefficients().size());
    for (size_t i = 0; i < len; i++) {
        if (b.coefficient(i) < a.coefficient(i)) {
            return false;
        }
    }
    return true;
}

Check make_check(std::string name, bool pass, std::string detail = {}) {
    return {std::move(name), pass, false, std::move(detail)};
}

}  // namespace

std::string_view method_name(Method method) {
    switch (method) {
        case Method::Combinatorial:
            return "combinatorial";
        case Method::Pairwise:
            return "pairwise";
        case Method::Oracle:
            return "oracle";
    }
    return "unknown";
}

bool Report::passed() const {
    for (const auto &c : checks) {
        if (!c.skipped && !c.pass) {
            return false;
        }
    }
    return true;
}

Report compute_report(
    const CwsCode &code, EnumeratorChoice which, Method method, const OracleLimits &limits, std::string code_name) {
    auto start = Clock::now();
    Report report;
    report.code_name = std::move(code_name);
    report.num_qubits = code.num_qubits();
    report.dimension = code.dimension();
    report.method = method_name(method);
    report.warnings = code.warnings();
    if (limits.overridden && method == Method::Oracle) {
        report.warnings.push_back(
            "oracle size limit raised to n <= " + std::to_string(limits.max_qubits) + "; this may be slow");
    }

    bool want_a = which != EnumeratorChoice::B;
    bool want_b = which != EnumeratorChoice::A;
    switch (method) {
        case Method::Combinatorial:
            if (want_a) {
                report.A = shor_laflamme_A(code);
            }
            if (want_b) {
                report.B = shor_laflamme_B(code);
            }
            break;
        case Method::Pairwise: {
            EnumeratorPolynomial b = pairwise_B(code);
            if (want_a) {
                Rational m = Rational(static_cast<unsigned long>(code.dimension())) * power_of_two(code.num_qubits());
                report.A = macwilliams_transform(b, code.num_qubits(), m, 4);
            }
            if (want_b) {
                report.B = std::move(b);
            }
            break;
        }
        case Method::Oracle: {
            OracleResult r = oracle_enumerators(code, limits);
            if (want_a) {
                report.A = std::move(r.A);
            }
            if (want_b) {
                report.B = std::move(r.B);
            }
            break;
        }
    }
    if (report.A && report.B) {
        report.distance = quantum_distance(*report.A, *report.B);
    }
    report.elapsed_ms = millis_since(start);
    return report;
}

Report verify_report(const CwsCode &code, const OracleLimits &limits, std::string code_name) {
    auto start = Clock::now();
    Report report;
    report.code_name = std::move(code_name);
    report.num_qubits = code.num_qubits();
    report.dimension = code.dimension();
    report.method = "verify";
    report.warnings = code.warnings();

    size_t n = code.num_qubits();
    Rational k(static_cast<unsigned long>(code.dimension()));
    EnumeratorPolynomial a = shor_laflamme_A(code);
    EnumeratorPolynomial b = shor_laflamme_B(code);
    EnumeratorPolynomial b_pairwise = pairwise_B(code);

    report.checks.push_back(make_check(
        "B_equals_pairwise_distance_enumerator", b == b_pairwise, "pairwise: " + b_pairwise.str()));
    report.checks.push_back(make_check("normalization_A0_B0", a.coefficient(0) == 1 && b.coefficient(0) == 1));
    Rational expected_a1 = power_of_two(n) / k;
    Rational expected_b1 = power_of_two(n) * k;
    report.checks.push_back(make_check(
        "sum_rule_A", a.at_one() == expected_a1, "A(1) = " + a.at_one().get_str() + ", expected " + expected_a1.get_str()));
    report.checks.push_back(make_check(
        "sum_rule_B", b.at_one() == expected_b1, "B(1) = " + b.at_one().get_str() + ", expected " + expected_b1.get_str()));
    report.checks.push_back(make_check("domination_B_ge_A", dominates(b, a)));
    EnumeratorPolynomial transformed = macwilliams_transform(a, n, power_of_two(n) / k, 4);
    report.checks.push_back(make_check("macwilliams_q4_A_to_B", transformed == b, "transform: " + transformed.str()));

    if (n <= limits.max_qubits && code.dimension() <= limits.max_dimension) {
        OracleResult oracle = oracle_enumerators(code, limits);
        bool agree = oracle.A == a && oracle.B == b;
        report.checks.push_back(make_check("oracle_agreement", agree, "oracle A: " + oracle.A.str() + ", B: " + oracle.B.str()));
        std::ostringstream dev;
        dev << "max deviation " << oracle.max_overlap_deviation;
        report.checks.push_back(make_check("oracle_overlap_dichotomy", oracle.max_overlap_deviation <= 1e-10, dev.str()));
    } else {
        for (const char *name : {"oracle_agreement", "oracle_overlap_dichotomy"}) {
            report.checks.push_back({name, true, true, "code exceeds the oracle size limit"});
        }
    }

    report.A = std::move(a);
    report.B = std::move(b);
    report.distance = quantum_distance(*report.A, *report.B);
    report.elapsed_ms = millis_since(start);
    return report;
}

nlohmann::json polynomial_json(const EnumeratorPolynomial &p) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto &c : p.coefficients()) {
        out.push_back({c.get_num().get_str(), c.get_den().get_str()});
    }
    return out;
}

nlohmann::json report_json(const Report &report) {
    nlohmann::json out;
    if (!report.code_name.empty()) {
        out["code"] = report.code_name;
    }
    out["n"] = report.num_qubits;
    out["K"] = report.dimension;
    out["method"] = report.method;
    out["A"] = report.A ? polynomial_json(*report.A) : nlohmann::json(nullptr);
    out["B"] = report.B ? polynomial_json(*report.B) : nlohmann::json(nullptr);
    out["distance"] = report.distance ? nlohmann::json(*report.distance) : nlohmann::json(nullptr);
    out["integral_B"] = report.B ? nlohmann::json(is_integral(*report.B)) : nlohmann::json(nullptr);
    out["checks"] = nlohmann::json::array();
    for (const auto &c : report.checks) {
        nlohmann::json entry = {{"name", c.name}, {"pass", c.pass}};
        if (c.skipped) {
            entry["skipped"] = true;
        }
        out["checks"].push_back(entry);
    }
    out["warnings"] = report.warnings;
    out["elapsed_ms"] = report.elapsed_ms;
    return out;
}

std::string report_text(const Report &report, bool decimal) {
    std::ostringstream out;
    auto render = [decimal](const EnumeratorPolynomial &p) { return decimal ? p.decimal_str() : p.str(); };
    for (const auto &w : report.warnings) {
        out << "warning: " << w << "\n";
    }
    if (!report.code_name.empty()) {
        out << "code: " << report.code_name << "\n";
    }
    out << "n = " << report.num_qubits << ", K = " << report.dimension << ", method: " << report.method << "\n";
    if (report.A) {
        out << "A(z) = " << render(*report.A) << "\n";
    }
    if (report.B) {
        out << "B(z) = " << render(*report.B) << "\n";
        out << "B integral: " << (is_integral(*report.B) ? "yes" : "no") << "\n";
    }
    if (report.A && report.B) {
        out << "distance: " << (report.distance ? std::to_string(*report.distance) : std::string("none")) << "\n";
    }
    if (!report.checks.empty()) {
        size_t width = 0;
        for (const auto &c : report.checks) {
            width = std::max(width, c.name.size());
        }
        for (const auto &c : report.checks) {
            const char *status = c.skipped ? "SKIP" : c.pass ? "PASS" : "FAIL";
            out << "  [" << status << "] " << std::left << std::setw(static_cast<int>(width)) << c.name;
            if (!c.detail.empty()) {
                out << "  " << c.detail;
            }
            out << "\n";
        }
        out << (report.passed() ? "all checks passed" : "verification FAILED") << "\n";
    }
    out << "elapsed: " << std::fixed << std::setprecision(1) << report.elapsed_ms << " ms\n";
    return out.str();
}

}  // namespace cwsenum
