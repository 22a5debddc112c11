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

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <sstream>

#include "cwsenum/errors.h"

namespace cwsenum {

namespace {

Rational parse_rational(std::string_view text) {
    if (text.empty()) {
        throw CodeError(ErrorKind::Syntax, "missing coefficient");
    }
    size_t slash = text.find('/');
    auto digits_ok = [](std::string_view s, bool allow_sign) {
        if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) {
            s.remove_prefix(1);
        }
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    };
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
    if (!digits_ok(num, true) || (slash != std::string_view::npos && !digits_ok(den, false))) {
        throw CodeError(ErrorKind::Syntax, "malformed rational '" + std::string(text) + "'");
    }
    std::string num_str(num.starts_with('+') ? num.substr(1) : num);
    mpz_class n(num_str, 10);
    mpz_class d = 1;
    if (slash != std::string_view::npos) {
        d = mpz_class(std::string(den), 10);
        if (d == 0) {
            throw CodeError(ErrorKind::Syntax, "zero denominator in '" + std::string(text) + "'");
        }
    }
    Rational r(n, d);
    r.canonicalize();
    return r;
}

size_t parse_power(std::string_view text) {
    if (text.empty()) {
        return 1;
    }
    if (text[0] != '^' || text.size() == 1 ||
        !std::all_of(text.begin() + 1, text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw CodeError(ErrorKind::Syntax, "malformed power '" + std::string(text) + "'");
    }
    return std::stoul(std::string(text.substr(1)));
}

std::string render(const std::vector<Rational> &coefficients, bool decimal) {
    auto magnitude = [&](const Rational &c) {
        if (!decimal) {
            return c.get_str();
        }
        std::ostringstream out;
        out << std::setprecision(10) << c.get_d();
        return out.str();
    };
    std::string out = coefficients.empty() ? "0" : magnitude(coefficients[0]);
    for (size_t i = 1; i < coefficients.size(); i++) {
        const Rational &c = coefficients[i];
        if (sgn(c) == 0) {
            continue;
        }
        out += sgn(c) < 0 ? " - " : " + ";
        Rational a = abs(c);
        std::string zpart = i == 1 ? "z" : "z^" + std::to_string(i);
        if (a == 1) {
            out += zpart;
        } else if (!decimal && a.get_den() == 1) {
            out += a.get_str() + zpart;
        } else {
            out += magnitude(a) + " " + zpart;
        }
    }
    return out;
}

size_t metric_weight(const BinaryVector &v, Metric metric) {
    return metric == Metric::Hamming ? hamming_weight(v) : symplectic_weight(v);
}

size_t metric_distance(const BinaryVector &u, const BinaryVector &v, Metric metric) {
    return metric == Metric::Hamming ? hamming_distance(u, v) : symplectic_distance(u, v);
}

size_t metric_degree(const BinaryVector &v, Metric metric) {
    return metric == Metric::Hamming ? v.size() : v.num_qubits();
}

void require_uniform(std::span<const BinaryVector> codewords) {
    if (codewords.empty()) {
        throw CodeError(ErrorKind::EmptyCode, "code has no codewords");
    }
    for (const auto &c : codewords) {
        if (c.size() != codewords.front().size()) {
            throw CodeError(ErrorKind::LengthMismatch, "codewords of mixed length");
        }
    }
}

std::vector<mpz_class> to_mpz(const std::vector<uint64_t> &counts) {
    std::vector<mpz_class> out;
    out.reserve(counts.size());
    for (uint64_t c : counts) {
        mpz_class z;
        mpz_import(z.get_mpz_t(), 1, 1, sizeof(c), 0, 0, &c);
        out.push_back(std::move(z));
    }
    return out;
}

}  // namespace

EnumeratorPolynomial::EnumeratorPolynomial(size_t degree_bound) : coefficients_(degree_bound + 1, Rational(0)) {
}

EnumeratorPolynomial::EnumeratorPolynomial(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) {
    for (auto &c : coefficients_) {
        c.canonicalize();
    }
}

EnumeratorPolynomial EnumeratorPolynomial::from_counts(std::span<const mpz_class> counts, const mpz_class &denominator) {
    std::vector<Rational> coefficients;
    coefficients.reserve(counts.size());
    for (const auto &c : counts) {
        coefficients.emplace_back(c, denominator);
    }
    return EnumeratorPolynomial(std::move(coefficients));
}

Rational EnumeratorPolynomial::coefficient(size_t i) const {
    return i < coefficients_.size() ? coefficients_[i] : Rational(0);
}

void EnumeratorPolynomial::set_coefficient(size_t i, Rational value) {
    if (i >= coefficients_.size()) {
        coefficients_.resize(i + 1, Rational(0));
    }
    value.canonicalize();
    coefficients_[i] = std::move(value);
}

Rational EnumeratorPolynomial::at_one() const {
    Rational total = 0;
    for (const auto &c : coefficients_) {
        total += c;
    }
    return total;
}

std::string EnumeratorPolynomial::str() const {
    return render(coefficients_, false);
}

std::string EnumeratorPolynomial::decimal_str() const {
    return render(coefficients_, true);
}

EnumeratorPolynomial EnumeratorPolynomial::parse(std::string_view text) {
    std::string compact;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            compact.push_back(c);
        }
    }
    if (compact.empty()) {
        throw CodeError(ErrorKind::Syntax, "empty polynomial");
    }

    EnumeratorPolynomial result;
    if (compact.front() == '[' || compact.find(',') != std::string::npos) {
        std::string_view body = compact;
        if (body.front() == '[') {
            if (body.back() != ']') {
                throw CodeError(ErrorKind::Syntax, "unterminated coefficient list");
            }
            body = body.substr(1, body.size() - 2);
        }
        size_t index = 0;
        while (true) {
            size_t comma = body.find(',');
            result.set_coefficient(index++, parse_rational(body.substr(0, comma)));
            if (comma == std::string_view::npos) {
                break;
            }
            body.remove_prefix(comma + 1);
        }
        return result;
    }

    std::string_view rest = compact;
    while (!rest.empty()) {
        bool negative = false;
        if (rest.front() == '+' || rest.front() == '-') {
            negative = rest.front() == '-';
            rest.remove_prefix(1);
        }
        size_t end = rest.find_first_of("+-");
        std::string_view term = rest.substr(0, end);
        rest = end == std::string_view::npos ? std::string_view{} : rest.substr(end);
        if (term.empty()) {
            throw CodeError(ErrorKind::Syntax, "empty term in polynomial");
        }

        Rational coefficient = 1;
        size_t power = 0;
        size_t zpos = term.find('z');
        if (zpos == std::string_view::npos) {
            coefficient = parse_rational(term);
        } else {
            std::string_view coef_text = term.substr(0, zpos);
            if (coef_text.ends_with('*')) {
                coef_text.remove_suffix(1);
            }
            if (!coef_text.empty()) {
                coefficient = parse_rational(coef_text);
            }
            power = parse_power(term.substr(zpos + 1));
        }
        if (negative) {
            coefficient = -coefficient;
        }
        result.set_coefficient(power, result.coefficient(power) + coefficient);
    }
    return result;
}

bool EnumeratorPolynomial::operator==(const EnumeratorPolynomial &other) const {
    size_t len = std::max(coefficients_.size(), other.coefficients_.size());
    for (size_t i = 0; i < len; i++) {
        if (coefficient(i) != other.coefficient(i)) {
            return false;
        }
    }
    return true;
}

EnumeratorPolynomial distance_enumerator(std::span<const BinaryVector> codewords, Metric metric) {
    require_uniform(codewords);
    size_t degree = metric_degree(codewords.front(), metric);
    std::vector<uint64_t> counts(degree + 1, 0);
    size_t m = codewords.size();
    counts[0] += m;
    for (size_t i = 0; i < m; i++) {
        for (size_t j = i + 1; j < m; j++) {
            counts[metric_distance(codewords[i], codewords[j], metric)] += 2;
        }
    }
    auto exact = to_mpz(counts);
    return EnumeratorPolynomial::from_counts(exact, mpz_class(static_cast<unsigned long>(m)));
}

EnumeratorPolynomial weight_distribution(std::span<const BinaryVector> codewords, Metric metric) {
    require_uniform(codewords);
    std::vector<uint64_t> counts(metric_degree(codewords.front(), metric) + 1, 0);
    for (const auto &c : codewords) {
        counts[metric_weight(c, metric)]++;
    }
    auto exact = to_mpz(counts);
    return EnumeratorPolynomial::from_counts(exact, 1);
}

EnumeratorPolynomial shor_laflamme_A(const CwsCode &code) {
    size_t n = code.num_qubits();
    const auto &words = code.words();
    std::vector<mpz_class> counts(n + 1, 0);
    for (const auto &e : code.stabilizer().element_bodies()) {
        long sign_sum = 0;
        for (const auto &t : words) {
            sign_sum += symplectic_product(e, t) ? -1 : 1;
        }
        counts[symplectic_weight(e)] += mpz_class(sign_sum) * sign_sum;
    }
    mpz_class k(static_cast<unsigned long>(words.size()));
    return EnumeratorPolynomial::from_counts(counts, k * k);
}

EnumeratorPolynomial shor_laflamme_B(const CwsCode &code) {
    size_t n = code.num_qubits();
    const auto &words = code.words();
    Gf2Matrix span = code.stabilizer().element_bodies();
    std::vector<uint64_t> counts(n + 1, 0);
    for (const auto &ti : words) {
        for (const auto &tj : words) {
            BinaryVector sum = ti ^ tj;
            for (const auto &w : span) {
                counts[symplectic_distance(sum, w)]++;
            }
        }
    }
    auto exact = to_mpz(counts);
    return EnumeratorPolynomial::from_counts(exact, mpz_class(static_cast<unsigned long>(words.size())));
}

EnumeratorPolynomial pairwise_B(const CwsCode &code) {
    Gf2Matrix codewords = classical_code(code).codewords();
    return distance_enumerator(codewords, Metric::Symplectic);
}

EnumeratorPolynomial macwilliams_transform(
    const EnumeratorPolynomial &p, size_t n, const Rational &code_size, unsigned alphabet_size) {
    if (sgn(code_size) == 0) {
        throw CodeError(ErrorKind::ZeroSize, "code size M must be nonzero");
    }
    if (alphabet_size < 2) {
        throw CodeError(ErrorKind::ZeroSize, "alphabet size q must be at least 2");
    }
    for (size_t i = n + 1; i < p.coefficients().size(); i++) {
        if (sgn(p.coefficients()[i]) != 0) {
            throw CodeError(ErrorKind::LengthMismatch, "polynomial degree exceeds n = " + std::to_string(n));
        }
    }

    // powers_minus[i] = (1 - z)^i, powers_plus[i] = (1 + (q-1) z)^i
    auto power_table = [n](long linear) {
        std::vector<std::vector<mpz_class>> table(n + 1);
        table[0] = {1};
        for (size_t i = 1; i <= n; i++) {
            table[i].assign(i + 1, 0);
            for (size_t k = 0; k < i; k++) {
                table[i][k] += table[i - 1][k];
                table[i][k + 1] += table[i - 1][k] * linear;
            }
        }
        return table;
    };
    auto minus = power_table(-1);
    auto plus = power_table(static_cast<long>(alphabet_size) - 1);

    std::vector<Rational> out(n + 1, Rational(0));
    for (size_t i = 0; i <= n; i++) {
        Rational c = p.coefficient(i);
        if (sgn(c) == 0) {
            continue;
        }
        const auto &left = minus[i];
        const auto &right = plus[n - i];
        for (size_t a = 0; a < left.size(); a++) {
            for (size_t b = 0; b < right.size(); b++) {
                out[a + b] += c * Rational(left[a] * right[b]);
            }
        }
    }
    for (auto &c : out) {
        c /= code_size;
    }
    return EnumeratorPolynomial(std::move(out));
}

std::optional<size_t> quantum_distance(const EnumeratorPolynomial &a, const EnumeratorPolynomial &b) {
    size_t len = std::max(a.coefficients().size(), b.coefficients().size());
    for (size_t i = 1; i < len; i++) {
        if (b.coefficient(i) > a.coefficient(i)) {
            return i;
        }
    }
    return std::nullopt;
}

std::optional<size_t> classical_distance(const EnumeratorPolynomial &p) {
    for (size_t i = 1; i < p.coefficients().size(); i++) {
        if (sgn(p.coefficients()[i]) != 0) {
            return i;
        }
    }
    return std::nullopt;
}

bool is_integral(const EnumeratorPolynomial &p) {
    return std::all_of(
        p.coefficients().begin(), p.coefficients().end(), [](const Rational &c) { return c.get_den() == 1; });
}

}  // namespace cwsenum
