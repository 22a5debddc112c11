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

#include "random_codes.h"

#include <set>
#include <stdexcept>

namespace cwsenum::testing {

BinaryVector random_vector(std::mt19937_64 &rng, size_t num_bits) {
    BinaryVector v(num_bits);
    for (size_t k = 0; k < num_bits; k++) {
        v.set(k, rng() & 1);
    }
    return v;
}

RandomStabilizerRows random_stabilizer_rows(std::mt19937_64 &rng, size_t n) {
    std::vector<std::vector<bool>> adjacency(n, std::vector<bool>(n, false));
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) {
            adjacency[i][j] = adjacency[j][i] = rng() & 1;
        }
    }
    Gf2Matrix rows;
    for (size_t i = 0; i < n; i++) {
        BinaryVector r(2 * n);
        r.set(i, true);
        for (size_t j = 0; j < n; j++) {
            r.set(n + j, adjacency[i][j]);
        }
        rows.push_back(std::move(r));
    }

    // Invertible 2x2 maps over GF(2) act on (a_k, b_k) and preserve the form.
    static constexpr int maps[6][4] = {
        {1, 0, 0, 1}, {0, 1, 1, 0}, {1, 1, 0, 1}, {1, 0, 1, 1}, {0, 1, 1, 1}, {1, 1, 1, 0}};
    for (size_t q = 0; q < n; q++) {
        const int *m = maps[rng() % 6];
        for (auto &r : rows) {
            bool a = r[q];
            bool b = r[n + q];
            r.set(q, (m[0] & a) ^ (m[1] & b));
            r.set(n + q, (m[2] & a) ^ (m[3] & b));
        }
    }

    if (n > 1) {
        for (size_t step = 0; step < 4 * n; step++) {
            size_t i = rng() % n;
            size_t j = rng() % n;
            if (i != j) {
                rows[i] ^= rows[j];
            }
        }
    }

    RandomStabilizerRows out;
    out.rows = std::move(rows);
    for (size_t i = 0; i < n; i++) {
        out.signs.push_back(rng() & 1 ? -1 : 1);
    }
    return out;
}

std::optional<CwsCode> try_random_cws_code(std::mt19937_64 &rng, size_t n, size_t k) {
    auto stab = random_stabilizer_rows(rng, n);
    RowReduction d = row_reduce(stab.rows);

    Gf2Matrix words{BinaryVector(2 * n)};
    std::set<BinaryVector> keys{BinaryVector(2 * n)};
    for (size_t attempt = 0; words.size() < k && attempt < 20000; attempt++) {
        BinaryVector candidate = random_vector(rng, 2 * n);
        BinaryVector key = reduce_modulo(candidate, d.basis);
        if (keys.contains(key)) {
            continue;
        }
        bool ok = true;
        for (const auto &w : words) {
            if (symplectic_product(w, candidate)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            keys.insert(key);
            words.push_back(std::move(candidate));
        }
    }
    if (words.size() < k) {
        return std::nullopt;
    }
    return CwsCode::build(n, stab.rows, words, stab.signs);
}

CwsCode random_cws_code(std::mt19937_64 &rng, size_t n, size_t k) {
    for (int attempt = 0; attempt < 1000; attempt++) {
        if (auto code = try_random_cws_code(rng, n, k)) {
            return std::move(*code);
        }
    }
    throw std::runtime_error("could not sample a CWS code");
}

}  // namespace cwsenum::testing
