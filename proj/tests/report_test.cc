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

#include "cwsenum/catalog.h"
#include "cwsenum/code_file.h"
#include "cwsenum/errors.h"
#include "gtest/gtest.h"

using namespace cwsenum;

static CwsCode catalog_code(std::string_view name) {
    return build_code(parse_code_file(*catalog_text(name)));
}

TEST(report, compute_methods_agree_on_bell_code) {
    CwsCode bell = catalog_code("bell_2_2");
    for (Method m : {Method::Combinatorial, Method::Pairwise, Method::Oracle}) {
        Report r = compute_report(bell, EnumeratorChoice::Both, m);
        ASSERT_TRUE(r.A && r.B) << method_name(m);
        EXPECT_EQ(r.A->str(), "1 + z^2") << method_name(m);
        EXPECT_EQ(r.B->str(), "1 + 2z + 5z^2") << method_name(m);
        EXPECT_EQ(r.distance, 1u);
    }
    Report only_b = compute_report(bell, EnumeratorChoice::B, Method::Combinatorial);
    EXPECT_FALSE(only_b.A);
    EXPECT_FALSE(only_b.distance);
}

TEST(report, json_schema) {
    Report r = compute_report(catalog_code("cws_9_12_3"), EnumeratorChoice::Both, Method::Combinatorial, {}, "cws_9_12_3");
    nlohmann::json j = report_json(r);
    EXPECT_EQ(j["n"], 9);
    EXPECT_EQ(j["K"], 12);
    EXPECT_EQ(j["method"], "combinatorial");
    EXPECT_EQ(j["distance"], 3);
    EXPECT_EQ(j["A"][4], nlohmann::json::array({"2", "3"}));
    EXPECT_EQ(j["B"][9], nlohmann::json::array({"468", "1"}));
    EXPECT_TRUE(j["checks"].is_array());
    EXPECT_TRUE(j["elapsed_ms"].is_number());

    Report b_only = compute_report(catalog_code("bell_2_2"), EnumeratorChoice::B, Method::Combinatorial);
    nlohmann::json jb = report_json(b_only);
    EXPECT_TRUE(jb["A"].is_null());
    EXPECT_TRUE(jb["distance"].is_null());
}

TEST(report, verify_passes_on_catalog) {
    for (const auto &entry : catalog_entries()) {
        Report r = verify_report(catalog_code(entry.name));
        EXPECT_TRUE(r.passed()) << entry.name << "\n" << report_text(r);
        EXPECT_EQ(r.checks.size(), 8u);
    }
    Report big = verify_report(catalog_code("cws_9_12_3"));
    EXPECT_EQ(big.distance, 3u);
    EXPECT_TRUE(big.checks.back().skipped);
    std::string text = report_text(big);
    EXPECT_NE(text.find("A(z) = 1 + 2/3 z^4 + 32/3 z^6 + 64/3 z^7 + 9z^8"), std::string::npos);
    EXPECT_NE(text.find("[SKIP] oracle_agreement"), std::string::npos);
}

TEST(report, oracle_method_respects_guard) {
    EXPECT_THROW(
        compute_report(catalog_code("cws_9_12_3"), EnumeratorChoice::Both, Method::Oracle), CodeError);
}
