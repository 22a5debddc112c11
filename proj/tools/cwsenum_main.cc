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

#include <filesystem>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "cwsenum/catalog.h"
#include "cwsenum/code_file.h"
#include "cwsenum/enumerators.h"
#include "cwsenum/errors.h"
#include "cwsenum/report.h"

using namespace cwsenum;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;

struct CodeSource {
    std::string name;
    std::string text;
};

/// A path on disk, or else the name of a catalog entry.
CodeSource resolve_code(const std::string &spec) {
    if (std::filesystem::is_regular_file(spec)) {
        return {std::filesystem::path(spec).stem().string(), read_text_file(spec)};
    }
    if (auto text = catalog_text(spec)) {
        return {std::filesystem::path(spec).stem().string(), std::string(*text)};
    }
    throw CodeError(ErrorKind::UnknownName, "no file or catalog entry named '" + spec + "'");
}

OracleLimits limits_for(size_t oracle_max_n) {
    if (oracle_max_n > 0) {
        return OracleLimits::raised_to(oracle_max_n);
    }
    return OracleLimits::from_environment();
}

CwsCode load(const CodeSource &source, bool allow_noncommuting) {
    CodeFile file = parse_code_file(source.text);
    for (const auto &w : file.warnings) {
        std::cerr << "warning: " << w << "\n";
    }
    return build_code(file, BuildOptions{allow_noncommuting});
}

void emit(const Report &report, const std::string &format, bool decimal) {
    if (format == "json") {
        std::cout << report_json(report).dump(2) << "\n";
    } else {
        std::cout << report_text(report, decimal);
    }
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Shor-Laflamme weight enumerators of codeword stabilized quantum codes"};
    app.require_subcommand(1);

    std::string code_spec;
    std::string which = "both";
    std::string method = "combinatorial";
    std::string format = "text";
    bool decimal = false;
    bool allow_noncommuting = false;
    size_t oracle_max_n = 0;

    auto add_code_options = [&](CLI::App *cmd) {
        cmd->add_option("--code", code_spec, "Path to a .cws file or a catalog name")->required();
        cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--oracle-max-n", oracle_max_n, "Raise the dense oracle qubit limit (max 12)");
        cmd->add_flag("--allow-noncommuting-words", allow_noncommuting, "Only warn about anticommuting words");
        cmd->add_flag("--decimal", decimal, "Show decimal approximations instead of exact rationals");
    };

    auto *compute = app.add_subcommand("compute", "Compute A(z) and/or B(z)");
    add_code_options(compute);
    compute->add_option("--enumerator", which, "Which enumerator")->check(CLI::IsMember({"A", "B", "both"}));
    compute->add_option("--method", method, "Computation path")
        ->check(CLI::IsMember({"combinatorial", "pairwise", "oracle"}));

    auto *verify = app.add_subcommand("verify", "Cross-check all computation paths and identities");
    add_code_options(verify);

    std::string poly_text;
    size_t mw_n = 0;
    std::string mw_m;
    unsigned mw_q = 2;
    auto *macwilliams = app.add_subcommand("macwilliams", "Apply the MacWilliams transform to a polynomial");
    macwilliams->add_option("polynomial", poly_text, "e.g. '1 + z^2' or '1, 0, 1'")->required();
    macwilliams->add_option("--n", mw_n, "Length n")->required();
    macwilliams->add_option("--M", mw_m, "Code size M (rational, e.g. 512/12)")->required();
    macwilliams->add_option("--q", mw_q, "Alphabet size");
    macwilliams->add_flag("--decimal", decimal, "Show decimal approximations");

    auto *catalog = app.add_subcommand("catalog", "List or show the built-in codes");
    catalog->require_subcommand(1);
    auto *catalog_list = catalog->add_subcommand("list", "List built-in codes with (n, K, d)");
    std::string show_name;
    auto *catalog_show = catalog->add_subcommand("show", "Print a built-in code file");
    catalog_show->add_option("name", show_name)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (compute->parsed()) {
            CodeSource source = resolve_code(code_spec);
            CwsCode code = load(source, allow_noncommuting);
            static const std::map<std::string, EnumeratorChoice> choices = {
                {"A", EnumeratorChoice::A}, {"B", EnumeratorChoice::B}, {"both", EnumeratorChoice::Both}};
            static const std::map<std::string, Method> methods = {
                {"combinatorial", Method::Combinatorial}, {"pairwise", Method::Pairwise}, {"oracle", Method::Oracle}};
            Report report = compute_report(code, choices.at(which), methods.at(method), limits_for(oracle_max_n), source.name);
            emit(report, format, decimal);
            return kExitOk;
        }
        if (verify->parsed()) {
            CodeSource source = resolve_code(code_spec);
            CwsCode code = load(source, allow_noncommuting);
            Report report = verify_report(code, limits_for(oracle_max_n), source.name);
            emit(report, format, decimal);
            return report.passed() ? kExitOk : kExitFailed;
        }
        if (macwilliams->parsed()) {
            EnumeratorPolynomial p = EnumeratorPolynomial::parse(poly_text);
            EnumeratorPolynomial m = EnumeratorPolynomial::parse(mw_m);
            if (m.degree_bound() != 0) {
                throw CodeError(ErrorKind::Syntax, "M must be a number");
            }
            EnumeratorPolynomial out = macwilliams_transform(p, mw_n, m.coefficient(0), mw_q);
            std::cout << (decimal ? out.decimal_str() : out.str()) << "\n";
            return kExitOk;
        }
        if (catalog_list->parsed()) {
            for (const auto &entry : catalog_entries()) {
                CwsCode code = build_code(parse_code_file(entry.text));
                auto d = quantum_distance(shor_laflamme_A(code), shor_laflamme_B(code));
                std::cout << entry.name << " ((" << code.num_qubits() << "," << code.dimension() << ","
                          << (d ? std::to_string(*d) : std::string("-")) << "))"
                          << (is_additive(code) ? "" : " nonadditive") << "\n";
            }
            return kExitOk;
        }
        if (catalog_show->parsed()) {
            auto text = catalog_text(show_name);
            if (!text) {
                throw CodeError(ErrorKind::UnknownName, "no catalog entry named '" + show_name + "'");
            }
            std::cout << *text;
            return kExitOk;
        }
    } catch (const CodeError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
