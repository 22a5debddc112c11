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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cwsenum/catalog.h"
#include "cwsenum/code_file.h"
#include "cwsenum/cws_code.h"
#include "cwsenum/dense_oracle.h"
#include "cwsenum/enumerators.h"
#include "cwsenum/errors.h"
#include "cwsenum/report.h"

namespace py = pybind11;
using namespace cwsenum;

namespace {

using RationalPair = std::pair<std::string, std::string>;

std::vector<RationalPair> to_pairs(const EnumeratorPolynomial &p) {
    std::vector<RationalPair> out;
    for (const auto &c : p.coefficients()) {
        out.emplace_back(c.get_num().get_str(), c.get_den().get_str());
    }
    return out;
}

Rational from_pair(const RationalPair &pair) {
    Rational r(mpz_class(pair.first), mpz_class(pair.second));
    r.canonicalize();
    return r;
}

EnumeratorPolynomial from_pairs(const std::vector<RationalPair> &pairs) {
    std::vector<Rational> coefficients;
    for (const auto &pair : pairs) {
        coefficients.push_back(from_pair(pair));
    }
    return EnumeratorPolynomial(std::move(coefficients));
}

Gf2Matrix parse_rows(const std::vector<std::string> &rows) {
    Gf2Matrix out;
    for (const auto &r : rows) {
        out.push_back(BinaryVector::from_string(r));
    }
    return out;
}

std::vector<std::string> render_rows(const Gf2Matrix &rows) {
    std::vector<std::string> out;
    for (const auto &r : rows) {
        out.push_back(r.str(true));
    }
    return out;
}

OracleLimits limits_for(std::optional<size_t> max_n) {
    return max_n ? OracleLimits::raised_to(*max_n) : OracleLimits::from_environment();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact weight enumerators of codeword stabilized quantum codes.";

    static py::exception<CodeError> code_error(m, "CodeError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const CodeError &e) {
            py::object err = py::reinterpret_borrow<py::object>(code_error)(std::string(e.what()));
            err.attr("kind") = std::string(error_kind_name(e.kind()));
            err.attr("indices") = e.indices();
            PyErr_SetObject(code_error.ptr(), err.ptr());
        }
    });

    py::class_<CwsCode>(m, "Code")
        .def_static(
            "build",
            [](size_t n, const std::vector<std::string> &stabilizer, const std::vector<std::string> &words,
               std::optional<std::vector<int>> signs, bool allow_noncommuting_words) {
                return CwsCode::build(
                    n, parse_rows(stabilizer), parse_rows(words), std::move(signs),
                    BuildOptions{allow_noncommuting_words});
            },
            py::arg("n"), py::arg("stabilizer"), py::arg("words"), py::arg("signs") = py::none(),
            py::arg("allow_noncommuting_words") = false)
        .def_static(
            "from_text",
            [](const std::string &text, bool allow_noncommuting_words) {
                return build_code(parse_code_file(text), BuildOptions{allow_noncommuting_words});
            },
            py::arg("text"), py::arg("allow_noncommuting_words") = false)
        .def_static(
            "from_catalog",
            [](const std::string &name) {
                auto text = catalog_text(name);
                if (!text) {
                    throw CodeError(ErrorKind::UnknownName, "no catalog entry named '" + name + "'");
                }
                return build_code(parse_code_file(*text));
            },
            py::arg("name"))
        .def_property_readonly("n", &CwsCode::num_qubits)
        .def_property_readonly("K", &CwsCode::dimension)
        .def_property_readonly(
            "stabilizer",
            [](const CwsCode &c) {
                std::vector<std::string> out;
                for (const auto &g : c.stabilizer().generators()) {
                    out.push_back(g.str());
                }
                return out;
            })
        .def_property_readonly("words", [](const CwsCode &c) { return render_rows(c.words()); })
        .def_property_readonly("warnings", &CwsCode::warnings)
        .def_property_readonly("is_additive", [](const CwsCode &c) { return is_additive(c); })
        .def("to_text", [](const CwsCode &c) { return render_code_file(code_file_from(c)); })
        .def("__repr__", [](const CwsCode &c) {
            return "<cwsenum.Code n=" + std::to_string(c.num_qubits()) + " K=" + std::to_string(c.dimension()) + ">";
        });

    m.def("catalog_names", [] {
        std::vector<std::string> out;
        for (const auto &e : catalog_entries()) {
            out.emplace_back(e.name);
        }
        return out;
    });
    m.def("enumerator_A", [](const CwsCode &c) { return to_pairs(shor_laflamme_A(c)); }, py::arg("code"));
    m.def("enumerator_B", [](const CwsCode &c) { return to_pairs(shor_laflamme_B(c)); }, py::arg("code"));
    m.def("pairwise_B", [](const CwsCode &c) { return to_pairs(pairwise_B(c)); }, py::arg("code"));
    m.def(
        "oracle",
        [](const CwsCode &c, std::optional<size_t> max_n) {
            OracleResult r = oracle_enumerators(c, limits_for(max_n));
            return py::make_tuple(to_pairs(r.A), to_pairs(r.B), r.max_overlap_deviation);
        },
        py::arg("code"), py::arg("max_n") = py::none());
    m.def(
        "macwilliams",
        [](const std::vector<RationalPair> &p, size_t n, const RationalPair &size, unsigned q) {
            return to_pairs(macwilliams_transform(from_pairs(p), n, from_pair(size), q));
        },
        py::arg("coefficients"), py::arg("n"), py::arg("M"), py::arg("q"));
    m.def(
        "quantum_distance",
        [](const std::vector<RationalPair> &a, const std::vector<RationalPair> &b) {
            return quantum_distance(from_pairs(a), from_pairs(b));
        },
        py::arg("A"), py::arg("B"));
    m.def(
        "verify_json",
        [](const CwsCode &c, std::optional<size_t> max_n) { return report_json(verify_report(c, limits_for(max_n))).dump(); },
        py::arg("code"), py::arg("max_n") = py::none());
}
