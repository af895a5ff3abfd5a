// SPDX-License-Identifier: Apache-2.0
// Python bindings for the main operations.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "rootfrac/bounds.hpp"
#include "rootfrac/mfun.hpp"
#include "rootfrac/periodic.hpp"
#include "rootfrac/render.hpp"
#include "rootfrac/stats.hpp"

namespace py = pybind11;
using namespace rootfrac;

namespace {

py::object big_int(const mpz_class& z) {
    return py::module_::import("builtins").attr("int")(z.get_str());
}

// MValue -> int | None (None encodes the infinite entry)
py::object mvalue_to_int(const MValue& v) {
    if (v.is_infinite()) return py::none();
    return big_int(v.value());
}

}  // namespace

PYBIND11_MODULE(_rootfrac, m) {
    m.doc() = "certified integer parts of reciprocal fractional parts of roots";

    py::class_<ThetaExpr>(m, "Theta")
        .def_static("parse", &parse_theta, py::arg("text"))
        .def("__str__", &ThetaExpr::to_string)
        .def("__repr__", [](const ThetaExpr& t) { return "Theta(" + t.to_string() + ")"; });

    m.def("m", [](const std::string& theta, long n) {
        return mvalue_to_int(m_theta(parse_theta(theta), n));
    }, py::arg("theta"), py::arg("n"),
       "M_theta(n) as an int, or None when theta^(1/n) is an integer");

    m.def("m_prime", [](const std::string& theta, long n) {
        return mvalue_to_int(m_prime_theta(parse_theta(theta), n));
    }, py::arg("theta"), py::arg("n"));

    m.def("n0", [](const std::string& theta) { return n0(parse_theta(theta)); },
          py::arg("theta"), "smallest n with n > log(theta)/log(2)");

    m.def("sequence", [](const std::string& theta, long from, long to) {
        MSequence s = m_sequence(parse_theta(theta), from, to);
        std::vector<py::object> out;
        for (const MValue& v : s.values) out.push_back(mvalue_to_int(v));
        return out;
    }, py::arg("theta"), py::arg("from_n"), py::arg("to_n"));

    m.def("table", [](const std::string& theta, long from, long to,
                      const std::string& format) {
        OutputSpec spec;
        if (format == "csv") spec.format = OutputFormat::Csv;
        else if (format == "json-lines") spec.format = OutputFormat::JsonLines;
        return render_sequence(m_sequence(parse_theta(theta), from, to), spec);
    }, py::arg("theta"), py::arg("from_n") = 1, py::arg("to_n") = 90,
       py::arg("format") = "grid");

    m.def("nth_root_interval", [](const std::string& theta, long n, long bits) {
        RealInterval iv = nth_root_interval(parse_theta(theta), n, bits);
        return py::make_tuple(iv.lo.get_str(), iv.hi.get_str());
    }, py::arg("theta"), py::arg("n"), py::arg("bits") = 64,
       "certified enclosure of theta^(1/n) as a pair of rational strings");

    m.def("inverse_range", [](const std::string& theta, long x) -> py::object {
        IntegerRange r = inverse_range(parse_theta(theta), x);
        if (r.empty()) return py::make_tuple(py::none(), py::none());
        return py::make_tuple(py::cast(r.lo), py::cast(r.hi));
    }, py::arg("theta"), py::arg("x"));

    m.def("chi_table", [](long k, long l) {
        ChiTable t = chi_table(k, l);
        std::vector<py::tuple> rows;
        for (const ChiRow& r : t.rows)
            rows.push_back(py::make_tuple(r.r, r.u.get_si(), r.v.get_si(),
                                          r.chi.get_str()));
        return rows;
    }, py::arg("k"), py::arg("l"));

    m.def("threshold", &threshold, py::arg("k"), py::arg("l"));
    m.def("m_formula", [](long k, long l, long n) { return big_int(m_formula(k, l, n)); },
          py::arg("k"), py::arg("l"), py::arg("n"));

    m.def("classify_beatty", [](const std::string& theta, long n) {
        return classify_beatty(parse_theta(theta), n) == BeattySide::MinusHalf
                   ? "-1/2" : "+1/2";
    }, py::arg("theta"), py::arg("n"));

    m.def("check_main_ineq", [](const std::string& theta, long n) {
        return check_main_ineq(parse_theta(theta), n).holds();
    }, py::arg("theta"), py::arg("n"));

    m.def("set_precision_cap", &set_precision_cap, py::arg("bits"));
    m.def("precision_cap", &precision_cap);

    py::register_exception<Error>(m, "RootfracError");
}
