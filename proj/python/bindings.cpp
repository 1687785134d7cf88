#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "motivic/analytic.hpp"
#include "motivic/json_io.hpp"
#include "motivic/measures.hpp"
#include "motivic/motive.hpp"
#include "motivic/numerical_k0.hpp"
#include "motivic/reconstruct.hpp"
#include "motivic/variety.hpp"

namespace py = pybind11;
using namespace motivic;
using json_io::json;

namespace {

// JSON text in, JSON text out; the Python wrapper handles (de)serialization
json parse(const std::string& text) { return json::parse(text); }
std::string out(const json& j) { return j.dump(); }

CountingContext context(std::optional<std::uint64_t> budget) {
    CountingContext ctx;
    if (budget) ctx.budget = *budget;
    return ctx;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Zeta functions of motives, point counts and motivic measures";

    // later registrations are tried first, so the base class goes first
    auto& base = py::register_exception<Error>(m, "MotivicError", PyExc_ValueError);
    py::register_exception<ResourceError>(m, "ResourceError", base);
    py::register_exception<PoleError>(m, "PoleError", base);
    py::register_exception<json::exception>(m, "InputParseError", base);

    m.def("zeta_series", [](const std::string& motive, int precision) {
        return out(json_io::to_json(zeta_series(json_io::motive_from(parse(motive)), precision).series()));
    });
    m.def("zeta_rational", [](const std::string& motive) {
        return out(json_io::to_json(zeta_rational(json_io::motive_from(parse(motive)))));
    });
    m.def("functional_equation", [](const std::string& motive) {
        return out(json_io::to_json(check_functional_equation(json_io::motive_from(parse(motive)))));
    });
    m.def("determinant", [](const std::string& motive) {
        return determinant(json_io::motive_from(parse(motive))).str();
    });
    m.def("traces_to_zeta", [](const std::vector<std::string>& traces) {
        std::vector<Rational> seq;
        for (const auto& t : traces) seq.push_back(Rational::parse(t));
        return out(json_io::to_json(traces_to_zeta(seq)));
    });
    m.def(
        "count_points",
        [](const std::string& variety, int n, std::optional<std::uint64_t> budget) {
            return count_points(json_io::variety_from(parse(variety)), n, context(budget)).get_str();
        },
        py::arg("variety"), py::arg("n") = 1, py::arg("budget") = py::none());
    m.def(
        "weil_check",
        [](const std::string& variety, int dim, int n_max, std::optional<std::uint64_t> budget) {
            return out(json_io::to_json(weil_check(json_io::variety_from(parse(variety)), dim, n_max, context(budget))));
        },
        py::arg("variety"), py::arg("dim"), py::arg("n_max") = 8, py::arg("budget") = py::none());
    m.def("hasse_weil", [](const std::string& motive, std::int64_t q, std::complex<double> s) {
        const auto v = hasse_weil_eval(json_io::motive_from(parse(motive)), q, Complex(s.real(), s.imag()));
        return std::complex<double>(static_cast<double>(v.real()), static_cast<double>(v.imag()));
    });
    m.def("num_grothendieck", [](const std::string& gram) {
        return out(json_io::to_json(num_grothendieck(json_io::gram_from(parse(gram)))));
    });
    m.def("measure_eval", [](const std::string& cls, std::int64_t q) {
        const auto c = json_io::measure_from(parse(cls));
        return out(json{{"count", json_io::to_json(mu_count(c, q))},
                        {"rig", json_io::to_json(mu_rig(c))},
                        {"nc", json_io::to_json(mu_nc_composite(c).value)}});
    });
    m.def("non_factoring_witness",
          [](int n, std::int64_t q) { return out(json_io::to_json(non_factoring_witness(n, q))); });
}
