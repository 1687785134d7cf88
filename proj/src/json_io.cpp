#include "motivic/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace motivic::json_io {

namespace {

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }
std::string at(const std::string& path, const char* key) { return path + "." + key; }

const json& field(const json& j, const char* key, const std::string& path) {
    if (!j.is_object()) throw InputError(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw InputError(path, std::string("missing key \"") + key + "\"");
    return *it;
}

std::int64_t integer_from(const json& j, const std::string& path) {
    if (j.is_number_integer()) return j.get<std::int64_t>();
    if (j.is_string()) {
        Rational r = Rational::parse(j.get<std::string>());
        if (r.is_integer() && r.numerator().fits_slong_p()) return r.numerator().get_si();
    }
    throw InputError(path, "expected an integer");
}

int small_int(const json& j, const std::string& path, int lo) {
    auto v = integer_from(j, path);
    if (v < lo || v > 1'000'000) throw InputError(path, "integer out of range");
    return static_cast<int>(v);
}

json complex_list(const std::vector<Complex>& zs) {
    json out = json::array();
    for (const auto& z : zs) out.push_back(to_json(z));
    return out;
}

json roots_json(const std::vector<Root>& roots) {
    json out = json::array();
    for (const auto& r : roots) out.push_back({{"value", to_json(r.value)}, {"multiplicity", r.multiplicity}});
    return out;
}

json families_json(const std::vector<LatticeFamily>& fams) {
    json out = json::array();
    for (const auto& f : fams)
        out.push_back({{"eigenvalue", to_json(f.eigenvalue)},
                       {"base", to_json(f.base)},
                       {"multiplicity", f.multiplicity},
                       {"in_strip", complex_list(f.in_strip)}});
    return out;
}

json theta_entries(const std::vector<ThetaEntry>& entries) {
    json out = json::array();
    for (const auto& e : entries) {
        json blocks = json::array();
        for (const auto& b : e.blocks) {
            json rows = json::array();
            for (const auto& row : b.nilpotent_log) rows.push_back(complex_list(row));
            blocks.push_back({{"size", b.size}, {"nilpotent_log", rows}});
        }
        out.push_back({{"lambda", to_json(e.lambda)},
                       {"z", to_json(e.z)},
                       {"multiplicity", e.multiplicity},
                       {"blocks", blocks},
                       {"on_boundary", e.on_boundary}});
    }
    return out;
}

json big_list(const std::vector<BigInt>& xs) {
    json out = json::array();
    for (const auto& x : xs) out.push_back(to_json(x));
    return out;
}

IntPoly equation_from(const json& j, const std::string& path, std::size_t nvars) {
    if (!j.is_array()) throw InputError(path, "expected a list of [monomial, coeff] terms");
    IntPoly eq;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto& t = j[i];
        const auto tp = at(path, i);
        if (!t.is_array() || t.size() != 2 || !t[0].is_array()) throw InputError(tp, "expected [monomial, coeff]");
        Term term;
        for (std::size_t k = 0; k < t[0].size(); ++k) term.exponents.push_back(small_int(t[0][k], at(at(tp, std::size_t{0}), k), 0));
        if (nvars && term.exponents.size() != nvars)
            throw InputError(at(tp, std::size_t{0}), "monomial has " + std::to_string(term.exponents.size()) +
                                                         " exponents, expected " + std::to_string(nvars));
        term.coeff = integer_from(t[1], at(tp, std::size_t{1}));
        eq.push_back(std::move(term));
    }
    return eq;
}

/* a term is [[e0, e1, ...], c]; an equation is a list of terms */
bool looks_like_term(const json& j) {
    return j.is_array() && j.size() == 2 && j[0].is_array() && (j[0].empty() || j[0][0].is_number());
}

}  // namespace

json number(long double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12Lg", x);
    double v = std::strtod(buf, nullptr);
    if (std::fabs(v) < 1e-15) v = 0;  // also drops the sign of zero
    return v;
}

json to_json(const Rational& r) { return r.str(); }
json to_json(const BigInt& r) { return r.get_str(); }

json to_json(const Polynomial& p) {
    json out = json::array();
    for (const auto& c : p.coefficients()) out.push_back(to_json(c));
    return out;
}

json to_json(const RatMatrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        out.push_back(row);
    }
    return out;
}

json to_json(const TruncatedSeries& s) {
    json c = json::array();
    for (const auto& x : s.coefficients()) c.push_back(to_json(x));
    return {{"precision", s.precision()}, {"coeffs", c}};
}

json to_json(const RationalFunction& f) {
    auto [n, d] = f.unit_constant_form();
    return {{"num", to_json(n)}, {"den", to_json(d)}, {"degree", f.degree()}, {"str", f.str()}};
}

json to_json(const Complex& z) { return {{"re", number(z.real())}, {"im", number(z.imag())}}; }

json to_json(const TracedMotive& m) {
    json out = {{"f_plus", to_json(m.f_plus())}, {"f_minus", to_json(m.f_minus())}};
    if (m.label()) out["label"] = *m.label();
    return out;
}

json to_json(const Reconstruction& r) {
    if (const auto* ok = std::get_if<ReconstructionResult>(&r)) {
        return {{"stabilized", true},
                {"value", to_json(ok->value)},
                {"order", ok->order},
                {"stabilized_at", ok->stabilized_at},
                {"residual_checked_to", ok->residual_checked_to},
                {"degree", ok->degree},
                {"profile", ok->profile}};
    }
    const auto& ns = std::get<NotStabilized>(r);
    return {{"stabilized", false}, {"profile", ns.profile}, {"order", ns.order}, {"last_change", ns.last_change}};
}

json to_json(const FunctionalEquationReport& r) {
    json out = {{"holds", r.holds},
                {"euler_characteristic", r.euler_characteristic},
                {"determinant", to_json(r.determinant)},
                {"lhs", to_json(r.lhs)},
                {"rhs", to_json(r.rhs)}};
    out["extracted_constant"] = r.extracted_constant ? to_json(*r.extracted_constant) : json(nullptr);
    return out;
}

json to_json(const Cyclotomic& c) {
    json coords = json::array();
    for (const auto& x : c.coords()) coords.push_back(to_json(x));
    return coords;
}

json to_json(const LSeries& l) {
    json out = {{"m", l.m}, {"rational", l.is_rational()}};
    json coeffs = json::array();
    if (l.is_rational()) {
        for (const auto& c : l.coeffs) coeffs.push_back(to_json(c.rational_part()));
    } else {
        for (const auto& c : l.coeffs) coeffs.push_back(to_json(c));
    }
    out["coeffs"] = coeffs;
    out["precision"] = static_cast<int>(l.coeffs.size()) - 1;
    return out;
}

json to_json(const OrbifoldReport& r) {
    json factors = json::array();
    for (const auto& [rep, cent] : r.factors) factors.push_back({{"representative", rep}, {"centralizer_order", cent}});
    return {{"product_route", to_json(r.product_route)},
            {"trace_route", to_json(r.trace_route)},
            {"agree", r.agree},
            {"factors", factors}};
}

json to_json(const WeilReport& r) {
    json roots = json::array();
    for (const auto& m : r.roots)
        roots.push_back({{"reciprocal_root", to_json(m.reciprocal_root)},
                         {"modulus", number(m.modulus)},
                         {"weight", m.weight},
                         {"deviation", number(m.deviation)},
                         {"multiplicity", m.multiplicity},
                         {"in_numerator", m.in_numerator}});
    return {{"counts", big_list(r.counts)},
            {"stabilized", r.stabilized},
            {"profile", r.profile},
            {"zeta", r.zeta ? to_json(*r.zeta) : json(nullptr)},
            {"degree", r.degree},
            {"euler_characteristic", r.euler_characteristic},
            {"functional_equation", r.functional_equation},
            {"sign", r.sign},
            {"roots", roots},
            {"riemann_hypothesis", r.riemann_hypothesis},
            {"smooth_proper_asserted", r.smooth_proper_asserted}};
}

json to_json(const ComplexSpectrum& s) {
    return {{"plus", roots_json(s.plus)},
            {"minus", roots_json(s.minus)},
            {"charpoly_plus", to_json(s.charpoly_plus)},
            {"charpoly_minus", to_json(s.charpoly_minus)}};
}

json to_json(const MeromorphicReport& r) {
    return {{"q", r.q},
            {"step", number(r.step)},
            {"poles", families_json(r.poles)},
            {"zeros", families_json(r.zeros)},
            {"cancelled", complex_list(r.cancelled)}};
}

json to_json(const ThetaData& t) {
    return {{"q", t.q},
            {"window", t.window == BranchWindow::principal ? "principal" : "lower_closed"},
            {"plus", theta_entries(t.plus)},
            {"minus", theta_entries(t.minus)}};
}

json to_json(const RegDetReport& r) {
    json samples = json::array();
    for (const auto& s : r.samples)
        samples.push_back({{"s", to_json(s.s)},
                           {"closed_form", to_json(s.closed_form)},
                           {"direct", to_json(s.direct)},
                           {"relative_error", number(s.relative_error)}});
    return {{"passed", r.passed}, {"branch_ok", r.branch_ok}, {"samples", samples}};
}

json to_json(const IntMatrix& m) {
    json out = json::array();
    for (const auto& row : m) out.push_back(big_list(row));
    return out;
}

json to_json(const EulerGram& g) { return {{"chi", to_json(g.chi)}}; }

json to_json(const NumK0Report& r) {
    return {{"n", r.n},
            {"rank", r.rank},
            {"left_kernel_basis", to_json(r.left_kernel_basis)},
            {"right_kernel_basis", to_json(r.right_kernel_basis)},
            {"kernels_agree", r.kernels_agree},
            {"quotient_basis", to_json(r.quotient_basis)},
            {"kernel_invariants", big_list(r.kernel_invariants)},
            {"warnings", r.warnings}};
}

json to_json(const MeasureClass& c) {
    using Op = MeasureClass::Op;
    switch (c.op()) {
        case Op::point: return {{"op", "point"}};
        case Op::affine: return {{"op", "affine"}, {"n", c.dim()}};
        case Op::projective: return {{"op", "projective"}, {"n", c.dim()}};
        case Op::torus: return {{"op", "torus"}};
        case Op::scale: return {{"op", "scale"}, {"k", c.factor()}, {"arg", to_json(c.children().front())}};
        default: break;
    }
    json args = json::array();
    for (const auto& k : c.children()) args.push_back(to_json(k));
    const char* name = c.op() == Op::sum ? "sum" : c.op() == Op::product ? "product" : "difference";
    return {{"op", name}, {"args", args}};
}

json to_json(const EpsilonElement& e) {
    return {{"even", to_json(e.even)}, {"odd", to_json(e.odd)}, {"str", e.str()}};
}

json to_json(const WitnessReport& r) {
    return {{"n", r.n},
            {"q", r.q},
            {"projective", r.projective.str()},
            {"points", r.points.str()},
            {"nc_projective", to_json(r.nc_projective)},
            {"nc_points", to_json(r.nc_points)},
            {"count_projective", to_json(r.count_projective)},
            {"count_points", to_json(r.count_points)},
            {"obstructs", r.obstructs},
            {"note", r.note}};
}

Rational rational_from(const json& j, const std::string& path) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const ValidationError& e) {
            throw InputError(path, e.what());
        }
    }
    throw InputError(path, "expected a rational as an integer or an \"a/b\" string");
}

std::vector<Rational> rationals_from(const json& j, const std::string& path) {
    if (!j.is_array()) throw InputError(path, "expected an array");
    std::vector<Rational> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(rational_from(j[i], at(path, i)));
    return out;
}

RatMatrix matrix_from(const json& j, const std::string& path) {
    if (!j.is_array()) throw InputError(path, "expected an array of rows");
    if (j.empty()) return {};
    const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
    std::vector<Rational> entries;
    for (std::size_t i = 0; i < j.size(); ++i) {
        auto row = rationals_from(j[i], at(path, i));
        if (row.size() != cols) throw InputError(at(path, i), "ragged matrix row");
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return RatMatrix(j.size(), cols, std::move(entries));
}

TruncatedSeries series_from(const json& j, const std::string& path) {
    if (j.is_array()) {
        auto c = rationals_from(j, path);
        const int prec = static_cast<int>(c.size()) - 1;
        return TruncatedSeries(std::move(c), prec);
    }
    auto c = rationals_from(field(j, "coeffs", path), at(path, "coeffs"));
    int prec = j.contains("precision") ? small_int(j["precision"], at(path, "precision"), 0) : static_cast<int>(c.size()) - 1;
    return TruncatedSeries(std::move(c), prec);
}

TracedMotive motive_from(const json& j, const std::string& path) {
    auto plus = matrix_from(field(j, "f_plus", path), at(path, "f_plus"));
    auto minus = matrix_from(field(j, "f_minus", path), at(path, "f_minus"));
    if (!plus.is_square()) throw InputError(at(path, "f_plus"), "matrix is not square");
    if (!minus.is_square()) throw InputError(at(path, "f_minus"), "matrix is not square");
    std::optional<std::string> label;
    if (j.contains("label") && j["label"].is_string()) label = j["label"].get<std::string>();
    return TracedMotive(std::move(plus), std::move(minus), label);
}

VarietySpec variety_from(const json& j, const std::string& path) {
    const auto& amb = field(j, "ambient", path);
    const auto ap = at(path, "ambient");
    Ambient ambient;
    int dim;
    if (amb.is_object() && amb.size() == 1 && amb.contains("projective")) {
        ambient = Ambient::projective;
        dim = small_int(amb["projective"], at(ap, "projective"), 0);
    } else if (amb.is_object() && amb.size() == 1 && amb.contains("affine")) {
        ambient = Ambient::affine;
        dim = small_int(amb["affine"], at(ap, "affine"), 0);
    } else {
        throw InputError(ap, "expected {\"projective\": n} or {\"affine\": n}");
    }
    const auto p = integer_from(field(j, "p", path), at(path, "p"));
    const int e = j.contains("e") ? small_int(j["e"], at(path, "e"), 1) : 1;
    const std::size_t nvars = static_cast<std::size_t>(ambient == Ambient::projective ? dim + 1 : dim);

    std::vector<IntPoly> eqs;
    if (j.contains("equations")) {
        const auto& q = j["equations"];
        const auto qp = at(path, "equations");
        if (!q.is_array()) throw InputError(qp, "expected an array");
        if (!q.empty() && looks_like_term(q[0])) {
            eqs.push_back(equation_from(q, qp, nvars));
        } else {
            for (std::size_t i = 0; i < q.size(); ++i) eqs.push_back(equation_from(q[i], at(qp, i), nvars));
        }
    }
    try {
        return make_variety(ambient, dim, p, e, std::move(eqs));
    } catch (const ValidationError& err) {
        throw InputError(path, err.what());
    }
}

std::vector<std::vector<std::vector<std::int64_t>>> group_from(const json& j, const std::string& path) {
    const json* list = &j;
    std::string lp = path;
    if (j.is_object()) {
        list = &field(j, "elements", path);
        lp = at(path, "elements");
    }
    if (!list->is_array() || list->empty()) throw InputError(lp, "expected a nonempty list of matrices");
    std::vector<std::vector<std::vector<std::int64_t>>> out;
    for (std::size_t g = 0; g < list->size(); ++g) {
        const auto& m = (*list)[g];
        if (!m.is_array()) throw InputError(at(lp, g), "expected a matrix");
        std::vector<std::vector<std::int64_t>> rows;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (!m[i].is_array()) throw InputError(at(at(lp, g), i), "expected a row");
            std::vector<std::int64_t> row;
            for (std::size_t k = 0; k < m[i].size(); ++k) row.push_back(integer_from(m[i][k], at(at(at(lp, g), i), k)));
            rows.push_back(std::move(row));
        }
        out.push_back(std::move(rows));
    }
    return out;
}

CharacterTable character_from(const json& j, const GroupAction& action, const std::string& path) {
    const int m = j.contains("m") ? small_int(j["m"], at(path, "m"), 1) : 1;
    const auto& cl = field(j, "classes", path);
    const auto& vals = field(j, "values", path);
    if (!cl.is_array() || !vals.is_array() || cl.size() != vals.size())
        throw InputError(path, "classes and values must be arrays of equal length");
    std::vector<std::vector<std::size_t>> classes;
    std::vector<Cyclotomic> values;
    for (std::size_t i = 0; i < cl.size(); ++i) {
        if (!cl[i].is_array()) throw InputError(at(at(path, "classes"), i), "expected a list of element indices");
        std::vector<std::size_t> c;
        for (std::size_t k = 0; k < cl[i].size(); ++k)
            c.push_back(static_cast<std::size_t>(integer_from(cl[i][k], at(at(at(path, "classes"), i), k))));
        classes.push_back(std::move(c));
        const auto vp = at(at(path, "values"), i);
        if (vals[i].is_array()) values.emplace_back(m, rationals_from(vals[i], vp));
        else values.push_back(Cyclotomic::rational(m, rational_from(vals[i], vp)));
    }
    try {
        return CharacterTable(action, m, classes, std::move(values));
    } catch (const ValidationError& err) {
        throw InputError(path, err.what());
    }
}

Complex complex_from(const json& j, const std::string& path) {
    if (j.is_number()) return {j.get<long double>(), 0};
    const auto& re = field(j, "re", path);
    const auto& im = field(j, "im", path);
    if (!re.is_number() || !im.is_number()) throw InputError(path, "re and im must be numbers");
    return {re.get<long double>(), im.get<long double>()};
}

EulerGram gram_from(const json& j, const std::string& path) {
    const json& chi = j.is_object() ? field(j, "chi", path) : j;
    const auto cp = j.is_object() ? at(path, "chi") : path;
    if (!chi.is_array()) throw InputError(cp, "expected an array of rows");
    IntMatrix m;
    for (std::size_t i = 0; i < chi.size(); ++i) {
        if (!chi[i].is_array()) throw InputError(at(cp, i), "expected a row");
        IntVector row;
        for (std::size_t k = 0; k < chi[i].size(); ++k) {
            Rational r = rational_from(chi[i][k], at(at(cp, i), k));
            if (!r.is_integer()) throw InputError(at(at(cp, i), k), "expected an integer");
            row.push_back(r.numerator());
        }
        m.push_back(std::move(row));
    }
    try {
        return make_gram(std::move(m));
    } catch (const Error& err) {
        throw InputError(cp, err.what());
    }
}

MeasureClass measure_from(const json& j, const std::string& path) {
    const auto& opj = field(j, "op", path);
    if (!opj.is_string()) throw InputError(at(path, "op"), "expected a string");
    const auto op = opj.get<std::string>();
    if (op == "point") return MeasureClass::point();
    if (op == "torus") return MeasureClass::torus();
    if (op == "affine") return MeasureClass::affine_space(small_int(field(j, "n", path), at(path, "n"), 0));
    if (op == "projective") return MeasureClass::projective_space(small_int(field(j, "n", path), at(path, "n"), 0));
    if (op == "scale")
        return MeasureClass::scaled(static_cast<long>(integer_from(field(j, "k", path), at(path, "k"))),
                                    measure_from(field(j, "arg", path), at(path, "arg")));
    if (op == "sum" || op == "product" || op == "difference") {
        const auto& args = field(j, "args", path);
        const auto ap = at(path, "args");
        if (!args.is_array() || args.empty()) throw InputError(ap, "expected a nonempty array");
        if (op == "difference" && args.size() != 2) throw InputError(ap, "difference takes two arguments");
        MeasureClass acc = measure_from(args[0], at(ap, std::size_t{0}));
        for (std::size_t i = 1; i < args.size(); ++i) {
            MeasureClass next = measure_from(args[i], at(ap, i));
            acc = op == "sum" ? acc + next : op == "product" ? acc * next : acc - next;
        }
        return acc;
    }
    throw InputError(at(path, "op"), "unknown builder \"" + op + "\"");
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace motivic::json_io
