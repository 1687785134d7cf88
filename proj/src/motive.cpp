#include "motivic/motive.hpp"

#include <cstdlib>

#include "motivic/errors.hpp"

namespace motivic {

TracedMotive::TracedMotive(RatMatrix f_plus, RatMatrix f_minus, std::optional<std::string> label)
    : plus_(std::move(f_plus)), minus_(std::move(f_minus)), label_(std::move(label)) {
    if (!plus_.is_square() || !minus_.is_square()) throw DimensionError("motive blocks must be square");
}

TracedMotive TracedMotive::unit() { return {RatMatrix::identity(1), RatMatrix(), "unit"}; }

namespace {

std::vector<Rational> power_traces(const RatMatrix& m, int n_max) {
    std::vector<Rational> out(static_cast<std::size_t>(n_max));
    if (m.rows() == 0) return out;
    RatMatrix power = m;
    for (int n = 1; n <= n_max; ++n) {
        out[static_cast<std::size_t>(n - 1)] = power.trace();
        if (n < n_max) power = power * m;
    }
    return out;
}

/* (-t)^k as an element of Q(t) */
RationalFunction minus_t_power(long k) {
    RationalFunction r = RationalFunction::t_power(static_cast<int>(k));
    return (std::labs(k) % 2) ? -r : r;
}

}  // namespace

std::vector<Rational> trace_sequence(const TracedMotive& m, int n_max) {
    if (n_max < 1) throw PreconditionError("trace sequence needs n_max >= 1");
    auto plus = power_traces(m.f_plus(), n_max);
    auto minus = power_traces(m.f_minus(), n_max);
    for (std::size_t i = 0; i < plus.size(); ++i) plus[i] -= minus[i];
    return plus;
}

WittElement zeta_series(const TracedMotive& m, int precision) {
    if (precision < 1) throw PreconditionError("zeta series needs precision >= 1", "precision");
    auto traces = trace_sequence(m, precision);
    return WittElement(TruncatedSeries(exp_of_power_sums(traces, Rational(1)), precision));
}

RationalFunction zeta_rational(const TracedMotive& m) {
    return {reversed_char_poly(m.f_minus()), reversed_char_poly(m.f_plus())};
}

ZetaDegrees zeta_degrees(const TracedMotive& m) {
    return {-m.euler_characteristic(), zeta_rational(m).degree()};
}

Rational determinant(const TracedMotive& m) {
    Rational dp = det(m.f_plus());
    Rational dm = det(m.f_minus());
    if (dp.is_zero() || dm.is_zero()) throw NotInvertibleError("determinant needs invertible blocks");
    return dp / dm;
}

TracedMotive dual_inverse(const TracedMotive& m) {
    return {m.f_plus().inverse().transpose(), m.f_minus().inverse().transpose(), m.label()};
}

FunctionalEquationReport check_functional_equation(const TracedMotive& m) {
    FunctionalEquationReport rep;
    rep.euler_characteristic = m.euler_characteristic();
    rep.determinant = determinant(m);
    const RationalFunction z = zeta_rational(m);
    rep.lhs = zeta_rational(dual_inverse(m)).substitute_reciprocal(1);
    const RationalFunction scaled = minus_t_power(rep.euler_characteristic) * z;
    rep.rhs = RationalFunction(Polynomial::constant(rep.determinant)) * scaled;
    rep.holds = rep.lhs == rep.rhs;
    const RationalFunction ratio = rep.lhs / scaled;
    if (ratio.num().degree() <= 0 && ratio.den().degree() == 0) rep.extracted_constant = ratio.num().constant_term();
    return rep;
}

TracedMotive direct_sum(const TracedMotive& a, const TracedMotive& b) {
    return {block_diagonal(a.f_plus(), b.f_plus()), block_diagonal(a.f_minus(), b.f_minus())};
}

TracedMotive tensor(const TracedMotive& a, const TracedMotive& b) {
    return {block_diagonal(kronecker(a.f_plus(), b.f_plus()), kronecker(a.f_minus(), b.f_minus())),
            block_diagonal(kronecker(a.f_plus(), b.f_minus()), kronecker(a.f_minus(), b.f_plus()))};
}

bool cy_periodicity_check(const std::vector<Rational>& traces, int d, int r) {
    if (r == 0) throw PreconditionError("periodicity shift r must be nonzero");
    const int len = static_cast<int>(traces.size());
    if (len <= std::abs(r)) throw PreconditionError("trace sequence shorter than the shift");
    const bool flip = (d % 2) != 0;
    for (int n = 0; n < len; ++n) {
        const int m = n + r;
        if (m < 0 || m >= len) continue;
        const Rational lhs = flip ? -traces[static_cast<std::size_t>(n)] : traces[static_cast<std::size_t>(n)];
        if (lhs != traces[static_cast<std::size_t>(m)]) return false;
    }
    return true;
}

}  // namespace motivic
