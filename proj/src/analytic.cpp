#include "motivic/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "motivic/errors.hpp"
#include "motivic/finite_field.hpp"

namespace motivic {

namespace {

constexpr long double pi = std::numbers::pi_v<long double>;
constexpr long double neg_inf = -std::numeric_limits<long double>::infinity();

std::vector<Root> roots_of_block(const RatMatrix& m) {
    if (m.rows() == 0) return {};
    return polynomial_roots(char_poly(m));
}

long double max_modulus(const std::vector<Root>& roots) {
    long double r = 0;
    for (const auto& x : roots) r = std::max(r, std::abs(x.value));
    return r;
}

long double log_q(std::int64_t q) { return std::log(static_cast<long double>(q)); }

/* log_q lambda with the argument in the requested window */
Complex branch_log(Complex lambda, std::int64_t q, BranchWindow window) {
    long double arg = std::arg(lambda);
    if (window == BranchWindow::principal && arg == -pi) arg = pi;
    if (window == BranchWindow::lower_closed && arg == pi) arg = -pi;
    const long double lq = log_q(q);
    return {std::log(std::abs(lambda)) / lq, arg / lq};
}

bool close(Complex a, Complex b, long double tol) { return std::abs(a - b) <= tol * std::max(1.0L, std::abs(b)); }

/* remove eigenvalues common to both lists, respecting multiplicity */
std::vector<Complex> cancel_common(std::vector<Root>& plus, std::vector<Root>& minus) {
    std::vector<Complex> cancelled;
    for (auto& a : plus)
        for (auto& b : minus) {
            if (a.multiplicity == 0 || b.multiplicity == 0 || !close(a.value, b.value, 1e-9L)) continue;
            const int k = std::min(a.multiplicity, b.multiplicity);
            for (int i = 0; i < k; ++i) cancelled.push_back(a.value);
            a.multiplicity -= k;
            b.multiplicity -= k;
        }
    auto drop = [](std::vector<Root>& v) {
        v.erase(std::remove_if(v.begin(), v.end(), [](const Root& r) { return r.multiplicity == 0; }), v.end());
    };
    drop(plus);
    drop(minus);
    return cancelled;
}

using CMatrix = std::vector<std::vector<Complex>>;

CMatrix shifted_matrix(const RatMatrix& m, Complex lambda) {
    const std::size_t n = m.rows();
    CMatrix a(n, std::vector<Complex>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j).to_long_double() - (i == j ? lambda : Complex(0));
    return a;
}

CMatrix cmul(const CMatrix& a, const CMatrix& b) {
    const std::size_t n = a.size();
    CMatrix c(n, std::vector<Complex>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

std::size_t numeric_rank(CMatrix a) {
    const std::size_t n = a.size();
    long double scale = 1;
    for (const auto& row : a)
        for (const auto& x : row) scale = std::max(scale, std::abs(x));
    const long double tol = 1e-9L * scale;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t piv = rank;
        for (std::size_t r = rank; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (std::abs(a[piv][col]) <= tol) continue;
        std::swap(a[rank], a[piv]);
        for (std::size_t r = rank + 1; r < n; ++r) {
            const Complex f = a[r][col] / a[rank][col];
            for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

/* Jordan block sizes at lambda from ranks of (M - lambda)^j */
std::vector<int> jordan_sizes(const RatMatrix& m, Complex lambda, int multiplicity) {
    if (multiplicity == 1) return {1};
    const CMatrix a = shifted_matrix(m, lambda);
    std::vector<std::size_t> ranks{m.rows()};
    CMatrix power = a;
    for (int j = 1; j <= multiplicity + 1; ++j) {
        ranks.push_back(numeric_rank(power));
        power = cmul(power, a);
    }
    // blocks of size >= j: ranks[j-1] - ranks[j]
    std::vector<int> sizes;
    for (int j = 1; j <= multiplicity; ++j) {
        const auto at_least = static_cast<long>(ranks[static_cast<std::size_t>(j - 1)]) - static_cast<long>(ranks[static_cast<std::size_t>(j)]);
        const auto at_least_next = static_cast<long>(ranks[static_cast<std::size_t>(j)]) - static_cast<long>(ranks[static_cast<std::size_t>(j + 1)]);
        for (long k = 0; k < at_least - at_least_next; ++k) sizes.push_back(j);
    }
    int total = 0;
    for (int s : sizes) total += s;
    if (total != multiplicity) throw NumericError("Jordan structure inconsistent with the algebraic multiplicity");
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
}

std::vector<ThetaEntry> theta_block(const RatMatrix& block, std::int64_t q, BranchWindow window) {
    std::vector<ThetaEntry> out;
    if (block.rows() == 0) return out;
    if (det(block).is_zero()) throw NotInvertibleError("theta construction needs invertible blocks");
    const long double lq = log_q(q);
    for (const auto& r : polynomial_roots(char_poly(block))) {
        ThetaEntry e;
        e.lambda = r.value;
        e.multiplicity = r.multiplicity;
        e.z = branch_log(r.value, q, window);
        e.on_boundary = std::abs(std::abs(e.z.imag()) - pi / lq) <= 1e-15L * pi / lq;
        if (!close(std::exp(e.z * lq), e.lambda, 1e-9L)) throw NumericError("q^z does not reproduce the eigenvalue");
        for (int size : jordan_sizes(block, r.value, r.multiplicity)) {
            JordanBlock jb;
            jb.size = size;
            jb.nilpotent_log.assign(static_cast<std::size_t>(size), std::vector<Complex>(static_cast<std::size_t>(size)));
            for (int row = 0; row < size; ++row)
                for (int j = 1; row + j < size; ++j) {
                    const long double sign = (j % 2 == 1) ? 1.0L : -1.0L;
                    jb.nilpotent_log[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + j)] =
                        sign / (static_cast<long double>(j) * std::pow(e.lambda, j) * lq);
                }
            e.blocks.push_back(std::move(jb));
        }
        out.push_back(std::move(e));
    }
    return out;
}

LatticeFamily lattice_family(const Root& r, std::int64_t q, long double im_lo, long double im_hi) {
    LatticeFamily f;
    f.eigenvalue = r.value;
    f.multiplicity = r.multiplicity;
    f.base = branch_log(r.value, q, BranchWindow::principal);
    const long double step = 2 * pi / log_q(q);
    if (im_hi >= im_lo) {
        const auto j0 = static_cast<long>(std::ceil((im_lo - f.base.imag()) / step - 1e-12L));
        for (long j = j0; f.base.imag() + static_cast<long double>(j) * step <= im_hi + 1e-12L; ++j)
            f.in_strip.push_back(f.base + Complex(0, static_cast<long double>(j) * step));
    }
    return f;
}

}  // namespace

ComplexSpectrum spectrum(const TracedMotive& m) {
    ComplexSpectrum s;
    s.charpoly_plus = char_poly(m.f_plus());
    s.charpoly_minus = char_poly(m.f_minus());
    s.plus = roots_of_block(m.f_plus());
    s.minus = roots_of_block(m.f_minus());
    return s;
}

SpectralRadii spectral_radius(const TracedMotive& m) {
    SpectralRadii r;
    r.plus = max_modulus(roots_of_block(m.f_plus()));
    r.minus = max_modulus(roots_of_block(m.f_minus()));
    r.rho = std::max(r.plus, r.minus);
    return r;
}

bool growth_bound_check(const TracedMotive& m, int n_max) {
    if (n_max < 1) throw PreconditionError("growth check needs n_max >= 1");
    const auto traces = trace_sequence(m, n_max);
    const long double rho = spectral_radius(m).rho;
    const auto d = static_cast<long double>(m.d_plus() + m.d_minus());
    for (int n = 1; n <= n_max; ++n) {
        const Rational& tr = traces[static_cast<std::size_t>(n - 1)];
        if (tr.is_zero()) continue;
        if (rho == 0 || d == 0) return false;
        const long double bound = std::log(d) + n * std::log(rho) + std::log1p(1e-9L);
        if (log_abs(tr) > bound) return false;
    }
    return true;
}

long double rate_estimate(const std::vector<Rational>& traces, int n_max) {
    if (n_max < 1 || static_cast<std::size_t>(n_max) > traces.size())
        throw PreconditionError("rate estimate needs 1 <= n_max <= number of traces");
    const int window = (n_max + 1) / 2;
    long double best = neg_inf;
    for (int n = n_max - window + 1; n <= n_max; ++n) {
        const Rational& tr = traces[static_cast<std::size_t>(n - 1)];
        if (tr.is_zero()) continue;
        best = std::max(best, log_abs(tr) / n);
    }
    return best;
}

std::variant<long double, Inapplicable> rate_exact(const TracedMotive& m) {
    const auto plus = roots_of_block(m.f_plus());
    const auto minus = roots_of_block(m.f_minus());
    const long double rho = std::max(max_modulus(plus), max_modulus(minus));
    if (rho == 0) return Inapplicable{"spectral radius is zero"};
    auto outer = [rho](const std::vector<Root>& v) {
        std::vector<Root> out;
        for (const auto& r : v)
            if (std::abs(r.value) >= rho * (1 - 1e-6L)) out.push_back(r);
        return out;
    };
    auto op = outer(plus), om = outer(minus);
    cancel_common(op, om);
    if (op.empty() && om.empty()) return Inapplicable{"F+ and F- share their eigenvalues on the circle |lambda| = rho"};
    return std::log(rho);
}

void require_prime_power(std::int64_t q) {
    if (q < 2 || fp::prime_power_base(static_cast<std::uint64_t>(q)) == 0)
        throw ValidationError(std::to_string(q) + " is not a prime power", "not_prime_power");
}

Complex hasse_weil_eval(const TracedMotive& m, std::int64_t q, Complex s) {
    require_prime_power(q);
    const RationalFunction z = zeta_rational(m);
    const auto [num, den] = z.unit_constant_form();
    const Complex t = std::exp(-s * log_q(q));
    if (den.degree() >= 1) {
        // poles: t = 1/lambda for lambda a reciprocal root of den
        for (const auto& r : polynomial_roots(den.reversed(den.degree()))) {
            if (r.value == Complex(0)) continue;
            const Complex pole_t = 1.0L / r.value;
            if (std::abs(t - pole_t) <= 1e-12L * std::max(1.0L, std::abs(pole_t))) {
                const long double step = 2 * pi / log_q(q);
                Complex base = branch_log(r.value, q, BranchWindow::principal);
                base += Complex(0, std::round((s.imag() - base.imag()) / step) * step);
                const double re = std::abs(base.real()) < 1e-15L ? 0.0 : static_cast<double>(base.real());
                const double im = std::abs(base.imag()) < 1e-15L ? 0.0 : static_cast<double>(base.imag());
                char buf[96];
                std::snprintf(buf, sizeof buf, "zeta has a pole at s = %.6g%+.6gi", re, im);
                throw PoleError(buf, re, im);
            }
        }
    }
    Complex nv = 0, dv = 0;
    for (int i = num.degree(); i >= 0; --i) nv = nv * t + num.coeff(i).to_long_double();
    for (int i = den.degree(); i >= 0; --i) dv = dv * t + den.coeff(i).to_long_double();
    return nv / dv;
}

long double convergence_abscissa(const TracedMotive& m, std::int64_t q) {
    require_prime_power(q);
    const long double rho = spectral_radius(m).rho;
    if (rho == 0) return neg_inf;
    return std::log(rho) / log_q(q);
}

MeromorphicReport poles_and_zeros(const TracedMotive& m, std::int64_t q, long double im_lo, long double im_hi) {
    require_prime_power(q);
    MeromorphicReport rep;
    rep.q = q;
    rep.step = 2 * pi / log_q(q);
    auto plus = roots_of_block(m.f_plus());
    auto minus = roots_of_block(m.f_minus());
    rep.cancelled = cancel_common(plus, minus);
    for (const auto& r : plus)
        if (r.value != Complex(0)) rep.poles.push_back(lattice_family(r, q, im_lo, im_hi));
    for (const auto& r : minus)
        if (r.value != Complex(0)) rep.zeros.push_back(lattice_family(r, q, im_lo, im_hi));
    return rep;
}

bool in_principal_window(Complex z, std::int64_t q) {
    const long double bound = pi / log_q(q);
    return z.imag() > -bound && z.imag() <= bound;
}

ThetaData theta_construction(const TracedMotive& m, std::int64_t q, BranchWindow window) {
    require_prime_power(q);
    ThetaData th;
    th.q = q;
    th.window = window;
    th.plus = theta_block(m.f_plus(), q, window);
    th.minus = theta_block(m.f_minus(), q, window);
    return th;
}

RegDetReport regularized_det_check(const TracedMotive& m, std::int64_t q, const std::vector<Complex>& samples,
                                   BranchWindow window) {
    const ThetaData th = theta_construction(m, q, window);
    RegDetReport rep;
    rep.branch_ok = true;
    for (const auto* side : {&th.plus, &th.minus})
        for (const auto& e : *side)
            if (!in_principal_window(e.z, q)) rep.branch_ok = false;
    const long double lq = log_q(q);
    bool all_close = true;
    for (const Complex& s : samples) {
        RegDetSample smp;
        smp.s = s;
        smp.direct = hasse_weil_eval(m, q, s);
        Complex value = 1;
        for (const auto& e : th.minus) value *= std::pow(1.0L - std::exp((e.z - s) * lq), e.multiplicity);
        for (const auto& e : th.plus) value /= std::pow(1.0L - std::exp((e.z - s) * lq), e.multiplicity);
        smp.closed_form = value;
        smp.relative_error = std::abs(smp.closed_form - smp.direct) / std::max(std::abs(smp.direct), 1e-300L);
        if (!(smp.relative_error <= 1e-9L)) all_close = false;
        rep.samples.push_back(smp);
    }
    rep.passed = rep.branch_ok && all_close;
    return rep;
}

}  // namespace motivic
