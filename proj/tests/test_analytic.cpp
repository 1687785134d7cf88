#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "motivic/analytic.hpp"
#include "motivic/errors.hpp"
#include "support.hpp"

using namespace motivic;

namespace {

const long double pi = std::numbers::pi_v<long double>;

TracedMotive p1() { return TracedMotive(RatMatrix::diagonal({1, 5}), RatMatrix()); }
TracedMotive elliptic() { return TracedMotive(RatMatrix::diagonal({1, 5}), companion(Polynomial{5, 3, 1})); }
TracedMotive boundary() { return TracedMotive(RatMatrix::diagonal({1, -5}), RatMatrix{{5}}); }

/* det(1 - x F) evaluated directly in complex arithmetic from the matrix entries */
Complex det_one_minus(const RatMatrix& f, Complex x) {
    const std::size_t n = f.rows();
    std::vector<std::vector<Complex>> a(n, std::vector<Complex>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = (i == j ? Complex(1) : Complex(0)) - x * static_cast<long double>(f(i, j).to_double());
    Complex d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
        if (std::abs(a[piv][c]) == 0) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            d = -d;
        }
        d *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const Complex f2 = a[r][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[r][j] -= f2 * a[c][j];
        }
    }
    return d;
}

/* oracle for the Hasse-Weil value: det(1 - q^-s F-) / det(1 - q^-s F+) */
Complex hw_oracle(const TracedMotive& m, std::int64_t q, Complex s) {
    const Complex x = std::exp(-s * std::log(static_cast<long double>(q)));
    return det_one_minus(m.f_minus(), x) / det_one_minus(m.f_plus(), x);
}

bool near(Complex a, Complex b, long double rel) { return std::abs(a - b) <= rel * std::max<long double>(1, std::abs(b)); }

TracedMotive random_motive(std::mt19937& rng, bool invertible) {
    for (;;) {
        const auto dp = static_cast<std::size_t>(std::uniform_int_distribution<int>(0, 3)(rng));
        const auto dm = static_cast<std::size_t>(std::uniform_int_distribution<int>(0, 3)(rng));
        auto a = testing::random_matrix(rng, dp), b = testing::random_matrix(rng, dm);
        if (invertible && (det(a).is_zero() || det(b).is_zero())) continue;
        return TracedMotive(a, b);
    }
}

std::vector<Complex> random_samples(std::mt19937& rng, int count, long double re_lo, long double re_hi) {
    std::uniform_real_distribution<long double> re(re_lo, re_hi), im(-6, 6);
    std::vector<Complex> out;
    for (int i = 0; i < count; ++i) out.emplace_back(re(rng), im(rng));
    return out;
}

}  // namespace

TEST_CASE("spectrum and spectral radius") {
    auto s = spectrum(elliptic());
    REQUIRE(s.minus.size() == 2);
    for (const auto& r : s.minus) CHECK(std::abs(std::abs(r.value) - std::sqrt(5.0L)) < 1e-12L);
    CHECK(s.charpoly_minus == Polynomial{5, 3, 1});
    CHECK(spectral_radius(p1()).rho == doctest::Approx(5.0));
    CHECK(spectral_radius(TracedMotive()).rho == 0);

    auto j = spectrum(TracedMotive(RatMatrix{{5, 1}, {0, 5}}, RatMatrix()));
    REQUIRE(j.plus.size() == 1);
    CHECK(j.plus[0].multiplicity == 2);
}

TEST_CASE("growth bound on random motives") {
    std::mt19937 rng(40);
    for (int trial = 0; trial < 40; ++trial) CHECK(growth_bound_check(random_motive(rng, false), 40));
    CHECK(growth_bound_check(p1(), 40));
}

TEST_CASE("rate examples") {
    auto r = rate_exact(p1());
    REQUIRE(std::holds_alternative<long double>(r));
    CHECK(std::abs(std::get<long double>(r) - std::log(5.0L)) < 1e-12L);

    // constant traces: the window maximum log c / n tends to 0
    CHECK(rate_estimate(std::vector<Rational>(10, Rational(1)), 10) == 0);
    CHECK(rate_estimate(std::vector<Rational>(10, Rational(2)), 10) == doctest::Approx(std::log(2.0L) / 6));
    CHECK(rate_estimate(std::vector<Rational>(400, Rational(2)), 400) < 0.004L);
    std::vector<Rational> alt;
    for (int n = 1; n <= 10; ++n) alt.push_back(n % 2 ? -3 : 3);
    CHECK(rate_estimate(alt, 10) == doctest::Approx(std::log(3.0L) / 6));  // largest at n = 6
    CHECK(std::isinf(rate_estimate(std::vector<Rational>(6), 6)));
    CHECK(rate_estimate(std::vector<Rational>(6), 6) < 0);

    auto cy = rate_exact(TracedMotive(RatMatrix{{-1}}, RatMatrix()));
    REQUIRE(std::holds_alternative<long double>(cy));
    CHECK(std::get<long double>(cy) == 0);

    // equal outer eigenvalues on both sides: hypothesis fails
    CHECK(std::holds_alternative<Inapplicable>(rate_exact(TracedMotive(RatMatrix{{5}}, RatMatrix{{5}}))));
    CHECK(std::holds_alternative<long double>(rate_exact(TracedMotive(RatMatrix{{5}}, RatMatrix{{-5}}))));
}

TEST_CASE("rate estimate approaches the exact rate") {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 20; ++trial) {
        // dominant eigenvalue 4..7 on F+, everything else of modulus at most 2
        const int lead = std::uniform_int_distribution<int>(4, 7)(rng);
        RatMatrix plus(3, 3);
        plus(0, 0) = lead;
        for (std::size_t i = 1; i < 3; ++i)
            for (std::size_t j = 1; j < 3; ++j) plus(i, j) = std::uniform_int_distribution<int>(-1, 1)(rng);
        RatMatrix minus{{Rational(std::uniform_int_distribution<int>(-2, 2)(rng))}};
        TracedMotive m(plus, minus);
        auto exact = rate_exact(m);
        REQUIRE(std::holds_alternative<long double>(exact));
        CHECK(std::abs(std::get<long double>(exact) - std::log(static_cast<long double>(lead))) < 1e-12L);
        const auto traces = trace_sequence(m, 40);
        long double prev = INFINITY;
        for (int n = 31; n <= 40; ++n) {
            const long double gap = std::abs(rate_estimate(traces, n) - std::get<long double>(exact));
            CHECK(gap <= prev + 1e-15L);
            prev = gap;
        }
        CHECK(prev < 1e-3L);
    }
}

TEST_CASE("Hasse-Weil evaluation") {
    CHECK(std::abs(hasse_weil_eval(p1(), 5, 2) - Complex(125.0L / 96.0L)) < 1e-12L);
    const Complex shift(0, 2 * pi / std::log(5.0L));
    for (Complex s : {Complex(2, 0), Complex(2, 0.7L), Complex(3, -1.1L)}) {
        CHECK(near(hasse_weil_eval(p1(), 5, s), hw_oracle(p1(), 5, s), 1e-12L));
        CHECK(near(hasse_weil_eval(p1(), 5, s + shift), hasse_weil_eval(p1(), 5, s), 1e-9L));
    }
    CHECK(hasse_weil_eval(TracedMotive(), 5, Complex(1, 1)) == Complex(1));
    try {
        (void)hasse_weil_eval(p1(), 5, 0);
        FAIL("expected a pole");
    } catch (const PoleError& e) {
        CHECK(std::abs(e.re) < 1e-12);
        CHECK(std::abs(e.im) < 1e-12);
    }
    CHECK_THROWS_AS(hasse_weil_eval(p1(), 6, 2), ValidationError);
}

TEST_CASE("Hasse-Weil periodicity and oracle on random motives") {
    std::mt19937 rng(55);
    for (int trial = 0; trial < 30; ++trial) {
        auto m = random_motive(rng, false);
        for (auto s : random_samples(rng, 4, 2.5L, 4)) {
            const Complex shift(0, 2 * pi / std::log(7.0L));
            Complex v;
            try {
                v = hasse_weil_eval(m, 7, s);
            } catch (const PoleError&) {
                continue;
            }
            CHECK(near(v, hw_oracle(m, 7, s), 1e-9L));
            CHECK(near(hasse_weil_eval(m, 7, s + shift), v, 1e-9L));
        }
    }
}

TEST_CASE("convergence abscissa") {
    CHECK(convergence_abscissa(p1(), 5) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(convergence_abscissa(elliptic(), 5) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::isinf(convergence_abscissa(TracedMotive(), 5)));
    CHECK(convergence_abscissa(TracedMotive(), 5) < 0);
    CHECK(convergence_abscissa(TracedMotive(RatMatrix{{25}}, RatMatrix()), 5) == doctest::Approx(2.0));
}

TEST_CASE("poles and zeros") {
    auto r = poles_and_zeros(p1(), 5, -4, 4);
    REQUIRE(r.poles.size() == 2);
    CHECK(std::abs(r.poles[0].base) < 1e-15L);
    CHECK(std::abs(r.poles[1].base - Complex(1)) < 1e-15L);
    CHECK(r.zeros.empty());
    CHECK(r.step == doctest::Approx(2 * pi / std::log(5.0L)));
    for (const auto& family : r.poles)
        for (const auto& z : family.in_strip) {
            CHECK(z.imag() >= -4 - 1e-12L);
            CHECK(z.imag() <= 4 + 1e-12L);
            // every lattice member is a pole: q^z = lambda
            CHECK(std::abs(std::exp(z * std::log(5.0L)) - family.eigenvalue) < 1e-9L);
        }
    CHECK(r.poles[0].in_strip.size() == 3);  // 0 and +-3.904

    auto e = poles_and_zeros(elliptic(), 5, -1, 1);
    REQUIRE(e.zeros.size() == 2);
    for (const auto& z : e.zeros) CHECK(std::abs(z.base.real() - 0.5L) < 1e-12L);

    auto empty = poles_and_zeros(TracedMotive(), 5, -1, 1);
    CHECK(empty.poles.empty());
    CHECK(empty.zeros.empty());

    auto c = poles_and_zeros(TracedMotive(RatMatrix::diagonal({1, 5}), RatMatrix{{5}}), 5, -1, 1);
    CHECK(c.poles.size() == 1);
    CHECK(c.zeros.empty());
    REQUIRE(c.cancelled.size() == 1);
    CHECK(std::abs(c.cancelled[0] - Complex(5)) < 1e-12L);
}

TEST_CASE("theta construction") {
    auto t = theta_construction(p1(), 5);
    REQUIRE(t.plus.size() == 2);
    CHECK(std::abs(t.plus[0].z) < 1e-15L);
    CHECK(std::abs(t.plus[1].z - Complex(1)) < 1e-15L);

    auto b = theta_construction(boundary(), 5);
    const Complex expected(1, pi / std::log(5.0L));
    bool found = false;
    for (const auto& e : b.plus)
        if (e.lambda.real() < 0) {
            found = true;
            CHECK(std::abs(e.z - expected) < 1e-12L);
            CHECK(e.on_boundary);
        }
    CHECK(found);
    auto lower = theta_construction(boundary(), 5, BranchWindow::lower_closed);
    for (const auto& e : lower.plus)
        if (e.lambda.real() < 0) CHECK(std::abs(e.z - std::conj(expected)) < 1e-12L);

    CHECK_THROWS_AS(theta_construction(TracedMotive(RatMatrix{{0}}, RatMatrix()), 5), NotInvertibleError);
    CHECK_THROWS_AS(theta_construction(p1(), 6), ValidationError);
}

TEST_CASE("theta nilpotent parts exponentiate to the unipotent part") {
    const long double lq = std::log(5.0L);
    auto u = theta_construction(TracedMotive(RatMatrix{{1, 1}, {0, 1}}, RatMatrix()), 5);
    REQUIRE(u.plus.size() == 1);
    CHECK(std::abs(u.plus[0].z) < 1e-15L);
    REQUIRE(u.plus[0].blocks.size() == 1);
    CHECK(u.plus[0].blocks[0].size == 2);
    CHECK(std::abs(u.plus[0].blocks[0].nilpotent_log[0][1] - Complex(1 / lq)) < 1e-15L);

    // 3x3 Jordan block at 5: exp(log q * L) = 1 + N/5 in the Jordan basis
    auto j = theta_construction(TracedMotive(RatMatrix{{5, 1, 0}, {0, 5, 1}, {0, 0, 5}}, RatMatrix()), 5);
    REQUIRE(j.plus.size() == 1);
    REQUIRE(j.plus[0].blocks.size() == 1);
    const auto& l = j.plus[0].blocks[0].nilpotent_log;
    REQUIRE(l.size() == 3);
    std::vector<std::vector<Complex>> a(3, std::vector<Complex>(3)), a2(3, std::vector<Complex>(3));
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) a[r][c] = lq * l[r][c];
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c)
            for (std::size_t k = 0; k < 3; ++k) a2[r][c] += a[r][k] * a[k][c];
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) {
            const Complex e = (r == c ? Complex(1) : Complex(0)) + a[r][c] + a2[r][c] / 2.0L;
            const Complex want = r == c ? Complex(1) : (c == r + 1 ? Complex(0.2L) : Complex(0));
            CHECK(std::abs(e - want) < 1e-15L);
        }

    // diagonalizable repeated eigenvalue: two blocks of size 1
    auto d = theta_construction(TracedMotive(RatMatrix::diagonal({5, 5}), RatMatrix()), 5);
    REQUIRE(d.plus.size() == 1);
    CHECK(d.plus[0].blocks.size() == 2);
}

TEST_CASE("q^z reproduces every eigenvalue on random invertible motives") {
    std::mt19937 rng(8080);
    for (int trial = 0; trial < 40; ++trial) {
        auto m = random_motive(rng, true);
        for (auto window : {BranchWindow::principal, BranchWindow::lower_closed}) {
            auto t = theta_construction(m, 3, window);
            for (const auto* side : {&t.plus, &t.minus})
                for (const auto& e : *side) {
                    CHECK(std::abs(std::exp(e.z * std::log(3.0L)) - e.lambda) <= 1e-9L * std::abs(e.lambda));
                    if (window == BranchWindow::principal) CHECK(in_principal_window(e.z, 3));
                }
        }
    }
}

TEST_CASE("regularized determinant check") {
    auto r = regularized_det_check(p1(), 5, {Complex(2), Complex(2, 0.7L), Complex(3, -1.1L)});
    CHECK(r.passed);
    CHECK(r.branch_ok);
    for (const auto& s : r.samples) CHECK(s.relative_error < 1e-12L);

    CHECK(regularized_det_check(TracedMotive(), 5, {Complex(1, 1)}).passed);

    std::mt19937 rng(20);
    CHECK(regularized_det_check(elliptic(), 5, random_samples(rng, 20, 1.5L, 3)).passed);
    CHECK(regularized_det_check(boundary(), 5, random_samples(rng, 20, 1.5L, 3)).passed);

    // wrong branch window: z for -5 leaves the principal window
    auto sentinel = regularized_det_check(boundary(), 5, random_samples(rng, 20, 1.5L, 3), BranchWindow::lower_closed);
    CHECK_FALSE(sentinel.branch_ok);
    CHECK_FALSE(sentinel.passed);
    // windows only differ on the boundary
    CHECK(regularized_det_check(elliptic(), 5, random_samples(rng, 5, 1.5L, 3), BranchWindow::lower_closed).passed);

    CHECK_THROWS_AS(regularized_det_check(p1(), 5, {Complex(1)}), PoleError);
}
