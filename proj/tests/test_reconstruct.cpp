#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "motivic/motive.hpp"
#include "motivic/reconstruct.hpp"
#include "support.hpp"

using namespace motivic;

namespace {

const ReconstructionResult& ok(const Reconstruction& r) {
    REQUIRE(stabilized(r));
    return std::get<ReconstructionResult>(r);
}

Polynomial random_poly(std::mt19937& rng, int deg, bool unit_constant) {
    std::uniform_int_distribution<int> d(-4, 4);
    std::vector<Rational> c;
    for (int i = 0; i <= deg; ++i) c.push_back(d(rng));
    if (unit_constant) c[0] = 1;
    if (c.back().is_zero()) c.back() = 1;
    return Polynomial(c);
}

}  // namespace

TEST_CASE("berlekamp_massey examples") {
    auto zero = ok(berlekamp_massey(std::vector<Rational>(8)));
    CHECK(zero.value.is_zero());
    CHECK(zero.order == 0);

    auto p1 = ok(berlekamp_massey({1, 6, 31, 156, 781, 3906}));
    CHECK(p1.value == RationalFunction(Polynomial{1}, Polynomial{1, -6, 5}));
    CHECK(p1.order == 2);

    std::vector<Rational> fib{1, 1, 2, 3, 5, 8, 13, 21};
    auto f = ok(berlekamp_massey(fib));
    CHECK(f.value == RationalFunction(Polynomial{1}, Polynomial{1, -1, -1}));
    // oracle: den * seq == num up to the input length
    auto prod = testing::convolve(fib, f.value.den().coefficients(), fib.size());
    for (std::size_t i = 0; i < prod.size(); ++i) CHECK(prod[i] == f.value.num().coeff(static_cast<int>(i)));
}

TEST_CASE("berlekamp_massey declines short or unsettled evidence") {
    // order 3 recurrence seen over only 5 terms
    CHECK_FALSE(stabilized(berlekamp_massey({1, 2, 4, 9, 20})));
    // a recurrence that changes in the final quarter
    CHECK_FALSE(stabilized(berlekamp_massey({1, 1, 1, 1, 1, 1, 1, 2})));
}

TEST_CASE("traces_to_zeta examples") {
    std::vector<Rational> traces;
    Rational p = 1;
    for (int n = 1; n <= 8; ++n) {
        p *= 5;
        traces.push_back(1 + p);
    }
    auto r = ok(traces_to_zeta(traces));
    CHECK(r.value == RationalFunction(Polynomial{1}, Polynomial{1, -6, 5}));
    CHECK(r.degree == -2);

    auto one = ok(traces_to_zeta(std::vector<Rational>(8)));
    CHECK(one.value == RationalFunction(Polynomial{1}));
    CHECK(one.degree == 0);

    // exp(-2 log(1 + t)) = 1/(1 + t)^2
    std::vector<Rational> alt;
    for (int n = 1; n <= 8; ++n) alt.push_back(n % 2 ? -2 : 2);
    auto a = ok(traces_to_zeta(alt));
    CHECK(a.value == RationalFunction(Polynomial{1}, Polynomial{1, 2, 1}));
}

TEST_CASE("linear_complexity_profile examples") {
    auto geo = linear_complexity_profile({1, 2, 4, 8});
    CHECK(geo.back() == 1);
    CHECK(linear_complexity_profile(std::vector<Rational>(6)) == std::vector<int>(6, 0));
}

TEST_CASE("round trip through random rational functions") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 80; ++trial) {
        std::uniform_int_distribution<int> dn(0, 5), dd(1, 5);
        RationalFunction f(random_poly(rng, dn(rng), false), random_poly(rng, dd(rng), true));
        // 2(deg num + deg den) + 2 terms, extended when the final quarter would not yet show a settled recurrence
        const int order = std::max(f.den().degree(), f.num().degree() + 1);
        const int terms = std::max(2 * (std::max(f.num().degree(), 0) + f.den().degree()) + 2, (8 * order + 2) / 3 + 1);
        auto seq = f.taylor(terms);
        auto r = berlekamp_massey(seq);
        REQUIRE(stabilized(r));
        CHECK(std::get<ReconstructionResult>(r).value == f);
    }
}

TEST_CASE("profile is nondecreasing on random input") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Rational> seq;
        for (int i = 0; i < 20; ++i) seq.push_back(d(rng));
        auto prof = linear_complexity_profile(seq);
        REQUIRE(prof.size() == seq.size());
        for (std::size_t i = 1; i < prof.size(); ++i) CHECK(prof[i] >= prof[i - 1]);
    }
}

TEST_CASE("traces_to_zeta agrees with the determinant formula on random motives") {
    std::mt19937 rng(606);
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<int> dp(0, 4);
        const std::size_t dplus = static_cast<std::size_t>(dp(rng));
        const std::size_t dminus = static_cast<std::size_t>(std::uniform_int_distribution<int>(0, 6 - static_cast<int>(dplus))(rng));
        TracedMotive m(testing::random_matrix(rng, dplus), testing::random_matrix(rng, dminus));
        auto r = traces_to_zeta(trace_sequence(m, 4 * 6 + 4));
        REQUIRE(stabilized(r));
        CHECK(std::get<ReconstructionResult>(r).value == zeta_rational(m));
    }
}
