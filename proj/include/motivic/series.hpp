#ifndef MOTIVIC_SERIES_HPP
#define MOTIVIC_SERIES_HPP

#include <string>
#include <vector>

#include "motivic/polynomial.hpp"
#include "motivic/rational.hpp"

namespace motivic {

inline constexpr int default_precision = 16;

/*
 * Power series over Q known modulo t^{N+1}: coefficients of t^0..t^N.
 * Binary operations work at the smaller of the two precisions.
 */
class TruncatedSeries {
public:
    TruncatedSeries() : c_(1) {}
    /* coefficient list is padded with zeros (or cut) to length precision+1 */
    TruncatedSeries(std::vector<Rational> coeffs, int precision);

    static TruncatedSeries zero(int precision) { return {{}, precision}; }
    static TruncatedSeries one(int precision) { return {{Rational(1)}, precision}; }
    static TruncatedSeries from_rational_function(const RationalFunction& f, int precision);

    int precision() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return c_; }
    const Rational& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    TruncatedSeries truncated(int precision) const;

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a);
    /* equal at the common precision */
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

    std::string str() const;

private:
    std::vector<Rational> c_;
};

/* exp(s); s must have zero constant term */
TruncatedSeries series_exp(const TruncatedSeries& s);
/* log(s); s must have constant term 1 */
TruncatedSeries series_log(const TruncatedSeries& s);

/*
 * exp(sum_{n>=1} p_n t^n / n) to precision N = power_sums.size(), over any
 * Q-algebra R (needs R+R, R*R and R*Rational). This is the passage from a
 * trace sequence to a zeta/L-series: n c_n = sum_{k=1}^n p_k c_{n-k}.
 */
template <class R>
std::vector<R> exp_of_power_sums(const std::vector<R>& power_sums, const R& one) {
    const std::size_t n_max = power_sums.size();
    std::vector<R> c(n_max + 1, one * Rational(0));
    c[0] = one;
    for (std::size_t n = 1; n <= n_max; ++n) {
        R acc = one * Rational(0);
        for (std::size_t k = 1; k <= n; ++k) acc = acc + power_sums[k - 1] * c[n - k];
        c[n] = acc * Rational(BigInt(1), BigInt(static_cast<unsigned long>(n)));
    }
    return c;
}

/* Element of the big Witt ring W(Q) = 1 + tQ[[t]], truncated. */
class WittElement {
public:
    WittElement() : s_(TruncatedSeries::one(default_precision)) {}
    /* throws PreconditionError unless the constant term is 1 */
    explicit WittElement(TruncatedSeries s);

    const TruncatedSeries& series() const { return s_; }
    int precision() const { return s_.precision(); }

    friend bool operator==(const WittElement& a, const WittElement& b) { return a.s_ == b.s_; }

private:
    TruncatedSeries s_;
};

/* gh_1..gh_{n_max}: t d/dt log a = sum gh_n t^n */
std::vector<Rational> ghost_components(const WittElement& a, int n_max);
/* inverse of the ghost map, precision = ghosts.size() */
WittElement ghost_to_witt(const std::vector<Rational>& ghosts);

/* Witt addition: series product */
WittElement witt_add(const WittElement& a, const WittElement& b);
/* Witt multiplication: ghost components multiply pointwise */
WittElement witt_mul(const WittElement& a, const WittElement& b);
/* additive inverse 1/a */
WittElement witt_neg(const WittElement& a);

}  // namespace motivic

#endif
