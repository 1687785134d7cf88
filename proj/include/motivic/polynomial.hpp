#ifndef MOTIVIC_POLYNOMIAL_HPP
#define MOTIVIC_POLYNOMIAL_HPP

#include <complex>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "motivic/rational.hpp"

namespace motivic {

/*
 * Univariate polynomial over Q, coefficients in ascending degree.
 * Trailing zeros are stripped, so the zero polynomial has no coefficients
 * and degree() == -1.
 */
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<Rational> coeffs);

    static Polynomial constant(const Rational& c);
    static Polynomial monomial(const Rational& c, int degree);
    /* the variable t */
    static Polynomial t();

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<Rational>& coefficients() const { return c_; }
    /* zero for indices beyond the degree */
    Rational coeff(int i) const;
    Rational leading() const;
    Rational constant_term() const { return coeff(0); }

    Rational operator()(const Rational& x) const;
    std::complex<long double> operator()(std::complex<long double> x) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    /* Euclidean division; throws on a zero divisor */
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
    Polynomial derivative() const;
    /* scaled to leading coefficient 1 (zero stays zero) */
    Polynomial monic() const;
    /* t^k * p */
    Polynomial shifted(int k) const;
    /* t^n p(1/t) for n >= degree */
    Polynomial reversed(int n) const;
    /* p(c t) */
    Polynomial scaled_argument(const Rational& c) const;
    /* p^k for k >= 0 */
    Polynomial pow(int k) const;
    /* truncated to degrees < n */
    Polynomial truncated(int n) const;
    /* multiplicity of t as a factor (0 for the zero polynomial) */
    int valuation() const;

    std::string str(const std::string& var = "t") const;
    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

private:
    void normalize();
    std::vector<Rational> c_;
};

/* monic gcd; gcd(0,0) = 0 */
Polynomial gcd(Polynomial a, Polynomial b);

/* Yun's square-free decomposition: p = lc * prod_k factors[k]^(k+1); entries may be 1 */
std::vector<Polynomial> squarefree_decomposition(const Polynomial& p);

/* Sturm count of distinct real roots of a nonzero polynomial */
int count_real_roots(const Polynomial& p);

/*
 * Element of Q(t), stored as num/den with gcd(num, den) = 1 and den monic.
 */
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Polynomial::constant(1)) {}
    RationalFunction(const Polynomial& num, const Polynomial& den);
    explicit RationalFunction(const Polynomial& p) : RationalFunction(p, Polynomial::constant(1)) {}

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    /* deg(num) - deg(den) of the reduced form; zero function reports 0 */
    int degree() const;

    /* Same function rescaled so that den(0) = 1, when den(0) != 0. This is the
     * natural presentation of zeta functions: 1/((1-t)(1-qt)) etc. */
    std::pair<Polynomial, Polynomial> unit_constant_form() const;

    bool is_zero() const { return num_.is_zero(); }
    /* Taylor coefficients 0..n_terms-1 around t = 0; requires den(0) != 0 */
    std::vector<Rational> taylor(int n_terms) const;

    RationalFunction operator-() const { return {-num_, den_}; }
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /* f(1/(c t)) for nonzero rational c */
    RationalFunction substitute_reciprocal(const Rational& c) const;
    /* (t)^k as an element of Q(t), any integer k */
    static RationalFunction t_power(int k);

    std::complex<long double> operator()(std::complex<long double> x) const;

    std::string str() const;

private:
    Polynomial num_, den_;
};

}  // namespace motivic

#endif
