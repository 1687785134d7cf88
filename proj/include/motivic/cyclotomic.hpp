#ifndef MOTIVIC_CYCLOTOMIC_HPP
#define MOTIVIC_CYCLOTOMIC_HPP

#include <complex>
#include <string>
#include <vector>

#include "motivic/polynomial.hpp"
#include "motivic/rational.hpp"

namespace motivic {

/* m-th cyclotomic polynomial over Q */
Polynomial cyclotomic_polynomial(int m);
int euler_phi(int m);

/*
 * Element of Q(zeta_m) in the power basis 1, z, ..., z^{phi(m)-1} with
 * z = exp(2 pi i / m).
 */
class Cyclotomic {
public:
    Cyclotomic() : Cyclotomic(1) {}
    explicit Cyclotomic(int m);
    Cyclotomic(int m, std::vector<Rational> coords);
    static Cyclotomic rational(int m, const Rational& r);
    /* zeta_m^k */
    static Cyclotomic root_of_unity(int m, int k);

    int order() const { return m_; }
    const std::vector<Rational>& coords() const { return c_; }
    bool is_rational() const;
    Rational rational_part() const { return c_.empty() ? Rational() : c_[0]; }
    std::complex<long double> to_complex() const;
    /* complex conjugate: z -> z^{-1} */
    Cyclotomic conjugate() const;

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Rational& r);
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return a.m_ == b.m_ && a.c_ == b.c_; }

    std::string str() const;

private:
    static Cyclotomic reduce(int m, const Polynomial& p);
    int m_;
    std::vector<Rational> c_;
};

}  // namespace motivic

#endif
