#ifndef MOTIVIC_ROOTS_HPP
#define MOTIVIC_ROOTS_HPP

#include <complex>
#include <vector>

#include "motivic/polynomial.hpp"

namespace motivic {

struct Root {
    std::complex<long double> value;
    int multiplicity = 1;
};

/*
 * Complex roots of a nonzero rational polynomial with multiplicities.
 * Multiplicities come from the exact square-free decomposition; each
 * square-free factor is solved by Aberth iteration with Newton polishing,
 * and the Sturm count of real roots is used to place real roots exactly on
 * the real axis. Every root is certified against the monic input,
 * |p(r)| < 1e-8 (1 + |r|)^deg, or NumericError is thrown.
 * Output is sorted by modulus, then argument.
 */
std::vector<Root> polynomial_roots(const Polynomial& p);

/* residual test used for certification */
bool root_certified(const Polynomial& p, std::complex<long double> r);

}  // namespace motivic

#endif
