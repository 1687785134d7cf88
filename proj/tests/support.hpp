#ifndef MOTIVIC_TESTS_SUPPORT_HPP
#define MOTIVIC_TESTS_SUPPORT_HPP

// Test-only helpers: seeded generators and independent oracles.

#include <random>
#include <vector>

#include "motivic/matrix.hpp"
#include "motivic/polynomial.hpp"

namespace motivic::testing {

inline RatMatrix random_matrix(std::mt19937& rng, std::size_t n, int lo = -3, int hi = 3) {
    std::uniform_int_distribution<int> d(lo, hi);
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
    return m;
}

inline RatMatrix random_rational_matrix(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(BigInt(num(rng)), BigInt(den(rng)));
    return m;
}

/* Laplace expansion along the first row; exponential, for small n only. */
inline Rational laplace_det(const RatMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Rational acc;
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j).is_zero()) continue;
        RatMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, cc = 0; c < n; ++c) {
                if (c == j) continue;
                minor(r - 1, cc++) = m(r, c);
            }
        Rational term = m(0, j) * laplace_det(minor);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

/* Series product truncated to n terms. */
inline std::vector<Rational> convolve(const std::vector<Rational>& a, const std::vector<Rational>& b, std::size_t n) {
    std::vector<Rational> c(n);
    for (std::size_t i = 0; i < n && i < a.size(); ++i)
        for (std::size_t j = 0; i + j < n && j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

}  // namespace motivic::testing

#endif
