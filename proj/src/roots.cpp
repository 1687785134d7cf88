#include "motivic/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "motivic/errors.hpp"

namespace motivic {

namespace {

using cld = std::complex<long double>;

struct Monic {
    std::vector<long double> a;  // ascending, a.back() == 1

    explicit Monic(const Polynomial& f) {
        const Rational lead = f.leading();
        for (const auto& c : f.coefficients()) a.push_back((c / lead).to_long_double());
    }
    int degree() const { return static_cast<int>(a.size()) - 1; }
    void eval(cld z, cld& p, cld& dp) const {
        p = 0;
        dp = 0;
        for (auto it = a.rbegin(); it != a.rend(); ++it) {
            dp = dp * z + p;
            p = p * z + *it;
        }
    }
};

std::vector<cld> aberth(const Monic& f) {
    const int n = f.degree();
    long double r = std::abs(f.a[0]);
    r = r > 0 ? std::pow(r, 1.0L / n) : 1.0L;
    std::vector<cld> z(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        z[static_cast<std::size_t>(k)] = std::polar(r, 2.0L * std::numbers::pi_v<long double> * k / n + 0.4L);

    bool converged = false;
    for (int iter = 0; iter < 2000 && !converged; ++iter) {
        long double worst = 0;
        for (std::size_t k = 0; k < z.size(); ++k) {
            cld p, dp;
            f.eval(z[k], p, dp);
            if (p == cld(0)) continue;
            const cld ratio = p / dp;
            cld sum = 0;
            for (std::size_t j = 0; j < z.size(); ++j)
                if (j != k) sum += 1.0L / (z[k] - z[j]);
            const cld w = ratio / (1.0L - ratio * sum);
            if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) continue;
            z[k] -= w;
            worst = std::max(worst, std::abs(w) / (1.0L + std::abs(z[k])));
        }
        converged = worst < 1e-17L;
    }
    for (auto& x : z) {
        for (int i = 0; i < 3; ++i) {
            cld p, dp;
            f.eval(x, p, dp);
            if (dp == cld(0) || p == cld(0)) break;
            x -= p / dp;
        }
    }
    return z;
}

std::vector<cld> squarefree_roots(const Polynomial& f) {
    if (f.degree() == 1) return {cld((-f.coeff(0) / f.coeff(1)).to_long_double(), 0)};
    const Monic m(f);
    auto z = aberth(m);
    const auto real_count = static_cast<std::size_t>(count_real_roots(f));
    std::sort(z.begin(), z.end(), [](cld a, cld b) { return std::abs(a.imag()) < std::abs(b.imag()); });
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (i < real_count) {
            long double x = z[i].real();
            for (int it = 0; it < 4; ++it) {
                cld p, dp;
                m.eval(cld(x, 0), p, dp);
                if (dp.real() == 0 || p.real() == 0) break;
                x -= p.real() / dp.real();
            }
            z[i] = cld(x, 0);
        } else if (std::abs(z[i].imag()) == 0) {
            throw NumericError("root finder placed a non-real root on the real axis");
        }
    }
    return z;
}

}  // namespace

bool root_certified(const Polynomial& p, std::complex<long double> r) {
    const Monic m(p);
    cld v, dv;
    m.eval(r, v, dv);
    return std::abs(v) < 1e-8L * std::pow(1.0L + std::abs(r), static_cast<long double>(m.degree()));
}

std::vector<Root> polynomial_roots(const Polynomial& p) {
    if (p.is_zero()) throw PreconditionError("roots of the zero polynomial");
    std::vector<Root> out;
    if (p.degree() == 0) return out;
    const auto factors = squarefree_decomposition(p);
    for (std::size_t k = 0; k < factors.size(); ++k) {
        if (factors[k].degree() < 1) continue;
        for (const auto& z : squarefree_roots(factors[k])) out.push_back({z, static_cast<int>(k) + 1});
    }
    for (const auto& r : out)
        if (!root_certified(p, r.value)) throw NumericError("root finder did not converge to a certified root");
    std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) {
        const long double ma = std::abs(a.value), mb = std::abs(b.value);
        if (ma != mb) return ma < mb;
        return std::arg(a.value) < std::arg(b.value);
    });
    return out;
}

}  // namespace motivic
