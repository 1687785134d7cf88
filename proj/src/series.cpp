#include "motivic/series.hpp"

#include <algorithm>
#include <sstream>

#include "motivic/errors.hpp"

namespace motivic {

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs, int precision) : c_(std::move(coeffs)) {
    if (precision < 0) throw PreconditionError("negative series precision", "precision");
    c_.resize(static_cast<std::size_t>(precision) + 1);
}

TruncatedSeries TruncatedSeries::from_rational_function(const RationalFunction& f, int precision) {
    return {f.taylor(precision + 1), precision};
}

TruncatedSeries TruncatedSeries::truncated(int precision) const {
    if (precision > this->precision()) throw PrecisionError("cannot raise series precision by truncation");
    return {c_, precision};
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.precision(), b.precision());
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] + b.c_[i];
    return {std::move(c), n};
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.precision(), b.precision());
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] - b.c_[i];
    return {std::move(c), n};
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.precision(), b.precision());
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        if (a.c_[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int j = 0; i + j <= n; ++j)
            c[static_cast<std::size_t>(i + j)] += a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
    }
    return {std::move(c), n};
}

TruncatedSeries operator*(const Rational& k, const TruncatedSeries& a) {
    std::vector<Rational> c = a.c_;
    for (auto& x : c) x *= k;
    return {std::move(c), a.precision()};
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.c_.size(), b.c_.size());
    return std::equal(a.c_.begin(), a.c_.begin() + static_cast<std::ptrdiff_t>(n), b.c_.begin());
}

std::string TruncatedSeries::str() const {
    std::ostringstream os;
    os << Polynomial(c_).str() << " + O(t^" << precision() + 1 << ")";
    return os.str();
}

TruncatedSeries series_exp(const TruncatedSeries& s) {
    if (!s[0].is_zero()) throw PreconditionError("exp of a series with nonzero constant term");
    // exp(s) = exp(sum (k a_k) t^k / k)
    std::vector<Rational> power_sums(static_cast<std::size_t>(s.precision()));
    for (int k = 1; k <= s.precision(); ++k) power_sums[static_cast<std::size_t>(k - 1)] = s[k] * Rational(k);
    return {exp_of_power_sums(power_sums, Rational(1)), s.precision()};
}

TruncatedSeries series_log(const TruncatedSeries& s) {
    if (!s[0].is_one()) throw PreconditionError("log of a series whose constant term is not 1");
    const int n_max = s.precision();
    std::vector<Rational> l(static_cast<std::size_t>(n_max) + 1);
    // n l_n = n s_n - sum_{k=1}^{n-1} k l_k s_{n-k}
    for (int n = 1; n <= n_max; ++n) {
        Rational acc = Rational(n) * s[n];
        for (int k = 1; k < n; ++k) acc -= Rational(k) * l[static_cast<std::size_t>(k)] * s[n - k];
        l[static_cast<std::size_t>(n)] = acc / Rational(n);
    }
    return {std::move(l), n_max};
}

WittElement::WittElement(TruncatedSeries s) : s_(std::move(s)) {
    if (!s_[0].is_one()) throw PreconditionError("Witt vectors need constant term 1");
}

std::vector<Rational> ghost_components(const WittElement& a, int n_max) {
    if (n_max > a.precision())
        throw PrecisionError("requested " + std::to_string(n_max) + " ghost components at precision " +
                             std::to_string(a.precision()));
    TruncatedSeries l = series_log(a.series());
    std::vector<Rational> g(static_cast<std::size_t>(std::max(n_max, 0)));
    for (int n = 1; n <= n_max; ++n) g[static_cast<std::size_t>(n - 1)] = Rational(n) * l[n];
    return g;
}

WittElement ghost_to_witt(const std::vector<Rational>& ghosts) {
    return WittElement(TruncatedSeries(exp_of_power_sums(ghosts, Rational(1)), static_cast<int>(ghosts.size())));
}

WittElement witt_add(const WittElement& a, const WittElement& b) { return WittElement(a.series() * b.series()); }

WittElement witt_mul(const WittElement& a, const WittElement& b) {
    const int n = std::min(a.precision(), b.precision());
    auto ga = ghost_components(a, n);
    auto gb = ghost_components(b, n);
    for (std::size_t i = 0; i < ga.size(); ++i) ga[i] *= gb[i];
    return ghost_to_witt(ga);
}

WittElement witt_neg(const WittElement& a) {
    auto g = ghost_components(a, a.precision());
    for (auto& x : g) x = -x;
    return ghost_to_witt(g);
}

}  // namespace motivic
