#include "motivic/cyclotomic.hpp"

#include <cmath>
#include <numbers>

#include "motivic/errors.hpp"

namespace motivic {

Polynomial cyclotomic_polynomial(int m) {
    if (m < 1) throw ValidationError("cyclotomic order must be positive");
    Polynomial p = Polynomial::monomial(1, m) - Polynomial::constant(1);
    for (int d = 1; d < m; ++d)
        if (m % d == 0) p = p.divmod(cyclotomic_polynomial(d)).first;
    return p;
}

int euler_phi(int m) {
    int result = m;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

Cyclotomic::Cyclotomic(int m) : m_(m), c_(static_cast<std::size_t>(euler_phi(m))) {
    if (m < 1) throw ValidationError("cyclotomic order must be positive");
}

Cyclotomic::Cyclotomic(int m, std::vector<Rational> coords) : Cyclotomic(m) {
    if (coords.size() > c_.size()) {
        *this = reduce(m, Polynomial(std::move(coords)));
        return;
    }
    for (std::size_t i = 0; i < coords.size(); ++i) c_[i] = coords[i];
}

Cyclotomic Cyclotomic::reduce(int m, const Polynomial& p) {
    Cyclotomic out(m);
    Polynomial r = p.divmod(cyclotomic_polynomial(m)).second;
    for (int i = 0; i <= r.degree(); ++i) out.c_[static_cast<std::size_t>(i)] = r.coeff(i);
    return out;
}

Cyclotomic Cyclotomic::rational(int m, const Rational& r) {
    Cyclotomic out(m);
    out.c_[0] = r;
    return out;
}

Cyclotomic Cyclotomic::root_of_unity(int m, int k) {
    k %= m;
    if (k < 0) k += m;
    return reduce(m, Polynomial::monomial(1, k));
}

bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

std::complex<long double> Cyclotomic::to_complex() const {
    const long double angle = 2.0L * std::numbers::pi_v<long double> / static_cast<long double>(m_);
    std::complex<long double> acc = 0;
    for (std::size_t i = 0; i < c_.size(); ++i)
        acc += c_[i].to_long_double() * std::polar(1.0L, angle * static_cast<long double>(i));
    return acc;
}

Cyclotomic Cyclotomic::conjugate() const {
    Cyclotomic out(m_);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        out = out + root_of_unity(m_, -static_cast<int>(i)) * c_[i];
    }
    return out;
}

namespace {
void require_same_order(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order() != b.order()) throw ValidationError("cyclotomic numbers from different fields");
}
}  // namespace

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    require_same_order(a, b);
    Cyclotomic r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
    return r;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    require_same_order(a, b);
    Cyclotomic r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
    return r;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    require_same_order(a, b);
    if (a.c_.size() == 1) return Cyclotomic::rational(a.m_, a.c_[0] * b.c_[0]);
    return Cyclotomic::reduce(a.m_, Polynomial(a.c_) * Polynomial(b.c_));
}

Cyclotomic operator*(const Cyclotomic& a, const Rational& r) {
    Cyclotomic out = a;
    for (auto& x : out.c_) x *= r;
    return out;
}

std::string Cyclotomic::str() const {
    return Polynomial(c_).str("z" + std::to_string(m_));
}

}  // namespace motivic
