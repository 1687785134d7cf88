#include "motivic/polynomial.hpp"

#include <sstream>

#include "motivic/errors.hpp"

namespace motivic {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { normalize(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, int degree) {
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::t() { return monomial(1, 1); }

void Polynomial::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Polynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return {};
    return c_[static_cast<std::size_t>(i)];
}

Rational Polynomial::leading() const { return c_.empty() ? Rational() : c_.back(); }

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::complex<long double> Polynomial::operator()(std::complex<long double> x) const {
    std::complex<long double> acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_long_double();
    return acc;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Rational& c) {
    for (auto& x : c_) x *= c;
    normalize();
    return *this;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw PreconditionError("polynomial division by zero", "division_by_zero");
    if (degree() < divisor.degree()) return {Polynomial(), *this};
    std::vector<Rational> rem = c_;
    std::vector<Rational> quo(c_.size() - divisor.c_.size() + 1);
    const Rational inv_lead = Rational(1) / divisor.leading();
    const int dd = divisor.degree();
    for (int k = degree() - dd; k >= 0; --k) {
        Rational f = rem[static_cast<std::size_t>(k + dd)] * inv_lead;
        quo[static_cast<std::size_t>(k)] = f;
        if (f.is_zero()) continue;
        for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= f * divisor.c_[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(dd));
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return {};
    return *this * (Rational(1) / leading());
}

Polynomial Polynomial::shifted(int k) const {
    if (is_zero()) return {};
    if (k < 0) throw PreconditionError("negative shift");
    std::vector<Rational> v(static_cast<std::size_t>(k), Rational());
    v.insert(v.end(), c_.begin(), c_.end());
    return Polynomial(std::move(v));
}

Polynomial Polynomial::reversed(int n) const {
    if (n < degree()) throw PreconditionError("reversal length below degree");
    std::vector<Rational> v(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= degree(); ++i) v[static_cast<std::size_t>(n - i)] = c_[static_cast<std::size_t>(i)];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::scaled_argument(const Rational& c) const {
    std::vector<Rational> v = c_;
    Rational power(1);
    for (auto& x : v) {
        x *= power;
        power *= c;
    }
    return Polynomial(std::move(v));
}

Polynomial Polynomial::pow(int k) const {
    Polynomial result = constant(1), base = *this;
    while (k > 0) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return result;
}

Polynomial Polynomial::truncated(int n) const {
    if (n >= static_cast<int>(c_.size())) return *this;
    return Polynomial(std::vector<Rational>(c_.begin(), c_.begin() + std::max(n, 0)));
}

int Polynomial::valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return static_cast<int>(i);
    return 0;
}

std::string Polynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const Rational& c = c_[i];
        if (c.is_zero()) continue;
        Rational mag = abs(c);
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || !mag.is_one()) os << mag;
        if (i >= 1) os << var;
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::vector<Polynomial> squarefree_decomposition(const Polynomial& p) {
    if (p.degree() < 1) return {};
    std::vector<Polynomial> out;
    Polynomial f = p.monic();
    Polynomial fp = f.derivative();
    Polynomial a = gcd(f, fp);
    Polynomial b = f.divmod(a).first;
    Polynomial c = fp.divmod(a).first;
    Polynomial d = c - b.derivative();
    while (b.degree() >= 1) {
        Polynomial g = gcd(b, d);
        out.push_back(g);
        b = b.divmod(g).first;
        c = d.divmod(g).first;
        d = c - b.derivative();
    }
    return out;
}

int count_real_roots(const Polynomial& p) {
    if (p.is_zero()) throw PreconditionError("real-root count of the zero polynomial");
    if (p.degree() == 0) return 0;
    std::vector<Polynomial> seq{p, p.derivative()};
    while (!seq.back().is_zero()) {
        Polynomial r = seq[seq.size() - 2].divmod(seq.back()).second;
        if (r.is_zero()) break;
        seq.push_back(-r);
    }
    auto changes = [&](bool at_plus_infinity) {
        int count = 0, last = 0;
        for (const auto& s : seq) {
            int sg = s.leading().sign();
            if (!at_plus_infinity && s.degree() % 2 == 1) sg = -sg;
            if (sg == 0) continue;
            if (last != 0 && sg != last) ++count;
            last = sg;
        }
        return count;
    };
    return changes(false) - changes(true);
}

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw PreconditionError("rational function with zero denominator", "division_by_zero");
    if (num.is_zero()) {
        num_ = Polynomial();
        den_ = Polynomial::constant(1);
        return;
    }
    Polynomial g = gcd(num, den);
    Polynomial n = num.divmod(g).first;
    Polynomial d = den.divmod(g).first;
    Rational lead = d.leading();
    num_ = n * (Rational(1) / lead);
    den_ = d * (Rational(1) / lead);
}

int RationalFunction::degree() const {
    if (num_.is_zero()) return 0;
    return num_.degree() - den_.degree();
}

std::pair<Polynomial, Polynomial> RationalFunction::unit_constant_form() const {
    Rational c = den_.constant_term();
    if (c.is_zero()) return {num_, den_};
    Rational inv = Rational(1) / c;
    return {num_ * inv, den_ * inv};
}

std::vector<Rational> RationalFunction::taylor(int n_terms) const {
    Rational d0 = den_.constant_term();
    if (d0.is_zero()) throw PreconditionError("Taylor expansion at a pole t = 0", "pole");
    std::vector<Rational> out(static_cast<std::size_t>(std::max(n_terms, 0)));
    const Rational inv = Rational(1) / d0;
    for (int n = 0; n < n_terms; ++n) {
        Rational acc = num_.coeff(n);
        for (int k = 1; k <= std::min(n, den_.degree()); ++k) acc -= den_.coeff(k) * out[static_cast<std::size_t>(n - k)];
        out[static_cast<std::size_t>(n)] = acc * inv;
    }
    return out;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw PreconditionError("division by the zero rational function", "division_by_zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
}

namespace {

/* p(1/(c t)) * t^deg(p), a polynomial */
Polynomial reciprocal_numerator(const Polynomial& p, const Rational& c) {
    if (p.is_zero()) return {};
    const int d = p.degree();
    std::vector<Rational> v(static_cast<std::size_t>(d) + 1);
    Rational cinv = Rational(1) / c, power(1);
    for (int i = 0; i <= d; ++i) {
        v[static_cast<std::size_t>(d - i)] = p.coeff(i) * power;
        power *= cinv;
    }
    return Polynomial(std::move(v));
}

}  // namespace

RationalFunction RationalFunction::substitute_reciprocal(const Rational& c) const {
    if (c.is_zero()) throw PreconditionError("reciprocal substitution with zero scale");
    if (num_.is_zero()) return {};
    Polynomial n = reciprocal_numerator(num_, c);
    Polynomial d = reciprocal_numerator(den_, c);
    const int shift = den_.degree() - num_.degree();
    if (shift >= 0) return {n.shifted(shift), d};
    return {n, d.shifted(-shift)};
}

RationalFunction RationalFunction::t_power(int k) {
    if (k >= 0) return RationalFunction(Polynomial::monomial(1, k));
    return {Polynomial::constant(1), Polynomial::monomial(1, -k)};
}

std::complex<long double> RationalFunction::operator()(std::complex<long double> x) const {
    return num_(x) / den_(x);
}

std::string RationalFunction::str() const {
    auto [n, d] = unit_constant_form();
    return "(" + n.str() + ")/(" + d.str() + ")";
}

}  // namespace motivic
