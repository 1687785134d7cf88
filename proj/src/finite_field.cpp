#include "motivic/finite_field.hpp"

#include <limits>
#include <sstream>

#include "motivic/errors.hpp"

namespace motivic {

namespace fp {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint64_t checked_pow(std::uint64_t p, unsigned k) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (r > std::numeric_limits<std::uint64_t>::max() / p) throw ResourceError("p^k overflows 64 bits", 1.0e19L);
        r *= p;
    }
    return r;
}

std::uint64_t prime_power_base(std::uint64_t q, unsigned* exponent) {
    if (q < 2) return 0;
    auto f = prime_factors(q);
    if (f.size() != 1) return 0;
    unsigned k = 0;
    while (q > 1) {
        q /= f[0];
        ++k;
    }
    if (exponent) *exponent = k;
    return f[0];
}

void trim(PolyFp& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw PreconditionError("inverse of zero in F_p", "division_by_zero");
    std::int64_t r = 1, b = a, e = p - 2;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

PolyFp mul(const PolyFp& a, const PolyFp& b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    PolyFp c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    trim(c);
    return c;
}

PolyFp sub(const PolyFp& a, const PolyFp& b, std::int64_t p) {
    PolyFp c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::int64_t x = (i < a.size() ? a[i] : 0) - (i < b.size() ? b[i] : 0);
        c[i] = ((x % p) + p) % p;
    }
    trim(c);
    return c;
}

PolyFp mod(PolyFp a, const PolyFp& m, std::int64_t p) {
    trim(a);
    if (m.empty()) throw PreconditionError("reduction modulo the zero polynomial");
    const std::int64_t inv = inv_mod(m.back(), p);
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        std::int64_t f = a.back() * inv % p;
        std::size_t shift = a.size() - 1 - dm;
        if (f)
            for (std::size_t j = 0; j <= dm; ++j) a[shift + j] = ((a[shift + j] - f * m[j]) % p + p) % p;
        a.pop_back();
        trim(a);
    }
    return a;
}

PolyFp mulmod(const PolyFp& a, const PolyFp& b, const PolyFp& m, std::int64_t p) { return mod(mul(a, b, p), m, p); }

PolyFp powmod(PolyFp base, std::uint64_t exp, const PolyFp& m, std::int64_t p) {
    PolyFp r{1};
    r = mod(r, m, p);
    base = mod(base, m, p);
    while (exp > 0) {
        if (exp & 1u) r = mulmod(r, base, m, p);
        exp >>= 1u;
        if (exp) base = mulmod(base, base, m, p);
    }
    return r;
}

PolyFp gcd(PolyFp a, PolyFp b, std::int64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        PolyFp r = mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return a;
    std::int64_t inv = inv_mod(a.back(), p);
    for (auto& c : a) c = c * inv % p;
    return a;
}

namespace {

/* x^(p^k) mod f, by k successive p-th powers */
PolyFp frobenius_power_of_x(const PolyFp& f, std::int64_t p, int k) {
    PolyFp h = mod(PolyFp{0, 1}, f, p);
    for (int i = 0; i < k; ++i) h = powmod(h, static_cast<std::uint64_t>(p), f, p);
    return h;
}

}  // namespace

bool is_irreducible(const PolyFp& f, std::int64_t p) {
    const int e = static_cast<int>(f.size()) - 1;
    if (e < 1) return false;
    if (e == 1) return true;
    const PolyFp x{0, 1};
    if (!sub(frobenius_power_of_x(f, p, e), x, p).empty()) return false;
    for (auto r : prime_factors(static_cast<std::uint64_t>(e))) {
        PolyFp h = sub(frobenius_power_of_x(f, p, e / static_cast<int>(r)), x, p);
        if (gcd(f, h, p).size() != 1) return false;
    }
    return true;
}

}  // namespace fp

FqField::FqField(std::int64_t p, int e, PolyFp modulus) {
    if (!fp::is_prime(p)) throw ValidationError("field characteristic " + std::to_string(p) + " is not prime", "not_prime");
    if (e < 1) throw ValidationError("extension degree must be >= 1");
    if (static_cast<int>(modulus.size()) != e + 1 || modulus.back() != 1)
        throw ValidationError("modulus must be monic of degree e");
    if (e > 1 && !fp::is_irreducible(modulus, p)) throw ValidationError("modulus is reducible", "reducible_modulus");
    impl_ = std::make_shared<const Impl>(Impl{p, e, std::move(modulus), fp::checked_pow(static_cast<std::uint64_t>(p), static_cast<unsigned>(e))});
}

FqField fq_make(std::int64_t p, int e, std::uint64_t /*seed*/) {
    if (!fp::is_prime(p)) throw ValidationError("field characteristic " + std::to_string(p) + " is not prime", "not_prime");
    if (e < 1) throw ValidationError("extension degree must be >= 1");
    if (e == 1) return FqField(p, 1, PolyFp{0, 1});
    const std::uint64_t count = fp::checked_pow(static_cast<std::uint64_t>(p), static_cast<unsigned>(e));
    for (std::uint64_t code = 0; code < count; ++code) {
        PolyFp f(static_cast<std::size_t>(e) + 1, 0);
        std::uint64_t c = code;
        for (int i = 0; i < e; ++i) {
            f[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(c % static_cast<std::uint64_t>(p));
            c /= static_cast<std::uint64_t>(p);
        }
        f.back() = 1;
        if (f[0] == 0) continue;
        if (fp::is_irreducible(f, p)) return FqField(p, e, f);
    }
    throw NumericError("no irreducible polynomial found");  // unreachable for prime p
}

FqElement::FqElement(FqField field, std::vector<std::int64_t> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    const auto e = static_cast<std::size_t>(field_.e());
    const std::int64_t p = field_.p();
    PolyFp reduced(c_.begin(), c_.end());
    for (auto& x : reduced) x = ((x % p) + p) % p;
    if (field_.e() > 1) reduced = fp::mod(reduced, field_.modulus(), p);
    else if (!reduced.empty()) {
        std::int64_t s = 0;  // modulus x: evaluate at 0 -> constant term
        s = reduced[0];
        reduced = {s};
    }
    reduced.resize(e, 0);
    c_ = std::move(reduced);
}

FqElement FqElement::from_integer(const FqField& field, std::int64_t v) { return FqElement(field, {v}); }

FqElement FqElement::from_index(const FqField& field, std::uint64_t index) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(field.e()));
    const auto p = static_cast<std::uint64_t>(field.p());
    for (auto& x : c) {
        x = static_cast<std::int64_t>(index % p);
        index /= p;
    }
    FqElement out;
    out.field_ = field;
    out.c_ = std::move(c);
    return out;
}

std::uint64_t FqElement::index() const {
    std::uint64_t idx = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) idx = idx * static_cast<std::uint64_t>(field_.p()) + static_cast<std::uint64_t>(*it);
    return idx;
}

bool FqElement::is_zero() const {
    for (auto x : c_)
        if (x) return false;
    return true;
}

bool FqElement::is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i]) return false;
    return true;
}

namespace {
void require_same(const FqElement& a, const FqElement& b) {
    if (!(a.field() == b.field())) throw ValidationError("arithmetic between different finite fields", "field_mismatch");
}
}  // namespace

FqElement operator+(const FqElement& a, const FqElement& b) {
    require_same(a, b);
    std::vector<std::int64_t> c(a.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a.c_[i] + b.c_[i]) % a.field_.p();
    FqElement r;
    r.field_ = a.field_;
    r.c_ = std::move(c);
    return r;
}

FqElement operator-(const FqElement& a, const FqElement& b) {
    require_same(a, b);
    std::vector<std::int64_t> c(a.c_.size());
    const std::int64_t p = a.field_.p();
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = ((a.c_[i] - b.c_[i]) % p + p) % p;
    FqElement r;
    r.field_ = a.field_;
    r.c_ = std::move(c);
    return r;
}

FqElement operator*(const FqElement& a, const FqElement& b) {
    require_same(a, b);
    const std::int64_t p = a.field_.p();
    if (a.field_.e() == 1) return FqElement(a.field_, {a.c_[0] * b.c_[0] % p});
    PolyFp x(a.c_.begin(), a.c_.end()), y(b.c_.begin(), b.c_.end());
    fp::trim(x);
    fp::trim(y);
    return FqElement(a.field_, fp::mulmod(x, y, a.field_.modulus(), p));
}

FqElement FqElement::pow(std::uint64_t k) const {
    FqElement r = from_integer(field_, 1), base = *this;
    while (k > 0) {
        if (k & 1u) r = r * base;
        k >>= 1u;
        if (k) base = base * base;
    }
    return r;
}

FqElement FqElement::inverse() const {
    if (is_zero()) throw PreconditionError("inverse of zero in a finite field", "division_by_zero");
    return pow(field_.size() - 2);
}

std::string FqElement::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
    os << "]";
    return os.str();
}

}  // namespace motivic
