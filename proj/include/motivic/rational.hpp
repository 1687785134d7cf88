#ifndef MOTIVIC_RATIONAL_HPP
#define MOTIVIC_RATIONAL_HPP

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace motivic {

using BigInt = mpz_class;

/*
 * Exact rational number, always kept in lowest terms with a positive
 * denominator (zero is 0/1). Thin value wrapper over GMP's mpq_class.
 */
class Rational {
public:
    Rational() = default;

    template <std::integral I>
    Rational(I v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

    Rational(const BigInt& v) : q_(v) {}  // NOLINT(google-explicit-constructor)

    Rational(const BigInt& num, const BigInt& den);

    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /* Accepts "a", "-a", "a/b". Throws ValidationError on malformed input. */
    static Rational parse(std::string_view text);

    BigInt numerator() const { return q_.get_num(); }
    BigInt denominator() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    double to_double() const { return q_.get_d(); }
    long double to_long_double() const;

    /* "a/b", with "/b" omitted when b == 1 */
    std::string str() const { return q_.get_str(); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class q_;
};

Rational abs(const Rational& r);

/* r^k for any integer k; k < 0 requires r != 0 */
Rational pow(const Rational& r, long k);

/* natural log of |x| for a nonzero big integer, robust beyond double range */
long double log_abs(const BigInt& x);
long double log_abs(const Rational& x);

}  // namespace motivic

template <>
struct std::hash<motivic::Rational> {
    std::size_t operator()(const motivic::Rational& r) const noexcept {
        return std::hash<std::string>{}(r.str());
    }
};

#endif
