#include "motivic/rational.hpp"

#include <cmath>

#include "motivic/errors.hpp"

namespace motivic {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw ValidationError("rational with zero denominator", "zero_denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    auto trim = [](std::string& t) {
        while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.erase(t.begin());
        while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
    };
    trim(s);
    auto valid_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    trim(num);
    trim(den);
    if (!valid_int(num) || !valid_int(den)) throw ValidationError("malformed rational '" + s + "'", "parse");
    if (num[0] == '+') num.erase(0, 1);
    if (den[0] == '+') den.erase(0, 1);
    return Rational(BigInt(num), BigInt(den));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw PreconditionError("division by zero", "division_by_zero");
    q_ /= o.q_;
    return *this;
}

long double Rational::to_long_double() const {
    if (is_zero()) return 0.0L;
    long double mag = std::exp(log_abs(*this));
    return sign() < 0 ? -mag : mag;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& r, long k) {
    if (k < 0) return Rational(1) / pow(r, -k);
    Rational result(1), base = r;
    while (k > 0) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return result;
}

long double log_abs(const BigInt& x) {
    if (x == 0) return -INFINITY;
    long exp = 0;
    double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
    return std::log(std::fabs(static_cast<long double>(mant))) + static_cast<long double>(exp) * std::log(2.0L);
}

long double log_abs(const Rational& x) {
    if (x.is_zero()) return -INFINITY;
    return log_abs(x.numerator()) - log_abs(x.denominator());
}

}  // namespace motivic
