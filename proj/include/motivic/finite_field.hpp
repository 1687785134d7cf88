#ifndef MOTIVIC_FINITE_FIELD_HPP
#define MOTIVIC_FINITE_FIELD_HPP

#include <cstdint>
#include <iterator>
#include <memory>
#include <string>
#include <vector>

namespace motivic {

/* Dense polynomial over F_p, ascending coefficients in [0, p). */
using PolyFp = std::vector<std::int64_t>;

namespace fp {

bool is_prime(std::int64_t n);
/* prime factors of n without repetition */
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
/* p^k with overflow check */
std::uint64_t checked_pow(std::uint64_t p, unsigned k);
/* if q = p^k for a prime p, returns p (k via out-parameter), else 0 */
std::uint64_t prime_power_base(std::uint64_t q, unsigned* exponent = nullptr);

void trim(PolyFp& a);
PolyFp mul(const PolyFp& a, const PolyFp& b, std::int64_t p);
PolyFp sub(const PolyFp& a, const PolyFp& b, std::int64_t p);
PolyFp mod(PolyFp a, const PolyFp& m, std::int64_t p);
PolyFp mulmod(const PolyFp& a, const PolyFp& b, const PolyFp& m, std::int64_t p);
/* base^(exp) mod m, with exp given as a big exponent p^k via repeated p-th powers when needed */
PolyFp powmod(PolyFp base, std::uint64_t exp, const PolyFp& m, std::int64_t p);
/* monic gcd */
PolyFp gcd(PolyFp a, PolyFp b, std::int64_t p);
std::int64_t inv_mod(std::int64_t a, std::int64_t p);

/* Rabin's test: f monic of degree e */
bool is_irreducible(const PolyFp& f, std::int64_t p);

}  // namespace fp

/*
 * Finite field F_{p^e} = F_p[x]/(modulus). The modulus is the first monic
 * irreducible polynomial of degree e when coefficient vectors are read as
 * base-p integers (constant term least significant). For e = 1 the modulus
 * is x, and elements are plain residues mod p.
 */
class FqField {
public:
    FqField() = default;
    FqField(std::int64_t p, int e, PolyFp modulus);

    std::int64_t p() const { return impl_->p; }
    int e() const { return impl_->e; }
    const PolyFp& modulus() const { return impl_->modulus; }
    /* p^e */
    std::uint64_t size() const { return impl_->size; }
    bool valid() const { return static_cast<bool>(impl_); }

    friend bool operator==(const FqField& a, const FqField& b) {
        return a.impl_ == b.impl_ || (a.impl_ && b.impl_ && a.impl_->p == b.impl_->p && a.impl_->modulus == b.impl_->modulus);
    }

private:
    struct Impl {
        std::int64_t p;
        int e;
        PolyFp modulus;
        std::uint64_t size;
    };
    std::shared_ptr<const Impl> impl_;
};

/* Element of an FqField, coefficient vector of length e (degree < e). */
class FqElement {
public:
    FqElement() = default;
    FqElement(FqField field, std::vector<std::int64_t> coeffs);
    static FqElement from_integer(const FqField& field, std::int64_t v);
    /* element whose base-p digits (constant digit least significant) spell index */
    static FqElement from_index(const FqField& field, std::uint64_t index);

    const FqField& field() const { return field_; }
    const std::vector<std::int64_t>& coeffs() const { return c_; }
    std::uint64_t index() const;
    bool is_zero() const;
    bool is_one() const;

    friend FqElement operator+(const FqElement& a, const FqElement& b);
    friend FqElement operator-(const FqElement& a, const FqElement& b);
    friend FqElement operator*(const FqElement& a, const FqElement& b);
    friend bool operator==(const FqElement& a, const FqElement& b) { return a.field_ == b.field_ && a.c_ == b.c_; }
    FqElement pow(std::uint64_t k) const;
    /* throws on zero */
    FqElement inverse() const;

    std::string str() const;

private:
    FqField field_;
    std::vector<std::int64_t> c_;
};

/* Deterministic field construction. The seed is accepted for interface
 * stability and does not influence the modulus. */
FqField fq_make(std::int64_t p, int e, std::uint64_t seed = 0);

/* Forward range over all p^e elements in index order. */
class FqElementRange {
public:
    explicit FqElementRange(FqField field) : field_(std::move(field)) {}

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = FqElement;
        using difference_type = std::ptrdiff_t;
        using pointer = const FqElement*;
        using reference = FqElement;

        iterator(const FqField* f, std::uint64_t i) : f_(f), i_(i) {}
        FqElement operator*() const { return FqElement::from_index(*f_, i_); }
        iterator& operator++() { ++i_; return *this; }
        iterator operator++(int) { auto t = *this; ++i_; return t; }
        friend bool operator==(const iterator& a, const iterator& b) { return a.i_ == b.i_; }
        friend bool operator!=(const iterator& a, const iterator& b) { return a.i_ != b.i_; }

    private:
        const FqField* f_;
        std::uint64_t i_;
    };

    iterator begin() const { return {&field_, 0}; }
    iterator end() const { return {&field_, field_.size()}; }
    std::uint64_t size() const { return field_.size(); }

private:
    FqField field_;
};

inline FqElementRange fq_enumerate(const FqField& field) { return FqElementRange(field); }

}  // namespace motivic

#endif
