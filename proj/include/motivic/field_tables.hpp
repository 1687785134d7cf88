#ifndef MOTIVIC_FIELD_TABLES_HPP
#define MOTIVIC_FIELD_TABLES_HPP

#include <cstdint>
#include <vector>

#include "motivic/finite_field.hpp"

namespace motivic {

/*
 * Table-driven arithmetic for one finite field, used by the enumeration
 * kernels. Elements are encoded by their FqElement index (base-p digits of
 * the coefficient vector), so encodings agree with fq_enumerate order.
 * Multiplication goes through discrete log / antilog tables built from a
 * primitive element.
 */
class FieldTables {
public:
    using Elem = std::uint32_t;
    static constexpr std::uint64_t max_size = std::uint64_t{1} << 25;

    explicit FieldTables(const FqField& field);

    const FqField& field() const { return field_; }
    std::uint64_t size() const { return q_; }
    std::int64_t p() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(std::int64_t v) const {
        v %= p_;
        return static_cast<Elem>(v < 0 ? v + p_ : v);
    }

    Elem add(Elem a, Elem b) const {
        if (p_ == 2) return a ^ b;
        std::uint32_t r = 0, place = 1;
        while ((a | b) != 0) {
            const std::uint32_t qa = div_chunk(a), qb = div_chunk(b);
            const std::uint32_t da = a - qa * chunk_, db = b - qb * chunk_;
            std::uint32_t s;
            if (!add_table_.empty()) {
                s = add_table_[da * chunk_ + db];
            } else {
                s = da + db;
                if (s >= chunk_) s -= chunk_;
            }
            r += s * place;
            place *= chunk_;
            a = qa;
            b = qb;
        }
        return r;
    }
    Elem neg(Elem a) const {
        if (p_ == 2) return a;
        std::uint32_t r = 0, place = 1;
        while (a != 0) {
            const std::uint32_t qa = div_chunk(a);
            const std::uint32_t d = a - qa * chunk_;
            r += (neg_table_.empty() ? (d ? chunk_ - d : 0) : neg_table_[d]) * place;
            place *= chunk_;
            a = qa;
        }
        return r;
    }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        if (a == 1) return b;
        if (b == 1) return a;
        std::uint64_t s = std::uint64_t{log_[a]} + log_[b];
        if (s >= q_ - 1) s -= q_ - 1;
        return exp_[s];
    }
    Elem inv(Elem a) const;
    /* a^k for k taken modulo q - 1 (a != 0), 0^k = 0 for k > 0 */
    Elem pow(Elem a, std::uint64_t k) const;
    std::uint32_t log(Elem a) const { return log_[a]; }
    Elem exp(std::uint64_t k) const { return exp_[k % (q_ - 1)]; }

private:
    /* a / chunk_ via a precomputed reciprocal (exact for 32-bit a) */
    std::uint32_t div_chunk(std::uint32_t a) const {
        return static_cast<std::uint32_t>((static_cast<unsigned __int128>(recip_) * a) >> 64);
    }
    void build_add_tables();

    FqField field_;
    std::int64_t p_;
    int e_;
    std::uint64_t q_;
    // addition works on blocks of c base-p digits, chunk_ = p^c
    std::uint32_t chunk_ = 1;
    std::uint64_t recip_ = 0;
    std::vector<std::uint16_t> add_table_;  // empty for p > 64: single digits added directly
    std::vector<std::uint16_t> neg_table_;
    std::vector<std::uint64_t> place_;  // p^i
    std::vector<Elem> exp_;
    std::vector<std::uint32_t> log_;
};

/*
 * Fixed embedding of a subfield F_{p^e} into a FieldTables field: the
 * generator x of the subfield goes to the first root of its modulus met
 * along powers of the primitive element.
 */
class SubfieldEmbedding {
public:
    SubfieldEmbedding(const FieldTables& big, const FqField& sub);
    FieldTables::Elem operator()(const FqElement& x) const;

private:
    const FieldTables* big_;
    FqField sub_;
    std::vector<FieldTables::Elem> generator_powers_;  // image of x^i, i < e
};

/* Univariate polynomials over a FieldTables field, ascending coefficients. */
namespace tpoly {

using Poly = std::vector<FieldTables::Elem>;

void trim(Poly& a);
Poly mul(const FieldTables& f, const Poly& a, const Poly& b);
Poly mod(const FieldTables& f, Poly a, const Poly& m);
Poly gcd(const FieldTables& f, Poly a, Poly b);
/* number of distinct roots of a nonzero g in the field: deg gcd(g, x^Q - x) */
std::uint64_t count_roots(const FieldTables& f, const Poly& g);

}  // namespace tpoly

}  // namespace motivic

#endif
