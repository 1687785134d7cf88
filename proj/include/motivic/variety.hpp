#ifndef MOTIVIC_VARIETY_HPP
#define MOTIVIC_VARIETY_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "motivic/cyclotomic.hpp"
#include "motivic/field_tables.hpp"
#include "motivic/finite_field.hpp"
#include "motivic/matrix.hpp"
#include "motivic/rational.hpp"
#include "motivic/reconstruct.hpp"
#include "motivic/series.hpp"

namespace motivic {

struct Term {
    std::vector<int> exponents;
    std::int64_t coeff = 0;
};

/* integer-coefficient polynomial as a list of terms */
using IntPoly = std::vector<Term>;

enum class Ambient { affine, projective };

/*
 * Affine n-space (n coordinates) or projective n-space (n+1 homogeneous
 * coordinates) over F_{p^e}, cut out by integer equations read mod p.
 * Smoothness and properness are never checked.
 */
struct VarietySpec {
    Ambient ambient = Ambient::projective;
    int dim_ambient = 0;
    FqField base;
    std::vector<IntPoly> equations;

    int num_vars() const { return ambient == Ambient::projective ? dim_ambient + 1 : dim_ambient; }
    std::uint64_t q() const { return base.size(); }
};

/* validates exponent lengths, nonnegativity and homogeneity */
VarietySpec make_variety(Ambient ambient, int dim_ambient, std::int64_t p, int e, std::vector<IntPoly> equations);

/*
 * Enumeration limits. budget bounds the number of coordinate assignments
 * visited by one call (default 1e7, overridden by MOTIVIC_ZETA_BUDGET);
 * threads partitions the enumeration and never changes results.
 */
struct CountingContext {
    std::uint64_t budget = default_budget();
    int threads = 1;

    static std::uint64_t default_budget();
};

/* cached tables for F_{p^k}; ResourceError beyond FieldTables::max_size */
std::shared_ptr<const FieldTables> field_tables(std::int64_t p, int k);

/* #X(F_{q^n}) */
BigInt count_points(const VarietySpec& v, int n, const CountingContext& ctx = {});

/*
 * Calls f on normalized coordinates of every point of X(F_{q^n}) (projective:
 * first nonzero coordinate equal to 1), in the encoding of field_tables(p, e n).
 */
void for_each_point(const VarietySpec& v, int n, const CountingContext& ctx,
                    const std::function<void(const std::vector<FieldTables::Elem>&)>& f);

/* Finite group of matrices acting linearly on the ambient space. */
class GroupAction {
public:
    /* validates invertibility, closure, identity, and that X(F_q) is preserved */
    GroupAction(const VarietySpec& v, std::vector<std::vector<std::vector<std::int64_t>>> matrices,
                const CountingContext& ctx = {});

    std::size_t size() const { return elements_.size(); }
    const std::vector<FqElement>& element(std::size_t i) const { return elements_[i]; }
    std::size_t dim() const { return dim_; }
    int order(std::size_t i) const { return orders_[i]; }
    std::size_t identity() const { return identity_; }
    std::size_t inverse(std::size_t i) const { return inverse_[i]; }
    std::size_t product(std::size_t i, std::size_t j) const { return table_[i][j]; }
    /* classes in order of their smallest element index */
    const std::vector<std::vector<std::size_t>>& classes() const { return classes_; }
    std::size_t class_of(std::size_t i) const { return class_of_[i]; }
    std::vector<std::size_t> centralizer(std::size_t i) const;
    /* exponent of the group (lcm of orders) */
    int exponent() const;

private:
    std::size_t dim_ = 0;
    std::vector<std::vector<FqElement>> elements_;  // row-major dim x dim
    std::vector<int> orders_;
    std::size_t identity_ = 0;
    std::vector<std::size_t> inverse_;
    std::vector<std::vector<std::size_t>> table_;
    std::vector<std::vector<std::size_t>> classes_;
    std::vector<std::size_t> class_of_;
};

/*
 * #{x in X(Fbar_q) : g(Fr^n x) = x}, restricted to points also fixed by
 * fixed_by when given. Points are enumerated over F_{q^{n ord g}}.
 */
BigInt twisted_count(const VarietySpec& v, const GroupAction& action, std::size_t g, int n,
                     const CountingContext& ctx = {}, std::optional<std::size_t> fixed_by = std::nullopt);

/* Class function with values in Q(zeta_m), one value per conjugacy class. */
class CharacterTable {
public:
    /* classes given as lists of element indices; must match the action's classes */
    CharacterTable(const GroupAction& action, int m, const std::vector<std::vector<std::size_t>>& classes,
                   std::vector<Cyclotomic> values);
    static CharacterTable trivial(const GroupAction& action);

    int order() const { return m_; }
    const Cyclotomic& value(std::size_t element) const { return values_[class_of_[element]]; }
    const std::vector<Cyclotomic>& class_values() const { return values_; }
    bool is_rational() const;

private:
    int m_;
    std::vector<std::size_t> class_of_;
    std::vector<Cyclotomic> values_;
};

struct LSeries {
    int m = 1;
    /* coefficients of t^0..t^N */
    std::vector<Cyclotomic> coeffs;
    bool is_rational() const;
    /* throws PreconditionError when a coefficient is irrational */
    TruncatedSeries as_rational() const;
};

WittElement zeta_from_counts(const VarietySpec& v, int n_max, const CountingContext& ctx = {});

/* traces (1/|G|) sum_g chi(g^{-1}) N_n(g) exponentiated to precision n_max */
LSeries l_function(const VarietySpec& v, const GroupAction& action, const CharacterTable& chi, int n_max,
                   const CountingContext& ctx = {});

struct OrbifoldReport {
    TruncatedSeries product_route;
    TruncatedSeries trace_route;
    bool agree = false;
    /* per conjugacy class: representative and centralizer order */
    std::vector<std::pair<std::size_t, std::size_t>> factors;
};

/* requires p not dividing |G| */
OrbifoldReport orbifold_zeta(const VarietySpec& v, const GroupAction& action, int n_max,
                             const CountingContext& ctx = {});

/* B_1..B_{d_max}: closed points by degree */
std::vector<BigInt> closed_points(const VarietySpec& v, int d_max, const CountingContext& ctx = {});

struct RootMagnitude {
    std::complex<long double> reciprocal_root;
    long double modulus = 0;
    int weight = 0;
    long double deviation = 0;
    int multiplicity = 1;
    bool in_numerator = false;
};

struct WeilReport {
    std::vector<BigInt> counts;
    bool stabilized = false;
    std::vector<int> profile;
    std::optional<RationalFunction> zeta;
    int degree = 0;
    int euler_characteristic = 0;  // E = -deg Z
    bool functional_equation = false;
    int sign = 0;
    std::vector<RootMagnitude> roots;
    bool riemann_hypothesis = false;
    bool smooth_proper_asserted = true;
};

WeilReport weil_check(const VarietySpec& v, int dim, int n_max, const CountingContext& ctx = {},
                      long double tolerance = 1e-9L);

/* 2 + prime-to-p part of m^n - 1 for n = 1..n_max; needs m >= 2, gcd(m, p) = 1 */
std::vector<BigInt> artin_mazur_traces(std::int64_t p, std::int64_t m, int n_max);

/* fixed points of x -> x^{m^n} on P^1 counted in F_{p^k}, k = ord of p mod the prime-to-p part */
BigInt artin_mazur_enumerated(std::int64_t p, std::int64_t m, int n, const CountingContext& ctx = {});

}  // namespace motivic

#endif
