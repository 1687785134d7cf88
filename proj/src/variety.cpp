#include <cstdio>
#include "motivic/variety.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

#include "motivic/errors.hpp"
#include "motivic/roots.hpp"

namespace motivic {

using Elem = FieldTables::Elem;

VarietySpec make_variety(Ambient ambient, int dim_ambient, std::int64_t p, int e, std::vector<IntPoly> equations) {
    if (dim_ambient < 0) throw ValidationError("ambient dimension must be nonnegative", "dimension");
    if (!fp::is_prime(p)) throw ValidationError("characteristic " + std::to_string(p) + " is not prime", "not_prime");
    if (e < 1) throw ValidationError("field degree must be positive");
    VarietySpec v;
    v.ambient = ambient;
    v.dim_ambient = dim_ambient;
    v.base = fq_make(p, e);
    const auto nv = static_cast<std::size_t>(v.num_vars());
    for (std::size_t k = 0; k < equations.size(); ++k) {
        std::optional<int> degree;
        for (const auto& term : equations[k]) {
            if (term.exponents.size() != nv)
                throw ValidationError("equation " + std::to_string(k) + " has a monomial with " +
                                          std::to_string(term.exponents.size()) + " exponents, expected " +
                                          std::to_string(nv),
                                      "dimension");
            int d = 0;
            for (int x : term.exponents) {
                if (x < 0) throw ValidationError("negative exponent in equation " + std::to_string(k));
                d += x;
            }
            if (term.coeff == 0 || ambient == Ambient::affine) continue;
            if (degree && *degree != d)
                throw ValidationError("projective equation " + std::to_string(k) + " is not homogeneous", "not_homogeneous");
            degree = d;
        }
    }
    v.equations = std::move(equations);
    return v;
}

std::uint64_t CountingContext::default_budget() {
    if (const char* env = std::getenv("MOTIVIC_ZETA_BUDGET")) {
        char* end = nullptr;
        const unsigned long long b = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && b > 0) return b;
    }
    return 10'000'000;
}

std::shared_ptr<const FieldTables> field_tables(std::int64_t p, int k) {
    static std::mutex mu;
    static std::map<std::pair<std::int64_t, int>, std::shared_ptr<const FieldTables>> cache;
    const long double size = std::pow(static_cast<long double>(p), k);
    if (size > static_cast<long double>(FieldTables::max_size))
        throw ResourceError("F_" + std::to_string(p) + "^" + std::to_string(k) + " is too large for table arithmetic", size);
    std::lock_guard lock(mu);
    auto& slot = cache[{p, k}];
    if (!slot) {
        // keep the cache from pinning several large tables at once
        if (size > 1e6L)
            for (auto it = cache.begin(); it != cache.end();)
                it = (it->second && it->second->size() > 1'000'000) ? cache.erase(it) : std::next(it);
        auto& fresh = cache[{p, k}];
        fresh = std::make_shared<const FieldTables>(fq_make(p, k));
        return fresh;
    }
    return slot;
}

namespace {

BigInt big_pow(std::uint64_t base, std::uint64_t k) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, k);
    return r;
}

struct ChartTerm {
    std::vector<int> exps;  // over the chart's free variables
    Elem coeff;
};
using ChartPoly = std::vector<ChartTerm>;

/* coordinates: zero_vars = 0, one_var = 1, free_vars enumerated */
struct Chart {
    std::vector<int> zero_vars;
    int one_var = -1;
    std::vector<int> free_vars;
    std::vector<ChartPoly> polys;
    bool empty = false;
};

std::vector<Chart> make_charts(const VarietySpec& v, const FieldTables& t) {
    const int nv = v.num_vars();
    std::vector<Chart> charts;
    const int count = v.ambient == Ambient::projective ? nv : 1;
    for (int c = 0; c < count; ++c) {
        Chart ch;
        if (v.ambient == Ambient::projective) {
            for (int j = 0; j < c; ++j) ch.zero_vars.push_back(j);
            ch.one_var = c;
            for (int j = c + 1; j < nv; ++j) ch.free_vars.push_back(j);
        } else {
            for (int j = 0; j < nv; ++j) ch.free_vars.push_back(j);
        }
        const std::int64_t p = v.base.p();
        for (const auto& eq : v.equations) {
            std::map<std::vector<int>, std::int64_t> merged;
            for (const auto& term : eq) {
                bool vanishes = false;
                for (int z : ch.zero_vars)
                    if (term.exponents[static_cast<std::size_t>(z)] > 0) vanishes = true;
                if (vanishes) continue;
                std::vector<int> exps;
                for (int f : ch.free_vars) exps.push_back(term.exponents[static_cast<std::size_t>(f)]);
                auto& acc = merged[exps];
                acc = ((acc + term.coeff % p) % p + p) % p;
            }
            ChartPoly poly;
            for (auto& [exps, c] : merged)
                if (c != 0) poly.push_back({exps, t.from_int(c)});
            if (poly.empty()) continue;
            const bool constant = std::all_of(poly.begin(), poly.end(), [](const ChartTerm& tm) {
                return std::all_of(tm.exps.begin(), tm.exps.end(), [](int x) { return x == 0; });
            });
            if (constant) {
                ch.empty = true;
                break;
            }
            ch.polys.push_back(std::move(poly));
        }
        charts.push_back(std::move(ch));
    }
    return charts;
}

/* value of coeff * prod vals[j]^exps[j] over the variables in mask (skip = -1 for none) */
Elem term_value(const FieldTables& t, const ChartTerm& term, const Elem* vals, int skip) {
    std::uint64_t l = t.log(term.coeff);
    for (std::size_t j = 0; j < term.exps.size(); ++j) {
        const int x = term.exps[j];
        if (x == 0 || static_cast<int>(j) == skip) continue;
        if (vals[j] == 0) return 0;
        l += static_cast<std::uint64_t>(x) * t.log(vals[j]);
    }
    return t.exp(l);
}

Elem eval_poly(const FieldTables& t, const ChartPoly& f, const Elem* vals) {
    Elem acc = 0;
    for (const auto& term : f) acc = t.add(acc, term_value(t, term, vals, -1));
    return acc;
}

/* advance an odometer over F_Q^k; returns false after the last assignment */
bool advance(std::vector<Elem>& vals, const std::vector<int>& slots, std::uint64_t q) {
    for (int s : slots) {
        auto& x = vals[static_cast<std::size_t>(s)];
        if (++x < q) return true;
        x = 0;
    }
    return false;
}

void decode(std::uint64_t idx, std::vector<Elem>& vals, const std::vector<int>& slots, std::uint64_t q) {
    for (int s : slots) {
        vals[static_cast<std::size_t>(s)] = static_cast<Elem>(idx % q);
        idx /= q;
    }
}

template <class Work>
std::uint64_t parallel_sum(std::uint64_t total, int threads, const Work& work) {
    const auto nt = static_cast<std::uint64_t>(std::max(1, threads));
    if (nt == 1 || total < 4096) return work(0, total);
    std::vector<std::uint64_t> partial(nt, 0);
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (total + nt - 1) / nt;
    for (std::uint64_t i = 0; i < nt; ++i) {
        const std::uint64_t b = std::min(total, i * chunk), e = std::min(total, b + chunk);
        pool.emplace_back([&, i, b, e] { partial[i] = work(b, e); });
    }
    for (auto& th : pool) th.join();
    return std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
}

struct SolvePlan {
    int solve = -1;              // position in free_vars
    std::vector<int> others;     // positions enumerated
    std::uint64_t idle = 0;      // free variables absent from every equation
    std::vector<int> solve_degree;
};

SolvePlan plan_chart(const Chart& ch) {
    SolvePlan plan;
    const std::size_t k = ch.free_vars.size();
    std::vector<int> maxdeg(k, 0);
    for (const auto& f : ch.polys)
        for (const auto& term : f)
            for (std::size_t j = 0; j < k; ++j) maxdeg[j] = std::max(maxdeg[j], term.exps[j]);
    for (std::size_t j = 0; j < k; ++j) {
        if (maxdeg[j] == 0) {
            ++plan.idle;
            continue;
        }
        if (plan.solve < 0 || maxdeg[j] < maxdeg[static_cast<std::size_t>(plan.solve)]) plan.solve = static_cast<int>(j);
    }
    for (std::size_t j = 0; j < k; ++j)
        if (maxdeg[j] > 0 && static_cast<int>(j) != plan.solve) plan.others.push_back(static_cast<int>(j));
    return plan;
}

std::uint64_t roots_of_system(const FieldTables& t, std::vector<tpoly::Poly>& polys) {
    const std::uint64_t q = t.size();
    tpoly::Poly g;
    for (auto& f : polys) {
        tpoly::trim(f);
        if (f.empty()) continue;
        g = g.empty() ? f : tpoly::gcd(t, g, f);
        if (g.size() == 1) return 0;
    }
    if (g.empty()) return q;
    if (g.size() == 2) return 1;
    if (g.size() == 3 && t.p() != 2) {
        const Elem disc = t.sub(t.mul(g[1], g[1]), t.mul(t.from_int(4), t.mul(g[2], g[0])));
        if (disc == 0) return 1;
        return (t.log(disc) % 2 == 0) ? 2 : 0;
    }
    return tpoly::count_roots(t, g);
}

std::uint64_t count_chart(const FieldTables& t, const Chart& ch, const SolvePlan& plan, int threads) {
    const std::uint64_t q = t.size();
    const std::uint64_t total = static_cast<std::uint64_t>(std::pow(static_cast<long double>(q), plan.others.size()) + 0.5L);
    return parallel_sum(total, threads, [&](std::uint64_t begin, std::uint64_t end) {
        std::uint64_t acc = 0;
        std::vector<Elem> vals(ch.free_vars.size(), 0);
        std::vector<tpoly::Poly> uni(ch.polys.size());
        std::vector<std::size_t> width(ch.polys.size(), 1);
        for (std::size_t i = 0; i < ch.polys.size(); ++i)
            for (const auto& term : ch.polys[i])
                width[i] = std::max(width[i], static_cast<std::size_t>(term.exps[static_cast<std::size_t>(plan.solve)]) + 1);
        decode(begin, vals, plan.others, q);
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            for (std::size_t i = 0; i < ch.polys.size(); ++i) {
                auto& u = uni[i];
                u.assign(width[i], 0);
                for (const auto& term : ch.polys[i]) {
                    const auto d = static_cast<std::size_t>(term.exps[static_cast<std::size_t>(plan.solve)]);
                    u[d] = t.add(u[d], term_value(t, term, vals.data(), plan.solve));
                }
            }
            acc += roots_of_system(t, uni);
            advance(vals, plan.others, q);
        }
        return acc;
    });
}

void check_budget(long double work, const CountingContext& ctx, const std::string& what) {
    if (work > static_cast<long double>(ctx.budget)) {
        char buf[64];
        if (work < 1e18L)
            std::snprintf(buf, sizeof buf, "%.0Lf", work);
        else
            std::snprintf(buf, sizeof buf, "%.4Lg", work);
        throw ResourceError(what + " needs " + buf +
                                " evaluations, budget is " + std::to_string(ctx.budget),
                            work);
    }
}

void require_degree(int n) {
    if (n < 1) throw PreconditionError("extension degree must be at least 1");
}

std::vector<Elem> full_coords(const Chart& ch, const std::vector<Elem>& free_vals, int nv) {
    std::vector<Elem> x(static_cast<std::size_t>(nv), 0);
    if (ch.one_var >= 0) x[static_cast<std::size_t>(ch.one_var)] = 1;
    for (std::size_t j = 0; j < ch.free_vars.size(); ++j) x[static_cast<std::size_t>(ch.free_vars[j])] = free_vals[j];
    return x;
}

long double brute_force_work(const std::vector<Chart>& charts, std::uint64_t q) {
    long double work = 0;
    for (const auto& ch : charts)
        if (!ch.empty) work += std::pow(static_cast<long double>(q), ch.free_vars.size());
    return work;
}

/*
 * Number of points of X(F_{q^n}) satisfying pred, enumerating every chart
 * assignment. pred must be safe to call concurrently.
 */
std::uint64_t count_matching(const VarietySpec& v, int n, const CountingContext& ctx,
                             const std::function<bool(const std::vector<Elem>&)>& pred) {
    require_degree(n);
    const auto t = field_tables(v.base.p(), v.base.e() * n);
    const auto charts = make_charts(v, *t);
    const std::uint64_t q = t->size();
    check_budget(brute_force_work(charts, q), ctx, "point enumeration");
    std::uint64_t total = 0;
    for (const auto& ch : charts) {
        if (ch.empty) continue;
        std::vector<int> slots(ch.free_vars.size());
        std::iota(slots.begin(), slots.end(), 0);
        const auto size = static_cast<std::uint64_t>(std::pow(static_cast<long double>(q), slots.size()) + 0.5L);
        total += parallel_sum(size, ctx.threads, [&](std::uint64_t begin, std::uint64_t end) {
            std::uint64_t acc = 0;
            std::vector<Elem> vals(slots.size(), 0);
            decode(begin, vals, slots, q);
            std::vector<Elem> x = full_coords(ch, vals, v.num_vars());
            for (std::uint64_t idx = begin; idx < end; ++idx) {
                bool on = true;
                for (const auto& f : ch.polys)
                    if (eval_poly(*t, f, vals.data()) != 0) {
                        on = false;
                        break;
                    }
                if (on) {
                    for (std::size_t j = 0; j < ch.free_vars.size(); ++j) x[static_cast<std::size_t>(ch.free_vars[j])] = vals[j];
                    if (pred(x)) ++acc;
                }
                advance(vals, slots, q);
            }
            return acc;
        });
    }
    return total;
}

Elem eval_int_poly(const FieldTables& t, const IntPoly& f, const std::vector<Elem>& x) {
    Elem acc = 0;
    for (const auto& term : f) {
        const Elem c = t.from_int(term.coeff);
        if (c == 0) continue;
        std::uint64_t l = t.log(c);
        bool zero = false;
        for (std::size_t j = 0; j < x.size(); ++j) {
            if (term.exponents[j] == 0) continue;
            if (x[j] == 0) {
                zero = true;
                break;
            }
            l += static_cast<std::uint64_t>(term.exponents[j]) * t.log(x[j]);
        }
        if (!zero) acc = t.add(acc, t.exp(l));
    }
    return acc;
}

void apply_into(const FieldTables& t, const std::vector<Elem>& m, const std::vector<Elem>& x, std::vector<Elem>& y) {
    const std::size_t d = x.size();
    for (std::size_t i = 0; i < d; ++i) {
        Elem acc = 0;
        for (std::size_t j = 0; j < d; ++j)
            if (m[i * d + j] != 0 && x[j] != 0) acc = t.add(acc, t.mul(m[i * d + j], x[j]));
        y[i] = acc;
    }
}

std::vector<Elem> apply(const FieldTables& t, const std::vector<Elem>& m, const std::vector<Elem>& x) {
    std::vector<Elem> y(x.size());
    apply_into(t, m, x, y);
    return y;
}

/* y ~ x, where x is normalized (first nonzero coordinate 1) in the projective case */
bool same_point(const FieldTables& t, Ambient ambient, const std::vector<Elem>& y, const std::vector<Elem>& x) {
    if (ambient == Ambient::affine) return y == x;
    std::size_t i = 0;
    while (i < y.size() && y[i] == 0) ++i;
    if (i == y.size() || x[i] == 0) return false;
    for (std::size_t j = 0; j < i; ++j)
        if (x[j] != 0) return false;
    // x[i] = 1 by normalization, so y ~ x iff y = y[i] x
    for (std::size_t j = i + 1; j < y.size(); ++j)
        if (y[j] != t.mul(y[i], x[j])) return false;
    return true;
}

FqElement entry_element(const FqField& base, std::int64_t v) {
    if (base.e() == 1) return FqElement::from_integer(base, v);
    if (v < 0 || static_cast<std::uint64_t>(v) >= base.size())
        throw ValidationError("matrix entry " + std::to_string(v) + " is not an element index of F_q", "bad_entry");
    return FqElement::from_index(base, static_cast<std::uint64_t>(v));
}

using FqMat = std::vector<FqElement>;

FqMat mat_mul(const FqMat& a, const FqMat& b, std::size_t d) {
    FqMat c(d * d, FqElement::from_integer(a[0].field(), 0));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) {
            if (a[i * d + k].is_zero()) continue;
            for (std::size_t j = 0; j < d; ++j) c[i * d + j] = c[i * d + j] + a[i * d + k] * b[k * d + j];
        }
    return c;
}

bool mat_invertible(FqMat a, std::size_t d) {
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t piv = col;
        while (piv < d && a[piv * d + col].is_zero()) ++piv;
        if (piv == d) return false;
        for (std::size_t j = 0; j < d; ++j) std::swap(a[col * d + j], a[piv * d + j]);
        const FqElement inv = a[col * d + col].inverse();
        for (std::size_t r = col + 1; r < d; ++r) {
            const FqElement f = a[r * d + col] * inv;
            if (f.is_zero()) continue;
            for (std::size_t j = col; j < d; ++j) a[r * d + j] = a[r * d + j] - f * a[col * d + j];
        }
    }
    return true;
}

std::vector<Elem> embed_matrix(const FieldTables& t, const FqField& base, const FqMat& m) {
    const SubfieldEmbedding emb(t, base);
    std::vector<Elem> out;
    out.reserve(m.size());
    for (const auto& x : m) out.push_back(emb(x));
    return out;
}

}  // namespace

BigInt count_points(const VarietySpec& v, int n, const CountingContext& ctx) {
    require_degree(n);
    const auto t = field_tables(v.base.p(), v.base.e() * n);
    const std::uint64_t q = t->size();
    const auto charts = make_charts(v, *t);
    std::vector<SolvePlan> plans;
    long double work = 0;
    for (const auto& ch : charts) {
        plans.push_back(plan_chart(ch));
        if (!ch.empty && !ch.polys.empty()) work += std::pow(static_cast<long double>(q), plans.back().others.size());
    }
    check_budget(work, ctx, "point count");
    BigInt total = 0;
    for (std::size_t c = 0; c < charts.size(); ++c) {
        const auto& ch = charts[c];
        if (ch.empty) continue;
        if (ch.polys.empty()) {
            total += big_pow(q, ch.free_vars.size());
            continue;
        }
        const std::uint64_t inner = count_chart(*t, ch, plans[c], ctx.threads);
        total += BigInt(static_cast<unsigned long>(inner)) * big_pow(q, plans[c].idle);
    }
    return total;
}

void for_each_point(const VarietySpec& v, int n, const CountingContext& ctx,
                    const std::function<void(const std::vector<Elem>&)>& f) {
    CountingContext serial = ctx;
    serial.threads = 1;
    count_matching(v, n, serial, [&](const std::vector<Elem>& x) {
        f(x);
        return false;
    });
}

GroupAction::GroupAction(const VarietySpec& v, std::vector<std::vector<std::vector<std::int64_t>>> matrices,
                         const CountingContext& ctx)
    : dim_(static_cast<std::size_t>(v.num_vars())) {
    if (matrices.empty()) throw ValidationError("group must contain at least the identity", "not_a_group");
    const std::size_t d = dim_;
    for (std::size_t k = 0; k < matrices.size(); ++k) {
        const auto& rows = matrices[k];
        if (rows.size() != d)
            throw ValidationError("group element " + std::to_string(k) + " must be " + std::to_string(d) + "x" +
                                      std::to_string(d),
                                  "dimension");
        FqMat m;
        for (const auto& row : rows) {
            if (row.size() != d) throw ValidationError("group element " + std::to_string(k) + " is not square", "dimension");
            for (auto x : row) m.push_back(entry_element(v.base, x));
        }
        if (!mat_invertible(m, d))
            throw ValidationError("group element " + std::to_string(k) + " is not invertible", "not_invertible");
        if (std::find(elements_.begin(), elements_.end(), m) != elements_.end())
            throw ValidationError("group element " + std::to_string(k) + " is repeated", "not_a_group");
        elements_.push_back(std::move(m));
    }
    const std::size_t g = elements_.size();
    FqMat id(d * d, FqElement::from_integer(v.base, 0));
    for (std::size_t i = 0; i < d; ++i) id[i * d + i] = FqElement::from_integer(v.base, 1);
    auto find = [&](const FqMat& m) -> std::optional<std::size_t> {
        auto it = std::find(elements_.begin(), elements_.end(), m);
        if (it == elements_.end()) return std::nullopt;
        return static_cast<std::size_t>(it - elements_.begin());
    };
    auto idx = find(id);
    if (!idx) throw ValidationError("group does not contain the identity", "not_a_group");
    identity_ = *idx;
    table_.assign(g, std::vector<std::size_t>(g));
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) {
            auto pr = find(mat_mul(elements_[i], elements_[j], d));
            if (!pr)
                throw ValidationError("group is not closed: product of elements " + std::to_string(i) + " and " +
                                          std::to_string(j),
                                      "not_a_group");
            table_[i][j] = *pr;
        }
    orders_.assign(g, 0);
    inverse_.assign(g, 0);
    for (std::size_t i = 0; i < g; ++i) {
        std::size_t x = i;
        int k = 1;
        while (x != identity_) {
            x = table_[x][i];
            ++k;
        }
        orders_[i] = k;
        for (std::size_t j = 0; j < g; ++j)
            if (table_[i][j] == identity_) inverse_[i] = j;
    }
    class_of_.assign(g, g);
    for (std::size_t i = 0; i < g; ++i) {
        if (class_of_[i] != g) continue;
        std::vector<std::size_t> cls;
        for (std::size_t h = 0; h < g; ++h) {
            const std::size_t c = table_[table_[h][i]][inverse_[h]];
            if (class_of_[c] == g) {
                class_of_[c] = classes_.size();
                cls.push_back(c);
            }
        }
        std::sort(cls.begin(), cls.end());
        classes_.push_back(std::move(cls));
    }

    // every element must map X(F_q) into itself
    const auto t = field_tables(v.base.p(), v.base.e());
    std::vector<std::vector<Elem>> embedded;
    for (const auto& m : elements_) embedded.push_back(embed_matrix(*t, v.base, m));
    for_each_point(v, 1, ctx, [&](const std::vector<Elem>& x) {
        for (std::size_t k = 0; k < g; ++k) {
            const auto y = apply(*t, embedded[k], x);
            for (const auto& eq : v.equations)
                if (eval_int_poly(*t, eq, y) != 0)
                    throw ValidationError("group element " + std::to_string(k) + " does not preserve the variety",
                                          "not_an_action");
        }
    });
}

std::vector<std::size_t> GroupAction::centralizer(std::size_t i) const {
    std::vector<std::size_t> out;
    for (std::size_t h = 0; h < elements_.size(); ++h)
        if (table_[h][i] == table_[i][h]) out.push_back(h);
    return out;
}

int GroupAction::exponent() const {
    int e = 1;
    for (int o : orders_) e = std::lcm(e, o);
    return e;
}

namespace {

/*
 * Basis over F_{q^n} of V = {w in F_Q^d : A F^n(w) = w}, where Q = q^{n r} and
 * A^r = 1. The operator T = A F^n is F_{q^n}-linear with T^r = 1, so the
 * averages sum_i T^i w span V, and V has dimension d.
 */
std::vector<std::vector<Elem>> twisted_basis(const FieldTables& t, const std::vector<Elem>& a, std::uint64_t frob, int r,
                                             std::size_t d) {
    auto apply_t = [&](const std::vector<Elem>& w) {
        std::vector<Elem> y(d);
        for (std::size_t j = 0; j < d; ++j) y[j] = w[j] <= 1 ? w[j] : t.exp(std::uint64_t{t.log(w[j])} * frob);
        return apply(t, a, y);
    };
    std::vector<std::vector<Elem>> basis, echelon;
    std::vector<std::size_t> pivots;
    for (std::uint64_t k = 0; k + 1 < t.size() && basis.size() < d; ++k)
        for (std::size_t j = 0; j < d && basis.size() < d; ++j) {
            std::vector<Elem> w(d, 0), acc(d, 0);
            w[j] = t.exp(k);
            for (int i = 0; i < r; ++i) {
                for (std::size_t c = 0; c < d; ++c) acc[c] = t.add(acc[c], w[c]);
                w = apply_t(w);
            }
            // reduce against the echelon rows over F_Q
            auto red = acc;
            for (std::size_t b = 0; b < echelon.size(); ++b) {
                const Elem f = red[pivots[b]];
                if (f == 0) continue;
                for (std::size_t c = 0; c < d; ++c) red[c] = t.sub(red[c], t.mul(f, echelon[b][c]));
            }
            std::size_t piv = 0;
            while (piv < d && red[piv] == 0) ++piv;
            if (piv == d) continue;
            const Elem inv = t.inv(red[piv]);
            for (auto& x : red) x = t.mul(x, inv);
            echelon.push_back(std::move(red));
            pivots.push_back(piv);
            basis.push_back(std::move(acc));
        }
    if (basis.size() != d) throw NumericError("twisted Frobenius fixed space has the wrong dimension");
    return basis;
}

}  // namespace

BigInt twisted_count(const VarietySpec& v, const GroupAction& action, std::size_t g, int n,
                     const CountingContext& ctx, std::optional<std::size_t> fixed_by) {
    require_degree(n);
    if (g >= action.size() || (fixed_by && *fixed_by >= action.size()))
        throw ValidationError("group element index out of range");
    if (g == action.identity() && !fixed_by) return count_points(v, n, ctx);
    const int ord = action.order(g);
    const std::size_t d = static_cast<std::size_t>(v.num_vars());
    const long double qn = std::pow(static_cast<long double>(v.q()), n);
    const long double combos = v.ambient == Ambient::affine ? std::pow(qn, static_cast<long double>(d))
                                                              : (std::pow(qn, static_cast<long double>(d)) - 1) / (qn - 1);
    check_budget(combos, ctx, "twisted enumeration");
    const auto t = field_tables(v.base.p(), v.base.e() * n * ord);
    const auto gm = embed_matrix(*t, v.base, action.element(g));
    std::vector<Elem> fm;
    if (fixed_by) fm = embed_matrix(*t, v.base, action.element(*fixed_by));
    // x -> x^{q^n}, exponent reduced mod Q - 1
    const std::uint64_t frob = static_cast<std::uint64_t>(qn + 0.5L) % (t->size() - 1);
    const auto basis = twisted_basis(*t, gm, frob, ord, d);

    // F_{q^n} inside F_Q: 0 and the powers of g^{(Q-1)/(q^n-1)}
    const std::uint64_t k_size = static_cast<std::uint64_t>(qn + 0.5L);
    const std::uint64_t step = (t->size() - 1) / (k_size - 1);
    auto k_elem = [&](std::uint64_t i) { return i == 0 ? Elem{0} : t->exp((i - 1) * step); };

    // fixed points are the F_{q^n}-lines (projective) or vectors (affine) of V lying on X
    auto count_block = [&](std::size_t lead, std::uint64_t begin, std::uint64_t end) {
        std::uint64_t acc = 0;
        std::vector<Elem> x(d), z(d);
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            std::fill(x.begin(), x.end(), Elem{0});
            std::uint64_t r = idx;
            for (std::size_t b = 0; b < d; ++b) {
                Elem c;
                if (lead < d && b < lead) continue;
                if (lead < d && b == lead) {
                    c = 1;
                } else {
                    c = k_elem(r % k_size);
                    r /= k_size;
                }
                if (c == 0) continue;
                for (std::size_t j = 0; j < d; ++j) x[j] = t->add(x[j], t->mul(c, basis[b][j]));
            }
            bool on = true;
            for (const auto& eq : v.equations)
                if (eval_int_poly(*t, eq, x) != 0) {
                    on = false;
                    break;
                }
            if (!on) continue;
            if (fixed_by) {
                if (v.ambient == Ambient::projective) {
                    std::size_t i = 0;
                    while (x[i] == 0) ++i;
                    const Elem inv = t->inv(x[i]);
                    for (auto& c : x) c = t->mul(c, inv);
                }
                apply_into(*t, fm, x, z);
                if (!same_point(*t, v.ambient, z, x)) continue;
            }
            ++acc;
        }
        return acc;
    };
    std::uint64_t hits = 0;
    if (v.ambient == Ambient::affine) {
        const auto total = static_cast<std::uint64_t>(combos + 0.5L);
        hits = parallel_sum(total, ctx.threads, [&](std::uint64_t b, std::uint64_t e) { return count_block(d, b, e); });
    } else {
        for (std::size_t lead = 0; lead < d; ++lead) {
            const auto total = static_cast<std::uint64_t>(std::pow(qn, static_cast<long double>(d - 1 - lead)) + 0.5L);
            hits += parallel_sum(total, ctx.threads,
                                 [&](std::uint64_t b, std::uint64_t e) { return count_block(lead, b, e); });
        }
    }
    return BigInt(static_cast<unsigned long>(hits));
}

CharacterTable::CharacterTable(const GroupAction& action, int m, const std::vector<std::vector<std::size_t>>& classes,
                               std::vector<Cyclotomic> values)
    : m_(m), class_of_(action.size(), classes.size()), values_(std::move(values)) {
    if (m < 1) throw ValidationError("character field order must be positive");
    if (classes.size() != action.classes().size() || values_.size() != classes.size())
        throw ValidationError("character needs one value per conjugacy class (" +
                                  std::to_string(action.classes().size()) + " classes)",
                              "not_a_class_function");
    for (std::size_t c = 0; c < classes.size(); ++c) {
        auto sorted = classes[c];
        std::sort(sorted.begin(), sorted.end());
        if (std::find(action.classes().begin(), action.classes().end(), sorted) == action.classes().end())
            throw ValidationError("class " + std::to_string(c) + " is not a conjugacy class of the action",
                                  "not_a_class_function");
        for (auto i : sorted) class_of_[i] = c;
        if (values_[c].order() != m) throw ValidationError("character value lies in a different cyclotomic field");
    }
    const Cyclotomic& at_identity = values_[class_of_[action.identity()]];
    if (!at_identity.is_rational() || !at_identity.rational_part().is_integer() || at_identity.rational_part().sign() <= 0)
        throw ValidationError("character value at the identity must be a positive integer", "not_a_character");
}

CharacterTable CharacterTable::trivial(const GroupAction& action) {
    return {action, 1, action.classes(),
            std::vector<Cyclotomic>(action.classes().size(), Cyclotomic::rational(1, Rational(1)))};
}

bool CharacterTable::is_rational() const {
    return std::all_of(values_.begin(), values_.end(), [](const Cyclotomic& c) { return c.is_rational(); });
}

bool LSeries::is_rational() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Cyclotomic& c) { return c.is_rational(); });
}

TruncatedSeries LSeries::as_rational() const {
    if (!is_rational()) throw PreconditionError("L-series has irrational coefficients");
    std::vector<Rational> c;
    for (const auto& x : coeffs) c.push_back(x.rational_part());
    return {c, static_cast<int>(coeffs.size()) - 1};
}

WittElement zeta_from_counts(const VarietySpec& v, int n_max, const CountingContext& ctx) {
    if (n_max < 1) throw PreconditionError("zeta needs n_max >= 1", "precision");
    std::vector<Rational> traces;
    for (int n = 1; n <= n_max; ++n) traces.emplace_back(count_points(v, n, ctx));
    return WittElement(TruncatedSeries(exp_of_power_sums(traces, Rational(1)), n_max));
}

LSeries l_function(const VarietySpec& v, const GroupAction& action, const CharacterTable& chi, int n_max,
                   const CountingContext& ctx) {
    if (n_max < 1) throw PreconditionError("L-function needs n_max >= 1", "precision");
    const int m = chi.order();
    const Rational inv_order(BigInt(1), BigInt(static_cast<unsigned long>(action.size())));
    std::vector<Cyclotomic> traces;
    for (int n = 1; n <= n_max; ++n) {
        Cyclotomic acc(m);
        for (std::size_t g = 0; g < action.size(); ++g) {
            const Cyclotomic& c = chi.value(action.inverse(g));
            if (c == Cyclotomic(m)) continue;
            acc = acc + c * Rational(twisted_count(v, action, g, n, ctx));
        }
        traces.push_back(acc * inv_order);
    }
    return {m, exp_of_power_sums(traces, Cyclotomic::rational(m, Rational(1)))};
}

OrbifoldReport orbifold_zeta(const VarietySpec& v, const GroupAction& action, int n_max, const CountingContext& ctx) {
    if (n_max < 1) throw PreconditionError("orbifold zeta needs n_max >= 1", "precision");
    if (action.size() % static_cast<std::size_t>(v.base.p()) == 0)
        throw ValidationError("group order " + std::to_string(action.size()) + " is divisible by the characteristic",
                              "wild_action");
    std::map<std::tuple<std::size_t, std::size_t, int>, BigInt> memo;
    auto count = [&](std::size_t g, std::size_t h, int n) -> const BigInt& {
        auto key = std::make_tuple(g, h, n);
        auto it = memo.find(key);
        if (it == memo.end()) it = memo.emplace(key, twisted_count(v, action, h, n, ctx, g)).first;
        return it->second;
    };

    OrbifoldReport rep;
    rep.product_route = TruncatedSeries::one(n_max);
    for (const auto& cls : action.classes()) {
        const std::size_t g = cls.front();
        const auto cent = action.centralizer(g);
        rep.factors.emplace_back(g, cent.size());
        std::vector<Rational> traces;
        for (int n = 1; n <= n_max; ++n) {
            BigInt acc = 0;
            for (auto h : cent) acc += count(g, h, n);
            traces.push_back(Rational(acc, BigInt(static_cast<unsigned long>(cent.size()))));
        }
        rep.product_route = rep.product_route * TruncatedSeries(exp_of_power_sums(traces, Rational(1)), n_max);
    }

    std::vector<Rational> traces;
    for (int n = 1; n <= n_max; ++n) {
        BigInt acc = 0;
        for (std::size_t g = 0; g < action.size(); ++g)
            for (auto h : action.centralizer(g)) acc += count(g, h, n);
        traces.push_back(Rational(acc, BigInt(static_cast<unsigned long>(action.size()))));
    }
    rep.trace_route = TruncatedSeries(exp_of_power_sums(traces, Rational(1)), n_max);
    rep.agree = rep.product_route.coefficients() == rep.trace_route.coefficients();
    return rep;
}

namespace {

int mobius(int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    return n > 1 ? -result : result;
}

}  // namespace

std::vector<BigInt> closed_points(const VarietySpec& v, int d_max, const CountingContext& ctx) {
    if (d_max < 1) throw PreconditionError("closed points need d_max >= 1");
    std::vector<BigInt> counts;
    for (int n = 1; n <= d_max; ++n) counts.push_back(count_points(v, n, ctx));
    std::vector<BigInt> out;
    for (int d = 1; d <= d_max; ++d) {
        BigInt acc = 0;
        for (int e = 1; e <= d; ++e)
            if (d % e == 0) acc += mobius(d / e) * counts[static_cast<std::size_t>(e - 1)];
        if (acc % d != 0 || acc < 0) throw NumericError("closed-point count is not a nonnegative integer");
        out.push_back(acc / d);
    }
    return out;
}

WeilReport weil_check(const VarietySpec& v, int dim, int n_max, const CountingContext& ctx, long double tolerance) {
    if (dim < 0) throw PreconditionError("dimension must be nonnegative");
    if (n_max < 1) throw PreconditionError("Weil check needs n_max >= 1", "precision");
    WeilReport rep;
    std::vector<Rational> traces;
    for (int n = 1; n <= n_max; ++n) {
        rep.counts.push_back(count_points(v, n, ctx));
        traces.emplace_back(rep.counts.back());
    }
    const auto rec = traces_to_zeta(traces);
    if (const auto* ns = std::get_if<NotStabilized>(&rec)) {
        rep.profile = ns->profile;
        return rep;
    }
    const auto& res = std::get<ReconstructionResult>(rec);
    rep.stabilized = true;
    rep.profile = res.profile;
    rep.zeta = res.value;
    rep.degree = res.value.degree();
    rep.euler_characteristic = -rep.degree;

    const Rational q(BigInt(static_cast<unsigned long>(v.q())));
    const Rational qd = pow(q, dim);
    const RationalFunction scaled = RationalFunction::t_power(rep.euler_characteristic) * res.value;
    const RationalFunction ratio = res.value.substitute_reciprocal(qd) / scaled;
    if (ratio.num().degree() == 0 && ratio.den().degree() == 0) {
        const Rational c = ratio.num().constant_term() / ratio.den().constant_term();
        rep.sign = c.sign();
        rep.functional_equation = c * c == pow(qd, rep.euler_characteristic);
    }

    const auto [num, den] = res.value.unit_constant_form();
    const long double logq = std::log(static_cast<long double>(v.q()));
    rep.riemann_hypothesis = true;
    for (int side = 0; side < 2; ++side) {
        const Polynomial& p = side == 0 ? num : den;
        if (p.degree() < 1) continue;
        for (const auto& r : polynomial_roots(p.reversed(p.degree()))) {
            RootMagnitude rm;
            rm.reciprocal_root = r.value;
            rm.multiplicity = r.multiplicity;
            rm.in_numerator = side == 0;
            rm.modulus = std::abs(r.value);
            rm.weight = static_cast<int>(std::lround(2.0L * std::log(rm.modulus) / logq));
            rm.deviation = std::abs(rm.modulus - std::pow(static_cast<long double>(v.q()), rm.weight / 2.0L));
            const bool parity_ok = (rm.weight % 2 == 1) == rm.in_numerator;
            if (rm.deviation > tolerance || rm.weight < 0 || rm.weight > 2 * dim || !parity_ok)
                rep.riemann_hypothesis = false;
            rep.roots.push_back(rm);
        }
    }
    return rep;
}

namespace {

BigInt prime_to_p_part(BigInt x, std::int64_t p) {
    const BigInt bp(static_cast<long>(p));
    while (x != 0 && x % bp == 0) x /= bp;
    return x;
}

void validate_power_map(std::int64_t p, std::int64_t m) {
    if (!fp::is_prime(p)) throw ValidationError("characteristic " + std::to_string(p) + " is not prime", "not_prime");
    if (m < 2) throw ValidationError("power map exponent must be at least 2", "degenerate_map");
    if (std::gcd(m, p) != 1) throw ValidationError("power map exponent must be prime to p", "not_coprime");
}

}  // namespace

std::vector<BigInt> artin_mazur_traces(std::int64_t p, std::int64_t m, int n_max) {
    validate_power_map(p, m);
    if (n_max < 1) throw PreconditionError("n_max must be at least 1");
    std::vector<BigInt> out;
    BigInt power = 1;
    for (int n = 1; n <= n_max; ++n) {
        power *= static_cast<long>(m);
        out.push_back(2 + prime_to_p_part(power - 1, p));
    }
    return out;
}

BigInt artin_mazur_enumerated(std::int64_t p, std::int64_t m, int n, const CountingContext& ctx) {
    validate_power_map(p, m);
    require_degree(n);
    BigInt mn;
    mpz_ui_pow_ui(mn.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(n));
    const BigInt d = prime_to_p_part(mn - 1, p);
    int k = 1;
    if (d > 1) {
        BigInt pk = BigInt(static_cast<long>(p)) % d;
        while (pk != 1) {
            pk = (pk * static_cast<long>(p)) % d;
            ++k;
            if (k > 64) throw ResourceError("splitting field of the fixed points is too large", std::pow(static_cast<long double>(p), k));
        }
    }
    check_budget(std::pow(static_cast<long double>(p), k), ctx, "power-map enumeration");
    const auto t = field_tables(p, k);
    const std::uint64_t order = t->size() - 1;
    const BigInt exponent_mod = (mn - 1) % BigInt(static_cast<unsigned long>(order));
    const std::uint64_t ex = exponent_mod.get_ui();
    std::uint64_t fixed = 2;  // 0 and infinity
    for (std::uint64_t x = 1; x < t->size(); ++x)
        if ((std::uint64_t{t->log(static_cast<Elem>(x))} * ex) % order == 0) ++fixed;
    return BigInt(static_cast<unsigned long>(fixed));
}

}  // namespace motivic
