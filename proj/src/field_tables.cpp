#include "motivic/field_tables.hpp"

#include "motivic/errors.hpp"

namespace motivic {

namespace {

bool is_primitive(const FqElement& g, std::uint64_t q, const std::vector<std::uint64_t>& factors) {
    if (g.is_zero()) return false;
    for (auto r : factors)
        if (g.pow((q - 1) / r).is_one()) return false;
    return true;
}

}  // namespace

FieldTables::FieldTables(const FqField& field)
    : field_(field), p_(field.p()), e_(field.e()), q_(field.size()) {
    if (q_ > max_size)
        throw ResourceError("field of size " + std::to_string(q_) + " exceeds the table limit", static_cast<long double>(q_));
    build_add_tables();
    place_.resize(static_cast<std::size_t>(e_));
    std::uint64_t pl = 1;
    for (auto& x : place_) {
        x = pl;
        pl *= static_cast<std::uint64_t>(p_);
    }

    // smallest primitive element, trying x first for proper extensions
    const auto factors = fp::prime_factors(q_ - 1);
    FqElement g;
    bool found = false;
    if (e_ > 1) {
        g = FqElement::from_index(field_, static_cast<std::uint64_t>(p_));
        found = is_primitive(g, q_, factors);
    }
    for (std::uint64_t idx = 1; !found && idx < q_; ++idx) {
        g = FqElement::from_index(field_, idx);
        found = is_primitive(g, q_, factors);
    }
    if (!found) throw NumericError("no primitive element found");

    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    const bool x_primitive = e_ > 1 && g.index() == static_cast<std::uint64_t>(p_);
    if (x_primitive) {
        // multiplication by x: shift digits up, fold the top digit back through the modulus
        const std::uint64_t top_place = place_.back();
        std::vector<Elem> fold(static_cast<std::size_t>(p_));
        for (std::int64_t d = 0; d < p_; ++d) {
            std::vector<std::int64_t> c(static_cast<std::size_t>(e_));
            for (int i = 0; i < e_; ++i) c[static_cast<std::size_t>(i)] = -d * field_.modulus()[static_cast<std::size_t>(i)];
            fold[static_cast<std::size_t>(d)] = static_cast<Elem>(FqElement(field_, c).index());
        }
        Elem cur = 1;
        for (std::uint64_t k = 0; k + 1 < q_; ++k) {
            exp_[k] = cur;
            log_[cur] = static_cast<std::uint32_t>(k);
            const std::uint64_t top = cur / top_place;
            cur = add(static_cast<Elem>((cur - top * top_place) * static_cast<std::uint64_t>(p_)), fold[top]);
        }
        return;
    }

    // general primitive element: multiplication by g as a sparse F_p-linear map on digit vectors
    struct Entry {
        int row, col;
        std::int64_t val;
    };
    std::vector<Entry> map;
    for (int j = 0; j < e_; ++j) {
        std::vector<std::int64_t> basis(static_cast<std::size_t>(e_), 0);
        basis[static_cast<std::size_t>(j)] = 1;
        FqElement image = FqElement(field_, basis) * g;
        for (int i = 0; i < e_; ++i)
            if (auto v = image.coeffs()[static_cast<std::size_t>(i)]) map.push_back({i, j, v});
    }
    std::vector<std::int64_t> digits(static_cast<std::size_t>(e_), 0), next(digits.size());
    digits[0] = 1;
    for (std::uint64_t k = 0; k + 1 < q_; ++k) {
        std::uint64_t idx = 0;
        for (int i = 0; i < e_; ++i) idx += static_cast<std::uint64_t>(digits[static_cast<std::size_t>(i)]) * place_[static_cast<std::size_t>(i)];
        exp_[k] = static_cast<Elem>(idx);
        log_[idx] = static_cast<std::uint32_t>(k);
        std::fill(next.begin(), next.end(), 0);
        for (const auto& en : map) next[static_cast<std::size_t>(en.row)] += en.val * digits[static_cast<std::size_t>(en.col)];
        for (std::size_t i = 0; i < next.size(); ++i) digits[i] = next[i] % p_;
    }
}

void FieldTables::build_add_tables() {
    const auto p = static_cast<std::uint32_t>(p_);
    if (p > 64) {
        chunk_ = p;
    } else {
        // c digits per block with p^c <= 64, c <= e
        int c = 1;
        chunk_ = p;
        while (c < e_ && chunk_ * p <= 64) {
            chunk_ *= p;
            ++c;
        }
        add_table_.resize(std::size_t{chunk_} * chunk_);
        neg_table_.resize(chunk_);
        for (std::uint32_t a = 0; a < chunk_; ++a) {
            std::uint32_t n = 0, pl = 1;
            for (std::uint32_t x = a; pl < chunk_; x /= p, pl *= p) n += ((p - x % p) % p) * pl;
            neg_table_[a] = static_cast<std::uint16_t>(n);
            for (std::uint32_t b = 0; b < chunk_; ++b) {
                std::uint32_t s = 0;
                pl = 1;
                for (std::uint32_t x = a, y = b; pl < chunk_; x /= p, y /= p, pl *= p) s += ((x % p + y % p) % p) * pl;
                add_table_[std::size_t{a} * chunk_ + b] = static_cast<std::uint16_t>(s);
            }
        }
    }
    recip_ = ~std::uint64_t{0} / chunk_ + 1;
}

FieldTables::Elem FieldTables::inv(Elem a) const {
    if (a == 0) throw PreconditionError("inverse of zero in a finite field", "division_by_zero");
    const std::uint64_t l = log_[a];
    return exp_[l == 0 ? 0 : (q_ - 1 - l)];
}

FieldTables::Elem FieldTables::pow(Elem a, std::uint64_t k) const {
    if (a == 0) return k == 0 ? 1 : 0;
    const std::uint64_t m = q_ - 1;
    return exp_[(std::uint64_t{log_[a]} * (k % m)) % m];
}

SubfieldEmbedding::SubfieldEmbedding(const FieldTables& big, const FqField& sub) : big_(&big), sub_(sub) {
    if (sub.p() != big.p() || big.field().e() % sub.e() != 0)
        throw ValidationError("field is not a subfield of the enumeration field", "field_mismatch");
    if (sub.e() == 1) {
        generator_powers_ = {big.one()};
        return;
    }
    const std::uint64_t step = (big.size() - 1) / (sub.size() - 1);
    const PolyFp& f = sub.modulus();
    for (std::uint64_t j = 0; j + 1 < sub.size(); ++j) {
        FieldTables::Elem r = big.exp(j * step);
        FieldTables::Elem acc = 0;
        for (auto it = f.rbegin(); it != f.rend(); ++it) acc = big.add(big.mul(acc, r), big.from_int(*it));
        if (acc != 0) continue;
        generator_powers_.resize(static_cast<std::size_t>(sub.e()));
        FieldTables::Elem pw = big.one();
        for (auto& g : generator_powers_) {
            g = pw;
            pw = big.mul(pw, r);
        }
        return;
    }
    throw NumericError("subfield modulus has no root in the enumeration field");
}

FieldTables::Elem SubfieldEmbedding::operator()(const FqElement& x) const {
    if (!(x.field() == sub_)) throw ValidationError("element does not belong to the embedded subfield", "field_mismatch");
    FieldTables::Elem acc = 0;
    for (std::size_t i = 0; i < x.coeffs().size(); ++i)
        acc = big_->add(acc, big_->mul(big_->from_int(x.coeffs()[i]), generator_powers_[i]));
    return acc;
}

namespace tpoly {

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly mul(const FieldTables& f, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
    }
    trim(c);
    return c;
}

Poly mod(const FieldTables& f, Poly a, const Poly& m) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    const auto inv = f.inv(m.back());
    while (a.size() > dm) {
        auto c = f.mul(a.back(), inv);
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t j = 0; j <= dm; ++j) a[shift + j] = f.sub(a[shift + j], f.mul(c, m[j]));
        a.pop_back();
        trim(a);
    }
    return a;
}

Poly gcd(const FieldTables& f, Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = mod(f, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return a;
    const auto inv = f.inv(a.back());
    for (auto& c : a) c = f.mul(c, inv);
    return a;
}

std::uint64_t count_roots(const FieldTables& f, const Poly& g_in) {
    Poly g = g_in;
    trim(g);
    if (g.empty()) return f.size();
    if (g.size() == 1) return 0;
    if (g.size() == 2) return 1;
    // x^Q mod g
    Poly result{f.one()}, base{0, f.one()};
    base = mod(f, base, g);
    std::uint64_t e = f.size();
    while (e > 0) {
        if (e & 1u) result = mod(f, mul(f, result, base), g);
        e >>= 1u;
        if (e) base = mod(f, mul(f, base, base), g);
    }
    if (result.size() < 2) result.resize(2, 0);
    result[1] = f.sub(result[1], f.one());
    trim(result);
    Poly h = gcd(f, g, result);
    return h.empty() ? static_cast<std::uint64_t>(g.size() - 1) : static_cast<std::uint64_t>(h.size() - 1);
}

}  // namespace tpoly

}  // namespace motivic
