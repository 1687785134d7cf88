#include "motivic/measures.hpp"

#include <algorithm>

#include "motivic/analytic.hpp"
#include "motivic/errors.hpp"

namespace motivic {

namespace {

using Poly = std::vector<BigInt>;

Poly trimmed(Poly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

Poly add(const Poly& a, const Poly& b, int sign) {
    Poly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] += sign * b[i];
    return trimmed(c);
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return trimmed(c);
}

BigInt eval(const Poly& p, const BigInt& q) {
    BigInt acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * q + *it;
    return acc;
}

}  // namespace

MeasureClass MeasureClass::make(Op op, int n, long k, std::vector<std::shared_ptr<const Node>> children, Poly poly) {
    auto node = std::make_shared<Node>();
    node->op = op;
    node->n = n;
    node->k = k;
    node->children = std::move(children);
    node->poly = trimmed(std::move(poly));
    return MeasureClass(std::move(node));
}

MeasureClass MeasureClass::point() { return make(Op::point, 0, 1, {}, {1}); }

MeasureClass MeasureClass::affine_space(int n) {
    if (n < 0) throw PreconditionError("dimension must be nonnegative");
    Poly p(static_cast<std::size_t>(n) + 1, 0);
    p.back() = 1;
    return make(Op::affine, n, 1, {}, p);
}

MeasureClass MeasureClass::projective_space(int n) {
    if (n < 0) throw PreconditionError("dimension must be nonnegative");
    if (n == 0) return make(Op::projective, 0, 1, {point().node_}, {1});
    const MeasureClass cell = affine_space(n);
    const MeasureClass rest = projective_space(n - 1);
    return make(Op::projective, n, 1, {cell.node_, rest.node_}, add(cell.counting_polynomial(), rest.counting_polynomial(), 1));
}

MeasureClass MeasureClass::torus() { return make(Op::torus, 1, 1, {}, {-1, 1}); }

MeasureClass MeasureClass::scaled(long k, const MeasureClass& c) {
    Poly p = c.counting_polynomial();
    for (auto& x : p) x *= k;
    return make(Op::scale, 0, k, {c.node_}, p);
}

MeasureClass operator+(const MeasureClass& a, const MeasureClass& b) {
    return MeasureClass::make(MeasureClass::Op::sum, 0, 1, {a.node_, b.node_},
                              add(a.counting_polynomial(), b.counting_polynomial(), 1));
}

MeasureClass operator-(const MeasureClass& a, const MeasureClass& b) {
    return MeasureClass::make(MeasureClass::Op::difference, 0, 1, {a.node_, b.node_},
                              add(a.counting_polynomial(), b.counting_polynomial(), -1));
}

MeasureClass operator*(const MeasureClass& a, const MeasureClass& b) {
    return MeasureClass::make(MeasureClass::Op::product, 0, 1, {a.node_, b.node_},
                              mul(a.counting_polynomial(), b.counting_polynomial()));
}

std::vector<MeasureClass> MeasureClass::children() const {
    std::vector<MeasureClass> out;
    for (const auto& c : node_->children) out.push_back(MeasureClass(c));
    return out;
}

BigInt MeasureClass::evaluate(const BigInt& q) const { return eval(node_->poly, q); }

bool MeasureClass::effective() const {
    if (op() == Op::difference || (op() == Op::scale && factor() < 0)) return false;
    for (const auto& c : children())
        if (!c.effective()) return false;
    return true;
}

std::string MeasureClass::str() const {
    auto args = [this](const char* sep) {
        std::string s;
        for (const auto& c : children()) s += (s.empty() ? "" : sep) + c.str();
        return s;
    };
    switch (op()) {
        case Op::point: return "pt";
        case Op::affine: return "A^" + std::to_string(dim());
        case Op::projective: return "P^" + std::to_string(dim());
        case Op::torus: return "Gm";
        case Op::sum: return "(" + args(" + ") + ")";
        case Op::difference: return "(" + args(" - ") + ")";
        case Op::product: return "(" + args(" x ") + ")";
        case Op::scale: return std::to_string(factor()) + "*" + children().front().str();
    }
    return {};
}

BigInt mu_count(const MeasureClass& c, std::int64_t q) {
    require_prime_power(q);
    return c.evaluate(BigInt(static_cast<long>(q)));
}

BigInt mu_rig(const MeasureClass& c) { return c.evaluate(1); }

std::string EpsilonElement::str() const { return even.get_str() + (odd < 0 ? " - " : " + ") + BigInt(abs(odd)).get_str() + "e"; }

NcComposite mu_nc_composite(const MeasureClass& c) {
    using Op = MeasureClass::Op;
    NcComposite out;
    switch (c.op()) {
        case Op::point:
            out.value = {1, 0};
            return out;
        case Op::projective:
            // crystalline cohomology of P^n sits in even degrees, one dimension each
            out.value = {c.dim() + 1, 0};
            return out;
        case Op::affine:
            // [A^n] = [P^n] - [P^{n-1}]
            out.value = {1, 0};
            out.extended_by_linearity = c.dim() > 0;
            return out;
        case Op::torus:
            // [Gm] = [P^1] - 2[pt]
            out.value = {0, 0};
            out.extended_by_linearity = true;
            return out;
        default:
            break;
    }
    const auto kids = c.children();
    std::vector<NcComposite> parts;
    for (const auto& k : kids) parts.push_back(mu_nc_composite(k));
    for (const auto& p : parts) out.extended_by_linearity = out.extended_by_linearity || p.extended_by_linearity;
    const EpsilonElement& a = parts[0].value;
    switch (c.op()) {
        case Op::sum:
            out.value = {a.even + parts[1].value.even, a.odd + parts[1].value.odd};
            break;
        case Op::difference:
            out.value = {a.even - parts[1].value.even, a.odd - parts[1].value.odd};
            break;
        case Op::product: {
            const EpsilonElement& b = parts[1].value;
            out.value = {a.even * b.even + a.odd * b.odd, a.even * b.odd + a.odd * b.even};
            break;
        }
        case Op::scale:
            out.value = {a.even * c.factor(), a.odd * c.factor()};
            break;
        default:
            break;
    }
    return out;
}

bool scissor_consistent(const MeasureClass& c, std::int64_t q) {
    using Op = MeasureClass::Op;
    const BigInt bq(static_cast<long>(q));
    const auto kids = c.children();
    for (const auto& k : kids)
        if (!scissor_consistent(k, q)) return false;
    const BigInt v = c.evaluate(bq);
    switch (c.op()) {
        case Op::projective:
            if (c.dim() == 0) return v == 1;
            return v == kids[0].evaluate(bq) + kids[1].evaluate(bq);
        case Op::sum: return v == kids[0].evaluate(bq) + kids[1].evaluate(bq);
        case Op::difference: return v == kids[0].evaluate(bq) - kids[1].evaluate(bq);
        case Op::product: return v == kids[0].evaluate(bq) * kids[1].evaluate(bq);
        case Op::scale: return v == c.factor() * kids[0].evaluate(bq);
        default: return true;
    }
}

WitnessReport non_factoring_witness(int n, std::int64_t q) {
    if (n < 1) throw PreconditionError("witness needs n >= 1");
    require_prime_power(q);
    WitnessReport rep;
    rep.n = n;
    rep.q = q;
    rep.projective = MeasureClass::projective_space(n);
    rep.points = MeasureClass::scaled(n + 1, MeasureClass::point());
    rep.nc_projective = mu_nc_composite(rep.projective).value;
    rep.nc_points = mu_nc_composite(rep.points).value;
    rep.count_projective = mu_count(rep.projective, q);
    rep.count_points = mu_count(rep.points, q);
    rep.obstructs = rep.nc_projective == rep.nc_points && rep.count_projective != rep.count_points;
    if (n == 1) rep.note = "n = 1 also separates the two classes for every q > 1";
    return rep;
}

}  // namespace motivic
