#ifndef MOTIVIC_MEASURES_HPP
#define MOTIVIC_MEASURES_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "motivic/rational.hpp"

namespace motivic {

/*
 * Polynomial-count class in the Grothendieck ring of varieties: an integer
 * counting polynomial in q together with the construction that produced it.
 */
class MeasureClass {
public:
    enum class Op { point, affine, projective, torus, sum, product, difference, scale };

    static MeasureClass point();
    static MeasureClass affine_space(int n);
    /* recorded as the scissor step P^n = A^n + P^{n-1} */
    static MeasureClass projective_space(int n);
    static MeasureClass torus();
    static MeasureClass scaled(long k, const MeasureClass& c);

    friend MeasureClass operator+(const MeasureClass& a, const MeasureClass& b);
    friend MeasureClass operator*(const MeasureClass& a, const MeasureClass& b);
    friend MeasureClass operator-(const MeasureClass& a, const MeasureClass& b);

    Op op() const { return node_->op; }
    int dim() const { return node_->n; }
    long factor() const { return node_->k; }
    std::vector<MeasureClass> children() const;
    /* ascending coefficients in q, trailing zeros stripped */
    const std::vector<BigInt>& counting_polynomial() const { return node_->poly; }
    BigInt evaluate(const BigInt& q) const;
    /* built from cells, sums, products and positive scalings only */
    bool effective() const;
    std::string str() const;

    friend bool operator==(const MeasureClass& a, const MeasureClass& b) {
        return a.counting_polynomial() == b.counting_polynomial();
    }

private:
    struct Node {
        Op op;
        int n = 0;
        long k = 1;
        std::vector<std::shared_ptr<const Node>> children;
        std::vector<BigInt> poly;
    };
    explicit MeasureClass(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    static MeasureClass make(Op op, int n, long k, std::vector<std::shared_ptr<const Node>> children,
                             std::vector<BigInt> poly);
    std::shared_ptr<const Node> node_;
};

/* #X(F_q); q must be a prime power */
BigInt mu_count(const MeasureClass& c, std::int64_t q);

/* compactly supported rigid Euler characteristic, P(1) on this model */
BigInt mu_rig(const MeasureClass& c);

/* a + b eps in Z[eps]/(eps^2 - 1) */
struct EpsilonElement {
    BigInt even;
    BigInt odd;
    /* eps -> -1 */
    BigInt collapse() const { return even - odd; }
    friend bool operator==(const EpsilonElement& x, const EpsilonElement& y) {
        return x.even == y.even && x.odd == y.odd;
    }
    std::string str() const;
};

struct NcComposite {
    EpsilonElement value;
    /* true when some cell is not smooth and proper and entered through linearity */
    bool extended_by_linearity = false;
};

NcComposite mu_nc_composite(const MeasureClass& c);

/* every recorded construction step evaluates consistently at q */
bool scissor_consistent(const MeasureClass& c, std::int64_t q);

struct WitnessReport {
    int n = 0;
    std::int64_t q = 0;
    MeasureClass projective = MeasureClass::point();
    MeasureClass points = MeasureClass::point();
    EpsilonElement nc_projective;
    EpsilonElement nc_points;
    BigInt count_projective;
    BigInt count_points;
    /* equal nc values, different counts */
    bool obstructs = false;
    std::string note;
};

/* [P^n] against (n+1)[pt] */
WitnessReport non_factoring_witness(int n, std::int64_t q);

}  // namespace motivic

#endif
