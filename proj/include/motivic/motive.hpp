#ifndef MOTIVIC_MOTIVE_HPP
#define MOTIVIC_MOTIVE_HPP

#include <optional>
#include <string>
#include <vector>

#include "motivic/matrix.hpp"
#include "motivic/polynomial.hpp"
#include "motivic/series.hpp"

namespace motivic {

/*
 * Z/2-graded realization of an endomorphism f of a motive: F+ acts on the
 * even part, F- on the odd part. Either block may be 0x0.
 */
class TracedMotive {
public:
    TracedMotive() = default;
    TracedMotive(RatMatrix f_plus, RatMatrix f_minus, std::optional<std::string> label = std::nullopt);

    static TracedMotive unit();

    const RatMatrix& f_plus() const { return plus_; }
    const RatMatrix& f_minus() const { return minus_; }
    const std::optional<std::string>& label() const { return label_; }
    std::size_t d_plus() const { return plus_.rows(); }
    std::size_t d_minus() const { return minus_.rows(); }
    /* categorical trace of the identity: d+ - d- */
    long euler_characteristic() const {
        return static_cast<long>(plus_.rows()) - static_cast<long>(minus_.rows());
    }

    friend bool operator==(const TracedMotive& a, const TracedMotive& b) {
        return a.plus_ == b.plus_ && a.minus_ == b.minus_;
    }

private:
    RatMatrix plus_, minus_;
    std::optional<std::string> label_;
};

/* supertraces tr(F+^n) - tr(F-^n) for n = 1..n_max */
std::vector<Rational> trace_sequence(const TracedMotive& m, int n_max);

WittElement zeta_series(const TracedMotive& m, int precision = default_precision);

/* det(1 - t F-) / det(1 - t F+), reduced */
RationalFunction zeta_rational(const TracedMotive& m);

struct ZetaDegrees {
    /* deg det(1 - tF-) - deg det(1 - tF+) before cancellation, i.e. -(d+ - d-)
     * counted with full matrix sizes */
    long uncancelled;
    long reduced;
};
/* Degrees of the zeta function. The uncancelled figure uses the formal
 * degrees d-, d+ of the two determinant polynomials. */
ZetaDegrees zeta_degrees(const TracedMotive& m);

/* det F+ / det F- ; throws NotInvertibleError on singular blocks */
Rational determinant(const TracedMotive& m);

/* each block replaced by its inverse transpose */
TracedMotive dual_inverse(const TracedMotive& m);

struct FunctionalEquationReport {
    bool holds = false;
    long euler_characteristic = 0;
    Rational determinant;
    /* constant c with Z((f^-1)^v; 1/t) = c (-t)^tr Z(f;t), extracted from the two sides */
    std::optional<Rational> extracted_constant;
    RationalFunction lhs;
    RationalFunction rhs;
};

FunctionalEquationReport check_functional_equation(const TracedMotive& m);

TracedMotive direct_sum(const TracedMotive& a, const TracedMotive& b);
/* graded tensor product without Koszul signs */
TracedMotive tensor(const TracedMotive& a, const TracedMotive& b);

/* (-1)^d traces[n] == traces[n+r] for every index pair in range */
bool cy_periodicity_check(const std::vector<Rational>& traces, int d, int r);

}  // namespace motivic

#endif
