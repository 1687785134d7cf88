#ifndef MOTIVIC_ANALYTIC_HPP
#define MOTIVIC_ANALYTIC_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "motivic/motive.hpp"
#include "motivic/roots.hpp"

namespace motivic {

using Complex = std::complex<long double>;

struct ComplexSpectrum {
    std::vector<Root> plus;
    std::vector<Root> minus;
    Polynomial charpoly_plus;
    Polynomial charpoly_minus;
};

/* eigenvalues of F+ and F- as certified roots of their characteristic polynomials */
ComplexSpectrum spectrum(const TracedMotive& m);

struct SpectralRadii {
    long double plus = 0;
    long double minus = 0;
    long double rho = 0;
};

SpectralRadii spectral_radius(const TracedMotive& m);

/* |tr f^n| <= (d+ + d-) rho^n (1 + 1e-9) for n = 1..n_max */
bool growth_bound_check(const TracedMotive& m, int n_max);

/* max of log|tr_n| / n over the last ceil(n_max/2) of the first n_max traces,
 * skipping zeros; -infinity when none is nonzero */
long double rate_estimate(const std::vector<Rational>& traces, int n_max);

struct Inapplicable {
    std::string reason;
};

/* log rho, when the eigenvalues on the outer circle differ between F+ and F- */
std::variant<long double, Inapplicable> rate_exact(const TracedMotive& m);

/* q must be a prime power */
void require_prime_power(std::int64_t q);

/* Z(f; q^{-s}); PoleError carries the nearest pole */
Complex hasse_weil_eval(const TracedMotive& m, std::int64_t q, Complex s);

/* log rho / log q, -infinity for rho = 0 */
long double convergence_abscissa(const TracedMotive& m, std::int64_t q);

/* s-values z + j 2 pi i / log q, j in Z, with z on the principal branch */
struct LatticeFamily {
    Complex eigenvalue;
    Complex base;
    int multiplicity = 1;
    /* members with imaginary part inside the requested strip */
    std::vector<Complex> in_strip;
};

struct MeromorphicReport {
    std::int64_t q = 0;
    long double step = 0;  // 2 pi / log q
    std::vector<LatticeFamily> poles;
    std::vector<LatticeFamily> zeros;
    /* eigenvalues shared by F+ and F-, removed from both lists */
    std::vector<Complex> cancelled;
};

MeromorphicReport poles_and_zeros(const TracedMotive& m, std::int64_t q, long double im_lo, long double im_hi);

/*
 * principal: Im z in ]-pi/log q, pi/log q]
 * lower_closed: Im z in [-pi/log q, pi/log q[, kept only to exercise the
 * branch sentinel
 */
enum class BranchWindow { principal, lower_closed };

struct JordanBlock {
    int size = 1;
    /* log_q of the unipotent part on this block, in a Jordan basis */
    std::vector<std::vector<Complex>> nilpotent_log;
};

struct ThetaEntry {
    Complex lambda;
    Complex z;
    int multiplicity = 1;
    std::vector<JordanBlock> blocks;
    bool on_boundary = false;
};

struct ThetaData {
    std::int64_t q = 0;
    BranchWindow window = BranchWindow::principal;
    std::vector<ThetaEntry> plus;
    std::vector<ThetaEntry> minus;
};

/* needs invertible blocks; checks q^z = lambda to 1e-9 */
ThetaData theta_construction(const TracedMotive& m, std::int64_t q, BranchWindow window = BranchWindow::principal);

bool in_principal_window(Complex z, std::int64_t q);

struct RegDetSample {
    Complex s;
    Complex closed_form;
    Complex direct;
    long double relative_error = 0;
};

struct RegDetReport {
    bool passed = false;
    bool branch_ok = false;
    std::vector<RegDetSample> samples;
};

/*
 * prod_{z odd} (1 - q^{z-s}) / prod_{z even} (1 - q^{z-s}) against
 * hasse_weil_eval at each sample, relative tolerance 1e-9, with every z
 * required to lie in the principal window.
 */
RegDetReport regularized_det_check(const TracedMotive& m, std::int64_t q, const std::vector<Complex>& samples,
                                   BranchWindow window = BranchWindow::principal);

}  // namespace motivic

#endif
