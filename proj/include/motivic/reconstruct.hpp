#ifndef MOTIVIC_RECONSTRUCT_HPP
#define MOTIVIC_RECONSTRUCT_HPP

#include <variant>
#include <vector>

#include "motivic/polynomial.hpp"
#include "motivic/rational.hpp"

namespace motivic {

struct ReconstructionResult {
    RationalFunction value;
    /* minimal recurrence order (linear complexity) */
    int order = 0;
    /* number of leading terms after which the connection polynomial stopped changing */
    int stabilized_at = 0;
    /* count of input terms the Taylor expansion was checked against */
    int residual_checked_to = 0;
    /* deg(num) - deg(den) of the reconstructed function */
    int degree = 0;
    std::vector<int> profile;
};

struct NotStabilized {
    std::vector<int> profile;
    int order = 0;
    int last_change = -1;
};

using Reconstruction = std::variant<ReconstructionResult, NotStabilized>;

inline bool stabilized(const Reconstruction& r) { return std::holds_alternative<ReconstructionResult>(r); }

/*
 * Berlekamp-Massey over Q. A result is declared only when the minimal
 * recurrence has order <= floor(len/2) and did not change over the final
 * ceil(len/4) terms.
 */
Reconstruction berlekamp_massey(const std::vector<Rational>& seq);

/* exp(sum traces_n t^n / n) to precision len(traces), then reconstruct */
Reconstruction traces_to_zeta(const std::vector<Rational>& traces);

/* minimal recurrence order after each prefix; nondecreasing */
std::vector<int> linear_complexity_profile(const std::vector<Rational>& seq);

}  // namespace motivic

#endif
