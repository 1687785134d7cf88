#include "motivic/reconstruct.hpp"

#include "motivic/errors.hpp"
#include "motivic/series.hpp"

namespace motivic {

namespace {

struct MasseyState {
    Polynomial connection = Polynomial::constant(1);
    int order = 0;
    int last_change = -1;
    std::vector<int> profile;
};

MasseyState run_massey(const std::vector<Rational>& s) {
    MasseyState st;
    Polynomial prev = Polynomial::constant(1);
    Rational prev_discrepancy(1);
    int gap = 1;
    for (std::size_t n = 0; n < s.size(); ++n) {
        Rational d = s[n];
        for (int i = 1; i <= st.order; ++i) d += st.connection.coeff(i) * s[n - static_cast<std::size_t>(i)];
        if (d.is_zero()) {
            ++gap;
        } else {
            Polynomial update = (d / prev_discrepancy) * prev.shifted(gap);
            if (2 * st.order <= static_cast<int>(n)) {
                Polynomial saved = st.connection;
                st.connection -= update;
                st.order = static_cast<int>(n) + 1 - st.order;
                prev = std::move(saved);
                prev_discrepancy = d;
                gap = 1;
            } else {
                st.connection -= update;
                ++gap;
            }
            st.last_change = static_cast<int>(n);
        }
        st.profile.push_back(st.order);
    }
    return st;
}

}  // namespace

Reconstruction berlekamp_massey(const std::vector<Rational>& seq) {
    if (seq.empty()) throw PreconditionError("Berlekamp-Massey needs a nonempty sequence");
    MasseyState st = run_massey(seq);
    const int len = static_cast<int>(seq.size());
    const int tail = (len + 3) / 4;
    if (st.order > len / 2 || st.last_change > len - 1 - tail)
        return NotStabilized{std::move(st.profile), st.order, st.last_change};

    Polynomial den = st.connection;
    Polynomial num = (Polynomial(seq) * den).truncated(st.order);
    RationalFunction value(num, den);
    if (value.taylor(len) != seq) throw NumericError("reconstructed function does not reproduce its input");
    ReconstructionResult r{value, st.order, st.last_change + 1, len, value.degree(), std::move(st.profile)};
    return r;
}

Reconstruction traces_to_zeta(const std::vector<Rational>& traces) {
    std::vector<Rational> coeffs = exp_of_power_sums(traces, Rational(1));
    return berlekamp_massey(coeffs);
}

std::vector<int> linear_complexity_profile(const std::vector<Rational>& seq) { return run_massey(seq).profile; }

}  // namespace motivic
