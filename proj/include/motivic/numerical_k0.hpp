#ifndef MOTIVIC_NUMERICAL_K0_HPP
#define MOTIVIC_NUMERICAL_K0_HPP

#include <string>
#include <utility>
#include <vector>

#include "motivic/integer_lattice.hpp"

namespace motivic {

/* Euler pairing chi(b_i, b_j) on a chosen generating set of K0 */
struct EulerGram {
    IntMatrix chi;
    std::size_t n() const { return chi.size(); }
};

/* validates squareness */
EulerGram make_gram(IntMatrix chi);

/* {v : v^T chi = 0} */
IntMatrix left_kernel(const EulerGram& g);
/* {v : chi v = 0} */
IntMatrix right_kernel(const EulerGram& g);

struct NumK0Report {
    std::size_t n = 0;
    std::size_t rank = 0;
    IntMatrix left_kernel_basis;
    IntMatrix right_kernel_basis;
    bool kernels_agree = false;
    /* rows p_i with v -> (p_i . v) a surjection Z^n -> Z^rank whose kernel is the used kernel */
    IntMatrix quotient_basis;
    /* Smith invariants of the kernel inclusion, all 1 for a free quotient */
    std::vector<BigInt> kernel_invariants;
    std::vector<std::string> warnings;
};

NumK0Report num_grothendieck(const EulerGram& g);

/* chi_ij = C(n + j - i, n) for j >= i, 0 below the diagonal */
EulerGram beilinson_gram(int n);

/* chi_ij = delta_ij - #arrows(i -> j), vertices numbered from 0; cycles are rejected */
EulerGram quiver_gram(int vertices, const std::vector<std::pair<int, int>>& arrows);

/* right kernels of the two pairings coincide as lattices */
bool phi_pairing_check(const EulerGram& g, const EulerGram& opposite);

}  // namespace motivic

#endif
