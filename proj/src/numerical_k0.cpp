#include "motivic/numerical_k0.hpp"

#include <algorithm>
#include <functional>

#include "motivic/errors.hpp"

namespace motivic {

EulerGram make_gram(IntMatrix chi) {
    for (std::size_t i = 0; i < chi.size(); ++i)
        if (chi[i].size() != chi.size())
            throw DimensionError("Euler gram must be square; row " + std::to_string(i) + " has " +
                                 std::to_string(chi[i].size()) + " entries");
    return {std::move(chi)};
}

IntMatrix right_kernel(const EulerGram& g) { return integer_kernel(g.chi, g.n()); }

IntMatrix left_kernel(const EulerGram& g) { return integer_kernel(transpose(g.chi, g.n()), g.n()); }

NumK0Report num_grothendieck(const EulerGram& g) {
    NumK0Report rep;
    rep.n = g.n();
    rep.left_kernel_basis = left_kernel(g);
    rep.right_kernel_basis = right_kernel(g);
    rep.kernels_agree = rep.left_kernel_basis == rep.right_kernel_basis;
    if (!rep.kernels_agree)
        rep.warnings.emplace_back("left and right kernels differ; quotient taken by the right kernel");
    const IntMatrix kernel = saturate(rep.right_kernel_basis, rep.n);
    if (kernel != rep.right_kernel_basis) rep.warnings.emplace_back("kernel lattice was saturated before quotienting");
    rep.rank = rep.n - kernel.size();
    // the orthogonal complement of a saturated lattice is saturated, so this map is onto Z^rank
    rep.quotient_basis = integer_kernel(kernel, rep.n);
    if (rep.quotient_basis.size() != rep.rank) throw NumericError("quotient rank does not match the kernel");
    rep.kernel_invariants = smith_diagonal(kernel);
    return rep;
}

EulerGram beilinson_gram(int n) {
    if (n < 0) throw PreconditionError("dimension must be nonnegative");
    const auto size = static_cast<std::size_t>(n) + 1;
    IntMatrix chi(size, IntVector(size, 0));
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = i; j < size; ++j)
            mpz_bin_uiui(chi[i][j].get_mpz_t(), static_cast<unsigned long>(n) + (j - i), static_cast<unsigned long>(n));
    return {chi};
}

EulerGram quiver_gram(int vertices, const std::vector<std::pair<int, int>>& arrows) {
    if (vertices < 0) throw ValidationError("number of vertices must be nonnegative");
    const auto n = static_cast<std::size_t>(vertices);
    std::vector<std::vector<std::size_t>> out(n);
    IntMatrix chi(n, IntVector(n, 0));
    for (std::size_t i = 0; i < n; ++i) chi[i][i] = 1;
    for (const auto& [a, b] : arrows) {
        if (a < 0 || b < 0 || a >= vertices || b >= vertices)
            throw ValidationError("arrow " + std::to_string(a) + "->" + std::to_string(b) + " leaves the vertex set");
        if (a == b) throw ValidationError("quiver has a loop at vertex " + std::to_string(a), "cyclic_quiver");
        chi[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] -= 1;
        out[static_cast<std::size_t>(a)].push_back(static_cast<std::size_t>(b));
    }
    std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
    std::function<void(std::size_t)> visit = [&](std::size_t v) {
        state[v] = 1;
        for (auto w : out[v]) {
            if (state[w] == 1) throw ValidationError("quiver has an oriented cycle through vertex " + std::to_string(w), "cyclic_quiver");
            if (state[w] == 0) visit(w);
        }
        state[v] = 2;
    };
    for (std::size_t v = 0; v < n; ++v)
        if (state[v] == 0) visit(v);
    return {chi};
}

bool phi_pairing_check(const EulerGram& g, const EulerGram& opposite) {
    if (g.n() != opposite.n())
        throw ValidationError("pairings have different ranks (" + std::to_string(g.n()) + " vs " +
                                  std::to_string(opposite.n()) + ")",
                              "dimension");
    return right_kernel(g) == right_kernel(opposite);
}

}  // namespace motivic
