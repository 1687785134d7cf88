#ifndef MOTIVIC_INTEGER_LATTICE_HPP
#define MOTIVIC_INTEGER_LATTICE_HPP

#include <cstddef>
#include <vector>

#include "motivic/rational.hpp"

namespace motivic {

using IntVector = std::vector<BigInt>;
/* row-major list of rows */
using IntMatrix = std::vector<IntVector>;

struct Echelon {
    IntMatrix h;  // u * input, row echelon, positive pivots, entries above pivots reduced
    IntMatrix u;  // unimodular
    std::size_t rank = 0;
};

/* unimodular row reduction; columns = number of columns of the input (needed when it has no rows) */
Echelon row_echelon(const IntMatrix& m, std::size_t columns);

/* row Hermite normal form of the lattice spanned by the rows (zero rows dropped) */
IntMatrix hermite_basis(const IntMatrix& rows, std::size_t columns);

/* Hermite-reduced Z-basis of {v : a v = 0} */
IntMatrix integer_kernel(const IntMatrix& a, std::size_t columns);

/* invariant factors (nonzero Smith diagonal entries, in divisibility order) */
std::vector<BigInt> smith_diagonal(IntMatrix a);

/* (L (x) Q) intersected with Z^n, as a Hermite basis */
IntMatrix saturate(const IntMatrix& rows, std::size_t columns);

IntMatrix transpose(const IntMatrix& a, std::size_t columns);

}  // namespace motivic

#endif
