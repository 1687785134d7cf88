#include "motivic/integer_lattice.hpp"

#include <algorithm>
#include <utility>

namespace motivic {

namespace {

/* rows[i] = a rows[i] + b rows[j], rows[j] = c rows[i] + d rows[j] */
void combine(IntMatrix& m, std::size_t i, std::size_t j, const BigInt& a, const BigInt& b, const BigInt& c,
             const BigInt& d) {
    for (std::size_t k = 0; k < m[i].size(); ++k) {
        const BigInt x = m[i][k], y = m[j][k];
        m[i][k] = a * x + b * y;
        m[j][k] = c * x + d * y;
    }
}

void axpy(IntVector& target, const BigInt& factor, const IntVector& source) {
    if (factor == 0) return;
    for (std::size_t k = 0; k < target.size(); ++k) target[k] -= factor * source[k];
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

IntMatrix transpose(const IntMatrix& a, std::size_t columns) {
    IntMatrix t(columns, IntVector(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < columns; ++j) t[j][i] = a[i][j];
    return t;
}

Echelon row_echelon(const IntMatrix& m, std::size_t columns) {
    Echelon e;
    e.h = m;
    const std::size_t rows = m.size();
    e.u.assign(rows, IntVector(rows, 0));
    for (std::size_t i = 0; i < rows; ++i) e.u[i][i] = 1;
    std::size_t r = 0;
    for (std::size_t col = 0; col < columns && r < rows; ++col) {
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (e.h[i][col] == 0) continue;
            const BigInt a = e.h[r][col], b = e.h[i][col];
            BigInt g, x, y;
            mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            const BigInt c = -b / g, d = a / g;
            combine(e.h, r, i, x, y, c, d);
            combine(e.u, r, i, x, y, c, d);
        }
        if (e.h[r][col] == 0) continue;
        if (e.h[r][col] < 0) {
            for (auto& x : e.h[r]) x = -x;
            for (auto& x : e.u[r]) x = -x;
        }
        for (std::size_t i = 0; i < r; ++i) {
            const BigInt q = floor_div(e.h[i][col], e.h[r][col]);
            axpy(e.h[i], q, e.h[r]);
            axpy(e.u[i], q, e.u[r]);
        }
        ++r;
    }
    e.rank = r;
    return e;
}

IntMatrix hermite_basis(const IntMatrix& rows, std::size_t columns) {
    auto e = row_echelon(rows, columns);
    e.h.resize(e.rank);
    return e.h;
}

IntMatrix integer_kernel(const IntMatrix& a, std::size_t columns) {
    // U a^T = H; rows of U past the rank annihilate a^T
    const auto e = row_echelon(transpose(a, columns), a.size());
    IntMatrix basis(e.u.begin() + static_cast<std::ptrdiff_t>(e.rank), e.u.end());
    return hermite_basis(basis, columns);
}

IntMatrix saturate(const IntMatrix& rows, std::size_t columns) {
    return integer_kernel(integer_kernel(rows, columns), columns);
}

std::vector<BigInt> smith_diagonal(IntMatrix a) {
    const std::size_t m = a.size();
    const std::size_t n = m ? a[0].size() : 0;
    std::vector<BigInt> diag;
    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        // bring the smallest nonzero entry of the trailing block to (t, t)
        auto place_min = [&](bool whole_block) {
            std::size_t bi = m, bj = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    if (!whole_block && i != t && j != t) continue;
                    if (a[i][j] == 0) continue;
                    if (bi == m || abs(a[i][j]) < abs(a[bi][bj])) {
                        bi = i;
                        bj = j;
                    }
                }
            if (bi == m) return false;
            std::swap(a[t], a[bi]);
            for (auto& row : a) std::swap(row[t], row[bj]);
            return true;
        };
        if (!place_min(true)) break;
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (a[i][t] == 0) continue;
                axpy(a[i], floor_div(a[i][t], a[t][t]), a[t]);
                if (a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a[t][j] == 0) continue;
                const BigInt q = floor_div(a[t][j], a[t][t]);
                for (std::size_t i = 0; i < m; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) clean = false;
            }
            if (!clean) {
                place_min(false);
                continue;
            }
            bool divisible = true;
            for (std::size_t i = t + 1; i < m && divisible; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        for (std::size_t k = 0; k < n; ++k) a[t][k] += a[i][k];
                        divisible = false;
                        break;
                    }
            if (divisible) break;
        }
        diag.push_back(abs(a[t][t]));
    }
    return diag;
}

}  // namespace motivic
