#include "motivic/matrix.hpp"

#include <utility>

#include "motivic/errors.hpp"

namespace motivic {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows * cols) throw DimensionError("matrix entry count does not match its shape");
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionError("ragged matrix rows");
        a_.insert(a_.end(), r.begin(), r.end());
    }
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::diagonal(const std::vector<Rational>& d) {
    RatMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

void RatMatrix::require_square(const char* what) const {
    if (!is_square())
        throw DimensionError(std::string(what) + " needs a square matrix, got " + std::to_string(rows_) + "x" +
                             std::to_string(cols_));
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
    RatMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
        }
    return c;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sum shape mismatch");
    RatMatrix c = a;
    for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
    return c;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix difference shape mismatch");
    RatMatrix c = a;
    for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
    return c;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Rational RatMatrix::trace() const {
    require_square("trace");
    Rational s;
    for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, i);
    return s;
}

RatMatrix RatMatrix::inverse() const {
    require_square("inverse");
    const std::size_t n = rows_;
    RatMatrix a = *this, inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col).is_zero()) ++piv;
        if (piv == n) throw NotInvertibleError("matrix is singular");
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        Rational s = Rational(1) / a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) *= s;
            inv(col, j) *= s;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col).is_zero()) continue;
            Rational f = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

std::size_t RatMatrix::rank() const {
    RatMatrix a = *this;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
        std::size_t piv = r;
        while (piv < rows_ && a(piv, col).is_zero()) ++piv;
        if (piv == rows_) continue;
        for (std::size_t j = 0; j < cols_; ++j) std::swap(a(piv, j), a(r, j));
        for (std::size_t i = r + 1; i < rows_; ++i) {
            if (a(i, col).is_zero()) continue;
            Rational f = a(i, col) / a(r, col);
            for (std::size_t j = col; j < cols_; ++j) a(i, j) -= f * a(r, j);
        }
        ++r;
    }
    return r;
}

RatMatrix RatMatrix::power(unsigned k) const {
    require_square("power");
    RatMatrix result = identity(rows_), base = *this;
    while (k > 0) {
        if (k & 1u) result = result * base;
        k >>= 1u;
        if (k) base = base * base;
    }
    return result;
}

Rational det(const RatMatrix& m) {
    if (!m.is_square()) throw DimensionError("determinant needs a square matrix");
    const std::size_t n = m.rows();
    RatMatrix a = m;
    Rational d(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col).is_zero()) ++piv;
        if (piv == n) return {};
        if (piv != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(a(piv, j), a(col, j));
            d = -d;
        }
        d *= a(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a(i, col).is_zero()) continue;
            Rational f = a(i, col) / a(col, col);
            for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
        }
    }
    return d;
}

/* Similarity reduction to upper Hessenberg form, then the standard
 * three-term recurrence on leading principal blocks. */
Polynomial char_poly(const RatMatrix& m) {
    if (!m.is_square()) throw DimensionError("characteristic polynomial needs a square matrix");
    const std::size_t n = m.rows();
    RatMatrix h = m;
    for (std::size_t k = 1; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && h(piv, k - 1).is_zero()) ++piv;
        if (piv == n) continue;
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(h(piv, j), h(k, j));
            for (std::size_t i = 0; i < n; ++i) std::swap(h(i, piv), h(i, k));
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            if (h(i, k - 1).is_zero()) continue;
            Rational u = h(i, k - 1) / h(k, k - 1);
            for (std::size_t j = 0; j < n; ++j) h(i, j) -= u * h(k, j);
            for (std::size_t r = 0; r < n; ++r) h(r, k) += u * h(r, i);
        }
    }
    std::vector<Polynomial> p(n + 1);
    p[0] = Polynomial::constant(1);
    const Polynomial t = Polynomial::t();
    for (std::size_t k = 1; k <= n; ++k) {
        p[k] = (t - Polynomial::constant(h(k - 1, k - 1))) * p[k - 1];
        Rational prod(1);
        for (std::size_t i = k - 1; i >= 1; --i) {
            prod *= h(i, i - 1);
            if (prod.is_zero()) break;
            p[k] -= (prod * h(i - 1, k - 1)) * p[i - 1];
        }
    }
    return p[n];
}

Polynomial reversed_char_poly(const RatMatrix& m) {
    Polynomial cp = char_poly(m);
    return cp.reversed(static_cast<int>(m.rows()));
}

RatMatrix kronecker(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t s = 0; s < b.cols(); ++s) k(i * b.rows() + r, j * b.cols() + s) = a(i, j) * b(r, s);
        }
    return k;
}

RatMatrix block_diagonal(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

RatMatrix companion(const Polynomial& monic) {
    if (monic.is_zero() || !monic.leading().is_one()) throw PreconditionError("companion matrix needs a monic polynomial");
    const auto n = static_cast<std::size_t>(monic.degree());
    RatMatrix c(n, n);
    for (std::size_t i = 1; i < n; ++i) c(i, i - 1) = 1;
    for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = -monic.coeff(static_cast<int>(i));
    return c;
}

}  // namespace motivic
