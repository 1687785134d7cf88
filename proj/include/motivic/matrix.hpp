#ifndef MOTIVIC_MATRIX_HPP
#define MOTIVIC_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "motivic/polynomial.hpp"
#include "motivic/rational.hpp"

namespace motivic {

/* Dense row-major matrix over Q. 0x0 matrices are legal everywhere. */
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);
    RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
    RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RatMatrix identity(std::size_t n);
    static RatMatrix diagonal(const std::vector<Rational>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    const std::vector<Rational>& entries() const { return a_; }

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    RatMatrix transpose() const;
    Rational trace() const;
    /* throws NotInvertibleError when singular */
    RatMatrix inverse() const;
    std::size_t rank() const;
    RatMatrix power(unsigned k) const;

private:
    void require_square(const char* what) const;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

/* det(t I - m), monic of degree n */
Polynomial char_poly(const RatMatrix& m);
/* det(I - t m), constant term 1 */
Polynomial reversed_char_poly(const RatMatrix& m);
Rational det(const RatMatrix& m);

RatMatrix kronecker(const RatMatrix& a, const RatMatrix& b);
RatMatrix block_diagonal(const RatMatrix& a, const RatMatrix& b);

/* companion matrix of a monic polynomial (last column carries -coefficients) */
RatMatrix companion(const Polynomial& monic);

}  // namespace motivic

#endif
