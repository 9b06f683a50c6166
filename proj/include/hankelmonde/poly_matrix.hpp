#pragma once

#include "hankelmonde/poly.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace hankelmonde {

/// Dense rectangular matrix with polynomial entries (a matrix polynomial).
///
/// Indices are 0-based. Matrices with zero rows or zero columns are ordinary
/// values; a product across an empty inner dimension is the zero matrix of
/// the outer shape.
class PolyMatrix {
  public:
    PolyMatrix() = default;
    /// rows x cols zero matrix.
    PolyMatrix(std::size_t rows, std::size_t cols);
    /// Row-major literal; all rows must have equal length.
    PolyMatrix(std::initializer_list<std::initializer_list<Poly>> rows);

    static PolyMatrix identity(std::size_t n);
    static PolyMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    /// Builds from row-major entries; throws ShapeMismatch if the count is wrong.
    static PolyMatrix from_entries(std::size_t rows, std::size_t cols, std::vector<Poly> entries);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }
    const std::vector<Poly>& entries() const noexcept { return entries_; }

    const Poly& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    Poly& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    /// Bounds-checked access; throws IndexOutOfRange.
    const Poly& at(std::size_t i, std::size_t j) const;
    Poly& at(std::size_t i, std::size_t j);

    PolyMatrix transpose() const;
    PolyMatrix derivative(std::size_t k = 1) const;
    PolyMatrix eval(const Rational& z0) const;
    /// Entrywise p(c z); with c = -1 this gives M(-z).
    PolyMatrix scale_argument(const Rational& c) const;
    /// Largest entry degree; -1 for the zero matrix.
    long max_degree() const noexcept;
    bool is_zero() const noexcept;
    bool is_constant() const noexcept;

    /// Copy of the nr x nc block starting at (r0, c0).
    PolyMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    /// Overwrites the block starting at (r0, c0) with m.
    void set_block(std::size_t r0, std::size_t c0, const PolyMatrix& m);

    PolyMatrix power(unsigned n) const;

    PolyMatrix& operator+=(const PolyMatrix& rhs);
    PolyMatrix& operator-=(const PolyMatrix& rhs);
    PolyMatrix& operator*=(const Rational& s);
    PolyMatrix& operator*=(const Poly& s);

    friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
    friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
    friend PolyMatrix operator-(PolyMatrix a) { return a *= Rational(-1); }
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator*(PolyMatrix a, const Rational& s) { return a *= s; }
    friend PolyMatrix operator*(const Rational& s, PolyMatrix a) { return a *= s; }
    friend PolyMatrix operator*(PolyMatrix a, const Poly& s) { return a *= s; }
    friend PolyMatrix operator*(const Poly& s, PolyMatrix a) { return a *= s; }
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Poly> entries_;
};

/// Exact product; throws ShapeMismatch when a.cols() != b.rows().
PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b);

/// Kronecker product, shape (a.rows*b.rows) x (a.cols*b.cols).
PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b);

/// k x k matrix with ones on the first superdiagonal (entries delta_{i+1,j}).
PolyMatrix shift_matrix(std::size_t k);

/// diag(0!, 1!, ..., (k-1)!).
PolyMatrix factorial_diag(std::size_t k);

/// diag(1/0!, 1/1!, ..., 1/(k-1)!).
PolyMatrix inverse_factorial_diag(std::size_t k);

PolyMatrix eval_matrix(const PolyMatrix& m, const Rational& z0);

/// Side-by-side concatenation; row counts must agree.
PolyMatrix hstack(const std::vector<PolyMatrix>& parts);
/// Vertical concatenation; column counts must agree.
PolyMatrix vstack(const std::vector<PolyMatrix>& parts);
PolyMatrix block_diag(const std::vector<PolyMatrix>& parts);

/// Product of a chain of matrices, left to right.
PolyMatrix chain(std::initializer_list<PolyMatrix> factors);

/// Multi-line debugging representation.
std::string to_string(const PolyMatrix& m);

} // namespace hankelmonde
