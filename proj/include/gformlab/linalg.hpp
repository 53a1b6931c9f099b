#pragma once

// Dense exact linear algebra over Z and Q (and any exact field type that
// provides the free functions used by the templates below).

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gformlab/error.hpp"

namespace gformlab {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n, const T& one = T(1)) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    if (rows.empty()) return Matrix();
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw DomainError("ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static Matrix from_cols(const std::vector<std::vector<T>>& cols) {
    return from_rows(cols).transpose();
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != cols_) throw DomainError("matrix-vector dimension mismatch");
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<mpz_class>;
using RatMatrix = Matrix<mpq_class>;
using IntVector = std::vector<mpz_class>;
using RatVector = std::vector<mpq_class>;

RatMatrix to_rational(const IntMatrix& m);
/// Exact conversion; throws DomainError if an entry is not an integer.
IntMatrix to_integer(const RatMatrix& m);
bool is_integral(const RatMatrix& m);
bool is_integer(const mpq_class& q);

/// Row Hermite normal form of the lattice spanned by the rows of `gens`
/// (upper triangular, positive pivots, entries above each pivot reduced into
/// [0, pivot)). Zero rows are dropped, so the result has rank-many rows.
IntMatrix hnf_rows(const IntMatrix& gens);

/// Smith normal form with unimodular transforms: left * a * right = diagonal.
/// Pivots are chosen as the entry of least absolute value, ties broken by
/// (row, column) order, so the transforms are deterministic.
struct SmithForm {
  IntMatrix left;
  IntMatrix diagonal;
  IntMatrix right;
  std::size_t rank = 0;
  /// Nonzero diagonal entries d_1 | d_2 | ... (absolute values).
  std::vector<mpz_class> invariants() const;
};
SmithForm smith_normal_form(const IntMatrix& a);

/// Basis (as HNF rows) of {x in Z^n : a x = 0}.
IntMatrix integer_kernel(const IntMatrix& a);

mpq_class determinant(RatMatrix m);
mpz_class determinant(const IntMatrix& m);

/// Exact inverse; std::nullopt if singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);

/// Dual lattice {x : b . x in Z for every row b}, where the rows of `basis`
/// form a basis of a full-rank lattice. Returned as basis columns.
RatMatrix dual_basis_columns(const RatMatrix& basis_rows);

std::string to_string(const mpq_class& q);
std::string to_string(const mpz_class& z);

inline bool field_is_zero(const mpq_class& q) { return sgn(q) == 0; }
inline mpq_class field_inverse(const mpq_class& q) {
  if (sgn(q) == 0) throw DivisionByZero("rational division by zero");
  return mpq_class(1) / q;
}

/// Gaussian elimination over an exact field F. F must provide:
///   bool field_is_zero(const F&);  F field_inverse(const F&);
/// Returns a solution x of a x = b, or nullopt if a is singular.
template <class F>
std::optional<std::vector<F>> solve_square(Matrix<F> a, std::vector<F> b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw DomainError("solve_square: dimension mismatch");
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && field_is_zero(a(piv, c))) ++piv;
    if (piv == n) return std::nullopt;
    a.swap_rows(piv, c);
    std::swap(b[piv], b[c]);
    const F inv = field_inverse(a(c, c));
    for (std::size_t j = c; j < n; ++j) a(c, j) = a(c, j) * inv;
    b[c] = b[c] * inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || field_is_zero(a(r, c))) continue;
      const F factor = a(r, c);
      for (std::size_t j = c; j < n; ++j) a(r, j) = a(r, j) - factor * a(c, j);
      b[r] = b[r] - factor * b[c];
    }
  }
  return b;
}


}  // namespace gformlab
