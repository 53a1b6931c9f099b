#include "gformlab/linalg.hpp"

#include <algorithm>

namespace gformlab {
namespace {

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

void row_axpy(IntMatrix& m, std::size_t target, std::size_t source, const mpz_class& factor) {
  // row_target -= factor * row_source
  if (factor == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (m(source, j) != 0) m(target, j) -= factor * m(source, j);
  }
}

void col_axpy(IntMatrix& m, std::size_t target, std::size_t source, const mpz_class& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m(i, source) != 0) m(i, target) -= factor * m(i, source);
  }
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

}  // namespace

bool is_integer(const mpq_class& q) { return q.get_den() == 1; }

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = mpq_class(m(i, j));
  return out;
}

bool is_integral(const RatMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_integer(m(i, j))) return false;
  return true;
}

IntMatrix to_integer(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!is_integer(m(i, j))) throw DomainError("matrix entry is not an integer");
      out(i, j) = m(i, j).get_num();
    }
  return out;
}

IntMatrix hnf_rows(const IntMatrix& gens) {
  IntMatrix a = gens;
  const std::size_t m = a.rows(), n = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    bool have_pivot = false;
    while (true) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i) {
        if (a(i, c) == 0) continue;
        if (best == m || abs(a(i, c)) < abs(a(best, c))) best = i;
      }
      if (best == m) break;
      have_pivot = true;
      a.swap_rows(r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (a(i, c) == 0) continue;
        row_axpy(a, i, r, floor_div(a(i, c), a(r, c)));
        if (a(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (!have_pivot) continue;
    if (a(r, c) < 0) negate_row(a, r);
    for (std::size_t i = 0; i < r; ++i) row_axpy(a, i, r, floor_div(a(i, c), a(r, c)));
    ++r;
  }
  IntMatrix out(r, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = a(i, j);
  return out;
}

std::vector<mpz_class> SmithForm::invariants() const {
  std::vector<mpz_class> out;
  for (std::size_t i = 0; i < rank; ++i) out.push_back(abs(diagonal(i, i)));
  return out;
}

SmithForm smith_normal_form(const IntMatrix& input) {
  const std::size_t m = input.rows(), n = input.cols();
  IntMatrix s = input;
  IntMatrix left = IntMatrix::identity(m);
  IntMatrix right = IntMatrix::identity(n);
  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    bool any = false;
    while (true) {
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (s(i, j) == 0) continue;
          if (pi == m || abs(s(i, j)) < abs(s(pi, pj))) {
            pi = i;
            pj = j;
          }
        }
      if (pi == m) break;
      any = true;
      s.swap_rows(t, pi);
      left.swap_rows(t, pi);
      s.swap_cols(t, pj);
      right.swap_cols(t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (s(i, t) == 0) continue;
        const mpz_class q = floor_div(s(i, t), s(t, t));
        row_axpy(s, i, t, q);
        row_axpy(left, i, t, q);
        if (s(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (s(t, j) == 0) continue;
        const mpz_class q = floor_div(s(t, j), s(t, t));
        col_axpy(s, j, t, q);
        col_axpy(right, j, t, q);
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j) {
          if (s(i, j) % s(t, t) != 0) {
            row_axpy(s, t, i, mpz_class(-1));
            row_axpy(left, t, i, mpz_class(-1));
            divides = false;
            break;
          }
        }
      if (divides) break;
    }
    if (!any) break;
    if (s(t, t) < 0) {
      negate_row(s, t);
      negate_row(left, t);
    }
  }
  SmithForm out{std::move(left), std::move(s), std::move(right), 0};
  for (std::size_t i = 0; i < std::min(m, n); ++i)
    if (out.diagonal(i, i) != 0) out.rank = i + 1;
  return out;
}

IntMatrix integer_kernel(const IntMatrix& a) {
  const SmithForm snf = smith_normal_form(a);
  const std::size_t n = a.cols();
  if (snf.rank == n) return IntMatrix(0, n);
  IntMatrix basis(n - snf.rank, n);
  for (std::size_t k = snf.rank; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) basis(k - snf.rank, i) = snf.right(i, k);
  return hnf_rows(basis);
}

mpq_class determinant(RatMatrix m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw DomainError("determinant of non-square matrix");
  mpq_class det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && sgn(m(piv, c)) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      m.swap_rows(piv, c);
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(m(r, c)) == 0) continue;
      const mpq_class f = m(r, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

mpz_class determinant(const IntMatrix& m) {
  // Bareiss fraction-free elimination.
  const std::size_t n = m.rows();
  if (m.cols() != n) throw DomainError("determinant of non-square matrix");
  if (n == 0) return 1;
  IntMatrix a = m;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      a.swap_rows(piv, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = a(i, j) * a(k, k);
        t -= a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::optional<RatMatrix> inverse(const RatMatrix& input) {
  const std::size_t n = input.rows();
  if (input.cols() != n) throw DomainError("inverse of non-square matrix");
  RatMatrix a = input;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && sgn(a(piv, c)) == 0) ++piv;
    if (piv == n) return std::nullopt;
    a.swap_rows(piv, c);
    inv.swap_rows(piv, c);
    const mpq_class p = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= p;
      inv(c, j) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || sgn(a(r, c)) == 0) continue;
      const mpq_class f = a(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

RatMatrix dual_basis_columns(const RatMatrix& basis_rows) {
  auto inv = inverse(basis_rows);
  if (!inv) throw DomainError("dual of a degenerate lattice");
  return *inv;
}

std::string to_string(const mpq_class& q) { return q.get_str(); }
std::string to_string(const mpz_class& z) { return z.get_str(); }

}  // namespace gformlab
