#include <gtest/gtest.h>

#include "gformlab/linalg.hpp"

using namespace gformlab;

namespace {

IntMatrix ints(std::size_t r, std::size_t c, std::vector<long> v) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = v[i * c + j];
  return m;
}

// Rows of `a` lie in the Z-span of the rows of `b` (b square, full rank).
bool rows_in_span(const IntMatrix& a, const IntMatrix& b) {
  const auto bi = inverse(to_rational(b));
  if (!bi) return false;
  return is_integral(to_rational(a) * *bi);
}

}  // namespace

TEST(Linalg, HnfFrozen) {
  // Rows (6,4), (4,6), (2,2) span 2Z x 2Z.
  EXPECT_EQ(hnf_rows(ints(3, 2, {6, 4, 4, 6, 2, 2})), ints(2, 2, {2, 0, 0, 2}));
  EXPECT_EQ(hnf_rows(ints(2, 3, {0, 0, 0, 0, 0, 0})).rows(), 0u);
}

TEST(Linalg, HnfShapeAndLattice) {
  const IntMatrix a = ints(4, 4, {3, 3, 1, 4, 0, 1, 0, 0, 0, 0, 19, 16, 0, 0, 0, 3});
  const IntMatrix h = hnf_rows(a);
  ASSERT_EQ(h.rows(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_GT(h(i, i), 0);
    for (std::size_t j = 0; j < i; ++j) EXPECT_EQ(h(i, j), 0);
    for (std::size_t k = 0; k < i; ++k) {
      EXPECT_GE(h(k, i), 0);
      EXPECT_LT(h(k, i), h(i, i));
    }
  }
  EXPECT_TRUE(rows_in_span(a, h));
  EXPECT_TRUE(rows_in_span(h, a));
  EXPECT_EQ(abs(determinant(h)), 171);
}

TEST(Linalg, SmithInvariantsFrozen) {
  // Invariant factors from an independent computer-algebra run: 2, 6, 12.
  const IntMatrix a = ints(3, 3, {2, 4, 4, -6, 6, 12, 10, -4, -16});
  const SmithForm s = smith_normal_form(a);
  EXPECT_EQ(s.invariants(), (std::vector<mpz_class>{2, 6, 12}));
  EXPECT_EQ(s.left * a * s.right, s.diagonal);
  EXPECT_EQ(abs(determinant(s.left)), 1);
  EXPECT_EQ(abs(determinant(s.right)), 1);
}

TEST(Linalg, KernelAndDeterminant) {
  const IntMatrix a = ints(1, 3, {1, 1, 1});
  const IntMatrix k = integer_kernel(a);
  EXPECT_EQ(k.rows(), 2u);
  EXPECT_TRUE((a * k.transpose()) == IntMatrix(1, 2, 0));
  RatMatrix q(2, 2);
  q(0, 0) = mpq_class(1, 2);
  q(0, 1) = 3;
  q(1, 0) = mpq_class(-1, 3);
  q(1, 1) = 4;
  EXPECT_EQ(determinant(q), mpq_class(3));
  EXPECT_EQ(*inverse(q) * q, RatMatrix::identity(2));
  RatMatrix singular(2, 2, mpq_class(1));
  EXPECT_FALSE(inverse(singular).has_value());
}

TEST(Linalg, SolveSquare) {
  Matrix<mpq_class> a(2, 2);
  a(0, 0) = 2;
  a(0, 1) = 1;
  a(1, 0) = 1;
  a(1, 1) = 3;
  const auto x = solve_square(a, std::vector<mpq_class>{1, 2});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0], mpq_class(1, 5));
  EXPECT_EQ((*x)[1], mpq_class(3, 5));
}
