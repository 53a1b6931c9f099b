#include <gtest/gtest.h>

#include "gformlab/error.hpp"
#include "gformlab/gforms.hpp"
#include "oracle.hpp"

using namespace gformlab;

namespace {

RatMatrix rat(std::size_t n, std::vector<long> v) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = v[i * n + j];
  return m;
}

// Oracle: brute-force box enumeration.
std::vector<std::vector<mpz_class>> brute(const RatMatrix& g, const mpq_class& bound, long box) {
  const std::size_t n = g.rows();
  std::vector<long> x(n, -box);
  std::vector<std::vector<mpz_class>> out;
  while (true) {
    mpq_class q = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) q += g(i, j) * x[i] * x[j];
    if (q <= bound) out.emplace_back(x.begin(), x.end());
    std::size_t i = n;
    while (i > 0 && x[i - 1] == box) x[--i] = -box;
    if (i == 0) break;
    ++x[i - 1];
  }
  return out;
}

}  // namespace

TEST(ShortVectors, AgainstBruteForce) {
  // A2 root lattice scaled, and a skewed ternary form.
  const RatMatrix a2 = rat(2, {2, -1, -1, 2});
  EXPECT_EQ(short_vectors(a2, 2), brute(a2, 2, 3));
  EXPECT_EQ(short_vectors(a2, 2).size(), 7u);  // zero and six roots
  const RatMatrix t = rat(3, {5, -2, -2, -2, 5, -2, -2, -2, 5});
  EXPECT_EQ(short_vectors(t, 12), brute(t, 12, 4));
  RatMatrix q = rat(2, {1, 0, 0, 3});
  q(0, 1) = q(1, 0) = mpq_class(1, 2);
  EXPECT_EQ(short_vectors(q, 5), brute(q, 5, 4));
}

TEST(ShortVectors, RejectsIndefinite) {
  EXPECT_FALSE(is_positive_definite(rat(2, {1, 2, 2, 1})));
  EXPECT_TRUE(is_positive_definite(rat(2, {2, -1, -1, 2})));
  EXPECT_THROW(short_vectors(rat(2, {1, 2, 2, 1}), 3), DomainError);
}

TEST(GForm, StandardFormWitnessesAreSignedGroupElements) {
  for (std::int64_t n : {3, 5, 7}) {
    const GForm f = standard_gform(FiniteAbelianGroup({n}));
    EXPECT_TRUE(is_g_invariant(f));
    const auto w = find_self_dual_generator(f);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->coords[0], 1);
    for (std::size_t i = 1; i < w->coords.size(); ++i) EXPECT_EQ(w->coords[i], 0);
    // Both signs of every group element pass.
    EXPECT_EQ(w->norm_one_vectors, static_cast<std::size_t>(2 * n));
    EXPECT_EQ(w->multiplicity, static_cast<std::size_t>(2 * n));
  }
}

TEST(GForm, WitnessesForA) {
  struct Case {
    std::int64_t p, f;
    std::size_t multiplicity;
  };
  for (const Case c : {Case{3, 7, 6}, Case{3, 13, 6}, Case{3, 19, 6}, Case{5, 11, 10}}) {
    const HomToG h(PeriodField::build(c.p, c.f), 1);
    const GForm form = gform_from_A(h);
    EXPECT_TRUE(is_g_invariant(form));
    EXPECT_EQ(determinant(form.gram), 1);
    const auto w = find_self_dual_generator(form);
    ASSERT_TRUE(w.has_value()) << h.field->name();
    EXPECT_TRUE(verify_witness(form, w->coords));
    EXPECT_EQ(w->multiplicity, c.multiplicity);
    const FieldVector a = to_field(form, w->coords);
    EXPECT_TRUE(is_self_dual_generator_of_A(h, a));
    EXPECT_EQ(*to_lattice(form, a), w->coords);
  }
}

TEST(GForm, FrozenWitnessElements) {
  const HomToG h7(PeriodField::build(3, 7), 1);
  EXPECT_EQ(*self_dual_generator_of_A(h7), (FieldVector{mpq_class(4, 7), mpq_class(1, 7), mpq_class(2, 7)}));
  const HomToG h13(PeriodField::build(3, 13), 1);
  EXPECT_EQ(*self_dual_generator_of_A(h13), (FieldVector{mpq_class(6, 13), mpq_class(5, 13), mpq_class(2, 13)}));
}

TEST(GForm, RingOfIntegersIsOutsideTheSearchRegime) {
  const HomToG h(PeriodField::build(3, 7), 1);
  const GForm o = gform_from_ring_of_integers(h);
  EXPECT_EQ(determinant(o.gram), 49);
  EXPECT_THROW(find_self_dual_generator(o), DomainError);
}

TEST(GForm, VerifyWitnessRejectsBadVectors) {
  const GForm f = standard_gform(FiniteAbelianGroup({3}));
  EXPECT_FALSE(verify_witness(f, {1, 1, 0}));
  EXPECT_FALSE(verify_witness(f, {0, 0, 0}));
  EXPECT_TRUE(verify_witness(f, {0, -1, 0}));
}

TEST(ResolvendLaws, InverseLaw) {
  for (std::int64_t f : {7, 13}) {
    const auto res = verify_inverse_law(HomToG(PeriodField::build(3, f), 1));
    EXPECT_TRUE(res.passed);
    EXPECT_TRUE(res.inverse_equals_witness);
  }
}

TEST(ResolvendLaws, WeakMultiplicativity) {
  const auto res =
      verify_weak_multiplicativity(HomToG(PeriodField::build(3, 7), 1), HomToG(PeriodField::build(3, 13), 1));
  EXPECT_TRUE(res.passed);
  EXPECT_EQ(res.composite.field->conductor(), 91);
}

TEST(Isometry, TriState) {
  const HomToG h7(PeriodField::build(3, 7), 1), h13(PeriodField::build(3, 13), 1);
  const GForm std3 = standard_gform(FiniteAbelianGroup({3}));
  EXPECT_EQ(isometry_equivalence(gform_from_A(h7), std3), Isometry::True);
  EXPECT_EQ(isometry_equivalence(gform_from_A(h7), gform_from_A(h13)), Isometry::True);
  EXPECT_EQ(isometry_equivalence(gform_from_ring_of_integers(h7), std3), Isometry::False);  // determinants differ
  EXPECT_EQ(isometry_equivalence(gform_from_ring_of_integers(h7), gform_from_ring_of_integers(h13)),
            Isometry::False);
  EXPECT_EQ(isometry_equivalence(std3, standard_gform(FiniteAbelianGroup({5}))), Isometry::False);
  // Identical forms are isometric without any search.
  EXPECT_EQ(isometry_equivalence(gform_from_ring_of_integers(h7), gform_from_ring_of_integers(h7)), Isometry::True);
  // Same Gram, twisted action, outside the unimodular regime.
  EXPECT_EQ(isometry_equivalence(gform_from_ring_of_integers(h7), gform_from_ring_of_integers(h7.inverse())),
            Isometry::Inconclusive);
  EXPECT_EQ(to_string(Isometry::Inconclusive), "inconclusive");
}
