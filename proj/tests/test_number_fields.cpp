#include <gtest/gtest.h>

#include "gformlab/error.hpp"
#include "gformlab/number_fields.hpp"
#include "oracle.hpp"

using namespace gformlab;

namespace {

struct FrozenField {
  std::int64_t p, f, g;
  std::int64_t diag, off;            // trace matrix: diag on the diagonal, off elsewhere
  std::vector<long> minpoly;         // of eta_0, leading coefficient first
};

// From an independent numeric evaluation of the periods.
const std::vector<FrozenField> kFrozen{
    {3, 7, 3, 5, -2, {1, 1, -2, -1}},
    {3, 13, 2, 9, -4, {1, 1, -4, 1}},
    {3, 19, 2, 13, -6, {1, 1, -6, -7}},
    {3, 31, 3, 21, -10, {1, 1, -10, -8}},
    {5, 11, 2, 9, -2, {1, 1, -4, -3, 3, 1}},
};

mpz_class ipow(std::int64_t b, std::int64_t e) {
  mpz_class r = 1;
  for (std::int64_t i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

TEST(PeriodField, FrozenInvariants) {
  for (const auto& z : kFrozen) {
    const FieldPtr k = PeriodField::build(z.p, z.f);
    EXPECT_EQ(k->generator_residue(), z.g);
    const auto& t = k->trace_matrix();
    for (std::size_t i = 0; i < static_cast<std::size_t>(z.p); ++i)
      for (std::size_t j = 0; j < static_cast<std::size_t>(z.p); ++j)
        EXPECT_EQ(t(i, j), i == j ? z.diag : z.off) << k->name();
    EXPECT_EQ(k->discriminant(), ipow(z.f, z.p - 1));
    // Odd degree: norm is minus the constant term, trace minus the next coefficient.
    EXPECT_EQ(k->norm(k->period(0)), mpq_class(-z.minpoly.back())) << k->name();
    EXPECT_EQ(k->trace(k->period(0)), mpq_class(-z.minpoly[1]));
  }
}

TEST(PeriodField, PeriodsMatchOracle) {
  for (const auto& z : kFrozen) {
    const FieldPtr k = PeriodField::build(z.p, z.f);
    const auto eta = oracle::periods(z.p, z.f);
    for (std::size_t i = 0; i < eta.size(); ++i) EXPECT_TRUE(oracle::near(oracle::embed(k->periods()[i]), eta[i]));
  }
}

TEST(PeriodField, ArithmeticMatchesOracle) {
  const FieldPtr k = PeriodField::build(3, 13);
  const auto eta = oracle::periods(3, 13);
  const FieldVector a{mpq_class(1, 2), 3, -1}, b{2, mpq_class(-1, 3), 0};
  const auto ab = oracle::conjugates(eta, k->multiply(a, b));
  const auto ca = oracle::conjugates(eta, a), cb = oracle::conjugates(eta, b);
  for (std::size_t j = 0; j < 3; ++j) EXPECT_TRUE(oracle::near(ab[j], ca[j] * cb[j]));
  EXPECT_NEAR(k->trace(k->multiply(a, b)).get_d(), oracle::trace_product(eta, a, b), 1e-8);
  const auto ai = k->inverse(a);
  ASSERT_TRUE(ai.has_value());
  EXPECT_EQ(k->multiply(a, *ai), k->one());
  EXPECT_FALSE(k->inverse(k->zero()).has_value());
  EXPECT_EQ(k->sigma(k->period(0)), k->period(1));
  EXPECT_EQ(k->sigma(a, 3), a);
  // 1 = mu(f) * sum of the periods.
  EXPECT_EQ(k->one(), (FieldVector{-1, -1, -1}));
}

TEST(PeriodField, CyclotomicRoundTrip) {
  const FieldPtr k = PeriodField::build(3, 7);
  const FieldVector a{1, -2, mpq_class(3, 5)};
  const auto back = k->from_cyclotomic(k->to_cyclotomic(a));
  ASSERT_TRUE(back.has_value());
  EXPECT_EQ(*back, a);
  EXPECT_FALSE(k->from_cyclotomic(CyclotomicNumber::zeta_power(7, 1)).has_value());
  EXPECT_TRUE(k->is_integral(k->period(2)));
  EXPECT_FALSE(k->is_integral(k->scale(k->period(2), mpq_class(1, 7))));
}

TEST(PeriodField, CompositeConductor) {
  const FieldPtr k = PeriodField::build(3, 91);
  EXPECT_EQ(k->discriminant(), mpz_class(91 * 91));
  const auto o = FractionalIdeal::ring_of_integers(k);
  EXPECT_EQ(o.gram_determinant(), mpq_class(91 * 91));
}

TEST(PeriodField, RejectsBadInput) {
  EXPECT_THROW(PeriodField::build(4, 7), DomainError);
  EXPECT_THROW(PeriodField::build(3, 11), DomainError);  // 11 != 1 mod 3
  EXPECT_THROW(PeriodField::build(3, 49), DomainError);  // not squarefree
  EXPECT_THROW(PeriodField::build(3, 9), DomainError);   // wild
}

TEST(Ideals, RingOfIntegersAndPrincipal) {
  const FieldPtr k = PeriodField::build(3, 7);
  const auto o = FractionalIdeal::ring_of_integers(k);
  EXPECT_EQ(o.norm(), 1);
  EXPECT_EQ(o * o, o);
  EXPECT_EQ(o.inverse(), o);
  const auto two = FractionalIdeal::principal(k, k->rational(2));
  EXPECT_EQ(two.norm(), 8);
  EXPECT_EQ(two.inverse() * two, o);
  EXPECT_TRUE(o.contains(two));
  EXPECT_FALSE(two.contains(o));
  EXPECT_EQ(two + o, o);
  EXPECT_THROW(FractionalIdeal::from_generators(k, {k->period(0)}), DomainError);
}

TEST(Ideals, RamifiedPrimeAndDifferent) {
  for (const auto& z : kFrozen) {
    const FieldPtr k = PeriodField::build(z.p, z.f);
    const auto l = prime_above(k, z.f);
    EXPECT_EQ(l.norm(), z.f);
    EXPECT_EQ(l.pow(z.p), FractionalIdeal::principal(k, k->rational(z.f)));
    const auto d = different(k);
    EXPECT_EQ(d, l.pow(z.p - 1));
    EXPECT_EQ(d.norm(), mpq_class(ipow(z.f, z.p - 1)));
    EXPECT_EQ(d.inverse(), FractionalIdeal::ring_of_integers(k).dual());
    const auto a = sqrt_inverse_different(k);
    EXPECT_EQ(a * a, d.inverse());
    EXPECT_EQ(a.dual(), a);
    EXPECT_EQ(a.gram_determinant(), 1);
  }
}

TEST(Ideals, AForConductorSevenFrozen) {
  const FieldPtr k = PeriodField::build(3, 7);
  const auto a = sqrt_inverse_different(k);
  EXPECT_EQ(a.denominator(), 7);
  IntMatrix h(3, 3, 0);
  h(0, 0) = 1;
  h(0, 1) = 2;
  h(0, 2) = 4;
  h(1, 1) = 7;
  h(2, 2) = 7;
  EXPECT_EQ(a.hnf(), h);
  // Gram of A against the oracle trace.
  const auto eta = oracle::periods(3, 7);
  const auto basis = a.basis();
  const RatMatrix g = a.gram();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_NEAR(g(i, j).get_d(), oracle::trace_product(eta, basis[i], basis[j]), 1e-9);
}

TEST(HomToG, ActionAndInverse) {
  const FieldPtr k = PeriodField::build(3, 7);
  const HomToG h(k, 1), hinv = h.inverse();
  EXPECT_EQ(hinv.u, 2);
  const auto g = h.group();
  const auto s = g.element({1});
  const FieldVector a{1, 2, 3};
  EXPECT_EQ(h.act(s, a), k->sigma(a));
  EXPECT_EQ(hinv.act(s, a), k->sigma(a, 2));
  EXPECT_EQ(h.value(k->generator_residue()), 1);
  EXPECT_THROW(HomToG(k, 0), DomainError);
}

TEST(HomToG, ComposeFields) {
  const HomToG h1(PeriodField::build(3, 7), 1), h2(PeriodField::build(3, 13), 1);
  const HomToG c = compose_fields(h1, h2);
  EXPECT_EQ(c.field->conductor(), 91);
  EXPECT_EQ(c.value(1), 0);
  for (std::int64_t a = 1; a < 91; ++a) {
    if (oracle::gcd(a, 91) != 1) continue;
    EXPECT_EQ(c.value(a), mod(h1.value(a % 7) + h2.value(a % 13), 3)) << a;
  }
  EXPECT_THROW(compose_fields(h1, h1.inverse()), DomainError);
}
