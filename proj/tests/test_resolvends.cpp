#include <gtest/gtest.h>

#include "gformlab/error.hpp"
#include "gformlab/random.hpp"
#include "gformlab/resolvends.hpp"
#include "oracle.hpp"

using namespace gformlab;

namespace {

const FieldVector kWitness7{mpq_class(4, 7), mpq_class(1, 7), mpq_class(2, 7)};
const FieldVector kWitness13{mpq_class(6, 13), mpq_class(5, 13), mpq_class(2, 13)};

}  // namespace

TEST(Resolvend, CoefficientsAreConjugates) {
  const HomToG h(PeriodField::build(3, 7), 1);
  const FieldVector a{1, 2, -1};
  const auto r = resolvend(h, a);
  const auto g = h.group();
  for (const auto& s : enumerate(g)) {
    const auto expect = h.field->to_cyclotomic(h.act(s, a));
    EXPECT_EQ(r.coefficient(g.inverse(s)), expect);
  }
}

TEST(Resolvend, NormalBasisGenerators) {
  const HomToG h(PeriodField::build(3, 7), 1);
  EXPECT_TRUE(is_normal_basis_generator(h, h.field->period(0)));
  EXPECT_FALSE(is_normal_basis_generator(h, h.field->one()));
  EXPECT_FALSE(is_normal_basis_generator(h, h.field->zero()));
}

TEST(Resolvend, PairingIdentity) {
  Rng rng(11);
  for (std::int64_t f : {7, 13}) {
    const HomToG h(PeriodField::build(3, f), 1);
    for (int t = 0; t < 10; ++t) {
      FieldVector a(3), b(3);
      for (auto& q : a) q = rng.uniform(-5, 5);
      for (auto& q : b) q = mpq_class(rng.uniform(-5, 5), 2);
      for (auto& q : b) q.canonicalize();
      EXPECT_TRUE(resolvend_pairing_identity(h, a, b));
    }
  }
}

TEST(Resolvend, SelfDualRoutesAgree) {
  const HomToG h7(PeriodField::build(3, 7), 1), h13(PeriodField::build(3, 13), 1);
  EXPECT_TRUE(is_self_dual(h7, kWitness7));
  EXPECT_TRUE(is_self_dual(h13, kWitness13));
  EXPECT_FALSE(is_self_dual(h7, h7.field->period(0)));
  // Oracle: numeric Gram of the translates is the identity.
  const auto eta = oracle::periods(3, 7);
  for (std::int64_t i = 0; i < 3; ++i)
    for (std::int64_t j = 0; j < 3; ++j) {
      const auto si = h7.field->sigma(kWitness7, i), sj = h7.field->sigma(kWitness7, j);
      EXPECT_NEAR(oracle::trace_product(eta, si, sj), i == j ? 1.0 : 0.0, 1e-9);
    }
}

TEST(Resolvend, ReductionIsOrbitInvariant) {
  const HomToG h(PeriodField::build(3, 13), 1);
  const auto r = resolvend(h, FieldVector{1, 0, 3});
  const auto red = reduce(r);
  EXPECT_EQ(r.shifted(red.shift), red.representative);
  for (const auto& s : enumerate(h.group())) EXPECT_EQ(reduce(r.shifted(s)).representative, red.representative);
}

TEST(Resolvend, InverseResolvend) {
  const HomToG h(PeriodField::build(3, 7), 1);
  const FieldVector a{2, 1, 0};
  const AlgebraElement inv = inverse_resolvend(h, a);
  EXPECT_EQ(inv.h.u, 2);
  EXPECT_TRUE((resolvend(h, a) * resolvend(inv)).is_one());
  EXPECT_EQ(inverse_resolvend(h, kWitness7).a, kWitness7);
  EXPECT_THROW(inverse_resolvend(h, h.field->one()), DomainError);
}

TEST(Resolvend, ProductResolvendFrozen) {
  const AlgebraElement a1{HomToG(PeriodField::build(3, 7), 1), kWitness7};
  const AlgebraElement a2{HomToG(PeriodField::build(3, 13), 1), kWitness13};
  const AlgebraElement b = product_resolvend(a1, a2);
  EXPECT_EQ(b.h.field->conductor(), 91);
  EXPECT_EQ(b.a, (FieldVector{mpq_class(30, 91), mpq_class(25, 91), mpq_class(36, 91)}));
  EXPECT_TRUE(is_self_dual(b.h, b.a));
  EXPECT_THROW(product_resolvend(a1, a1), DomainError);
}

TEST(Resolvend, Valuations) {
  // zeta_3 - 2 has norm 7; it lies in the prime (7, zeta_3 - 2) only.
  const auto x = CyclotomicNumber::zeta_power(3, 1) - CyclotomicNumber(2);
  EXPECT_EQ(valuation_at(x, 7, 2), 1);
  EXPECT_EQ(valuation_at(x, 7, 4), 0);
  EXPECT_EQ(valuation_at(x * x * CyclotomicNumber(mpq_class(1, 49)), 7, 2), 0);
  EXPECT_EQ(valuation_at(x.inverse(), 7, 2), -1);
  EXPECT_EQ(valuation_at(CyclotomicNumber(mpq_class(14, 3)), 7, 2), 1);
  EXPECT_THROW(valuation_at(CyclotomicNumber(), 7, 2), DomainError);
}

TEST(Factorization, PerEmbeddingWitnesses) {
  for (auto [f, w] : {std::pair{7, kWitness7}, std::pair{13, kWitness13}}) {
    const HomToG h(PeriodField::build(3, f), 1);
    const auto res = stickelberger_factorization_check(h, w, f);
    EXPECT_TRUE(res.passed) << f;
    EXPECT_TRUE(res.l_unit);
    ASSERT_EQ(res.embeddings.size(), 2u);
    // The two primes above f see opposite valuations and opposite witnesses.
    EXPECT_EQ(res.embeddings[0].valuations, (std::vector<std::int64_t>{0, 0, -1}));
    EXPECT_EQ(res.embeddings[1].valuations, (std::vector<std::int64_t>{0, 0, 1}));
    EXPECT_EQ(res.embeddings[0].witness->exponents, std::vector<std::int64_t>{1});
    EXPECT_EQ(res.embeddings[1].witness->exponents, std::vector<std::int64_t>{2});
    ASSERT_TRUE(res.canonical_witness.has_value());
  }
}

TEST(Factorization, NonSelfDualElementFails) {
  const HomToG h(PeriodField::build(3, 7), 1);
  EXPECT_FALSE(stickelberger_factorization_check(h, h.field->period(0), 7).passed);
}

TEST(Factorization, UnramifiedSurrogate) {
  const HomToG h(PeriodField::build(3, 13), 1);
  const auto res = stickelberger_factorization_check(h, h.field->period(0), 7, false);
  EXPECT_TRUE(res.passed);
  for (const auto& e : res.embeddings)
    for (auto v : e.valuations) EXPECT_EQ(v, 0);
}

TEST(Resolvend, PastTheLevelCap) {
  // lcm(97, 3) = 291 exceeds the default cap; inversion falls back to level 97.
  const HomToG h(PeriodField::build(3, 97), 1);
  const FieldVector w{mpq_class(37, 97), mpq_class(34, 97), mpq_class(26, 97)};
  EXPECT_TRUE(is_self_dual(h, w));
  EXPECT_TRUE(is_normal_basis_generator(h, w));
  EXPECT_FALSE(is_normal_basis_generator(h, h.field->one()));
  EXPECT_EQ(inverse_resolvend(h, w).a, w);
}

TEST(Resolvend, NormalBasisRoutesAgree) {
  const HomToG h(PeriodField::build(3, 7), 1);
  const std::vector<FieldVector> xs{{1, 0, 0}, {1, 1, 1}, {2, -1, 0}, {1, 1, 0}};
  std::vector<bool> fourier_route;
  for (const auto& x : xs) fourier_route.push_back(is_normal_basis_generator(h, x));
  const auto saved = max_level();
  set_max_level(7);
  for (std::size_t i = 0; i < xs.size(); ++i) EXPECT_EQ(is_normal_basis_generator(h, xs[i]), fourier_route[i]);
  set_max_level(saved);
  EXPECT_EQ(fourier_route, (std::vector<bool>{true, false, true, true}));
}
