#include <gtest/gtest.h>

#include "gformlab/abelian_groups.hpp"
#include "gformlab/error.hpp"
#include "oracle.hpp"

using namespace gformlab;

TEST(AbelianGroups, ParseAndInvariants) {
  const auto g = FiniteAbelianGroup::parse("3,9");
  EXPECT_EQ(g.order(), 27);
  EXPECT_EQ(g.exponent(), 9);
  EXPECT_EQ(g.rank(), 2u);
  EXPECT_TRUE(g.is_odd());
  EXPECT_EQ(FiniteAbelianGroup::parse("1").order(), 1);
}

TEST(AbelianGroups, RejectsBadSpecs) {
  EXPECT_THROW(FiniteAbelianGroup::parse("9,3"), DomainError);
  EXPECT_THROW(FiniteAbelianGroup::parse("3,5"), DomainError);
  EXPECT_THROW(FiniteAbelianGroup::parse("0"), DomainError);
  EXPECT_THROW(FiniteAbelianGroup::parse("x"), DomainError);
  EXPECT_THROW(FiniteAbelianGroup::parse(""), DomainError);
}

TEST(AbelianGroups, CyclicEnumerationOrder) {
  const auto g = FiniteAbelianGroup::parse("3");
  const auto els = enumerate(g);
  ASSERT_EQ(els.size(), 3u);
  for (std::int64_t i = 0; i < 3; ++i) EXPECT_EQ(els[static_cast<std::size_t>(i)].exponents, std::vector<std::int64_t>{i});
}

TEST(AbelianGroups, MixedRadixOrderAndIndex) {
  const auto g = FiniteAbelianGroup::parse("3,3");
  const auto els = enumerate(g);
  ASSERT_EQ(els.size(), 9u);
  EXPECT_EQ(els[1].exponents, (std::vector<std::int64_t>{0, 1}));
  EXPECT_EQ(els[3].exponents, (std::vector<std::int64_t>{1, 0}));
  for (std::size_t i = 0; i < els.size(); ++i) EXPECT_EQ(g.index_of(els[i]), i);
}

TEST(AbelianGroups, GroupLaws) {
  const auto g = FiniteAbelianGroup::parse("3,9");
  for (const auto& s : enumerate(g)) {
    EXPECT_EQ(g.multiply(s, g.inverse(s)), g.identity());
    EXPECT_EQ(g.power(s, g.element_order(s)), g.identity());
    EXPECT_EQ(g.exponent() % g.element_order(s), 0);
    for (const auto& t : enumerate(g)) EXPECT_EQ(g.multiply(s, t), g.multiply(t, s));
  }
}

TEST(AbelianGroups, CharacterValuesMatchComplexProduct) {
  const auto g = FiniteAbelianGroup::parse("3,9");
  const auto m = g.exponent();
  for (const auto& chi : enumerate_characters(g))
    for (const auto& s : enumerate(g)) {
      // Oracle: product of the factor characters exp(2 pi i a e / d).
      oracle::cd v = 1;
      for (std::size_t i = 0; i < g.rank(); ++i) {
        const auto d = g.invariant_factors()[i];
        v *= oracle::root(d, chi.exponents[i] * s.exponents[i]);
      }
      EXPECT_TRUE(oracle::near(v, oracle::root(m, character_value_exponent(g, chi, s))));
    }
}

TEST(AbelianGroups, GaloisTwist) {
  const auto g = FiniteAbelianGroup::parse("7");
  const auto s = g.element({1});
  EXPECT_EQ(galois_twist(g, s, 3, 1), g.element({3}));
  EXPECT_EQ(galois_twist(g, s, 3, -1), g.element({5}));  // 3 * 5 = 15 = 1 mod 7
  EXPECT_EQ(galois_twist(g, s, 3, 0), s);
}

TEST(NumberTheory, AgainstBruteForce) {
  for (std::int64_t n = 1; n <= 200; ++n) {
    std::int64_t phi = 0;
    for (std::int64_t a = 1; a <= n; ++a) phi += oracle::gcd(a, n) == 1;
    EXPECT_EQ(euler_phi(n), phi) << n;
    bool prime = n > 1;
    for (std::int64_t d = 2; d * d <= n; ++d) prime = prime && n % d != 0;
    EXPECT_EQ(is_prime(n), prime) << n;
    if (prime) EXPECT_EQ(primitive_root(n), oracle::least_primitive_root(n)) << n;
  }
  EXPECT_EQ(prime_factors(91), (std::vector<std::int64_t>{7, 13}));
  EXPECT_TRUE(is_squarefree(91));
  EXPECT_FALSE(is_squarefree(63));
  EXPECT_EQ(inverse_mod(3, 7), 5);
  EXPECT_EQ(power_mod(2, 10, 1000), 24);
  EXPECT_EQ(mod(-3, 7), 4);
}

TEST(NumberTheory, UnitGroupClosure) {
  for (std::int64_t m : {7, 9, 15, 63}) {
    const auto all = subgroup_closure(unit_group_generators(m), m);
    EXPECT_EQ(static_cast<std::int64_t>(all.size()), euler_phi(m)) << m;
  }
}
