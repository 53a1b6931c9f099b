#include <gtest/gtest.h>

#include "gformlab/error.hpp"
#include "gformlab/group_ring.hpp"
#include "gformlab/random.hpp"
#include "oracle.hpp"

using namespace gformlab;

namespace {

RatGroupRingElement rat(const FiniteAbelianGroup& g, std::vector<mpq_class> c) {
  return RatGroupRingElement::from_dense(g, std::move(c));
}

// Oracle product: explicit convolution over the enumerated elements.
RatGroupRingElement convolve(const RatGroupRingElement& a, const RatGroupRingElement& b) {
  const auto& g = a.group();
  std::vector<mpq_class> out(a.coefficients().size(), 0);
  const auto els = enumerate(g);
  for (std::size_t i = 0; i < els.size(); ++i)
    for (std::size_t j = 0; j < els.size(); ++j)
      out[g.index_of(g.multiply(els[i], els[j]))] += a.coefficients()[i] * b.coefficients()[j];
  return rat(g, out);
}

}  // namespace

TEST(GroupRing, MultiplicationIsConvolution) {
  const auto g = FiniteAbelianGroup::parse("3,3");
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    std::vector<mpq_class> a, b;
    for (int i = 0; i < 9; ++i) a.emplace_back(rng.uniform(-3, 3));
    for (int i = 0; i < 9; ++i) b.emplace_back(rng.uniform(-3, 3));
    EXPECT_EQ(rat(g, a) * rat(g, b), convolve(rat(g, a), rat(g, b)));
  }
}

TEST(GroupRing, InvolutionAndShift) {
  const auto g = FiniteAbelianGroup::parse("5");
  const auto x = rat(g, {2, 1, 0, -1, 0});
  EXPECT_EQ(x.involute(), rat(g, {2, 0, -1, 0, 1}));
  EXPECT_EQ(x.involute().involute(), x);
  EXPECT_EQ(x.shifted(g.element({1})), rat(g, {0, 2, 1, 0, -1}));
  EXPECT_EQ((x * x).involute(), x.involute() * x.involute());
}

TEST(GroupRing, InversesFrozen) {
  // Circulant solves by an independent CAS.
  const auto c3 = FiniteAbelianGroup::parse("3");
  auto inv = try_invert(rat(c3, {1, 2, 0}));
  ASSERT_TRUE(std::holds_alternative<RatGroupRingElement>(inv));
  EXPECT_EQ(std::get<RatGroupRingElement>(inv), rat(c3, {mpq_class(1, 9), mpq_class(-2, 9), mpq_class(4, 9)}));
  const auto c5 = FiniteAbelianGroup::parse("5");
  const auto r = regular_representation_inverse(rat(c5, {2, 1, 0, -1, 0}));
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(*r, rat(c5, {mpq_class(13, 22), mpq_class(-3, 22), mpq_class(-1, 22), mpq_class(7, 22),
                         mpq_class(-5, 22)}));
}

TEST(GroupRing, NotInvertibleReportsKillingCharacter) {
  const auto g = FiniteAbelianGroup::parse("3");
  auto inv = try_invert(rat(g, {1, 1, 1}));
  ASSERT_TRUE(std::holds_alternative<NotInvertible>(inv));
  EXPECT_EQ(std::get<NotInvertible>(inv).killing_character, g.character({1}));
  EXPECT_FALSE(regular_representation_inverse(rat(g, {1, 1, 1})).has_value());
  EXPECT_TRUE(std::holds_alternative<NotInvertible>(try_invert(rat(g, {1, -1, 0}))));
}

TEST(GroupRing, FourierMatchesCharacterSums) {
  const auto g = FiniteAbelianGroup::parse("3,9");
  std::vector<mpq_class> c;
  for (int i = 0; i < 27; ++i) c.emplace_back((i * 5) % 7 - 3, 1 + i % 2);
  for (auto& q : c) q.canonicalize();
  const auto x = rat(g, c);
  const FourierVector v = fourier(x);
  const auto els = enumerate(g);
  for (const auto& chi : enumerate_characters(g)) {
    oracle::cd expect = 0;
    for (std::size_t i = 0; i < els.size(); ++i)
      expect += c[i].get_d() * oracle::root(g.exponent(), character_value_exponent(g, chi, els[i]));
    EXPECT_TRUE(oracle::near(oracle::embed(v.at(chi)), expect));
  }
  EXPECT_EQ(fourier_inverse<mpq_class>(v), x);
}

TEST(GroupRing, CyclotomicCoefficients) {
  const auto g = FiniteAbelianGroup::parse("3");
  const auto w = CyclotomicNumber::zeta_power(3, 1);
  const auto x = CycGroupRingElement::from_dense(g, {CyclotomicNumber(1), w, CyclotomicNumber(0)});
  auto inv = try_invert(x);
  ASSERT_TRUE(std::holds_alternative<CycGroupRingElement>(inv));
  EXPECT_TRUE((x * std::get<CycGroupRingElement>(inv)).is_one());
  // 1 + w s vanishes at the character with chi(s) = w^{-1}.
  const auto y = CycGroupRingElement::from_dense(g, {CyclotomicNumber(1), w, CyclotomicNumber(0)});
  EXPECT_TRUE(is_integral_unit(CycGroupRingElement::one(g)));
  EXPECT_FALSE(is_integral_unit(y + y));
}

TEST(GroupRing, IntegralUnits) {
  const auto g = FiniteAbelianGroup::parse("5");
  // -s^2 is a trivial unit; 1 - s - s^4 is the nontrivial one (its transform
  // takes the values -1 and golden-ratio units).
  EXPECT_TRUE(is_integral_unit(IntGroupRingElement::basis(g, g.element({2}), mpz_class(-1))));
  EXPECT_FALSE(is_integral_unit(IntGroupRingElement::basis(g, g.identity(), mpz_class(2))));
  const auto u = IntGroupRingElement::from_dense(g, {0, 1, 0, 0, 1});
  EXPECT_FALSE(is_integral_unit(u + u));
  const auto golden = IntGroupRingElement::from_dense(g, {1, -1, 0, 0, -1});  // 1 - s - s^4
  EXPECT_TRUE(is_integral_unit(golden));
}

TEST(GroupRing, SelfDualClasses) {
  const auto g = FiniteAbelianGroup::parse("3");
  EXPECT_EQ(class_membership(rat(g, {1, 0, 0})), SelfDualClass::Strict);
  // x x^{[-1]} = 1 for a group element.
  EXPECT_EQ(class_membership(rat(g, {0, 1, 0})), SelfDualClass::Strict);
  EXPECT_EQ(class_membership(rat(g, {2, 0, 0})), SelfDualClass::Neither);
}

TEST(GroupRing, Parse) {
  const auto g = FiniteAbelianGroup::parse("3");
  EXPECT_EQ(parse_rational_element(g, "1*[0] + 1/2*[2]"), rat(g, {1, 0, mpq_class(1, 2)}));
  EXPECT_EQ(parse_rational_element(g, "-[5]"), rat(g, {0, 0, -1}));
  EXPECT_THROW(parse_rational_element(g, "1*[1,2]"), DomainError);
  EXPECT_THROW(parse_rational_element(g, "garbage"), DomainError);
}

TEST(GroupRing, LengthMismatch) {
  EXPECT_THROW(rat(FiniteAbelianGroup::parse("3"), {1, 2}), DomainError);
}
