#include <gtest/gtest.h>

#include <cmath>

#include "gformlab/error.hpp"
#include "gformlab/random.hpp"
#include "gformlab/stickelberger.hpp"
#include "oracle.hpp"

using namespace gformlab;

namespace {

// Oracle for upsilon: read the angle of chi(s) numerically and pick the
// symmetric representative of the |s|-th root of unity it equals.
std::int64_t upsilon_oracle(const FiniteAbelianGroup& g, const Character& chi, const GroupElement& s) {
  double angle = 0;
  for (std::size_t i = 0; i < g.rank(); ++i)
    angle += static_cast<double>(chi.exponents[i] * s.exponents[i]) / static_cast<double>(g.invariant_factors()[i]);
  const double o = static_cast<double>(g.element_order(s));
  double k = std::fmod(angle * o, o);
  long r = std::lround(k);
  if (r > (g.element_order(s) - 1) / 2) r -= g.element_order(s);
  return r;
}

}  // namespace

TEST(Stickelberger, UpsilonAgainstOracle) {
  for (const char* spec : {"3", "9", "3,3", "15", "3,9"}) {
    const auto g = FiniteAbelianGroup::parse(spec);
    for (const auto& chi : enumerate_characters(g))
      for (const auto& s : enumerate(g)) EXPECT_EQ(upsilon(g, chi, s), upsilon_oracle(g, chi, s)) << spec;
  }
}

TEST(Stickelberger, PairingTableC3Frozen) {
  const auto g = FiniteAbelianGroup::parse("3");
  const auto chi1 = g.character({1}), chi2 = g.character({2});
  const auto s1 = g.element({1}), s2 = g.element({2});
  EXPECT_EQ(pairing(g, chi1, s1), mpq_class(1, 3));
  EXPECT_EQ(pairing(g, chi1, s2), mpq_class(-1, 3));
  EXPECT_EQ(pairing(g, chi2, s1), mpq_class(-1, 3));
  EXPECT_EQ(pairing(g, g.trivial_character(), s1), 0);
  EXPECT_EQ(pairing(g, chi1, g.identity()), 0);
}

TEST(Stickelberger, SBasisC3Frozen) {
  const auto g = FiniteAbelianGroup::parse("3");
  const auto b = s_hat_basis(g);
  ASSERT_EQ(b.size(), 3u);
  EXPECT_EQ(b[0].coeffs, (std::vector<std::int64_t>{1, 0, 0}));
  EXPECT_EQ(b[1].coeffs, (std::vector<std::int64_t>{0, 1, 1}));
  EXPECT_EQ(b[2].coeffs, (std::vector<std::int64_t>{0, 0, 3}));
}

TEST(Stickelberger, SBasisIndexEqualsGroupOrder) {
  for (const char* spec : {"5", "9", "3,3", "3,9"}) {
    const auto g = FiniteAbelianGroup::parse(spec);
    const auto b = s_hat_basis(g);
    IntMatrix m(b.size(), b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) m(i, j) = b[i].coeffs[j];
    EXPECT_EQ(abs(determinant(m)), g.order()) << spec;
    for (const auto& psi : b) {
      EXPECT_EQ(determinant(g, psi), g.trivial_character());
      EXPECT_TRUE(integrality_check(g, psi));
    }
  }
}

TEST(Stickelberger, IntegralityOutsideKernelFails) {
  const auto g = FiniteAbelianGroup::parse("7");
  DualLatticeElement psi{{0, 1, 0, 0, 0, 0, 0}};
  EXPECT_FALSE(integrality_check(g, psi));
  EXPECT_NE(determinant(g, psi), g.trivial_character());
  // chi + chi^{-1} is in the kernel; its theta vanishes (upsilon is odd in chi).
  DualLatticeElement sym{{0, 1, 0, 0, 0, 0, 1}};
  EXPECT_TRUE(theta_star(g, sym).is_zero());
}

TEST(Stickelberger, ThetaTableAgreesWithExactPath) {
  const auto g = FiniteAbelianGroup::parse("3,3");
  const UpsilonTable t(g);
  Rng rng(9);
  for (int k = 0; k < 200; ++k) {
    DualLatticeElement psi;
    for (int i = 0; i < 9; ++i) psi.coeffs.push_back(rng.uniform(-4, 4));
    EXPECT_EQ(t.theta_integral(psi.coeffs.data()), integrality_check(g, psi));
    EXPECT_EQ(t.det_trivial(psi.coeffs.data()), determinant(g, psi) == g.trivial_character());
  }
}

TEST(Stickelberger, UnitActionAndInvolution) {
  const auto g = FiniteAbelianGroup::parse("7");
  DualLatticeElement psi{{0, 1, 2, 0, 0, 0, 0}};
  EXPECT_EQ(involute(g, psi).coeffs, (std::vector<std::int64_t>{0, 0, 0, 0, 0, 2, 1}));
  EXPECT_EQ(act(g, psi, 6).coeffs, involute(g, psi).coeffs);
  EXPECT_EQ(act(g, psi, 1).coeffs, psi.coeffs);
  EXPECT_THROW(act(g, psi, 7), DomainError);
}

TEST(Stickelberger, Equivariance) {
  for (const char* spec : {"7", "9", "3,3"}) {
    const auto g = FiniteAbelianGroup::parse(spec);
    EXPECT_TRUE(equivariance_check(g, subgroup_closure(unit_group_generators(g.exponent()), g.exponent())));
  }
}

TEST(Stickelberger, EquivariantMaps) {
  const auto g = FiniteAbelianGroup::parse("7");
  EXPECT_TRUE(image_selfdual_check(EquivariantMap::constant_one(g)));
  EXPECT_TRUE(image_selfdual_check(EquivariantMap::prime_valued(g, 29, g.element({3}))));
  Rng rng(4);
  for (int k = 0; k < 5; ++k) EXPECT_TRUE(image_selfdual_check(EquivariantMap::random(g, rng)));
  const auto gc = FiniteAbelianGroup::parse("3");
  const auto tt = theta_transpose(EquivariantMap::constant_one(gc), s_hat_basis(gc)[1]);
  EXPECT_TRUE(tt.is_one());
}

TEST(Stickelberger, RejectsEvenGroups) {
  const auto g = FiniteAbelianGroup::parse("4");
  EXPECT_EQ(s_hat_basis(g).size(), 4u);  // the kernel lattice itself is fine
  EXPECT_THROW(theta_star(g, DualLatticeElement{{1, 0, 0, 0}}), DomainError);
}
