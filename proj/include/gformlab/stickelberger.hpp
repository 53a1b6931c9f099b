#pragma once

// The modified Stickelberger pairing, the map Theta_* : QG^ -> QG, its
// transpose on Galois-equivariant maps, and the lattice S_G^ = ker(det).

#include <cstdint>
#include <string>
#include <vector>

#include "gformlab/abelian_groups.hpp"
#include "gformlab/cyclotomic.hpp"
#include "gformlab/group_ring.hpp"
#include "gformlab/random.hpp"

namespace gformlab {

/// psi = sum_chi n_chi chi in ZG^, dense in character enumeration order.
struct DualLatticeElement {
  std::vector<std::int64_t> coeffs;

  friend bool operator==(const DualLatticeElement&, const DualLatticeElement&) = default;
};

/// The symmetric-range discrete log: chi(s) = zeta_{|s|}^u with
/// |u| <= (|s|-1)/2. Zero at s = 1. Requires |G| odd.
std::int64_t upsilon(const FiniteAbelianGroup& g, const Character& chi, const GroupElement& s);

/// <chi, s>_* = upsilon(chi, s) / |s|.
mpq_class pairing(const FiniteAbelianGroup& g, const Character& chi, const GroupElement& s);
/// Bilinear extension; psi indexed by characters, alpha by elements.
mpq_class pairing(const FiniteAbelianGroup& g, const std::vector<mpq_class>& psi,
                  const std::vector<mpq_class>& alpha);

/// Theta_*(psi) = sum_s <psi, s>_* s.
RatGroupRingElement theta_star(const FiniteAbelianGroup& g, const DualLatticeElement& psi);
RatGroupRingElement theta_star(const FiniteAbelianGroup& g, const std::vector<mpq_class>& psi);

/// det(psi) = prod chi^{n_chi} in G^.
Character determinant(const FiniteAbelianGroup& g, const DualLatticeElement& psi);

/// Whether Theta_*(psi) has integer coefficients.
bool integrality_check(const FiniteAbelianGroup& g, const DualLatticeElement& psi);

/// Z-basis of S_G^ (HNF rows). The construction verifies that the quotient
/// ZG^/S_G^ has the invariant factors of G.
std::vector<DualLatticeElement> s_hat_basis(const FiniteAbelianGroup& g);

/// psi^-: precomposition with chi -> chi^{-1}.
DualLatticeElement involute(const FiniteAbelianGroup& g, const DualLatticeElement& psi);
/// omega_k . psi = sum n_chi chi^k.
DualLatticeElement act(const FiniteAbelianGroup& g, const DualLatticeElement& psi, std::int64_t k);

/// Precomputed integer table for fast exhaustive sweeps. Theta_*(psi) is
/// integral iff sum_chi n_chi upsilon(chi, s) = 0 mod |s| for every s.
class UpsilonTable {
 public:
  explicit UpsilonTable(const FiniteAbelianGroup& g);

  const FiniteAbelianGroup& group() const { return group_; }
  std::int64_t at(std::size_t s, std::size_t chi) const { return table_[s * n_ + chi]; }
  bool theta_integral(const std::int64_t* psi) const;
  /// det(psi) == trivial, computed from character exponents (independent of
  /// the upsilon table).
  bool det_trivial(const std::int64_t* psi) const;

 private:
  FiniteAbelianGroup group_;
  std::size_t n_ = 0;
  std::vector<std::int64_t> table_;
  std::vector<std::int64_t> orders_;
  std::vector<std::int64_t> char_exponents_;  // n x rank
};

/// A map f : G(-1) -> Q(zeta_level)^x with f(s^{k^{-1}}) = sigma_k(f(s)) for
/// every k in the acting group U (given by generators mod level). The
/// constructor validates nonvanishing and equivariance.
class EquivariantMap {
 public:
  EquivariantMap(FiniteAbelianGroup g, std::int64_t level, std::vector<std::int64_t> unit_generators,
                 std::vector<CyclotomicNumber> values);

  static EquivariantMap constant_one(const FiniteAbelianGroup& g);
  /// f_{l,s}: value l at s, 1 elsewhere; trivial acting group.
  static EquivariantMap prime_valued(const FiniteAbelianGroup& g, std::int64_t l, const GroupElement& s);
  /// Random map equivariant for the full unit group mod exp(G).
  static EquivariantMap random(const FiniteAbelianGroup& g, Rng& rng);

  const FiniteAbelianGroup& group() const { return group_; }
  std::int64_t level() const { return level_; }
  const std::vector<std::int64_t>& unit_generators() const { return units_; }
  const CyclotomicNumber& operator()(const GroupElement& s) const { return values_[group_.index_of(s)]; }
  const std::vector<CyclotomicNumber>& values() const { return values_; }

 private:
  FiniteAbelianGroup group_;
  std::int64_t level_ = 1;
  std::vector<std::int64_t> units_;
  std::vector<CyclotomicNumber> values_;
};

/// f(Theta_*(psi)) = prod_s f(s)^{Theta_*(psi)_s}. Throws DomainError when
/// Theta_*(psi) is not integral.
CyclotomicNumber theta_transpose(const EquivariantMap& f, const DualLatticeElement& psi);

/// Theta_*(omega_k psi) equals the G(-1)-twist of Theta_*(psi), for every
/// S_G^ basis vector and every generator k (mod exp(G)).
bool equivariance_check(const FiniteAbelianGroup& g, const std::vector<std::int64_t>& generators);

/// Theta^t(f)(psi) * Theta^t(f)(psi^-) = 1 on the S_G^ basis.
bool image_selfdual_check(const EquivariantMap& f);

std::string to_string(const FiniteAbelianGroup& g, const DualLatticeElement& psi);

}  // namespace gformlab
