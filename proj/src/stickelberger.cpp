#include "gformlab/stickelberger.hpp"

#include <sstream>

#include "gformlab/error.hpp"
#include "gformlab/linalg.hpp"

namespace gformlab {
namespace {

void require_odd(const FiniteAbelianGroup& g) {
  if (!g.is_odd()) throw DomainError("Stickelberger operations need a group of odd order, got " + g.to_string());
}

void check_length(const FiniteAbelianGroup& g, std::size_t n) {
  if (n != static_cast<std::size_t>(g.order())) {
    throw DomainError("vector length does not match |G| = " + std::to_string(g.order()));
  }
}

std::int64_t upsilon_from_exponent(std::int64_t k, std::int64_t m, std::int64_t order) {
  // k = (m/|s|) u because chi(s) has order dividing |s|.
  std::int64_t u = mod(k / (m / order), order);
  if (u > (order - 1) / 2) u -= order;
  return u;
}

}  // namespace

std::int64_t upsilon(const FiniteAbelianGroup& g, const Character& chi, const GroupElement& s) {
  require_odd(g);
  const std::int64_t order = g.element_order(s);
  if (order == 1) return 0;
  return upsilon_from_exponent(character_value_exponent(g, chi, s), g.exponent(), order);
}

mpq_class pairing(const FiniteAbelianGroup& g, const Character& chi, const GroupElement& s) {
  const std::int64_t order = g.element_order(s);
  mpq_class q(upsilon(g, chi, s), order);
  q.canonicalize();
  return q;
}

mpq_class pairing(const FiniteAbelianGroup& g, const std::vector<mpq_class>& psi,
                  const std::vector<mpq_class>& alpha) {
  check_length(g, psi.size());
  check_length(g, alpha.size());
  mpq_class total = 0;
  for (std::size_t c = 0; c < psi.size(); ++c) {
    if (sgn(psi[c]) == 0) continue;
    const Character chi = g.character_at(c);
    for (std::size_t s = 0; s < alpha.size(); ++s) {
      if (sgn(alpha[s]) == 0) continue;
      total += psi[c] * alpha[s] * pairing(g, chi, g.element_at(s));
    }
  }
  return total;
}

RatGroupRingElement theta_star(const FiniteAbelianGroup& g, const std::vector<mpq_class>& psi) {
  require_odd(g);
  check_length(g, psi.size());
  std::vector<mpq_class> out(psi.size(), 0);
  for (std::size_t s = 0; s < out.size(); ++s) {
    const GroupElement se = g.element_at(s);
    for (std::size_t c = 0; c < psi.size(); ++c) {
      if (sgn(psi[c]) != 0) out[s] += psi[c] * pairing(g, g.character_at(c), se);
    }
  }
  return RatGroupRingElement::from_dense(g, std::move(out));
}

RatGroupRingElement theta_star(const FiniteAbelianGroup& g, const DualLatticeElement& psi) {
  std::vector<mpq_class> q;
  q.reserve(psi.coeffs.size());
  for (auto n : psi.coeffs) q.emplace_back(n);
  return theta_star(g, q);
}

Character determinant(const FiniteAbelianGroup& g, const DualLatticeElement& psi) {
  check_length(g, psi.coeffs.size());
  std::vector<std::int64_t> e(g.rank(), 0);
  for (std::size_t c = 0; c < psi.coeffs.size(); ++c) {
    const Character chi = g.character_at(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      e[i] = mod(e[i] + mod(psi.coeffs[c], g.invariant_factors()[i]) * chi.exponents[i],
                 g.invariant_factors()[i]);
    }
  }
  return g.character(e);
}

bool integrality_check(const FiniteAbelianGroup& g, const DualLatticeElement& psi) {
  const RatGroupRingElement t = theta_star(g, psi);
  for (const auto& c : t.coefficients())
    if (c.get_den() != 1) return false;
  return true;
}

std::vector<DualLatticeElement> s_hat_basis(const FiniteAbelianGroup& g) {
  const auto n = static_cast<std::size_t>(g.order());
  enumerate_characters(g);  // bound check
  const std::size_t k = g.rank();
  // Kernel of [A | -D]: x in Z^n with A x in D Z^k.
  IntMatrix a(k, n + k, 0);
  for (std::size_t c = 0; c < n; ++c) {
    const Character chi = g.character_at(c);
    for (std::size_t i = 0; i < k; ++i) a(i, c) = chi.exponents[i];
  }
  for (std::size_t i = 0; i < k; ++i) a(i, n + i) = -g.invariant_factors()[i];
  IntMatrix basis;
  if (k == 0) {
    basis = IntMatrix::identity(n);
  } else {
    const IntMatrix ker = integer_kernel(a);
    IntMatrix proj(ker.rows(), n);
    for (std::size_t r = 0; r < ker.rows(); ++r)
      for (std::size_t c = 0; c < n; ++c) proj(r, c) = ker(r, c);
    basis = hnf_rows(proj);
  }
  if (basis.rows() != n) throw VerificationFailure("S_G^ basis does not have full rank");
  std::vector<mpz_class> inv = smith_normal_form(basis).invariants();
  std::vector<mpz_class> nontrivial;
  for (const auto& d : inv)
    if (d != 1) nontrivial.push_back(d);
  std::vector<mpz_class> expected(g.invariant_factors().begin(), g.invariant_factors().end());
  if (nontrivial != expected) throw VerificationFailure("ZG^/S_G^ is not isomorphic to G^");
  std::vector<DualLatticeElement> out;
  for (std::size_t r = 0; r < n; ++r) {
    DualLatticeElement psi;
    for (std::size_t c = 0; c < n; ++c) psi.coeffs.push_back(basis(r, c).get_si());
    if (!(determinant(g, psi) == g.trivial_character())) {
      throw VerificationFailure("S_G^ basis vector has nontrivial determinant");
    }
    out.push_back(std::move(psi));
  }
  return out;
}

DualLatticeElement involute(const FiniteAbelianGroup& g, const DualLatticeElement& psi) {
  return act(g, psi, -1);
}

DualLatticeElement act(const FiniteAbelianGroup& g, const DualLatticeElement& psi, std::int64_t k) {
  check_length(g, psi.coeffs.size());
  if (g.exponent() > 1 && gcd(mod(k, g.exponent()), g.exponent()) != 1) {
    throw DomainError(std::to_string(k) + " is not a unit modulo exp(G)");
  }
  DualLatticeElement out{std::vector<std::int64_t>(psi.coeffs.size(), 0)};
  for (std::size_t c = 0; c < psi.coeffs.size(); ++c) {
    out.coeffs[g.index_of(g.power(g.character_at(c), k))] += psi.coeffs[c];
  }
  return out;
}

UpsilonTable::UpsilonTable(const FiniteAbelianGroup& g) : group_(g) {
  require_odd(g);
  n_ = static_cast<std::size_t>(g.order());
  const auto elems = enumerate(g);
  const auto chars = enumerate_characters(g);
  table_.resize(n_ * n_);
  orders_.resize(n_);
  for (std::size_t s = 0; s < n_; ++s) {
    orders_[s] = g.element_order(elems[s]);
    for (std::size_t c = 0; c < n_; ++c) table_[s * n_ + c] = upsilon(g, chars[c], elems[s]);
  }
  for (const auto& chi : chars)
    for (auto e : chi.exponents) char_exponents_.push_back(e);
}

bool UpsilonTable::theta_integral(const std::int64_t* psi) const {
  for (std::size_t s = 1; s < n_; ++s) {
    std::int64_t acc = 0;
    const std::int64_t* row = &table_[s * n_];
    for (std::size_t c = 0; c < n_; ++c) acc += psi[c] * row[c];
    if (acc % orders_[s] != 0) return false;
  }
  return true;
}

bool UpsilonTable::det_trivial(const std::int64_t* psi) const {
  const std::size_t k = group_.rank();
  for (std::size_t i = 0; i < k; ++i) {
    std::int64_t acc = 0;
    for (std::size_t c = 0; c < n_; ++c) acc += psi[c] * char_exponents_[c * k + i];
    if (acc % group_.invariant_factors()[i] != 0) return false;
  }
  return true;
}

EquivariantMap::EquivariantMap(FiniteAbelianGroup g, std::int64_t level,
                               std::vector<std::int64_t> unit_generators,
                               std::vector<CyclotomicNumber> values)
    : group_(std::move(g)), level_(level), units_(std::move(unit_generators)), values_(std::move(values)) {
  check_length(group_, values_.size());
  if (level_ < 1 || level_ % group_.exponent() != 0) {
    throw DomainError("equivariant map level must be a multiple of exp(G)");
  }
  for (auto& v : values_) {
    if (v.is_zero()) throw DomainError("equivariant map takes the value 0");
    if (level_ % v.level() != 0) throw DomainError("equivariant map value outside Q(zeta_level)");
    v = v.raised_to(level_);
  }
  for (auto& k : units_) {
    k = mod(k, level_);
    if (level_ > 1 && gcd(k, level_) != 1) throw DomainError("acting residue is not a unit");
  }
  for (std::size_t s = 0; s < values_.size(); ++s) {
    const GroupElement se = group_.element_at(s);
    for (auto k : units_) {
      const GroupElement t = galois_twist(group_, se, k, -1);
      if (!(values_[group_.index_of(t)] == values_[s].galois(k))) {
        throw DomainError("map is not equivariant: f(s^{k^-1}) != sigma_k(f(s)) for s = " +
                          group_.element_to_string(se) + ", k = " + std::to_string(k));
      }
    }
  }
}

EquivariantMap EquivariantMap::constant_one(const FiniteAbelianGroup& g) {
  std::vector<CyclotomicNumber> vals(static_cast<std::size_t>(g.order()), CyclotomicNumber(1L));
  return EquivariantMap(g, g.exponent(), unit_group_generators(g.exponent()), std::move(vals));
}

EquivariantMap EquivariantMap::prime_valued(const FiniteAbelianGroup& g, std::int64_t l, const GroupElement& s) {
  std::vector<CyclotomicNumber> vals(static_cast<std::size_t>(g.order()), CyclotomicNumber(1L));
  vals[g.index_of(s)] = CyclotomicNumber(static_cast<long>(l));
  return EquivariantMap(g, g.exponent(), {}, std::move(vals));
}

EquivariantMap EquivariantMap::random(const FiniteAbelianGroup& g, Rng& rng) {
  const std::int64_t m = g.exponent();
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<CyclotomicNumber> vals(n);
  std::vector<bool> done(n, false);
  const auto units = subgroup_closure(unit_group_generators(m), m);
  for (std::size_t s = 0; s < n; ++s) {
    if (done[s]) continue;
    const GroupElement se = g.element_at(s);
    const std::int64_t order = g.element_order(se);
    // f(s) must be fixed by sigma_k for k = 1 mod |s|, i.e. lie in Q(zeta_|s|).
    CyclotomicNumber x;
    do {
      std::vector<mpq_class> c(static_cast<std::size_t>(euler_phi(order)));
      for (auto& q : c) {
        const std::int64_t num = rng.uniform(-3, 3);
        const std::int64_t den = rng.uniform(1, 2);
        q = mpq_class(num, den);
        q.canonicalize();
      }
      x = CyclotomicNumber::from_coefficients(order, std::move(c));
    } while (x.is_zero());
    const CyclotomicNumber y = x.raised_to(m);
    for (auto k : units) {
      const std::size_t t = g.index_of(galois_twist(g, se, k, -1));
      if (!done[t]) {
        vals[t] = y.galois(k);
        done[t] = true;
      }
    }
  }
  return EquivariantMap(g, m, unit_group_generators(m), std::move(vals));
}

CyclotomicNumber theta_transpose(const EquivariantMap& f, const DualLatticeElement& psi) {
  const FiniteAbelianGroup& g = f.group();
  const RatGroupRingElement theta = theta_star(g, psi);
  CyclotomicNumber out(mpq_class(1), f.level());
  for (std::size_t s = 0; s < theta.coefficients().size(); ++s) {
    const mpq_class& c = theta.coefficients()[s];
    if (c.get_den() != 1) throw DomainError("Theta_*(psi) is not integral (psi not in S_G^)");
    if (sgn(c) == 0) continue;
    out *= f.values()[s].pow(c.get_num().get_si());
  }
  return out;
}

bool equivariance_check(const FiniteAbelianGroup& g, const std::vector<std::int64_t>& generators) {
  const auto basis = s_hat_basis(g);
  for (auto k : generators) {
    for (const auto& psi : basis) {
      const RatGroupRingElement lhs = theta_star(g, act(g, psi, k));
      const RatGroupRingElement theta = theta_star(g, psi);
      RatGroupRingElement rhs(g);
      for (std::size_t s = 0; s < theta.coefficients().size(); ++s) {
        const GroupElement t = galois_twist(g, g.element_at(s), k, -1);
        rhs.set_coefficient(t, rhs.coefficient(t) + theta.coefficients()[s]);
      }
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

bool image_selfdual_check(const EquivariantMap& f) {
  const FiniteAbelianGroup& g = f.group();
  for (const auto& psi : s_hat_basis(g)) {
    const DualLatticeElement minus = involute(g, psi);
    if (!(determinant(g, minus) == g.trivial_character())) {
      throw VerificationFailure("S_G^ is not stable under the involution");
    }
    if (!(theta_transpose(f, psi) * theta_transpose(f, minus)).is_one()) return false;
  }
  return true;
}

std::string to_string(const FiniteAbelianGroup& g, const DualLatticeElement& psi) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t c = 0; c < psi.coeffs.size(); ++c) {
    if (psi.coeffs[c] == 0) continue;
    if (!first) os << " + ";
    first = false;
    Character chi = g.character_at(c);
    os << psi.coeffs[c] << "*chi" << g.element_to_string(g.element(chi.exponents));
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace gformlab
