#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gformlab {

/// Default cap on |G| for enumeration-based operations.
inline constexpr std::int64_t kDefaultGroupBound = 10000;

/// An element of a finite abelian group, stored as its exponent vector with
/// respect to the invariant-factor generators. Components are reduced.
struct GroupElement {
  std::vector<std::int64_t> exponents;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// A character of G, stored as an exponent vector (a_1, ..., a_k). Its value
/// at s is zeta_m^{sum_i (m/d_i) a_i e_i}, m = exp(G).
struct Character {
  std::vector<std::int64_t> exponents;

  friend bool operator==(const Character&, const Character&) = default;
  friend auto operator<=>(const Character&, const Character&) = default;
};

/// G = Z/d_1 x ... x Z/d_k with d_1 | d_2 | ... | d_k, each d_i >= 2.
/// The empty factor list is the trivial group C1.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;
  explicit FiniteAbelianGroup(std::vector<std::int64_t> invariant_factors);

  /// Parses "d1,d2,...,dk" (e.g. "3", "3,9"); "1" denotes the trivial group.
  static FiniteAbelianGroup parse(std::string_view spec);

  const std::vector<std::int64_t>& invariant_factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  std::int64_t order() const { return order_; }
  std::int64_t exponent() const { return exponent_; }
  bool is_odd() const { return order_ % 2 == 1; }

  GroupElement identity() const;
  GroupElement element(std::vector<std::int64_t> exponents) const;
  GroupElement multiply(const GroupElement& s, const GroupElement& t) const;
  GroupElement inverse(const GroupElement& s) const;
  GroupElement power(const GroupElement& s, std::int64_t k) const;
  std::int64_t element_order(const GroupElement& s) const;

  Character trivial_character() const;
  Character character(std::vector<std::int64_t> exponents) const;
  Character multiply(const Character& a, const Character& b) const;
  Character inverse(const Character& a) const;
  Character power(const Character& a, std::int64_t k) const;

  /// Mixed-radix position of an element (or character) in the canonical
  /// lexicographic enumeration; the identity has index 0.
  std::size_t index_of(const GroupElement& s) const;
  std::size_t index_of(const Character& chi) const;
  GroupElement element_at(std::size_t index) const;
  Character character_at(std::size_t index) const;

  /// Generators e_i of the invariant-factor decomposition.
  std::vector<GroupElement> generators() const;

  std::string to_string() const;
  std::string element_to_string(const GroupElement& s) const;

  friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    return a.factors_ == b.factors_;
  }

 private:
  void check_element(const std::vector<std::int64_t>& e) const;

  std::vector<std::int64_t> factors_;
  std::int64_t order_ = 1;
  std::int64_t exponent_ = 1;
};

/// All elements in lexicographic order of exponent vectors, identity first.
std::vector<GroupElement> enumerate(const FiniteAbelianGroup& g,
                                    std::int64_t bound = kDefaultGroupBound);

/// All characters, in the same lexicographic order.
std::vector<Character> enumerate_characters(const FiniteAbelianGroup& g,
                                            std::int64_t bound = kDefaultGroupBound);

/// k with chi(s) = zeta_m^k, 0 <= k < m.
std::int64_t character_value_exponent(const FiniteAbelianGroup& g, const Character& chi,
                                      const GroupElement& s);

/// s^{k^{n_sign}} for n_sign in {-1, 0, 1}: the action of the Galois element
/// with cyclotomic character k on G(n). Requires gcd(k, exp(G)) = 1.
GroupElement galois_twist(const FiniteAbelianGroup& g, const GroupElement& s, std::int64_t k,
                          int n_sign);

// Elementary number theory shared across modules.
std::int64_t mod(std::int64_t a, std::int64_t m);
std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);
std::int64_t inverse_mod(std::int64_t a, std::int64_t m);
std::int64_t power_mod(std::int64_t a, std::int64_t e, std::int64_t m);
bool is_prime(std::int64_t n);
std::vector<std::int64_t> prime_factors(std::int64_t n);
bool is_squarefree(std::int64_t n);
std::int64_t euler_phi(std::int64_t n);
int moebius(std::int64_t n);
std::int64_t primitive_root(std::int64_t prime);
/// Deterministic generating set of (Z/m)^x: greedy over residues 1..m-1.
std::vector<std::int64_t> unit_group_generators(std::int64_t m);
/// Closure of a generating set inside (Z/m)^x, sorted.
std::vector<std::int64_t> subgroup_closure(const std::vector<std::int64_t>& gens, std::int64_t m);

}  // namespace gformlab
