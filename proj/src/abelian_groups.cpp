#include "gformlab/abelian_groups.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "gformlab/error.hpp"

namespace gformlab {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  if (m == 1) return 0;
  std::int64_t r0 = mod(a, m), r1 = m, s0 = 1, s1 = 0;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
  }
  if (r0 != 1) {
    throw DomainError(std::to_string(a) + " is not a unit modulo " + std::to_string(m));
  }
  return mod(s0, m);
}

std::int64_t power_mod(std::int64_t a, std::int64_t e, std::int64_t m) {
  if (e < 0) return power_mod(inverse_mod(a, m), -e, m);
  __int128 result = 1 % m, base = mod(a, m);
  while (e > 0) {
    if (e & 1) result = result * base % m;
    base = base * base % m;
    e >>= 1;
  }
  return static_cast<std::int64_t>(result);
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_squarefree(std::int64_t n) {
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % (d * d) == 0) return false;
  return n >= 1;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t p : prime_factors(n)) result = result / p * (p - 1);
  return result;
}

int moebius(std::int64_t n) {
  if (!is_squarefree(n)) return 0;
  return prime_factors(n).size() % 2 == 0 ? 1 : -1;
}

std::int64_t primitive_root(std::int64_t prime) {
  if (!is_prime(prime)) throw DomainError(std::to_string(prime) + " is not prime");
  if (prime == 2) return 1;
  const auto factors = prime_factors(prime - 1);
  for (std::int64_t g = 2; g < prime; ++g) {
    bool ok = std::all_of(factors.begin(), factors.end(), [&](std::int64_t q) {
      return power_mod(g, (prime - 1) / q, prime) != 1;
    });
    if (ok) return g;
  }
  throw VerificationFailure("no primitive root found");
}

std::vector<std::int64_t> subgroup_closure(const std::vector<std::int64_t>& gens, std::int64_t m) {
  std::vector<std::int64_t> elems{1 % m};
  std::vector<bool> seen(static_cast<std::size_t>(m), false);
  seen[static_cast<std::size_t>(1 % m)] = true;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::int64_t g : gens) {
      if (gcd(g, m) != 1) {
        throw DomainError(std::to_string(g) + " is not a unit modulo " + std::to_string(m));
      }
      std::int64_t next = mod(elems[i] * g, m);
      if (!seen[static_cast<std::size_t>(next)]) {
        seen[static_cast<std::size_t>(next)] = true;
        elems.push_back(next);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::vector<std::int64_t> unit_group_generators(std::int64_t m) {
  std::vector<std::int64_t> gens;
  if (m <= 2) return gens;
  std::vector<std::int64_t> current{1};
  const auto total = static_cast<std::size_t>(euler_phi(m));
  for (std::int64_t k = 2; k < m && current.size() < total; ++k) {
    if (gcd(k, m) != 1) continue;
    if (std::binary_search(current.begin(), current.end(), k)) continue;
    gens.push_back(k);
    current = subgroup_closure(gens, m);
  }
  return gens;
}

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::int64_t> invariant_factors)
    : factors_(std::move(invariant_factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2) {
      throw DomainError("invariant factors must be >= 2");
    }
    if (i + 1 < factors_.size() && factors_[i + 1] % factors_[i] != 0) {
      throw DomainError("invariant factors must form a divisibility chain");
    }
    if (order_ > (std::int64_t{1} << 40) / factors_[i]) {
      throw BoundExceeded("group order too large");
    }
    order_ *= factors_[i];
  }
  exponent_ = factors_.empty() ? 1 : factors_.back();
}

FiniteAbelianGroup FiniteAbelianGroup::parse(std::string_view spec) {
  std::vector<std::int64_t> factors;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    std::size_t comma = spec.find(',', pos);
    if (comma == std::string_view::npos) comma = spec.size();
    std::string_view token = spec.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
      throw DomainError("malformed group spec '" + std::string(spec) + "'");
    }
    if (value != 1) factors.push_back(value);
    pos = comma + 1;
  }
  return FiniteAbelianGroup(std::move(factors));
}

void FiniteAbelianGroup::check_element(const std::vector<std::int64_t>& e) const {
  if (e.size() != factors_.size()) {
    throw DomainError("exponent vector length does not match group " + to_string());
  }
}

GroupElement FiniteAbelianGroup::identity() const {
  return GroupElement{std::vector<std::int64_t>(factors_.size(), 0)};
}

GroupElement FiniteAbelianGroup::element(std::vector<std::int64_t> exponents) const {
  check_element(exponents);
  for (std::size_t i = 0; i < exponents.size(); ++i) exponents[i] = mod(exponents[i], factors_[i]);
  return GroupElement{std::move(exponents)};
}

GroupElement FiniteAbelianGroup::multiply(const GroupElement& s, const GroupElement& t) const {
  check_element(s.exponents);
  check_element(t.exponents);
  GroupElement r = s;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    r.exponents[i] = mod(s.exponents[i] + t.exponents[i], factors_[i]);
  return r;
}

GroupElement FiniteAbelianGroup::inverse(const GroupElement& s) const { return power(s, -1); }

GroupElement FiniteAbelianGroup::power(const GroupElement& s, std::int64_t k) const {
  check_element(s.exponents);
  GroupElement r = s;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    r.exponents[i] = mod(static_cast<std::int64_t>(
                             static_cast<__int128>(s.exponents[i]) * k % factors_[i]),
                         factors_[i]);
  return r;
}

std::int64_t FiniteAbelianGroup::element_order(const GroupElement& s) const {
  check_element(s.exponents);
  std::int64_t order = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    order = lcm(order, factors_[i] / gcd(factors_[i], s.exponents[i]));
  return order;
}

Character FiniteAbelianGroup::trivial_character() const {
  return Character{std::vector<std::int64_t>(factors_.size(), 0)};
}

Character FiniteAbelianGroup::character(std::vector<std::int64_t> exponents) const {
  return Character{element(std::move(exponents)).exponents};
}

Character FiniteAbelianGroup::multiply(const Character& a, const Character& b) const {
  return Character{multiply(GroupElement{a.exponents}, GroupElement{b.exponents}).exponents};
}

Character FiniteAbelianGroup::inverse(const Character& a) const { return power(a, -1); }

Character FiniteAbelianGroup::power(const Character& a, std::int64_t k) const {
  return Character{power(GroupElement{a.exponents}, k).exponents};
}

std::size_t FiniteAbelianGroup::index_of(const GroupElement& s) const {
  check_element(s.exponents);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    idx = idx * static_cast<std::size_t>(factors_[i]) + static_cast<std::size_t>(s.exponents[i]);
  return idx;
}

std::size_t FiniteAbelianGroup::index_of(const Character& chi) const {
  return index_of(GroupElement{chi.exponents});
}

GroupElement FiniteAbelianGroup::element_at(std::size_t index) const {
  GroupElement s = identity();
  for (std::size_t i = factors_.size(); i-- > 0;) {
    const auto d = static_cast<std::size_t>(factors_[i]);
    s.exponents[i] = static_cast<std::int64_t>(index % d);
    index /= d;
  }
  return s;
}

Character FiniteAbelianGroup::character_at(std::size_t index) const {
  return Character{element_at(index).exponents};
}

std::vector<GroupElement> FiniteAbelianGroup::generators() const {
  std::vector<GroupElement> gens;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    GroupElement e = identity();
    e.exponents[i] = 1;
    gens.push_back(std::move(e));
  }
  return gens;
}

std::string FiniteAbelianGroup::to_string() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < factors_.size(); ++i) os << (i ? "," : "") << factors_[i];
  return os.str();
}

std::string FiniteAbelianGroup::element_to_string(const GroupElement& s) const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < s.exponents.size(); ++i) os << (i ? "," : "") << s.exponents[i];
  os << ']';
  return os.str();
}

std::vector<GroupElement> enumerate(const FiniteAbelianGroup& g, std::int64_t bound) {
  if (g.order() > bound) {
    throw BoundExceeded("group order " + std::to_string(g.order()) + " exceeds bound " +
                        std::to_string(bound));
  }
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(g.order()));
  for (std::size_t i = 0; i < static_cast<std::size_t>(g.order()); ++i) out.push_back(g.element_at(i));
  return out;
}

std::vector<Character> enumerate_characters(const FiniteAbelianGroup& g, std::int64_t bound) {
  std::vector<Character> out;
  for (auto& s : enumerate(g, bound)) out.push_back(Character{std::move(s.exponents)});
  return out;
}

std::int64_t character_value_exponent(const FiniteAbelianGroup& g, const Character& chi,
                                      const GroupElement& s) {
  const auto& d = g.invariant_factors();
  if (chi.exponents.size() != d.size() || s.exponents.size() != d.size()) {
    throw DomainError("character and element do not belong to group " + g.to_string());
  }
  const std::int64_t m = g.exponent();
  __int128 total = 0;
  for (std::size_t i = 0; i < d.size(); ++i)
    total += static_cast<__int128>(m / d[i]) * chi.exponents[i] % m * s.exponents[i] % m;
  return mod(static_cast<std::int64_t>(total % m), m);
}

GroupElement galois_twist(const FiniteAbelianGroup& g, const GroupElement& s, std::int64_t k,
                          int n_sign) {
  const std::int64_t m = g.exponent();
  if (n_sign < -1 || n_sign > 1) throw DomainError("twist sign must be -1, 0 or 1");
  if (m > 1 && gcd(mod(k, m), m) != 1) {
    throw DomainError(std::to_string(k) + " is not a unit modulo exp(G) = " + std::to_string(m));
  }
  if (n_sign == 0) return g.element(s.exponents);
  const std::int64_t ord = g.element_order(s);
  const std::int64_t e = n_sign > 0 ? mod(k, ord) : inverse_mod(k, ord);
  return g.power(s, e);
}

}  // namespace gformlab
