#include "gformlab/group_ring.hpp"

#include <cctype>
#include <string>

namespace gformlab {
namespace {

// Accumulates sum_j c_j * zeta_m^{k_j} at level L by cyclic index shifts,
// folding once at the end.
std::int64_t common_level(const FiniteAbelianGroup& g, const std::vector<CyclotomicNumber>& xs) {
  std::int64_t level = g.exponent();
  for (const auto& x : xs)
    if (!x.is_zero()) level = lcm(level, x.level());
  return level;
}

std::vector<std::vector<mpq_class>> raise_all(const std::vector<CyclotomicNumber>& xs,
                                              std::int64_t level) {
  std::vector<std::vector<mpq_class>> out;
  out.reserve(xs.size());
  for (const auto& x : xs) {
    if (x.is_zero()) {
      out.emplace_back();
    } else {
      out.push_back(x.raised_to(level).coefficients());
    }
  }
  return out;
}

}  // namespace

FourierVector fourier_dense(const FiniteAbelianGroup& g, const std::vector<CyclotomicNumber>& coeffs) {
  const std::int64_t m = g.exponent();
  const std::int64_t level = common_level(g, coeffs);
  const auto raised = raise_all(coeffs, level);
  const std::size_t n = coeffs.size();
  const auto L = static_cast<std::size_t>(level);
  const std::int64_t step = level / m;
  FourierVector v{g, {}};
  v.values.reserve(n);
  std::vector<GroupElement> elems = enumerate(g);
  for (std::size_t c = 0; c < n; ++c) {
    const Character chi = g.character_at(c);
    std::vector<mpq_class> cyclic(L, 0);
    for (std::size_t s = 0; s < n; ++s) {
      if (raised[s].empty()) continue;
      const auto shift = static_cast<std::size_t>(character_value_exponent(g, chi, elems[s]) * step);
      for (std::size_t j = 0; j < raised[s].size(); ++j) {
        if (sgn(raised[s][j]) != 0) cyclic[(j + shift) % L] += raised[s][j];
      }
    }
    v.values.push_back(CyclotomicNumber::from_coefficients(level, std::move(cyclic)));
  }
  return v;
}

std::vector<CyclotomicNumber> fourier_inverse_dense(const FourierVector& v) {
  const FiniteAbelianGroup& g = v.group;
  const std::int64_t m = g.exponent();
  const std::int64_t level = common_level(g, v.values);
  const auto raised = raise_all(v.values, level);
  const std::size_t n = v.values.size();
  const auto L = static_cast<std::size_t>(level);
  const std::int64_t step = level / m;
  const mpq_class scale(1, static_cast<unsigned long>(g.order()));
  std::vector<CyclotomicNumber> out;
  out.reserve(n);
  std::vector<Character> chars = enumerate_characters(g);
  for (std::size_t s = 0; s < n; ++s) {
    const GroupElement se = g.element_at(s);
    std::vector<mpq_class> cyclic(L, 0);
    for (std::size_t c = 0; c < n; ++c) {
      if (raised[c].empty()) continue;
      // chi(s)^{-1} = zeta_m^{-k}
      const std::int64_t k = mod(-character_value_exponent(g, chars[c], se), m);
      const auto shift = static_cast<std::size_t>(k * step);
      for (std::size_t j = 0; j < raised[c].size(); ++j) {
        if (sgn(raised[c][j]) != 0) cyclic[(j + shift) % L] += raised[c][j];
      }
    }
    for (auto& q : cyclic) q *= scale;
    out.push_back(CyclotomicNumber::from_coefficients(level, std::move(cyclic)));
  }
  return out;
}

bool is_integral_unit(const IntGroupRingElement& x) {
  auto inv = try_invert(to_rational(x));
  if (std::holds_alternative<NotInvertible>(inv)) return false;
  for (const auto& c : std::get<RatGroupRingElement>(inv).coefficients())
    if (c.get_den() != 1) return false;
  return true;
}

bool is_integral_unit(const CycGroupRingElement& x) {
  for (const auto& c : x.coefficients())
    if (!c.is_algebraic_integer()) return false;
  auto inv = try_invert(x);
  if (std::holds_alternative<NotInvertible>(inv)) return false;
  for (const auto& c : std::get<CycGroupRingElement>(inv).coefficients())
    if (!c.is_algebraic_integer()) return false;
  return true;
}

std::string to_string(SelfDualClass c) {
  switch (c) {
    case SelfDualClass::Strict: return "strict";
    case SelfDualClass::UnitSelfDual: return "unit-self-dual";
    case SelfDualClass::Neither: return "neither";
  }
  return "neither";
}

SelfDualClass class_membership(const RatGroupRingElement& x) {
  if (std::holds_alternative<NotInvertible>(try_invert(x))) {
    throw DomainError("class_membership: element is not invertible");
  }
  const RatGroupRingElement p = x * x.involute();
  if (p.is_one()) return SelfDualClass::Strict;
  for (const auto& c : p.coefficients())
    if (c.get_den() != 1) return SelfDualClass::Neither;
  const auto z = map_coefficients<mpz_class>(p, [](const mpq_class& c) { return mpz_class(c.get_num()); });
  return is_integral_unit(z) ? SelfDualClass::UnitSelfDual : SelfDualClass::Neither;
}

SelfDualClass class_membership(const CycGroupRingElement& x) {
  if (std::holds_alternative<NotInvertible>(try_invert(x))) {
    throw DomainError("class_membership: element is not invertible");
  }
  const CycGroupRingElement p = x * x.involute();
  if (p.is_one()) return SelfDualClass::Strict;
  return is_integral_unit(p) ? SelfDualClass::UnitSelfDual : SelfDualClass::Neither;
}

RatGroupRingElement parse_rational_element(const FiniteAbelianGroup& g, std::string_view text) {
  RatGroupRingElement out(g);
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty() || s == "0") return out;
  // Split on '+' that are not part of a leading sign, i.e. after a term.
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t end = pos;
    int depth = 0;
    for (; end < s.size(); ++end) {
      if (s[end] == '[') ++depth;
      if (s[end] == ']') --depth;
      if (depth == 0 && s[end] == '+' && end > pos) break;
    }
    const std::string term = s.substr(pos, end - pos);
    pos = end + 1;
    std::string coeff = term, elem;
    const auto br = term.find('[');
    if (br != std::string::npos) {
      if (term.back() != ']') throw DomainError("malformed group ring term '" + term + "'");
      coeff = term.substr(0, br);
      elem = term.substr(br + 1, term.size() - br - 2);
      if (!coeff.empty() && coeff.back() == '*') coeff.pop_back();
    }
    mpq_class c;
    if (coeff.empty() || coeff == "+") {
      c = 1;
    } else if (coeff == "-") {
      c = -1;
    } else {
      if (coeff.front() == '+') coeff.erase(0, 1);
      if (c.set_str(coeff, 10) != 0) throw DomainError("bad coefficient '" + coeff + "'");
      c.canonicalize();
    }
    std::vector<std::int64_t> exps;
    if (!elem.empty()) {
      std::size_t p = 0;
      while (p <= elem.size()) {
        std::size_t q = elem.find(',', p);
        if (q == std::string::npos) q = elem.size();
        try {
          exps.push_back(std::stoll(elem.substr(p, q - p)));
        } catch (const std::exception&) {
          throw DomainError("bad group element '[" + elem + "]'");
        }
        p = q + 1;
      }
    }
    GroupElement ge = g.identity();
    if (!elem.empty()) {
      if (exps.size() != g.rank() && !(g.rank() == 0 && exps == std::vector<std::int64_t>{0})) {
        throw DomainError("group element '[" + elem + "]' has wrong rank");
      }
      if (g.rank() > 0) {
        for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = mod(exps[i], g.invariant_factors()[i]);
        ge = g.element(exps);
      }
    }
    out.set_coefficient(ge, out.coefficient(ge) + c);
  }
  return out;
}

}  // namespace gformlab
