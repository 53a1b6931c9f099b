#pragma once

// Group rings RG of a finite abelian group, R in {Z, Q, Q(zeta_n)}.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gformlab/abelian_groups.hpp"
#include "gformlab/cyclotomic.hpp"
#include "gformlab/error.hpp"
#include "gformlab/linalg.hpp"

namespace gformlab {

// Coefficient-ring contract: zero test, cyclotomic embedding, and the
// conversion back from a cyclotomic value (nullopt if it is not in R).
inline bool ring_is_zero(const mpz_class& x) { return sgn(x) == 0; }
inline bool ring_is_zero(const mpq_class& x) { return sgn(x) == 0; }
inline bool ring_is_zero(const CyclotomicNumber& x) { return x.is_zero(); }

inline CyclotomicNumber to_cyclotomic(const mpz_class& x) { return CyclotomicNumber(mpq_class(x)); }
inline CyclotomicNumber to_cyclotomic(const mpq_class& x) { return CyclotomicNumber(x); }
inline const CyclotomicNumber& to_cyclotomic(const CyclotomicNumber& x) { return x; }

inline std::int64_t ring_level(const mpz_class&) { return 1; }
inline std::int64_t ring_level(const mpq_class&) { return 1; }
inline std::int64_t ring_level(const CyclotomicNumber& x) { return x.level(); }

template <class R>
struct RingTraits;
template <>
struct RingTraits<mpz_class> {
  static std::optional<mpz_class> from_cyclotomic(const CyclotomicNumber& x, std::int64_t) {
    auto q = x.as_rational();
    if (!q || q->get_den() != 1) return std::nullopt;
    return mpz_class(q->get_num());
  }
  static std::string format(const mpz_class& x) { return x.get_str(); }
};
template <>
struct RingTraits<mpq_class> {
  static std::optional<mpq_class> from_cyclotomic(const CyclotomicNumber& x, std::int64_t) {
    return x.as_rational();
  }
  static std::string format(const mpq_class& x) { return x.get_str(); }
};
template <>
struct RingTraits<CyclotomicNumber> {
  // Lowered to `level` when possible, so results stay in the smallest field
  // the inputs generate.
  static std::optional<CyclotomicNumber> from_cyclotomic(const CyclotomicNumber& x,
                                                         std::int64_t level) {
    if (level > 0 && level != x.level()) {
      if (auto y = x.lowered_to(level)) return y;
    }
    return x;
  }
  static std::string format(const CyclotomicNumber& x) { return "(" + x.to_string() + ")"; }
};

/// Element of RG. Coefficients are stored densely in the canonical group
/// enumeration order; the group is small in every use (|G| <= 10^4).
template <class R>
class GroupRingElement {
 public:
  GroupRingElement() = default;
  explicit GroupRingElement(FiniteAbelianGroup g)
      : group_(std::move(g)), coeffs_(static_cast<std::size_t>(group_.order()), R(0)) {}

  static GroupRingElement one(const FiniteAbelianGroup& g) { return basis(g, g.identity()); }
  static GroupRingElement basis(const FiniteAbelianGroup& g, const GroupElement& s,
                                const R& c = R(1)) {
    GroupRingElement x(g);
    x.coeffs_[g.index_of(s)] = c;
    return x;
  }
  static GroupRingElement from_dense(const FiniteAbelianGroup& g, std::vector<R> coeffs) {
    if (coeffs.size() != static_cast<std::size_t>(g.order())) {
      throw DomainError("group ring: coefficient vector has wrong length");
    }
    GroupRingElement x;
    x.group_ = g;
    x.coeffs_ = std::move(coeffs);
    return x;
  }

  const FiniteAbelianGroup& group() const { return group_; }
  /// Dense coefficients; entry i belongs to group().element_at(i).
  const std::vector<R>& coefficients() const { return coeffs_; }
  const R& coefficient(const GroupElement& s) const { return coeffs_[group_.index_of(s)]; }
  void set_coefficient(const GroupElement& s, R c) { coeffs_[group_.index_of(s)] = std::move(c); }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!ring_is_zero(c)) return false;
    return true;
  }
  bool is_one() const { return *this == one(group_); }

  /// Elements with nonzero coefficient, in canonical order.
  std::vector<GroupElement> support() const {
    std::vector<GroupElement> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!ring_is_zero(coeffs_[i])) out.push_back(group_.element_at(i));
    return out;
  }

  /// gamma^{[-1]}: the coefficient at s moves to s^{-1}.
  GroupRingElement involute() const {
    GroupRingElement out(group_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      out.coeffs_[group_.index_of(group_.inverse(group_.element_at(i)))] = coeffs_[i];
    }
    return out;
  }

  /// gamma * t.
  GroupRingElement shifted(const GroupElement& t) const {
    GroupRingElement out(group_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      out.coeffs_[group_.index_of(group_.multiply(group_.element_at(i), t))] = coeffs_[i];
    }
    return out;
  }

  GroupRingElement& operator+=(const GroupRingElement& o) {
    check_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  GroupRingElement& operator-=(const GroupRingElement& o) {
    check_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  GroupRingElement operator-() const {
    GroupRingElement out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }
  GroupRingElement scaled(const R& c) const {
    GroupRingElement out = *this;
    for (auto& x : out.coeffs_) x = x * c;
    return out;
  }

  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
    a.check_same(b);
    const FiniteAbelianGroup& g = a.group_;
    GroupRingElement out(g);
    const std::size_t n = a.coeffs_.size();
    std::vector<GroupElement> elems(n);
    for (std::size_t i = 0; i < n; ++i) elems[i] = g.element_at(i);
    for (std::size_t i = 0; i < n; ++i) {
      if (ring_is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (ring_is_zero(b.coeffs_[j])) continue;
        out.coeffs_[g.index_of(g.multiply(elems[i], elems[j]))] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return out;
  }
  GroupRingElement& operator*=(const GroupRingElement& o) { return *this = *this * o; }

  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
    if (!(a.group_ == b.group_)) return false;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      if (!(a.coeffs_[i] == b.coeffs_[i])) return false;
    return true;
  }

  /// Text form "c*[e1,...,ek] + ..." in canonical order; "0" for zero.
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (ring_is_zero(coeffs_[i])) continue;
      if (!out.empty()) out += " + ";
      out += RingTraits<R>::format(coeffs_[i]) + "*" + group_.element_to_string(group_.element_at(i));
    }
    return out.empty() ? "0" : out;
  }

 private:
  void check_same(const GroupRingElement& o) const {
    if (!(group_ == o.group_)) throw DomainError("group ring elements over different groups");
  }

  FiniteAbelianGroup group_;
  std::vector<R> coeffs_;
};

using IntGroupRingElement = GroupRingElement<mpz_class>;
using RatGroupRingElement = GroupRingElement<mpq_class>;
using CycGroupRingElement = GroupRingElement<CyclotomicNumber>;

template <class S, class R, class Fn>
GroupRingElement<S> map_coefficients(const GroupRingElement<R>& x, Fn fn) {
  std::vector<S> out;
  out.reserve(x.coefficients().size());
  for (const auto& c : x.coefficients()) out.push_back(fn(c));
  return GroupRingElement<S>::from_dense(x.group(), std::move(out));
}

inline RatGroupRingElement to_rational(const IntGroupRingElement& x) {
  return map_coefficients<mpq_class>(x, [](const mpz_class& c) { return mpq_class(c); });
}
template <class R>
CycGroupRingElement to_cyclotomic(const GroupRingElement<R>& x) {
  return map_coefficients<CyclotomicNumber>(x, [](const R& c) { return CyclotomicNumber(to_cyclotomic(c)); });
}

/// Character values chi -> sum_s c_s chi(s), indexed like enumerate_characters.
struct FourierVector {
  FiniteAbelianGroup group;
  std::vector<CyclotomicNumber> values;

  const CyclotomicNumber& at(const Character& chi) const { return values[group.index_of(chi)]; }
  friend bool operator==(const FourierVector&, const FourierVector&) = default;
};

/// Transform of a dense coefficient vector already embedded in Q(zeta_n).
FourierVector fourier_dense(const FiniteAbelianGroup& g, const std::vector<CyclotomicNumber>& coeffs);
/// Inverse transform (divides by |G|); coefficients come back at the common level.
std::vector<CyclotomicNumber> fourier_inverse_dense(const FourierVector& v);

template <class R>
FourierVector fourier(const GroupRingElement<R>& x) {
  std::vector<CyclotomicNumber> coeffs;
  coeffs.reserve(x.coefficients().size());
  for (const auto& c : x.coefficients()) coeffs.push_back(to_cyclotomic(c));
  return fourier_dense(x.group(), coeffs);
}

/// Inverse transform into RG; throws DomainError if a coefficient leaves R.
/// For cyclotomic R the coefficients are lowered to `level` where possible.
template <class R>
GroupRingElement<R> fourier_inverse(const FourierVector& v, std::int64_t level = 0) {
  std::vector<R> out;
  for (const auto& c : fourier_inverse_dense(v)) {
    auto r = RingTraits<R>::from_cyclotomic(c, level);
    if (!r) throw DomainError("inverse Fourier coefficient " + c.to_string() + " is not in the coefficient ring");
    out.push_back(std::move(*r));
  }
  return GroupRingElement<R>::from_dense(v.group, std::move(out));
}

/// The character at which a non-invertible element's transform vanishes.
struct NotInvertible {
  Character killing_character;
};

template <class R>
std::int64_t coefficient_level(const GroupRingElement<R>& x) {
  std::int64_t level = 1;
  for (const auto& c : x.coefficients()) {
    if (!ring_is_zero(c)) level = lcm(level, ring_level(c));
  }
  return level;
}

/// Inverse via the Fourier transform over a field R (Q or Q(zeta_n)).
/// The product with the input is re-checked against 1.
template <class R>
std::variant<GroupRingElement<R>, NotInvertible> try_invert(const GroupRingElement<R>& x) {
  FourierVector v = fourier(x);
  for (std::size_t i = 0; i < v.values.size(); ++i) {
    if (v.values[i].is_zero()) return NotInvertible{x.group().character_at(i)};
  }
  for (auto& val : v.values) val = val.inverse();
  GroupRingElement<R> inv = fourier_inverse<R>(v, coefficient_level(x));
  if (!(x * inv).is_one()) throw VerificationFailure("group ring inverse failed its product check");
  return inv;
}

/// Oracle: solve gamma * y = 1 in the regular representation by Gaussian
/// elimination. nullopt iff gamma is not invertible.
template <class R>
std::optional<GroupRingElement<R>> regular_representation_inverse(const GroupRingElement<R>& x) {
  const FiniteAbelianGroup& g = x.group();
  const std::size_t n = x.coefficients().size();
  // Column t holds the coefficients of gamma * t.
  Matrix<R> m(n, n, R(0));
  for (std::size_t t = 0; t < n; ++t) {
    const GroupElement te = g.element_at(t);
    for (std::size_t s = 0; s < n; ++s) {
      m(g.index_of(g.multiply(g.element_at(s), te)), t) = x.coefficients()[s];
    }
  }
  std::vector<R> rhs(n, R(0));
  rhs[0] = R(1);
  auto sol = solve_square<R>(std::move(m), std::move(rhs));
  if (!sol) return std::nullopt;
  return GroupRingElement<R>::from_dense(g, std::move(*sol));
}

/// True iff gamma is invertible in QG and the inverse has integer coefficients.
bool is_integral_unit(const IntGroupRingElement& x);
/// Same test for elements over Q(zeta): invertible, and both gamma and its
/// inverse have algebraic-integer coefficients.
bool is_integral_unit(const CycGroupRingElement& x);

enum class SelfDualClass { Strict, UnitSelfDual, Neither };
std::string to_string(SelfDualClass c);

/// Membership in FG_(1) (gamma gamma^{[-1]} = 1) or FG_(s)
/// (gamma gamma^{[-1]} an integral unit). Throws DomainError if gamma is not
/// invertible.
SelfDualClass class_membership(const RatGroupRingElement& x);
SelfDualClass class_membership(const CycGroupRingElement& x);

/// Parses the text form over Q ("1/2*[1] + -3*[0]"; a bare coefficient means
/// the identity).
RatGroupRingElement parse_rational_element(const FiniteAbelianGroup& g, std::string_view text);

}  // namespace gformlab
