#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gformlab {

/// Default cap on the cyclotomic level n; override with GFORM_LAB_MAX_LEVEL.
inline constexpr std::int64_t kDefaultMaxLevel = 200;

/// Current level cap (environment value on first use, or the last override).
std::int64_t max_level();
void set_max_level(std::int64_t level);

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<mpz_class>& cyclotomic_polynomial(std::int64_t n);

/// An exact element of Q(zeta_n), stored in the power basis
/// 1, zeta_n, ..., zeta_n^{phi(n)-1} modulo Phi_n. zeta_n is the compatible
/// root exp(2 pi i / n); inside a larger level N it is zeta_N^{N/n}.
///
/// Binary operations on operands of different levels raise both to the lcm.
/// Equality is representation independent (compared at a common level).
class CyclotomicNumber {
 public:
  CyclotomicNumber();  // zero at level 1
  CyclotomicNumber(const mpq_class& q, std::int64_t level = 1);  // NOLINT(implicit)
  CyclotomicNumber(long q);                                      // NOLINT(implicit)

  static CyclotomicNumber zeta_power(std::int64_t level, std::int64_t k);
  static CyclotomicNumber from_coefficients(std::int64_t level, std::vector<mpq_class> coeffs);

  std::int64_t level() const { return level_; }
  const std::vector<mpq_class>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  std::optional<mpq_class> as_rational() const;
  /// True iff every power-basis coefficient is an integer (Z[zeta_n] is maximal).
  bool is_algebraic_integer() const;

  /// Same number expressed at level n, which must be a multiple of level().
  CyclotomicNumber raised_to(std::int64_t n) const;
  /// Same number at level d if it lies in Q(zeta_d), else nullopt.
  std::optional<CyclotomicNumber> lowered_to(std::int64_t d) const;

  CyclotomicNumber inverse() const;
  CyclotomicNumber pow(std::int64_t e) const;
  /// sigma_k: zeta_n -> zeta_n^k. Requires gcd(k, level) = 1.
  CyclotomicNumber galois(std::int64_t k) const;
  mpq_class trace() const;  // to Q
  mpq_class norm() const;   // to Q

  CyclotomicNumber& operator+=(const CyclotomicNumber& o);
  CyclotomicNumber& operator-=(const CyclotomicNumber& o);
  CyclotomicNumber& operator*=(const CyclotomicNumber& o);
  CyclotomicNumber& operator/=(const CyclotomicNumber& o);
  CyclotomicNumber operator-() const;

  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
  friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator/(CyclotomicNumber a, const CyclotomicNumber& b) { return a /= b; }
  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);

  std::string to_string() const;

 private:
  std::int64_t level_ = 1;
  std::vector<mpq_class> coeffs_;
};

/// Total order on representations (at a common level, lexicographic on
/// coefficients). Used for canonical orbit representatives.
int compare(const CyclotomicNumber& a, const CyclotomicNumber& b);

/// zeta_N^{N/n}: the compatible primitive n-th root inside level N.
CyclotomicNumber compatible_root(std::int64_t n, std::int64_t ambient);

/// sigma_k on Q(zeta_n).
struct GaloisAutomorphism {
  std::int64_t level = 1;
  std::int64_t k = 1;

  GaloisAutomorphism(std::int64_t level, std::int64_t k);
  GaloisAutomorphism compose(const GaloisAutomorphism& other) const;
  CyclotomicNumber operator()(const CyclotomicNumber& x) const;
};

CyclotomicNumber apply_galois(const GaloisAutomorphism& sigma, const CyclotomicNumber& x);

/// Sum of sigma_k(x) over the subgroup H of (Z/n)^x generated by `generators`,
/// n = x.level() (x is raised to lcm(level, n) if a modulus is supplied).
CyclotomicNumber trace_to_subfield(const CyclotomicNumber& x,
                                   const std::vector<std::int64_t>& generators,
                                   std::int64_t modulus = 0);

// Field contract for the generic linear algebra templates.
inline bool field_is_zero(const CyclotomicNumber& x) { return x.is_zero(); }
inline CyclotomicNumber field_inverse(const CyclotomicNumber& x) { return x.inverse(); }

}  // namespace gformlab
