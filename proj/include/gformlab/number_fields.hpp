#pragma once

// Cyclic degree-p subfields K of Q(zeta_f) with Gaussian-period bases, and
// fractional-ideal arithmetic on them (different, A = sqrt of the inverse
// different, trace duals).

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gformlab/abelian_groups.hpp"
#include "gformlab/cyclotomic.hpp"
#include "gformlab/linalg.hpp"

namespace gformlab {

/// Element of K in period coordinates: a = sum_i a_i eta_i.
using FieldVector = std::vector<mpq_class>;

/// K = Q(zeta_f)^H where H = ker(h) for a surjective character
/// h : (Z/f)^x -> Z/p. h is given by one exponent e_l in 1..p-1 per prime
/// l | f: h(a) = sum_l e_l * ind_l(a mod l) mod p, ind_l the discrete log to
/// the least primitive root mod l. All e_l nonzero means conductor exactly f.
///
/// Periods: eta_i = sum_{k in H} zeta_f^{g^i k}, g the least residue with
/// h(g) = 1. sigma := sigma_g generates Gal(K/Q) and shifts eta_i -> eta_{i+1}.
class PeriodField {
 public:
  static std::shared_ptr<const PeriodField> build(std::int64_t p, std::int64_t f);
  static std::shared_ptr<const PeriodField> build(std::int64_t p, std::int64_t f,
                                                  std::vector<std::int64_t> exponents);

  std::int64_t degree() const { return p_; }
  std::int64_t conductor() const { return f_; }
  const std::vector<std::int64_t>& ramified_primes() const { return primes_; }
  const std::vector<std::int64_t>& exponents() const { return exps_; }
  /// h(a) in Z/p for a unit a mod f.
  std::int64_t character(std::int64_t a) const;
  std::int64_t generator_residue() const { return g_; }
  const std::vector<std::int64_t>& kernel() const { return kernel_; }
  const std::vector<CyclotomicNumber>& periods() const { return periods_; }
  /// Tr(eta_i eta_j).
  const RatMatrix& trace_matrix() const { return trace_matrix_; }
  /// eta_i eta_j = sum_k table[i][j][k] eta_k.
  const std::vector<std::vector<FieldVector>>& multiplication_table() const { return table_; }
  /// Basis of O_K as rows in period coordinates (HNF).
  const IntMatrix& integral_basis() const { return integral_basis_; }
  /// disc of the integral basis; equals f^{p-1} (checked at build).
  const mpz_class& discriminant() const { return disc_; }

  FieldVector zero() const { return FieldVector(static_cast<std::size_t>(p_), 0); }
  FieldVector one() const { return one_; }
  FieldVector rational(const mpq_class& q) const;
  FieldVector period(std::size_t i) const;

  FieldVector add(const FieldVector& a, const FieldVector& b) const;
  FieldVector subtract(const FieldVector& a, const FieldVector& b) const;
  FieldVector scale(const FieldVector& a, const mpq_class& q) const;
  FieldVector multiply(const FieldVector& a, const FieldVector& b) const;
  /// Column i = coordinates of eta_i * b.
  RatMatrix multiplication_matrix(const FieldVector& b) const;
  std::optional<FieldVector> inverse(const FieldVector& a) const;
  /// sigma^j(a).
  FieldVector sigma(const FieldVector& a, std::int64_t j = 1) const;
  mpq_class trace(const FieldVector& a) const;
  mpq_class norm(const FieldVector& a) const;
  bool is_integral(const FieldVector& a) const;

  CyclotomicNumber to_cyclotomic(const FieldVector& a) const;
  /// Coordinates of x if x lies in K (checked by reconstruction).
  std::optional<FieldVector> from_cyclotomic(const CyclotomicNumber& x) const;

  /// M_ij = Tr(x_i x_j).
  RatMatrix trace_gram(const std::vector<FieldVector>& xs) const;

  std::string name() const;

 private:
  PeriodField() = default;
  void check(const FieldVector& a) const;

  std::int64_t p_ = 0, f_ = 0, g_ = 0;
  std::vector<std::int64_t> primes_, exps_, roots_;
  std::vector<std::vector<std::int64_t>> dlog_;  // per prime: residue -> index
  std::vector<std::int64_t> kernel_;
  std::vector<CyclotomicNumber> periods_;
  RatMatrix trace_matrix_, trace_matrix_inverse_;
  std::vector<std::vector<FieldVector>> table_;
  FieldVector one_;
  IntMatrix integral_basis_;
  RatMatrix integral_basis_inverse_;
  mpz_class disc_;
};

using FieldPtr = std::shared_ptr<const PeriodField>;

/// Fractional ideal: (1/denominator) * Z-span of the HNF rows, in period
/// coordinates. The representation is canonical, so == is ideal equality.
class FractionalIdeal {
 public:
  /// Z-span of the generators (need not be independent), which must form an
  /// O_K-module; this is checked.
  static FractionalIdeal from_generators(FieldPtr k, const std::vector<FieldVector>& gens);
  static FractionalIdeal ring_of_integers(FieldPtr k);
  static FractionalIdeal principal(FieldPtr k, const FieldVector& x);

  const FieldPtr& field() const { return field_; }
  const IntMatrix& hnf() const { return hnf_; }
  const mpz_class& denominator() const { return den_; }
  /// Z-basis vectors.
  std::vector<FieldVector> basis() const;
  /// Matrix whose columns are the basis vectors.
  RatMatrix basis_columns() const;

  FractionalIdeal operator*(const FractionalIdeal& o) const;
  FractionalIdeal inverse() const;
  FractionalIdeal pow(std::int64_t e) const;
  /// {x : Tr(x L) in Z}.
  FractionalIdeal dual() const;
  FractionalIdeal operator+(const FractionalIdeal& o) const;

  bool contains(const FieldVector& x) const;
  bool contains(const FractionalIdeal& o) const;
  /// [O : I] as a rational (multiplicative in I).
  mpq_class norm() const;
  mpq_class gram_determinant() const;
  /// Trace Gram matrix of the HNF basis.
  RatMatrix gram() const;

  friend bool operator==(const FractionalIdeal& a, const FractionalIdeal& b) {
    return a.den_ == b.den_ && a.hnf_ == b.hnf_;
  }
  std::string to_string() const;

 private:
  static FractionalIdeal normalize(FieldPtr k, const std::vector<FieldVector>& gens, bool check_module);

  FieldPtr field_;
  IntMatrix hnf_;
  mpz_class den_ = 1;
};

/// The unique prime above a ramified l, as (l, eta_i - c); verified by
/// norm l and L^p = lO.
FractionalIdeal prime_above(const FieldPtr& k, std::int64_t l);
/// Hilbert's formula in the tame case: prod_l L_l^{p-1}.
FractionalIdeal different(const FieldPtr& k);
/// prod_l L_l^{-(p-1)/2}; verified A^2 = different^{-1}.
FractionalIdeal sqrt_inverse_different(const FieldPtr& k);
inline FractionalIdeal dual_lattice(const FractionalIdeal& l) { return l.dual(); }

/// Identification Gal(K/Q) -> G = C_p sending sigma to gen^u.
struct HomToG {
  FieldPtr field;
  std::int64_t u = 1;

  HomToG() = default;
  HomToG(FieldPtr k, std::int64_t u_in);

  FiniteAbelianGroup group() const;
  /// j such that s acts on K as sigma^j.
  std::int64_t sigma_power(const GroupElement& s) const;
  FieldVector act(const GroupElement& s, const FieldVector& a) const;
  /// h^{-1} on the same field.
  HomToG inverse() const;
  /// The G-valued character a -> u h(a) of (Z/f)^x, as an exponent mod p.
  std::int64_t value(std::int64_t a) const;
};

/// The field cut out by h1 h2 inside Q(zeta_{f1 f2}) (composite character
/// per prime: u_i e_l), with the identification u = 1. Throws DomainError
/// when the product character is trivial.
HomToG compose_fields(const HomToG& h1, const HomToG& h2);

}  // namespace gformlab
