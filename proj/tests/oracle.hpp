#pragma once

// Independent numeric oracles for the unit tests. Everything here works in
// complex floating point through explicit embeddings, so it shares no code
// path with the exact library beyond reading coefficients.

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "gformlab/cyclotomic.hpp"
#include "gformlab/number_fields.hpp"

namespace oracle {

using cd = std::complex<double>;
inline constexpr double kTwoPi = 6.283185307179586476925286766559;

inline cd root(std::int64_t n, std::int64_t k) { return std::polar(1.0, kTwoPi * static_cast<double>(k) / n); }

/// Embedding zeta_n -> exp(2 pi i k / n) applied to the power-basis coefficients.
inline cd embed(const gformlab::CyclotomicNumber& x, std::int64_t k = 1) {
  cd acc = 0;
  const auto& c = x.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) acc += c[i].get_d() * root(x.level(), k * static_cast<std::int64_t>(i));
  return acc;
}

inline std::int64_t gcd(std::int64_t a, std::int64_t b) { return b == 0 ? (a < 0 ? -a : a) : gcd(b, a % b); }

/// Brute-force discrete log to base r modulo a prime.
inline std::int64_t dlog(std::int64_t r, std::int64_t a, std::int64_t p) {
  std::int64_t x = 1;
  for (std::int64_t k = 0; k < p - 1; ++k, x = x * r % p)
    if (x == a % p) return k;
  return -1;
}

/// Least primitive root of a prime, by brute force.
inline std::int64_t least_primitive_root(std::int64_t p) {
  for (std::int64_t r = 2; r < p; ++r) {
    std::int64_t x = 1, order = 0;
    do {
      x = x * r % p;
      ++order;
    } while (x != 1);
    if (order == p - 1) return r;
  }
  return 1;
}

/// Complex values of the Gaussian periods of the degree-p subfield of Q(zeta_f),
/// f prime, ordered as eta_i = sum over the index-p subgroup of zeta^{g^i h}
/// with g the least residue of index 1 mod p.
inline std::vector<cd> periods(std::int64_t p, std::int64_t f) {
  const std::int64_t r = least_primitive_root(f);
  std::int64_t g = 0;
  for (std::int64_t a = 2; a < f && g == 0; ++a)
    if (dlog(r, a, f) % p == 1) g = a;
  std::vector<cd> eta(static_cast<std::size_t>(p), 0);
  std::int64_t gi = 1;
  for (std::int64_t i = 0; i < p; ++i, gi = gi * g % f)
    for (std::int64_t a = 1; a < f; ++a)
      if (dlog(r, a, f) % p == 0) eta[static_cast<std::size_t>(i)] += root(f, gi * a);
  return eta;
}

/// Conjugates of a field element given in period coordinates: sigma^j shifts
/// the period index by j.
inline std::vector<cd> conjugates(const std::vector<cd>& eta, const gformlab::FieldVector& a) {
  const std::size_t p = eta.size();
  std::vector<cd> out(p, 0);
  for (std::size_t j = 0; j < p; ++j)
    for (std::size_t i = 0; i < p; ++i) out[j] += a[i].get_d() * eta[(i + j) % p];
  return out;
}

inline double trace_product(const std::vector<cd>& eta, const gformlab::FieldVector& a,
                            const gformlab::FieldVector& b) {
  const auto ca = conjugates(eta, a), cb = conjugates(eta, b);
  cd t = 0;
  for (std::size_t j = 0; j < ca.size(); ++j) t += ca[j] * cb[j];
  return t.real();
}

inline bool near(double a, double b, double tol = 1e-8) { return std::abs(a - b) < tol; }
inline bool near(cd a, cd b, double tol = 1e-8) { return std::abs(a - b) < tol; }

}  // namespace oracle
