#include "gformlab/cyclotomic.hpp"

#include <atomic>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "gformlab/abelian_groups.hpp"
#include "gformlab/error.hpp"
#include "gformlab/linalg.hpp"

namespace gformlab {
namespace {

std::int64_t level_from_environment() {
  if (const char* env = std::getenv("GFORM_LAB_MAX_LEVEL")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return v;
  }
  return kDefaultMaxLevel;
}

std::atomic<std::int64_t>& level_cap() {
  static std::atomic<std::int64_t> cap{level_from_environment()};
  return cap;
}

// Per-level data: Phi_n and the reductions x^i mod Phi_n for 0 <= i < n.
struct LevelData {
  std::int64_t n = 1;
  std::size_t phi = 1;
  std::vector<mpz_class> poly;
  std::vector<std::vector<mpz_class>> power_reduction;
};

std::vector<mpz_class> compute_cyclotomic_polynomial(std::int64_t n) {
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, by exact division.
  std::vector<mpz_class> num(static_cast<std::size_t>(n) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (std::int64_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& den = cyclotomic_polynomial(d);
    const std::size_t dd = den.size() - 1;
    std::vector<mpz_class> quot(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
      const mpz_class c = num[i];  // den is monic
      quot[i - dd] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    for (std::size_t i = 0; i < dd; ++i) {
      if (num[i] != 0) throw VerificationFailure("cyclotomic division left a remainder");
    }
    num = std::move(quot);
  }
  return num;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::int64_t, std::unique_ptr<LevelData>>& level_cache() {
  static std::map<std::int64_t, std::unique_ptr<LevelData>> cache;
  return cache;
}

std::map<std::int64_t, std::vector<mpz_class>>& poly_cache() {
  static std::map<std::int64_t, std::vector<mpz_class>> cache;
  return cache;
}

const LevelData& level_data(std::int64_t n) {
  if (n < 1) throw DomainError("cyclotomic level must be positive");
  if (n > max_level()) {
    throw BoundExceeded("cyclotomic level " + std::to_string(n) + " exceeds cap " +
                        std::to_string(max_level()) + " (GFORM_LAB_MAX_LEVEL)");
  }
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = level_cache().find(n);
    if (it != level_cache().end()) return *it->second;
  }
  auto data = std::make_unique<LevelData>();
  data->n = n;
  data->poly = cyclotomic_polynomial(n);
  data->phi = data->poly.size() - 1;
  const std::size_t phi = data->phi;
  data->power_reduction.assign(static_cast<std::size_t>(n), std::vector<mpz_class>(phi, 0));
  std::vector<mpz_class> cur(phi, 0);
  cur[0] = 1;
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
    data->power_reduction[i] = cur;
    // cur <- x * cur mod Phi_n
    mpz_class top = cur[phi - 1];
    for (std::size_t j = phi - 1; j > 0; --j) cur[j] = cur[j - 1] - top * data->poly[j];
    cur[0] = -top * data->poly[0];
  }
  std::lock_guard<std::mutex> lock(cache_mutex());
  auto [it, inserted] = level_cache().emplace(n, std::move(data));
  return *it->second;
}

// Folds a length-n vector of coefficients on zeta^0..zeta^{n-1} into the
// power basis.
std::vector<mpq_class> fold(const LevelData& ld, const std::vector<mpq_class>& cyclic) {
  std::vector<mpq_class> out(ld.phi, 0);
  for (std::size_t i = 0; i < cyclic.size(); ++i) {
    if (sgn(cyclic[i]) == 0) continue;
    if (i < ld.phi) {
      out[i] += cyclic[i];
      continue;
    }
    const auto& red = ld.power_reduction[i];
    for (std::size_t j = 0; j < ld.phi; ++j)
      if (red[j] != 0) out[j] += cyclic[i] * red[j];
  }
  return out;
}

// Polynomial helpers over Q for the extended Euclidean algorithm.
using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  trim(c);
  return c;
}

QPoly poly_sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

void poly_divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, 0);
  const mpq_class lead = b.back();
  while (!r.empty() && r.size() >= b.size()) {
    const std::size_t shift = r.size() - b.size();
    const mpq_class c = r.back() / lead;
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
    r.pop_back();
    trim(r);
  }
  trim(q);
}

struct EmbeddingInverse {
  std::vector<std::size_t> rows;  // selected rows of the embedding matrix
  RatMatrix inverse;              // inverse of the selected square block
};

std::mutex& embedding_mutex() {
  static std::mutex m;
  return m;
}

const EmbeddingInverse& embedding_inverse(std::int64_t d, std::int64_t big) {
  static std::map<std::pair<std::int64_t, std::int64_t>, std::unique_ptr<EmbeddingInverse>> cache;
  {
    std::lock_guard<std::mutex> lock(embedding_mutex());
    auto it = cache.find({d, big});
    if (it != cache.end()) return *it->second;
  }
  const LevelData& small = level_data(d);
  const LevelData& large = level_data(big);
  // Columns: images of zeta_d^j in the level-`big` power basis.
  RatMatrix e(large.phi, small.phi, 0);
  for (std::size_t j = 0; j < small.phi; ++j) {
    const auto img = CyclotomicNumber::zeta_power(d, static_cast<std::int64_t>(j)).raised_to(big);
    for (std::size_t i = 0; i < large.phi; ++i) e(i, j) = img.coefficients()[i];
  }
  // Greedy row selection by elimination on a working copy.
  auto result = std::make_unique<EmbeddingInverse>();
  RatMatrix work = e;
  std::vector<std::vector<mpq_class>> basis;  // reduced rows with pivot columns
  std::vector<std::size_t> pivots;
  for (std::size_t i = 0; i < large.phi && result->rows.size() < small.phi; ++i) {
    std::vector<mpq_class> r = work.row(i);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (sgn(r[pivots[b]]) == 0) continue;
      const mpq_class f = r[pivots[b]] / basis[b][pivots[b]];
      for (std::size_t j = 0; j < small.phi; ++j) r[j] -= f * basis[b][j];
    }
    std::size_t piv = 0;
    while (piv < small.phi && sgn(r[piv]) == 0) ++piv;
    if (piv == small.phi) continue;
    basis.push_back(r);
    pivots.push_back(piv);
    result->rows.push_back(i);
  }
  RatMatrix block(small.phi, small.phi);
  for (std::size_t a = 0; a < small.phi; ++a)
    for (std::size_t j = 0; j < small.phi; ++j) block(a, j) = e(result->rows[a], j);
  auto inv = gformlab::inverse(block);
  if (!inv) throw VerificationFailure("embedding of cyclotomic subfield is degenerate");
  result->inverse = std::move(*inv);
  std::lock_guard<std::mutex> lock(embedding_mutex());
  auto [it, inserted] = cache.emplace(std::make_pair(d, big), std::move(result));
  return *it->second;
}

}  // namespace

std::int64_t max_level() { return level_cap().load(); }
void set_max_level(std::int64_t level) { level_cap().store(level); }

const std::vector<mpz_class>& cyclotomic_polynomial(std::int64_t n) {
  if (n < 1) throw DomainError("cyclotomic polynomial index must be positive");
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = poly_cache().find(n);
    if (it != poly_cache().end()) return it->second;
  }
  std::vector<mpz_class> poly;
  if (n == 1) {
    poly = {-1, 1};
  } else {
    poly = compute_cyclotomic_polynomial(n);
  }
  std::lock_guard<std::mutex> lock(cache_mutex());
  return poly_cache().emplace(n, std::move(poly)).first->second;
}

CyclotomicNumber::CyclotomicNumber() : level_(1), coeffs_(1, 0) {}

CyclotomicNumber::CyclotomicNumber(const mpq_class& q, std::int64_t level) : level_(level) {
  const LevelData& ld = level_data(level);
  coeffs_.assign(ld.phi, 0);
  coeffs_[0] = q;
}

CyclotomicNumber::CyclotomicNumber(long q) : CyclotomicNumber(mpq_class(q), 1) {}

CyclotomicNumber CyclotomicNumber::zeta_power(std::int64_t level, std::int64_t k) {
  const LevelData& ld = level_data(level);
  CyclotomicNumber x;
  x.level_ = level;
  x.coeffs_.assign(ld.phi, 0);
  const auto& red = ld.power_reduction[static_cast<std::size_t>(mod(k, level))];
  for (std::size_t j = 0; j < ld.phi; ++j) x.coeffs_[j] = red[j];
  return x;
}

CyclotomicNumber CyclotomicNumber::from_coefficients(std::int64_t level,
                                                     std::vector<mpq_class> coeffs) {
  const LevelData& ld = level_data(level);
  if (coeffs.size() > ld.phi) {
    // Interpret as a polynomial in zeta and reduce.
    std::vector<mpq_class> cyclic(static_cast<std::size_t>(level), 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) cyclic[i % static_cast<std::size_t>(level)] += coeffs[i];
    coeffs = fold(ld, cyclic);
  }
  coeffs.resize(ld.phi, 0);
  CyclotomicNumber x;
  x.level_ = level;
  x.coeffs_ = std::move(coeffs);
  return x;
}

bool CyclotomicNumber::is_zero() const {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

bool CyclotomicNumber::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return false;
  return true;
}

std::optional<mpq_class> CyclotomicNumber::as_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return std::nullopt;
  return coeffs_[0];
}

bool CyclotomicNumber::is_algebraic_integer() const {
  for (const auto& c : coeffs_)
    if (c.get_den() != 1) return false;
  return true;
}

CyclotomicNumber CyclotomicNumber::raised_to(std::int64_t n) const {
  if (n == level_) return *this;
  if (n % level_ != 0) {
    throw DomainError("cannot raise level " + std::to_string(level_) + " to " + std::to_string(n));
  }
  const LevelData& big = level_data(n);
  const std::int64_t step = n / level_;
  std::vector<mpq_class> cyclic(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    cyclic[static_cast<std::size_t>(static_cast<std::int64_t>(i) * step % n)] += coeffs_[i];
  }
  CyclotomicNumber x;
  x.level_ = n;
  x.coeffs_ = fold(big, cyclic);
  return x;
}

std::optional<CyclotomicNumber> CyclotomicNumber::lowered_to(std::int64_t d) const {
  if (d < 1) throw DomainError("cyclotomic level must be positive");
  if (d == level_) return *this;
  const std::int64_t big = lcm(level_, d);
  const CyclotomicNumber x = raised_to(big);
  const EmbeddingInverse& emb = embedding_inverse(d, big);
  std::vector<mpq_class> picked(emb.rows.size());
  for (std::size_t a = 0; a < emb.rows.size(); ++a) picked[a] = x.coeffs_[emb.rows[a]];
  CyclotomicNumber candidate = from_coefficients(d, emb.inverse.apply(picked));
  if (!(candidate.raised_to(big).coeffs_ == x.coeffs_)) return std::nullopt;
  return candidate;
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o) {
  if (o.level_ != level_) {
    const std::int64_t n = lcm(level_, o.level_);
    *this = raised_to(n);
    return *this += o.raised_to(n);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o) {
  if (o.level_ != level_) {
    const std::int64_t n = lcm(level_, o.level_);
    *this = raised_to(n);
    return *this -= o.raised_to(n);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.level_ != b.level_) {
    const std::int64_t n = lcm(a.level_, b.level_);
    return a.raised_to(n) * b.raised_to(n);
  }
  const LevelData& ld = level_data(a.level_);
  const auto n = static_cast<std::size_t>(a.level_);
  // Rational scalars are common; skip the convolution for them.
  if (auto q = a.as_rational()) {
    CyclotomicNumber r = b;
    for (auto& c : r.coeffs_) c *= *q;
    return r;
  }
  if (auto q = b.as_rational()) {
    CyclotomicNumber r = a;
    for (auto& c : r.coeffs_) c *= *q;
    return r;
  }
  std::vector<mpq_class> cyclic(n, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (sgn(b.coeffs_[j]) == 0) continue;
      cyclic[(i + j) % n] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  CyclotomicNumber r;
  r.level_ = a.level_;
  r.coeffs_ = fold(ld, cyclic);
  return r;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& o) {
  *this = *this * o;
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator/=(const CyclotomicNumber& o) {
  *this = *this * o.inverse();
  return *this;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.level_ == b.level_) return a.coeffs_ == b.coeffs_;
  const std::int64_t n = lcm(a.level_, b.level_);
  return a.raised_to(n).coeffs_ == b.raised_to(n).coeffs_;
}

CyclotomicNumber CyclotomicNumber::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(zeta_" + std::to_string(level_) + ")");
  if (auto q = as_rational()) return CyclotomicNumber(mpq_class(1) / *q, level_);
  // Extended Euclid: find u with u * a = 1 mod Phi_n.
  const LevelData& ld = level_data(level_);
  QPoly r0(ld.poly.begin(), ld.poly.end());
  QPoly r1 = coeffs_;
  trim(r1);
  QPoly s0, s1{1};
  while (r1.size() > 1) {
    QPoly q, r;
    poly_divmod(r0, r1, q, r);
    QPoly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty()) throw VerificationFailure("cyclotomic element not coprime to Phi_n");
  for (auto& c : s1) c /= r1[0];
  QPoly q, rem;
  poly_divmod(s1, QPoly(ld.poly.begin(), ld.poly.end()), q, rem);
  rem.resize(ld.phi, 0);
  CyclotomicNumber inv;
  inv.level_ = level_;
  inv.coeffs_ = std::move(rem);
  return inv;
}

CyclotomicNumber CyclotomicNumber::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  CyclotomicNumber result(mpq_class(1), level_);
  CyclotomicNumber base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

CyclotomicNumber CyclotomicNumber::galois(std::int64_t k) const {
  if (gcd(mod(k, level_), level_) != 1 && level_ > 1) {
    throw DomainError(std::to_string(k) + " is not a unit modulo " + std::to_string(level_));
  }
  if (level_ <= 2) return *this;
  const LevelData& ld = level_data(level_);
  const auto n = static_cast<std::size_t>(level_);
  const auto kk = static_cast<std::size_t>(mod(k, level_));
  std::vector<mpq_class> cyclic(n, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) cyclic[i * kk % n] += coeffs_[i];
  CyclotomicNumber r;
  r.level_ = level_;
  r.coeffs_ = fold(ld, cyclic);
  return r;
}

mpq_class CyclotomicNumber::trace() const {
  // Tr(zeta_n^i) = mu(n/g) phi(n) / phi(n/g), g = gcd(i, n).
  mpq_class total = 0;
  const std::int64_t phi_n = euler_phi(level_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    const std::int64_t g = gcd(static_cast<std::int64_t>(i), level_);
    const std::int64_t q = level_ / g;
    total += coeffs_[i] * mpq_class(moebius(q) * (phi_n / euler_phi(q)));
  }
  return total;
}

mpq_class CyclotomicNumber::norm() const {
  CyclotomicNumber product(mpq_class(1), level_);
  for (std::int64_t k = 1; k <= std::max<std::int64_t>(level_, 1); ++k) {
    if (gcd(k, level_) != 1) continue;
    if (level_ <= 2 && k > 1) break;
    product *= galois(k);
  }
  auto q = product.as_rational();
  if (!q) throw VerificationFailure("norm is not rational");
  return *q;
}

std::string CyclotomicNumber::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << coeffs_[i].get_str();
    if (i > 0) os << "*z" << level_ << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

int compare(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  const std::int64_t n = lcm(a.level(), b.level());
  const auto x = a.raised_to(n), y = b.raised_to(n);
  for (std::size_t i = 0; i < x.coefficients().size(); ++i) {
    const int c = cmp(x.coefficients()[i], y.coefficients()[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

CyclotomicNumber compatible_root(std::int64_t n, std::int64_t ambient) {
  if (n < 1 || ambient % n != 0) {
    throw DomainError(std::to_string(n) + " does not divide ambient level " +
                      std::to_string(ambient));
  }
  return CyclotomicNumber::zeta_power(ambient, ambient / n);
}

GaloisAutomorphism::GaloisAutomorphism(std::int64_t level_in, std::int64_t k_in)
    : level(level_in), k(mod(k_in, level_in)) {
  if (level > 1 && gcd(k, level) != 1) {
    throw DomainError(std::to_string(k_in) + " is not a unit modulo " + std::to_string(level));
  }
}

GaloisAutomorphism GaloisAutomorphism::compose(const GaloisAutomorphism& other) const {
  const std::int64_t n = lcm(level, other.level);
  return GaloisAutomorphism(n, mod(static_cast<std::int64_t>(
                                       static_cast<__int128>(k) * other.k % n), n));
}

CyclotomicNumber GaloisAutomorphism::operator()(const CyclotomicNumber& x) const {
  return apply_galois(*this, x);
}

CyclotomicNumber apply_galois(const GaloisAutomorphism& sigma, const CyclotomicNumber& x) {
  if (sigma.level % x.level() == 0) return x.raised_to(sigma.level).galois(sigma.k);
  if (x.level() % sigma.level == 0) {
    // k mod sigma.level must lift to a unit mod x.level(); choose the
    // representative coprime to x.level().
    std::int64_t k = sigma.k;
    while (gcd(k, x.level()) != 1) k += sigma.level;
    return x.galois(k);
  }
  const std::int64_t n = lcm(sigma.level, x.level());
  std::int64_t k = sigma.k;
  while (gcd(k, n) != 1) k += sigma.level;
  return x.raised_to(n).galois(k);
}

CyclotomicNumber trace_to_subfield(const CyclotomicNumber& x,
                                   const std::vector<std::int64_t>& generators,
                                   std::int64_t modulus) {
  const std::int64_t n = modulus == 0 ? x.level() : lcm(modulus, x.level());
  const CyclotomicNumber y = x.raised_to(n);
  CyclotomicNumber total(mpq_class(0), n);
  for (std::int64_t k : subgroup_closure(generators, n)) total += y.galois(k);
  return total;
}

}  // namespace gformlab
