#include "gformlab/number_fields.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "gformlab/error.hpp"

namespace gformlab {
namespace {

mpz_class lcm_of_denominators(const std::vector<FieldVector>& vs) {
  mpz_class d = 1;
  for (const auto& v : vs)
    for (const auto& q : v) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), q.get_den_mpz_t());
  return d;
}

RatMatrix columns_of(const std::vector<FieldVector>& vs) {
  return RatMatrix::from_cols(vs);
}

}  // namespace

std::shared_ptr<const PeriodField> PeriodField::build(std::int64_t p, std::int64_t f) {
  const auto primes = prime_factors(f > 0 ? f : 1);
  return build(p, f, std::vector<std::int64_t>(primes.size(), 1));
}

std::shared_ptr<const PeriodField> PeriodField::build(std::int64_t p, std::int64_t f,
                                                      std::vector<std::int64_t> exponents) {
  if (p < 3 || !is_prime(p)) throw DomainError("degree must be an odd prime, got " + std::to_string(p));
  if (f < 2) throw DomainError("conductor must be at least 2");
  if (f % p == 0) throw DomainError("conductor " + std::to_string(f) + " is divisible by p (wild)");
  if (!is_squarefree(f)) throw DomainError("conductor " + std::to_string(f) + " is not squarefree");
  const auto primes = prime_factors(f);
  for (auto l : primes) {
    if (l % p != 1) {
      throw DomainError("prime " + std::to_string(l) + " of the conductor is not 1 mod " + std::to_string(p));
    }
  }
  if (exponents.size() != primes.size()) throw DomainError("need one character exponent per prime of f");
  for (auto& e : exponents) {
    e = mod(e, p);
    if (e == 0) throw DomainError("zero character exponent: conductor would drop below f");
  }
  if (f > max_level()) {
    throw BoundExceeded("conductor " + std::to_string(f) + " exceeds the cyclotomic level cap " +
                        std::to_string(max_level()));
  }

  std::shared_ptr<PeriodField> k(new PeriodField());
  k->p_ = p;
  k->f_ = f;
  k->primes_ = primes;
  k->exps_ = exponents;
  for (auto l : primes) {
    const std::int64_t r = primitive_root(l);
    k->roots_.push_back(r);
    std::vector<std::int64_t> dl(static_cast<std::size_t>(l), -1);
    std::int64_t x = 1;
    for (std::int64_t i = 0; i < l - 1; ++i) {
      dl[static_cast<std::size_t>(x)] = i;
      x = x * r % l;
    }
    k->dlog_.push_back(std::move(dl));
  }
  for (std::int64_t a = 1; a < f; ++a) {
    if (gcd(a, f) != 1) continue;
    const std::int64_t h = k->character(a);
    if (h == 0) k->kernel_.push_back(a);
    if (h == 1 && k->g_ == 0) k->g_ = a;
  }
  if (static_cast<std::int64_t>(k->kernel_.size()) * p != euler_phi(f)) {
    throw VerificationFailure("kernel of the field character has the wrong index");
  }

  const auto n = static_cast<std::size_t>(p);
  std::int64_t shift = 1;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<mpq_class> cyclic(static_cast<std::size_t>(f), 0);
    for (auto h : k->kernel_) cyclic[static_cast<std::size_t>(shift * h % f)] += 1;
    k->periods_.push_back(CyclotomicNumber::from_coefficients(f, std::move(cyclic)));
    shift = shift * k->g_ % f;
  }

  const mpq_class h_order(static_cast<long>(k->kernel_.size()));
  k->trace_matrix_ = RatMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const mpq_class t = (k->periods_[i] * k->periods_[j]).trace() / h_order;
      k->trace_matrix_(i, j) = t;
      k->trace_matrix_(j, i) = t;
    }
  auto tinv = gformlab::inverse(k->trace_matrix_);
  if (!tinv) throw VerificationFailure("period trace matrix is singular");
  k->trace_matrix_inverse_ = std::move(*tinv);

  k->table_.assign(n, std::vector<FieldVector>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      auto c = k->from_cyclotomic(k->periods_[i] * k->periods_[j]);
      if (!c) throw VerificationFailure("product of periods left the field");
      k->table_[i][j] = *c;
      k->table_[j][i] = *c;
    }
  auto one = k->from_cyclotomic(CyclotomicNumber(1L));
  if (!one) throw VerificationFailure("1 is not in the period span");
  k->one_ = *one;

  // Order generated by 1, the periods and their products; its discriminant
  // certifies maximality.
  std::vector<FieldVector> gens{k->one_};
  for (std::size_t i = 0; i < n; ++i) gens.push_back(k->period(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) gens.push_back(k->table_[i][j]);
  if (lcm_of_denominators(gens) != 1) throw VerificationFailure("period products are not integral");
  IntMatrix rows(gens.size(), n);
  for (std::size_t r = 0; r < gens.size(); ++r)
    for (std::size_t c = 0; c < n; ++c) rows(r, c) = mpz_class(gens[r][c].get_num());
  k->integral_basis_ = hnf_rows(rows);
  const RatMatrix b = to_rational(k->integral_basis_);
  const mpq_class disc = determinant(b * k->trace_matrix_ * b.transpose());
  mpz_class expected;
  mpz_ui_pow_ui(expected.get_mpz_t(), static_cast<unsigned long>(f), static_cast<unsigned long>(p - 1));
  if (disc != mpq_class(expected)) {
    throw VerificationFailure("discriminant " + disc.get_str() + " differs from f^(p-1) = " + expected.get_str());
  }
  k->disc_ = expected;
  k->integral_basis_inverse_ = *gformlab::inverse(b);
  return k;
}

std::int64_t PeriodField::character(std::int64_t a) const {
  a = mod(a, f_);
  if (gcd(a, f_) != 1) throw DomainError(std::to_string(a) + " is not a unit mod the conductor");
  std::int64_t h = 0;
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    h += exps_[i] * dlog_[i][static_cast<std::size_t>(a % primes_[i])];
  }
  return mod(h, p_);
}

void PeriodField::check(const FieldVector& a) const {
  if (a.size() != static_cast<std::size_t>(p_)) throw DomainError("field element has wrong dimension");
}

FieldVector PeriodField::rational(const mpq_class& q) const { return scale(one_, q); }

FieldVector PeriodField::period(std::size_t i) const {
  FieldVector v = zero();
  v.at(i) = 1;
  return v;
}

FieldVector PeriodField::add(const FieldVector& a, const FieldVector& b) const {
  check(a);
  check(b);
  FieldVector out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

FieldVector PeriodField::subtract(const FieldVector& a, const FieldVector& b) const {
  check(a);
  check(b);
  FieldVector out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

FieldVector PeriodField::scale(const FieldVector& a, const mpq_class& q) const {
  check(a);
  FieldVector out = a;
  for (auto& x : out) x *= q;
  return out;
}

FieldVector PeriodField::multiply(const FieldVector& a, const FieldVector& b) const {
  check(a);
  check(b);
  FieldVector out = zero();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (sgn(b[j]) == 0) continue;
      const mpq_class c = a[i] * b[j];
      const FieldVector& t = table_[i][j];
      for (std::size_t k = 0; k < out.size(); ++k)
        if (sgn(t[k]) != 0) out[k] += c * t[k];
    }
  }
  return out;
}

RatMatrix PeriodField::multiplication_matrix(const FieldVector& b) const {
  std::vector<FieldVector> cols;
  for (std::size_t i = 0; i < static_cast<std::size_t>(p_); ++i) cols.push_back(multiply(period(i), b));
  return columns_of(cols);
}

std::optional<FieldVector> PeriodField::inverse(const FieldVector& a) const {
  return solve_square<mpq_class>(multiplication_matrix(a), one_);
}

FieldVector PeriodField::sigma(const FieldVector& a, std::int64_t j) const {
  check(a);
  FieldVector out = zero();
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[static_cast<std::size_t>(mod(static_cast<std::int64_t>(i) + j, p_))] = a[i];
  }
  return out;
}

mpq_class PeriodField::trace(const FieldVector& a) const {
  check(a);
  const FieldVector t = trace_matrix_.apply(one_);  // Tr(eta_i)
  mpq_class total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += a[i] * t[i];
  return total;
}

mpq_class PeriodField::norm(const FieldVector& a) const {
  FieldVector prod = one_;
  for (std::int64_t j = 0; j < p_; ++j) prod = multiply(prod, sigma(a, j));
  const mpq_class r = prod[0] / one_[0];
  if (!(scale(one_, r) == prod)) throw VerificationFailure("norm is not rational");
  return r;
}

bool PeriodField::is_integral(const FieldVector& a) const {
  check(a);
  // Row coordinates x with a = x B.
  const FieldVector x = integral_basis_inverse_.transpose().apply(a);
  return std::all_of(x.begin(), x.end(), [](const mpq_class& q) { return q.get_den() == 1; });
}

CyclotomicNumber PeriodField::to_cyclotomic(const FieldVector& a) const {
  check(a);
  CyclotomicNumber x(mpq_class(0), f_);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0) x += periods_[i] * CyclotomicNumber(a[i]);
  return x;
}

std::optional<FieldVector> PeriodField::from_cyclotomic(const CyclotomicNumber& x) const {
  const std::int64_t level = lcm(f_, x.level());
  const CyclotomicNumber y = x.raised_to(level);
  const mpq_class index(euler_phi(level) / p_);
  FieldVector rhs(static_cast<std::size_t>(p_));
  for (std::size_t j = 0; j < rhs.size(); ++j) rhs[j] = (y * periods_[j]).trace() / index;
  FieldVector c = trace_matrix_inverse_.apply(rhs);
  // Reconstruction check: the Gram solve projects onto K.
  CyclotomicNumber back(mpq_class(0), f_);
  for (std::size_t i = 0; i < c.size(); ++i)
    if (sgn(c[i]) != 0) back += periods_[i] * CyclotomicNumber(c[i]);
  if (!(back == y)) return std::nullopt;
  return c;
}

RatMatrix PeriodField::trace_gram(const std::vector<FieldVector>& xs) const {
  const RatMatrix b = columns_of(xs);
  return b.transpose() * trace_matrix_ * b;
}

std::string PeriodField::name() const {
  std::ostringstream os;
  os << "K(p=" << p_ << ",f=" << f_;
  bool trivial = std::all_of(exps_.begin(), exps_.end(), [](std::int64_t e) { return e == 1; });
  if (!trivial) {
    os << ",e=";
    for (std::size_t i = 0; i < exps_.size(); ++i) os << (i ? ":" : "") << exps_[i];
  }
  os << ")";
  return os.str();
}

// ---------------------------------------------------------------------------

FractionalIdeal FractionalIdeal::normalize(FieldPtr k, const std::vector<FieldVector>& gens, bool check_module) {
  const auto n = static_cast<std::size_t>(k->degree());
  const mpz_class d = lcm_of_denominators(gens);
  IntMatrix rows(gens.size(), n);
  for (std::size_t r = 0; r < gens.size(); ++r) {
    if (gens[r].size() != n) throw DomainError("ideal generator has wrong dimension");
    for (std::size_t c = 0; c < n; ++c) {
      const mpq_class v = gens[r][c] * mpq_class(d);
      rows(r, c) = mpz_class(v.get_num());
    }
  }
  FractionalIdeal out;
  out.field_ = std::move(k);
  out.hnf_ = hnf_rows(rows);
  if (out.hnf_.rows() != n) throw DomainError("ideal generators do not span a full-rank lattice");
  mpz_class content = d;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out.hnf_(r, c).get_mpz_t());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) mpz_divexact(out.hnf_(r, c).get_mpz_t(), out.hnf_(r, c).get_mpz_t(), content.get_mpz_t());
  out.den_ = d / content;
  if (check_module) {
    const auto b = out.basis();
    for (std::size_t i = 0; i < n; ++i) {
      const FieldVector w = to_rational(out.field_->integral_basis()).row(i);
      for (const auto& x : b) {
        if (!out.contains(out.field_->multiply(x, w))) throw DomainError("generators do not span an O_K-module");
      }
    }
  }
  return out;
}

FractionalIdeal FractionalIdeal::from_generators(FieldPtr k, const std::vector<FieldVector>& gens) {
  return normalize(std::move(k), gens, true);
}

FractionalIdeal FractionalIdeal::ring_of_integers(FieldPtr k) {
  const RatMatrix b = to_rational(k->integral_basis());
  std::vector<FieldVector> gens;
  for (std::size_t i = 0; i < b.rows(); ++i) gens.push_back(b.row(i));
  return normalize(std::move(k), gens, false);
}

FractionalIdeal FractionalIdeal::principal(FieldPtr k, const FieldVector& x) {
  const RatMatrix b = to_rational(k->integral_basis());
  std::vector<FieldVector> gens;
  for (std::size_t i = 0; i < b.rows(); ++i) gens.push_back(k->multiply(x, b.row(i)));
  return normalize(std::move(k), gens, false);
}

std::vector<FieldVector> FractionalIdeal::basis() const {
  std::vector<FieldVector> out;
  for (std::size_t r = 0; r < hnf_.rows(); ++r) {
    FieldVector v(hnf_.cols());
    for (std::size_t c = 0; c < hnf_.cols(); ++c) {
      v[c] = mpq_class(hnf_(r, c), den_);
      v[c].canonicalize();
    }
    out.push_back(std::move(v));
  }
  return out;
}

RatMatrix FractionalIdeal::basis_columns() const { return columns_of(basis()); }

FractionalIdeal FractionalIdeal::operator*(const FractionalIdeal& o) const {
  const auto a = basis(), b = o.basis();
  std::vector<FieldVector> gens;
  for (const auto& x : a)
    for (const auto& y : b) gens.push_back(field_->multiply(x, y));
  return normalize(field_, gens, false);
}

FractionalIdeal FractionalIdeal::operator+(const FractionalIdeal& o) const {
  auto gens = basis();
  for (auto& v : o.basis()) gens.push_back(v);
  return normalize(field_, gens, false);
}

FractionalIdeal FractionalIdeal::inverse() const {
  // (O : I) = {x : x b_j in O for all basis b_j}.
  const RatMatrix o_cols_inv = *gformlab::inverse(to_rational(field_->integral_basis()).transpose());
  std::vector<FieldVector> w;
  for (const auto& b : basis()) {
    const RatMatrix m = o_cols_inv * field_->multiplication_matrix(b);
    for (std::size_t r = 0; r < m.rows(); ++r) w.push_back(m.row(r));
  }
  // Row lattice of W, then its dual columns.
  const mpz_class d = lcm_of_denominators(w);
  IntMatrix rows(w.size(), w.front().size());
  for (std::size_t r = 0; r < w.size(); ++r)
    for (std::size_t c = 0; c < rows.cols(); ++c) rows(r, c) = mpz_class(mpq_class(w[r][c] * mpq_class(d)).get_num());
  RatMatrix reduced = to_rational(hnf_rows(rows));
  for (std::size_t r = 0; r < reduced.rows(); ++r)
    for (std::size_t c = 0; c < reduced.cols(); ++c) reduced(r, c) /= mpq_class(d);
  auto inv = gformlab::inverse(reduced);
  if (!inv) throw VerificationFailure("ideal colon computation is degenerate");
  std::vector<FieldVector> gens;
  for (std::size_t c = 0; c < inv->cols(); ++c) gens.push_back(inv->col(c));
  return normalize(field_, gens, false);
}

FractionalIdeal FractionalIdeal::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  FractionalIdeal result = ring_of_integers(field_);
  FractionalIdeal base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

FractionalIdeal FractionalIdeal::dual() const {
  const RatMatrix b = basis_columns();
  auto inv = gformlab::inverse(b.transpose() * field_->trace_matrix());
  if (!inv) throw VerificationFailure("singular trace form on a lattice");
  std::vector<FieldVector> gens;
  for (std::size_t c = 0; c < inv->cols(); ++c) gens.push_back(inv->col(c));
  return normalize(field_, gens, false);
}

bool FractionalIdeal::contains(const FieldVector& x) const {
  // Solve x * den = y H over Q; x is in I iff y is integral.
  const RatMatrix ht = to_rational(hnf_).transpose();
  FieldVector rhs = x;
  for (auto& q : rhs) q *= mpq_class(den_);
  auto y = solve_square<mpq_class>(ht, rhs);
  if (!y) return false;
  return std::all_of(y->begin(), y->end(), [](const mpq_class& q) { return q.get_den() == 1; });
}

bool FractionalIdeal::contains(const FractionalIdeal& o) const {
  for (const auto& v : o.basis())
    if (!contains(v)) return false;
  return true;
}

mpq_class FractionalIdeal::norm() const {
  mpq_class d = determinant(basis_columns()) / determinant(to_rational(field_->integral_basis()));
  return abs(d);
}

RatMatrix FractionalIdeal::gram() const { return field_->trace_gram(basis()); }

mpq_class FractionalIdeal::gram_determinant() const { return determinant(gram()); }

std::string FractionalIdeal::to_string() const {
  std::ostringstream os;
  os << "(1/" << den_ << ")[";
  for (std::size_t r = 0; r < hnf_.rows(); ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < hnf_.cols(); ++c) os << (c ? " " : "") << hnf_(r, c);
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------------------

FractionalIdeal prime_above(const FieldPtr& k, std::int64_t l) {
  const auto& primes = k->ramified_primes();
  if (std::find(primes.begin(), primes.end(), l) == primes.end()) {
    throw DomainError(std::to_string(l) + " does not ramify in " + k->name());
  }
  const FractionalIdeal o = FractionalIdeal::ring_of_integers(k);
  const FractionalIdeal lo = FractionalIdeal::principal(k, k->rational(mpq_class(l)));
  for (std::size_t i = 0; i < static_cast<std::size_t>(k->degree()); ++i) {
    for (std::int64_t c = 0; c < l; ++c) {
      const FieldVector x = k->subtract(k->period(i), k->rational(mpq_class(c)));
      const FractionalIdeal cand = lo + FractionalIdeal::principal(k, x);
      if (cand.norm() != mpq_class(l)) continue;
      if (!(cand.pow(k->degree()) == lo)) {
        throw VerificationFailure("prime above " + std::to_string(l) + " is not totally ramified");
      }
      return cand;
    }
  }
  throw VerificationFailure("no prime of norm " + std::to_string(l) + " found");
}

FractionalIdeal different(const FieldPtr& k) {
  FractionalIdeal d = FractionalIdeal::ring_of_integers(k);
  for (auto l : k->ramified_primes()) d = d * prime_above(k, l).pow(k->degree() - 1);
  return d;
}

FractionalIdeal sqrt_inverse_different(const FieldPtr& k) {
  FractionalIdeal a = FractionalIdeal::ring_of_integers(k);
  for (auto l : k->ramified_primes()) a = a * prime_above(k, l).pow(-(k->degree() - 1) / 2);
  if (!(a * a == different(k).inverse())) throw VerificationFailure("A^2 differs from the inverse different");
  return a;
}

// ---------------------------------------------------------------------------

HomToG::HomToG(FieldPtr k, std::int64_t u_in) : field(std::move(k)), u(u_in) {
  if (!field) throw DomainError("HomToG needs a field");
  u = mod(u, field->degree());
  if (u == 0) throw DomainError("HomToG: u must be a unit mod p");
}

FiniteAbelianGroup HomToG::group() const { return FiniteAbelianGroup({field->degree()}); }

std::int64_t HomToG::sigma_power(const GroupElement& s) const {
  const std::int64_t p = field->degree();
  if (s.exponents.size() != 1) throw DomainError("HomToG: element of the wrong group");
  return mod(s.exponents[0] * inverse_mod(u, p), p);
}

FieldVector HomToG::act(const GroupElement& s, const FieldVector& a) const {
  return field->sigma(a, sigma_power(s));
}

HomToG HomToG::inverse() const { return HomToG(field, field->degree() - u); }

std::int64_t HomToG::value(std::int64_t a) const { return mod(u * field->character(a), field->degree()); }

HomToG compose_fields(const HomToG& h1, const HomToG& h2) {
  const std::int64_t p = h1.field->degree();
  if (h2.field->degree() != p) throw DomainError("compose_fields: degrees differ");
  std::map<std::int64_t, std::int64_t> exps;
  for (const auto* h : {&h1, &h2}) {
    const auto& primes = h->field->ramified_primes();
    for (std::size_t i = 0; i < primes.size(); ++i) {
      exps[primes[i]] = mod(exps[primes[i]] + h->u * h->field->exponents()[i], p);
    }
  }
  std::int64_t f = 1;
  std::vector<std::int64_t> e;
  for (const auto& [l, x] : exps) {
    if (x == 0) continue;
    f *= l;
    e.push_back(x);
  }
  if (e.empty()) throw DomainError("compose_fields: the product character is trivial");
  return HomToG(PeriodField::build(p, f, e), 1);
}

}  // namespace gformlab
