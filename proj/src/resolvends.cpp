#include "gformlab/resolvends.hpp"

#include <variant>

#include "gformlab/error.hpp"
#include "gformlab/stickelberger.hpp"

namespace gformlab {

CycGroupRingElement resolvend(const HomToG& h, const FieldVector& a) {
  const FiniteAbelianGroup g = h.group();
  CycGroupRingElement r(g);
  for (const auto& s : enumerate(g)) {
    r.set_coefficient(g.inverse(s), h.field->to_cyclotomic(h.act(s, a)));
  }
  return r;
}

namespace {

int compare_elements(const CycGroupRingElement& x, const CycGroupRingElement& y) {
  for (std::size_t i = 0; i < x.coefficients().size(); ++i) {
    const int c = compare(x.coefficients()[i], y.coefficients()[i]);
    if (c != 0) return c;
  }
  return 0;
}

}  // namespace

ReducedResolvend reduce(const CycGroupRingElement& r) {
  const FiniteAbelianGroup& g = r.group();
  ReducedResolvend best{r, g.identity()};
  for (const auto& t : enumerate(g)) {
    CycGroupRingElement cand = r.shifted(t);
    if (compare_elements(cand, best.representative) < 0) best = {std::move(cand), t};
  }
  return best;
}

bool is_normal_basis_generator(const HomToG& h, const FieldVector& a) {
  const FiniteAbelianGroup g = h.group();
  if (lcm(h.field->conductor(), g.exponent()) > max_level()) {
    // Same question without the transform: do the translates span K?
    const auto els = enumerate(g);
    RatMatrix m(a.size(), els.size());
    for (std::size_t j = 0; j < els.size(); ++j) {
      const FieldVector t = h.act(els[j], a);
      for (std::size_t i = 0; i < a.size(); ++i) m(i, j) = t[i];
    }
    return sgn(determinant(m)) != 0;
  }
  for (const auto& v : fourier(resolvend(h, a)).values)
    if (v.is_zero()) return false;
  return true;
}

bool resolvend_pairing_identity(const HomToG& h, const FieldVector& a, const FieldVector& b) {
  const FiniteAbelianGroup g = h.group();
  const CycGroupRingElement lhs = resolvend(h, a) * resolvend(h, b).involute();
  CycGroupRingElement rhs(g);
  for (const auto& s : enumerate(g)) {
    const mpq_class t = h.field->trace(h.field->multiply(h.act(s, a), b));
    rhs.set_coefficient(g.inverse(s), CyclotomicNumber(t));
  }
  return lhs == rhs;
}

bool is_self_dual_gram(const HomToG& h, const FieldVector& a) {
  const FiniteAbelianGroup g = h.group();
  for (const auto& s : enumerate(g)) {
    const mpq_class t = h.field->trace(h.field->multiply(h.act(s, a), a));
    if (t != (s == g.identity() ? 1 : 0)) return false;
  }
  return true;
}

bool is_self_dual_resolvend(const HomToG& h, const FieldVector& a) {
  const CycGroupRingElement r = resolvend(h, a);
  return (r * r.involute()).is_one();
}

bool is_self_dual(const HomToG& h, const FieldVector& a) {
  const bool gram = is_self_dual_gram(h, a);
  if (gram != is_self_dual_resolvend(h, a)) {
    throw VerificationFailure("Gram and resolvend self-duality tests disagree");
  }
  return gram;
}

AlgebraElement inverse_resolvend(const HomToG& h, const FieldVector& a) {
  const CycGroupRingElement r = resolvend(h, a);
  const FiniteAbelianGroup g = h.group();
  // The transform lives at level lcm(f, exp G); past the cap, solve at level f.
  std::optional<CycGroupRingElement> maybe;
  if (lcm(h.field->conductor(), g.exponent()) <= max_level()) {
    auto inv = try_invert(r);
    if (auto* x = std::get_if<CycGroupRingElement>(&inv)) maybe = std::move(*x);
  } else {
    maybe = regular_representation_inverse(r);
  }
  if (!maybe) throw DomainError("resolvend is not invertible (a is not a normal basis generator)");
  const CycGroupRingElement& rinv = *maybe;
  // r(a') = sum a'(s) s^{-1}; the identity coefficient is a' itself.
  auto coords = h.field->from_cyclotomic(rinv.coefficient(g.identity()));
  if (!coords) throw VerificationFailure("inverse resolvend coefficient is not in K");
  AlgebraElement out{h.inverse(), *coords};
  if (!(resolvend(out) == rinv)) throw VerificationFailure("r(a') differs from r(a)^{-1}");
  return out;
}

AlgebraElement product_resolvend(const AlgebraElement& a1, const AlgebraElement& a2) {
  if (gcd(a1.h.field->conductor(), a2.h.field->conductor()) != 1) {
    throw DomainError("product_resolvend: conductors are not coprime");
  }
  const HomToG h3 = compose_fields(a1.h, a2.h);
  const CycGroupRingElement r = resolvend(a1) * resolvend(a2);
  const FiniteAbelianGroup g = h3.group();
  auto coords = h3.field->from_cyclotomic(r.coefficient(g.identity()));
  if (!coords) throw VerificationFailure("product resolvend coefficient is not in the composite field");
  AlgebraElement out{h3, *coords};
  if (!(resolvend(out) == r)) throw VerificationFailure("r(b) differs from r(b1) r(b2)");
  return out;
}

namespace {

std::int64_t valuation_of(const mpz_class& z, std::int64_t l) {
  if (z == 0) throw DomainError("valuation of zero");
  mpz_class x = abs(z);
  std::int64_t v = 0;
  while (mpz_divisible_ui_p(x.get_mpz_t(), static_cast<unsigned long>(l))) {
    mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(l));
    ++v;
  }
  return v;
}

std::int64_t valuation_of(const mpq_class& q, std::int64_t l) {
  return valuation_of(mpz_class(q.get_num()), l) - valuation_of(mpz_class(q.get_den()), l);
}

}  // namespace

std::int64_t valuation_at(const CyclotomicNumber& x, std::int64_t l, std::int64_t c) {
  if (x.is_zero()) throw DomainError("valuation of zero");
  const std::int64_t m = x.level();
  if (!is_prime(l) || gcd(c, l) != 1) throw DomainError("valuation_at: need a prime l and a unit c");
  std::int64_t n = 1;
  for (std::int64_t y = mod(c, l); y != 1; y = y * mod(c, l) % l) ++n;
  if (n % m != 0) throw DomainError("residue does not define a degree-one prime above l");
  // zeta_m = zeta_n^{n/m}, so the prime below (l, zeta_n - c) uses c^{n/m}.
  c = power_mod(c, n / m, l);
  std::int64_t d = 0;  // worst l-power in a denominator
  for (const auto& q : x.coefficients())
    if (sgn(q) != 0) d = std::max(d, valuation_of(mpz_class(q.get_den()), l));
  for (std::int64_t precision = d + 32;; precision *= 2) {
    mpz_class modulus, lift;
    mpz_ui_pow_ui(modulus.get_mpz_t(), static_cast<unsigned long>(l), static_cast<unsigned long>(precision));
    mpz_class e;
    mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(l), static_cast<unsigned long>(precision - 1));
    const mpz_class base = mod(c, l);
    mpz_powm(lift.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), modulus.get_mpz_t());
    mpq_class value = 0;
    mpz_class power = 1;
    for (const auto& q : x.coefficients()) {
      value += q * mpq_class(power);
      power = power * lift % modulus;
    }
    if (sgn(value) != 0) {
      const std::int64_t v = valuation_of(value, l);
      if (v < precision - d) return v;
    }
  }
}

FactorizationResult stickelberger_factorization_check(const HomToG& h, const FieldVector& a, std::int64_t l,
                                                      bool use_prime_valued) {
  const FiniteAbelianGroup g = h.group();
  const std::int64_t m = g.exponent();
  if (!is_prime(l) || mod(l, m) != 1) throw DomainError("l must be a prime with l = 1 mod exp(G)");
  FactorizationResult res;
  res.l = l;
  res.use_prime_valued = use_prime_valued;
  const FourierVector v = fourier(resolvend(h, a));
  for (const auto& x : v.values)
    if (x.is_zero()) throw DomainError("a is not a normal basis generator");
  const auto basis = s_hat_basis(g);
  std::vector<CyclotomicNumber> values;
  std::vector<RatGroupRingElement> thetas;
  res.l_unit = true;
  for (const auto& psi : basis) {
    CyclotomicNumber prod(1L);
    for (std::size_t c = 0; c < psi.coeffs.size(); ++c) {
      if (psi.coeffs[c] != 0) prod *= v.values[c].pow(psi.coeffs[c]);
    }
    auto low = prod.lowered_to(m);
    if (!low) throw VerificationFailure("F(psi) does not lie in Q(zeta_m)");
    // Away from l: coefficients of F and F^{-1} have l-power denominators.
    for (const CyclotomicNumber& z : {*low, low->inverse()}) {
      for (const auto& q : z.coefficients()) {
        mpz_class den = q.get_den();
        while (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(l)))
          mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(l));
        if (den != 1) res.l_unit = false;
      }
    }
    values.push_back(*low);
    thetas.push_back(theta_star(g, psi));
  }
  const std::int64_t gl = primitive_root(l);
  res.canonical_residue = power_mod(gl, (l - 1) / m, l);
  bool all_embeddings = true;
  for (std::int64_t c = 1; c < l; ++c) {
    // Embeddings zeta_m -> c correspond to primitive m-th roots of unity mod l.
    if (power_mod(c, m, l) != 1) continue;
    bool primitive = true;
    for (auto q : prime_factors(m))
      if (power_mod(c, m / q, l) == 1) primitive = false;
    if (!primitive) continue;
    EmbeddingWitness w;
    w.residue = c;
    for (const auto& y : values) w.valuations.push_back(valuation_at(y, l, c));
    if (use_prime_valued) {
      for (const auto& s : enumerate(g)) {
        if (s == g.identity()) continue;
        bool ok = true;
        for (std::size_t i = 0; i < basis.size() && ok; ++i) {
          const mpq_class& e = thetas[i].coefficient(s);  // integral on S_G^
          ok = w.valuations[i] == e.get_num().get_si();
        }
        if (ok) w.passing.push_back(s);
      }
    } else {
      bool ok = true;
      for (auto val : w.valuations) ok = ok && val == 0;
      if (ok) w.passing.push_back(g.identity());
    }
    if (!w.passing.empty()) w.witness = w.passing.front();
    if (!w.witness) all_embeddings = false;
    if (c == res.canonical_residue) res.canonical_witness = w.witness;
    res.embeddings.push_back(std::move(w));
  }
  // The surrogate only speaks about the primes above l.
  res.passed = (res.l_unit || !use_prime_valued) && all_embeddings && !res.embeddings.empty();
  return res;
}

}  // namespace gformlab
