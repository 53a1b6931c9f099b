#pragma once

// Resolvends r_G(a) = sum_s a(s) s^{-1} of elements of a cyclic field K_h,
// self-duality tests, the inverse and product laws, and the check of the
// Stickelberger factorization of character resolvents.

#include <cstdint>
#include <optional>
#include <vector>

#include "gformlab/group_ring.hpp"
#include "gformlab/number_fields.hpp"

namespace gformlab {

/// a in K together with the identification h; a(s) = s . a.
struct AlgebraElement {
  HomToG h;
  FieldVector a;
};

/// r_G(a), coefficients in Q(zeta_f).
CycGroupRingElement resolvend(const HomToG& h, const FieldVector& a);
inline CycGroupRingElement resolvend(const AlgebraElement& x) { return resolvend(x.h, x.a); }

/// Representative of r G minimal in the lexicographic order on coefficient
/// vectors, and the t with representative = r t.
struct ReducedResolvend {
  CycGroupRingElement representative;
  GroupElement shift;
};
ReducedResolvend reduce(const CycGroupRingElement& r);

/// All character resolvents nonzero.
bool is_normal_basis_generator(const HomToG& h, const FieldVector& a);

/// r(a) r(b)^{[-1]} == sum_s Tr((s.a) b) s^{-1}, and the right side is rational.
bool resolvend_pairing_identity(const HomToG& h, const FieldVector& a, const FieldVector& b);

/// Tr((s.a) a) = delta_{s,1}.
bool is_self_dual_gram(const HomToG& h, const FieldVector& a);
/// r(a) r(a)^{[-1]} = 1.
bool is_self_dual_resolvend(const HomToG& h, const FieldVector& a);
/// Both routes, which must agree (VerificationFailure otherwise).
bool is_self_dual(const HomToG& h, const FieldVector& a);

/// a' in K_{h^{-1}} with r(a') = r(a)^{-1}. Throws DomainError when r(a) is
/// not invertible.
AlgebraElement inverse_resolvend(const HomToG& h, const FieldVector& a);

/// b in K_{h1 h2} with r(b) = r(a1) r(a2), computed in Q(zeta_{f1 f2})G.
/// Conductors must be coprime.
AlgebraElement product_resolvend(const AlgebraElement& a1, const AlgebraElement& a2);

/// Valuation of x in Q(zeta_m) at the prime below (l, zeta_n - c), where n is
/// the order of c mod l and must be a multiple of m. Precision is raised
/// until the answer is certain.
std::int64_t valuation_at(const CyclotomicNumber& x, std::int64_t l, std::int64_t c);

struct EmbeddingWitness {
  std::int64_t residue = 0;                 // zeta_m -> Teichmuller lift of residue
  std::vector<std::int64_t> valuations;     // v(F(psi)) per S_G^ basis vector
  std::vector<GroupElement> passing;        // every s != 1 that works
  std::optional<GroupElement> witness;      // first passing s
};

struct FactorizationResult {
  std::int64_t l = 0;
  bool use_prime_valued = true;
  bool l_unit = false;  // F(psi) and F(psi)^{-1} integral away from l
  std::vector<EmbeddingWitness> embeddings;
  std::int64_t canonical_residue = 0;  // g_l^{(l-1)/m}, g_l least primitive root
  std::optional<GroupElement> canonical_witness;
  bool passed = false;
};

/// For psi in an S_G^ basis let F(psi) = prod_chi r(a)(chi)^{n_chi}, which
/// lies in Q(zeta_m). With f = f_{l,s} the ratio F(psi) / l^{Theta_*(psi)_s}
/// must be an l-unit and have valuation 0 at the prime above l fixed by each
/// embedding, for some s != 1. Without the prime-valued map the ratio is
/// F(psi) itself and only the valuations above l are tested (the unramified
/// surrogate; no s is searched).
FactorizationResult stickelberger_factorization_check(const HomToG& h, const FieldVector& a, std::int64_t l,
                                                      bool use_prime_valued = true);

}  // namespace gformlab
