#pragma once

// G-forms over Z: a ZG-lattice with an exact G-invariant Gram matrix, the
// search for self-dual ZG-generators, and the inverse-law and multiplicativity
// checks built on resolvends.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gformlab/abelian_groups.hpp"
#include "gformlab/linalg.hpp"
#include "gformlab/number_fields.hpp"
#include "gformlab/resolvends.hpp"

namespace gformlab {

struct GForm {
  FiniteAbelianGroup group;
  RatMatrix gram;                 // T(b_i, b_j)
  std::vector<IntMatrix> action;  // per invariant-factor generator, lattice coordinates
  // Set for lattices inside a field.
  std::optional<HomToG> hom;
  std::vector<FieldVector> basis;
  std::string label;

  std::size_t rank() const { return gram.rows(); }
  /// Matrix of s acting in lattice coordinates.
  IntMatrix action_of(const GroupElement& s) const;
};

/// (ZG, t) with t(s, t) = delta.
GForm standard_gform(const FiniteAbelianGroup& g);
/// (A_h, Tr) on the HNF basis of A.
GForm gform_from_A(const HomToG& h);
/// (O_K, Tr); not unimodular (det f^{p-1}).
GForm gform_from_ring_of_integers(const HomToG& h);
/// Any G-stable full-rank lattice L inside K with the trace form.
GForm gform_from_ideal(const HomToG& h, const FractionalIdeal& l, std::string label);

/// G-invariance of the Gram matrix on the generators, and symmetry.
bool is_g_invariant(const GForm& f);
bool is_positive_definite(const RatMatrix& gram);

/// Fincke-Pohst enumeration of all x in Z^n with x^T G x <= bound, exact over
/// Q (floating point only seeds the coordinate ranges, which are then
/// corrected exactly). Output is in lexicographic order.
std::vector<std::vector<mpz_class>> short_vectors(const RatMatrix& gram, const mpq_class& bound);

struct IsometryWitness {
  std::vector<mpz_class> coords;  // x in lattice coordinates
  IntMatrix change_of_basis;      // column i: coordinates of s_i x, s_i in enumeration order
  std::size_t norm_one_vectors = 0;  // |{x : T(x,x) = 1}|
  std::size_t multiplicity = 0;      // how many of them are self-dual generators
  std::vector<std::vector<mpz_class>> all_witnesses;
};

/// Checks T(s x, t x) = delta and ZG x = X (|det| = 1 and HNF equality).
bool verify_witness(const GForm& f, const std::vector<mpz_class>& x);

/// Self-dual ZG-generator: the lexicographically largest passing vector of
/// norm 1, so (ZG, t) returns the identity. nullopt when none exists.
/// Throws DomainError unless the form is positive definite, unimodular and of
/// rank |G|.
std::optional<IsometryWitness> find_self_dual_generator(const GForm& f);

/// Field element represented by lattice coordinates.
FieldVector to_field(const GForm& f, const std::vector<mpz_class>& coords);
/// Lattice coordinates of a field element, if it lies in the lattice.
std::optional<std::vector<mpz_class>> to_lattice(const GForm& f, const FieldVector& x);

/// x is a self-dual ZG-generator of A_h (with the action through h).
bool is_self_dual_generator_of_A(const HomToG& h, const FieldVector& x);

/// Self-dual generator of A_h found by enumeration, as a field element.
std::optional<FieldVector> self_dual_generator_of_A(const HomToG& h);

struct InverseLawResult {
  FieldVector witness, inverse;
  bool inverse_equals_witness = false;
  bool passed = false;
};
InverseLawResult verify_inverse_law(const HomToG& h);

struct MultiplicativityResult {
  FieldVector witness1, witness2, product;
  HomToG composite;
  bool passed = false;
};
/// Rejects overlapping conductors.
MultiplicativityResult verify_weak_multiplicativity(const HomToG& h1, const HomToG& h2);

enum class Isometry { True, False, Inconclusive };
std::string to_string(Isometry i);
/// Sound decision of G-isometry over Z via self-dual generator witnesses.
Isometry isometry_equivalence(const GForm& a, const GForm& b);

}  // namespace gformlab
