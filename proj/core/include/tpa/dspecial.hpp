#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tpa/derivations.hpp"

namespace tpa {

/// (x, y) -> D(x).y - x.D(y) without checking that D is a derivation.
SC derived_bracket_unchecked(const SC& comm, const QMatrix& d);
/// Throws NotADerivation unless D is a derivation of comm.
SC derived_bracket(const SC& comm, const QMatrix& d);

/// True iff every derivation of comm induces the zero bracket (checked on a Der basis).
bool brackets_all_zero(const SC& comm);

/// (x, y) -> x o y - y o x.
SC commutator_bracket(const SC& mul2);

/// Solves for D in Der(mul) with derived_bracket(mul, D) = bracket.
struct Feasibility {
  bool feasible = false;
  std::size_t der_dim = 0;
  std::optional<QMatrix> derivation;
};
Feasibility strong_feasibility(const Pair& pair);

/// The derivation that produces a derived-bracket family from its commutative algebra.
struct FamilyDerivation {
  std::string family;  // DA01..DA06 or D2_01
  std::string comm;    // commutative catalog id
  std::function<QMatrix(const std::vector<Rational>&)> derivation;
  std::string note;
};
const std::vector<FamilyDerivation>& family_derivations();
const FamilyDerivation& family_derivation(const std::string& family);

/// Rebuilds the family member from its commutative algebra and derivation and
/// compares it with the catalog entry. Accepts D-names (D01..D08, D06b) too.
bool reconstructs(const std::string& id, const std::vector<Rational>& params);

/// Witness that the commutator pair of NP01 is isomorphic to N01.
QMatrix np01_to_n01_witness();

/// The clauses showing N02 is not strong special.
struct N02Obstruction {
  bool unique_unit_is_e2 = false;          // unit exists, is unique and equals e2
  bool nilpotents_in_span_e1 = false;      // e2-coordinate of x.x is q^2 for x = p e1 + q e2
  bool diagonal_automorphisms = false;     // diag(l, 1) preserves the product at sampled l
  bool commutators_in_span_e1 = false;     // NP02 commutator images lie in span(e1) at samples
  bool n02_bracket_image_is_e2 = false;    // [N02] has image span(e2)
  bool holds() const {
    return unique_unit_is_e2 && nilpotents_in_span_e1 && diagonal_automorphisms && commutators_in_span_e1 &&
           n02_bracket_image_is_e2;
  }
};
N02Obstruction n02_obstruction(const std::vector<std::vector<Rational>>& np02_samples,
                               const std::vector<Rational>& lambdas);

} // namespace tpa
