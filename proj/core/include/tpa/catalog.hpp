#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "tpa/algebra.hpp"
#include "tpa/rational_function.hpp"
#include "tpa/samples.hpp"

namespace tpa {

enum class EntryKind {
  lie,                ///< h, g1, g2, sl2: bracket only
  transposed_poisson, ///< T01..T30
  commutative,        ///< A01..A11 and A2_01..A2_04: product only
  derived_family,     ///< DA01..DA06 and D2_01: commutative algebra with a derived bracket
  strong_special,     ///< D01..D08, D06b: named specialisations of the DA families
  non_strong_2d,      ///< N01, N02
  novikov_poisson,    ///< NP01, NP02: the bracket slot holds the raw Novikov product
  internal,           ///< T10*
};

struct CatalogEntry {
  std::string id;
  std::size_t dim = 3;
  std::vector<std::string> param_names; // from alpha, beta, gamma, delta, epsilon
  std::string param_domain;             // human-readable constraint, empty if none
  EntryKind kind = EntryKind::transposed_poisson;
  std::string alias;                    // e.g. "DA02(alpha, 0)" for D03
};

const std::vector<CatalogEntry>& catalog_entries();
/// Throws UnknownId.
const CatalogEntry& find_entry(std::string_view id);

/// The thirty public classification ids T01..T30, in order.
const std::vector<std::string>& tp_ids();

/// Whether the parameters satisfy the entry's domain (e.g. gamma != 0 for T19).
/// Throws UnknownId, or InadmissibleParameter on a wrong parameter count.
template <Field S>
bool admissible(std::string_view id, const std::vector<S>& params);

/// Exact structure constants of a named entry; products listed once per unordered
/// pair are symmetrised and brackets antisymmetrised, except that the Novikov
/// entries keep their raw second product. Throws UnknownId or InadmissibleParameter.
template <Field S>
AlgebraPair<S> instantiate(std::string_view id, const std::vector<S>& params = {});

extern template AlgebraPair<Rational> instantiate<Rational>(std::string_view, const std::vector<Rational>&);
extern template AlgebraPair<RationalFunction> instantiate<RationalFunction>(std::string_view,
                                                                          const std::vector<RationalFunction>&);
extern template bool admissible<Rational>(std::string_view, const std::vector<Rational>&);
extern template bool admissible<RationalFunction>(std::string_view, const std::vector<RationalFunction>&);

/// The bracket (or product, for commutative ids) on its own.
StructureConstants<Rational> lie_algebra(std::string_view id, const std::vector<Rational>& params = {});

/// Deterministic admissible samples: the family's special values first, then a
/// seeded tail. Parameterless entries give a single empty sample.
std::vector<std::vector<Rational>> sample_params(std::string_view id, std::size_t count,
                                                 const SampleProfile& profile = current_profile());
/// All special values of the family (at least three points when it has parameters).
std::vector<std::vector<Rational>> default_samples(std::string_view id,
                                                   const SampleProfile& profile = current_profile());

struct ParamInstance {
  std::string id;
  std::vector<Rational> params;
  std::string to_string() const;
  friend bool operator==(const ParamInstance& a, const ParamInstance& b) {
    return a.id == b.id && a.params == b.params;
  }
};

/// An explicit basis change between two catalog members, as a function of the
/// parameters of a driving family.
struct IsoWitness {
  std::string label;
  std::string driver;                                   // id whose samples drive the witness
  std::function<bool(const std::vector<Rational>&)> admissible;
  std::function<ParamInstance(const std::vector<Rational>&)> source;
  std::function<ParamInstance(const std::vector<Rational>&)> target;
  /// Columns are the target basis vectors written in the source basis.
  std::function<Matrix<Rational>(const std::vector<Rational>&)> matrix;
  std::string note;                                     // correction notes, if any
};

const std::vector<IsoWitness>& known_isomorphisms();

} // namespace tpa
