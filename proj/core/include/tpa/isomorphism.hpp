#pragma once

#include <array>
#include <string>
#include <string_view>

#include "tpa/derivations.hpp"

namespace tpa {

/// True iff M is invertible and transport(a, M) equals b entrywise.
/// Throws DimensionMismatch when sizes disagree.
bool verify_witness(const Pair& a, const Pair& b, const QMatrix& m);

/// Isomorphism invariants, each a rank or nullity of a canonical linear map.
struct Fingerprint {
  static constexpr std::size_t size = 11;
  static const std::array<std::string_view, size>& names();

  int mul_image = 0;         // dim V.V
  int bracket_image = 0;     // dim [V,V]
  int joint_image = 0;       // dim span(V.V + [V,V])
  int mul_cube = 0;          // dim V.(V.V)
  int annihilator = 0;       // dim ann(.)
  int center = 0;            // dim center([,])
  int der_mul = 0;           // dim Der(.)
  int der_bracket = 0;       // dim Der([,])
  int der_pair = 0;          // dim Der(pair)
  int half_der_bracket = 0;  // dim of 1/2-derivations of [,]
  int has_unit = 0;

  std::array<int, size> values() const;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const Pair& pair);

enum class Distinction { proved_noniso, unknown };
std::string_view to_string(Distinction d);

/// proved_noniso iff the fingerprints differ; never claims isomorphism.
Distinction distinguish(const Pair& a, const Pair& b);

/// Pieces of the fingerprint, exposed for the degeneration checks.
int image_dim(const SC& sc);
int joint_image_dim(const Pair& pair);
int annihilator_dim(const SC& sc);
/// Some u with u*e_i = e_i for all i, if one exists.
std::optional<Vector> unit_element(const SC& sc);

} // namespace tpa
