#pragma once

#include <optional>

#include "tpa/derivations.hpp"

namespace tpa {

/// The linear space of symmetric 1/2-biderivations of a Lie bracket: every
/// transposed Poisson product on the bracket is an associative member.
struct ProductFamily {
  SC lie;
  SolutionSpace basis;
  std::size_t dim() const { return basis.dim(); }
};

/// Throws NotALieAlgebra.
ProductFamily tp_family(const SC& lie);

/// sum_m coords[m] * basis[m]. Throws DimensionMismatch.
SC member(const ProductFamily& family, const Vector& coords);

/// (x.y).z - x.(y.z) on all basis triples, flat index ((i*n + j)*n + k)*n + m.
Vector assoc_residual(const SC& product);
Vector assoc_residual(const ProductFamily& family, const Vector& coords);

/// Sum of squares of the residual entries.
Rational residual_norm(const Vector& residual);
bool is_zero_vector(const Vector& v);

/// Coordinates of the product in the family basis, or nothing if it is not a member.
std::optional<Vector> check_membership(const ProductFamily& family, const SC& product);
std::optional<Vector> check_membership(const SC& lie, const SC& product);

} // namespace tpa
