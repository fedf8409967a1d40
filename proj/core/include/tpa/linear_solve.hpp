#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tpa/matrix.hpp"
#include "tpa/rational.hpp"

namespace tpa {

using Vector = std::vector<Rational>;

/// Row echelon form of a rational matrix after clearing denominators row by row.
/// Elimination is fraction-free (Bareiss); pivots are the first nonzero entry found
/// scanning rows top to bottom in each column.
struct Echelon {
  std::size_t cols = 0;
  std::vector<std::vector<mpz_class>> rows; // only the nonzero rows, rank() of them
  std::vector<std::size_t> pivots;          // pivot column of each row
  std::size_t rank() const { return pivots.size(); }
};

Echelon echelon(const Matrix<Rational>& a);

std::size_t rank(const Matrix<Rational>& a);

/// Rank of the span of the given vectors (all of equal length).
std::size_t rank_of(const std::vector<Vector>& vectors, std::size_t length);

/// Basis of {x : a x = 0}; one vector per free column in increasing order,
/// each scaled so its first nonzero coordinate is 1.
std::vector<Vector> nullspace(const Matrix<Rational>& a);

/// Some x with a x = b (free variables set to 0), or nothing if inconsistent.
std::optional<Vector> solve(const Matrix<Rational>& a, const Vector& b);

/// Matrix whose rows are the given vectors.
Matrix<Rational> rows_to_matrix(const std::vector<Vector>& rows, std::size_t length);

} // namespace tpa
