#pragma once

#include <cstddef>
#include <vector>

#include "tpa/algebra.hpp"
#include "tpa/linear_solve.hpp"

namespace tpa {

using SC = StructureConstants<Rational>;
using Pair = AlgebraPair<Rational>;
using QMatrix = Matrix<Rational>;

/// Basis of the solution set of a homogeneous linear system.
/// Derivation-type spaces hold n x n matrices flattened as k*n + i, where entry (k, i)
/// is the e_k coordinate of phi(e_i). Biderivation spaces hold n x n x n tensors in
/// StructureConstants layout.
struct SolutionSpace {
  std::size_t ambient_dim = 0;
  std::vector<Vector> basis;
  std::size_t dim() const { return basis.size(); }
};

QMatrix to_matrix(const Vector& flat, std::size_t n);
Vector flatten(const QMatrix& m);
SC to_tensor(const Vector& flat, std::size_t n);

/// Linear equations (one row per basis pair and output coordinate) whose kernel is
/// the set of maps phi with phi(x*y) = delta (phi(x)*y + x*phi(y)).
QMatrix delta_derivation_system(const SC& sc, const Rational& delta);

SolutionSpace delta_derivations(const SC& sc, const Rational& delta);
SolutionSpace derivations(const SC& sc);
/// Matrices that are derivations of both components.
SolutionSpace pair_derivations(const Pair& pair);

bool is_delta_derivation(const SC& sc, const QMatrix& phi, const Rational& delta);

/// Linear equations for bilinear D that are 1/2-derivations in each argument of the
/// bracket, plus D(x,y) = D(y,x) when symmetric.
QMatrix half_biderivation_system(const SC& bracket, bool symmetric);

/// Throws NotALieAlgebra if the bracket is not anticommutative or fails Jacobi.
SolutionSpace half_biderivations(const SC& bracket, bool symmetric);

bool is_half_biderivation(const SC& bracket, const SC& d);

/// Matrix of x -> x*z.
QMatrix right_multiplication(const SC& sc, const Vector& z);

} // namespace tpa
