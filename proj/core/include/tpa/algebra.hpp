#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tpa/error.hpp"
#include "tpa/matrix.hpp"
#include "tpa/scalar.hpp"

namespace tpa {

/// Tensor c[i][j][k] = coefficient of e_k in e_i * e_j (0-based indices).
template <Field S>
class StructureConstants {
public:
  StructureConstants() = default;
  explicit StructureConstants(std::size_t dim) : n_(dim), c_(dim * dim * dim, S(0)) {}

  std::size_t dim() const { return n_; }

  S& at(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * n_ + j) * n_ + k]; }
  const S& at(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * n_ + j) * n_ + k]; }

  /// Flat storage, index (i*n + j)*n + k.
  const std::vector<S>& data() const { return c_; }
  std::vector<S>& data() { return c_; }

  /// Sets e_i*e_j = e_j*e_i = v e_k.
  void set_symmetric(std::size_t i, std::size_t j, std::size_t k, const S& v) {
    at(i, j, k) = v;
    at(j, i, k) = v;
  }
  /// Sets e_i*e_j = v e_k and e_j*e_i = -v e_k.
  void set_antisymmetric(std::size_t i, std::size_t j, std::size_t k, const S& v) {
    at(i, j, k) = v;
    at(j, i, k) = -v;
  }

  bool is_zero() const {
    for (const auto& x : c_) {
      if (!x.is_zero()) {
        return false;
      }
    }
    return true;
  }

  /// Product of e_i and e_j as a coordinate vector.
  std::vector<S> product(std::size_t i, std::size_t j) const {
    std::vector<S> v(n_);
    for (std::size_t k = 0; k < n_; ++k) {
      v[k] = at(i, j, k);
    }
    return v;
  }

  /// Bilinear extension: result_k = sum_{i,j} x_i y_j c[i][j][k].
  std::vector<S> evaluate(const std::vector<S>& x, const std::vector<S>& y) const {
    if (x.size() != n_ || y.size() != n_) {
      throw DimensionMismatch("vector length differs from algebra dimension");
    }
    std::vector<S> out(n_, S(0));
    for (std::size_t i = 0; i < n_; ++i) {
      if (x[i].is_zero()) {
        continue;
      }
      for (std::size_t j = 0; j < n_; ++j) {
        if (y[j].is_zero()) {
          continue;
        }
        const S w = x[i] * y[j];
        for (std::size_t k = 0; k < n_; ++k) {
          if (!at(i, j, k).is_zero()) {
            out[k] += w * at(i, j, k);
          }
        }
      }
    }
    return out;
  }

  template <class F>
  auto map(F f) const {
    using T = decltype(f(std::declval<const S&>()));
    StructureConstants<T> out(n_);
    for (std::size_t q = 0; q < c_.size(); ++q) {
      out.data()[q] = f(c_[q]);
    }
    return out;
  }

  friend StructureConstants operator+(StructureConstants a, const StructureConstants& b) {
    if (a.n_ != b.n_) {
      throw DimensionMismatch("tensor dimension mismatch");
    }
    for (std::size_t q = 0; q < a.c_.size(); ++q) {
      a.c_[q] += b.c_[q];
    }
    return a;
  }
  friend StructureConstants operator*(const S& s, StructureConstants a) {
    for (auto& x : a.c_) {
      x = s * x;
    }
    return a;
  }

  friend bool operator==(const StructureConstants& a, const StructureConstants& b) {
    return a.n_ == b.n_ && a.c_ == b.c_;
  }

private:
  std::size_t n_ = 0;
  std::vector<S> c_;
};

/// A commutative product and a bracket on one space. No identity is presumed.
template <Field S>
struct AlgebraPair {
  StructureConstants<S> mul;
  StructureConstants<S> bracket;

  AlgebraPair() = default;
  explicit AlgebraPair(std::size_t dim) : mul(dim), bracket(dim) {}
  AlgebraPair(StructureConstants<S> m, StructureConstants<S> b) : mul(std::move(m)), bracket(std::move(b)) {
    if (mul.dim() != bracket.dim()) {
      throw DimensionMismatch("product and bracket have different dimensions");
    }
  }

  std::size_t dim() const { return mul.dim(); }

  template <class F>
  auto map(F f) const {
    using T = decltype(f(std::declval<const S&>()));
    return AlgebraPair<T>(mul.map(f), bracket.map(f));
  }

  friend bool operator==(const AlgebraPair& a, const AlgebraPair& b) {
    return a.mul == b.mul && a.bracket == b.bracket;
  }
};

/// Rewrites one multiplication in the basis E_i = sum_j G(j,i) e_j:
/// the new product is G^{-1} mu(Gx, Gy).
template <Field S>
StructureConstants<S> transport(const StructureConstants<S>& sc, const Matrix<S>& g, const Matrix<S>& g_inv) {
  const std::size_t n = sc.dim();
  if (g.rows() != n || g.cols() != n) {
    throw DimensionMismatch("basis matrix size differs from algebra dimension");
  }
  StructureConstants<S> out(n);
  std::vector<S> col_i, col_j;
  for (std::size_t i = 0; i < n; ++i) {
    col_i = g.column(i);
    for (std::size_t j = 0; j < n; ++j) {
      col_j = g.column(j);
      const std::vector<S> v = g_inv.apply(sc.evaluate(col_i, col_j));
      for (std::size_t k = 0; k < n; ++k) {
        out.at(i, j, k) = v[k];
      }
    }
  }
  return out;
}

template <Field S>
Matrix<S> checked_inverse(const Matrix<S>& g) {
  if (g.determinant().is_zero()) {
    throw SingularMatrix();
  }
  return g.inverse();
}

template <Field S>
StructureConstants<S> transport(const StructureConstants<S>& sc, const Matrix<S>& g) {
  return transport(sc, g, checked_inverse(g));
}

/// Change of basis: the columns of G are the new basis vectors in old coordinates.
template <Field S>
AlgebraPair<S> transport(const AlgebraPair<S>& pair, const Matrix<S>& g) {
  const Matrix<S> g_inv = checked_inverse(g);
  return AlgebraPair<S>(transport(pair.mul, g, g_inv), transport(pair.bracket, g, g_inv));
}

/// The group action (g*mu)(x, y) = g mu(g^{-1}x, g^{-1}y), i.e. transport by g^{-1}.
template <Field S>
AlgebraPair<S> act(const AlgebraPair<S>& pair, const Matrix<S>& g) {
  const Matrix<S> g_inv = checked_inverse(g);
  return AlgebraPair<S>(transport(pair.mul, g_inv, g), transport(pair.bracket, g_inv, g));
}

/// Coordinate vector of e_i.
template <Field S>
std::vector<S> basis_vector(std::size_t n, std::size_t i) {
  std::vector<S> v(n, S(0));
  v[i] = S(1);
  return v;
}

} // namespace tpa
