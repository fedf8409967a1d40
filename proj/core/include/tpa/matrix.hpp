#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "tpa/error.hpp"
#include "tpa/scalar.hpp"

namespace tpa {

/// Dense row-major matrix over an exact field.
/// For a change of basis, column i holds the coordinates of the i-th new basis vector.
template <Field S>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, S(0)) {}
  Matrix(std::initializer_list<std::initializer_list<S>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) {
        throw DimensionMismatch("ragged matrix literal");
      }
      a_.insert(a_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = S(1);
    }
    return m;
  }

  static Matrix diagonal(const std::vector<S>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
      m(i, i) = d[i];
    }
    return m;
  }

  /// Builds a square matrix whose columns are the given coordinate vectors.
  static Matrix from_columns(const std::vector<std::vector<S>>& columns) {
    const std::size_t n = columns.size();
    Matrix m(n == 0 ? 0 : columns.front().size(), n);
    for (std::size_t c = 0; c < n; ++c) {
      if (columns[c].size() != m.rows_) {
        throw DimensionMismatch("column length mismatch");
      }
      for (std::size_t r = 0; r < m.rows_; ++r) {
        m(r, c) = columns[c][r];
      }
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  S& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const S& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  std::vector<S> column(std::size_t c) const {
    std::vector<S> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      out[r] = (*this)(r, c);
    }
    return out;
  }

  bool is_zero() const {
    for (const auto& x : a_) {
      if (!x.is_zero()) {
        return false;
      }
    }
    return true;
  }

  template <class F>
  auto map(F f) const -> Matrix<decltype(f(std::declval<const S&>()))> {
    Matrix<decltype(f(std::declval<const S&>()))> out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) {
        out(r, c) = f((*this)(r, c));
      }
    }
    return out;
  }

  std::vector<S> apply(const std::vector<S>& x) const {
    if (x.size() != cols_) {
      throw DimensionMismatch("matrix-vector size mismatch");
    }
    std::vector<S> y(rows_, S(0));
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) {
        if (!(*this)(r, c).is_zero() && !x[c].is_zero()) {
          y[r] += (*this)(r, c) * x[c];
        }
      }
    }
    return y;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
      throw DimensionMismatch("matrix product size mismatch");
    }
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero()) {
          continue;
        }
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (!b(k, j).is_zero()) {
            out(i, j) += a(i, k) * b(k, j);
          }
        }
      }
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  /// Determinant by Gaussian elimination over the field.
  S determinant() const {
    if (!is_square()) {
      throw DimensionMismatch("determinant of a non-square matrix");
    }
    Matrix m = *this;
    S det(1);
    for (std::size_t c = 0; c < cols_; ++c) {
      std::size_t p = c;
      while (p < rows_ && m(p, c).is_zero()) {
        ++p;
      }
      if (p == rows_) {
        return S(0);
      }
      if (p != c) {
        m.swap_rows(p, c);
        det = -det;
      }
      det *= m(c, c);
      const S pivot_inv = m(c, c).inv();
      for (std::size_t r = c + 1; r < rows_; ++r) {
        if (m(r, c).is_zero()) {
          continue;
        }
        const S f = m(r, c) * pivot_inv;
        for (std::size_t k = c; k < cols_; ++k) {
          m(r, k) -= f * m(c, k);
        }
      }
    }
    return det;
  }

  /// Gauss-Jordan inverse; throws SingularMatrix.
  Matrix inverse() const {
    if (!is_square()) {
      throw DimensionMismatch("inverse of a non-square matrix");
    }
    const std::size_t n = rows_;
    Matrix m = *this;
    Matrix inv = identity(n);
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t p = c;
      while (p < n && m(p, c).is_zero()) {
        ++p;
      }
      if (p == n) {
        throw SingularMatrix();
      }
      m.swap_rows(p, c);
      inv.swap_rows(p, c);
      const S pivot_inv = m(c, c).inv();
      for (std::size_t k = 0; k < n; ++k) {
        m(c, k) *= pivot_inv;
        inv(c, k) *= pivot_inv;
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (r == c || m(r, c).is_zero()) {
          continue;
        }
        const S f = m(r, c);
        for (std::size_t k = 0; k < n; ++k) {
          m(r, k) -= f * m(c, k);
          inv(r, k) -= f * inv(c, k);
        }
      }
    }
    return inv;
  }

private:
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) {
      return;
    }
    for (std::size_t k = 0; k < cols_; ++k) {
      std::swap((*this)(a, k), (*this)(b, k));
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> a_;
};

} // namespace tpa
