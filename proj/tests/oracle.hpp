#pragma once

// Naive reference computations used to check the library. They work on raw
// mpq_class tables and share no code with the solver.

#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "tpa/algebra.hpp"

namespace oracle {

using Q = mpq_class;
using Mat = std::vector<std::vector<Q>>;
using Tensor = std::vector<Q>; // flat (i*n + j)*n + k

inline Q q(const tpa::Rational& r) { return r.value(); }

inline Tensor tensor(const tpa::StructureConstants<tpa::Rational>& sc) {
  Tensor t;
  for (const auto& x : sc.data()) {
    t.push_back(q(x));
  }
  return t;
}

/// Plain Gauss-Jordan rank over mpq.
inline int rank(Mat a) {
  int r = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(r) < rows; ++c) {
    std::size_t p = static_cast<std::size_t>(r);
    while (p < rows && a[p][c] == 0) {
      ++p;
    }
    if (p == rows) {
      continue;
    }
    std::swap(a[p], a[static_cast<std::size_t>(r)]);
    auto& piv = a[static_cast<std::size_t>(r)];
    for (std::size_t i = 0; i < rows; ++i) {
      if (i != static_cast<std::size_t>(r) && a[i][c] != 0) {
        const Q f = a[i][c] / piv[c];
        for (std::size_t j = c; j < cols; ++j) {
          a[i][j] -= f * piv[j];
        }
      }
    }
    ++r;
  }
  return r;
}

inline Mat zeros(std::size_t r, std::size_t c) { return Mat(r, std::vector<Q>(c, Q(0))); }

/// Dimension of {phi : phi(x*y) = delta (phi(x)*y + x*phi(y))}, phi(e_i) = sum_k p[k][i] e_k.
/// Unknown index k*n + i.
inline Mat delta_system(const Tensor& c, std::size_t n, const Q& delta) {
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) { return c[(i * n + j) * n + k]; };
  Mat rows;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t m = 0; m < n; ++m) {
        std::vector<Q> row(n * n, Q(0));
        // phi(e_i * e_j)_m = sum_k c_ij^k p[m][k]
        for (std::size_t k = 0; k < n; ++k) {
          row[m * n + k] += at(i, j, k);
        }
        // phi(e_i) * e_j = sum_k p[k][i] c_kj^m ; e_i * phi(e_j) = sum_k p[k][j] c_ik^m
        for (std::size_t k = 0; k < n; ++k) {
          row[k * n + i] -= delta * at(k, j, m);
          row[k * n + j] -= delta * at(i, k, m);
        }
        rows.push_back(row);
      }
    }
  }
  return rows;
}

inline int delta_dim(const Tensor& c, std::size_t n, const Q& delta) {
  return static_cast<int>(n * n) - rank(delta_system(c, n, delta));
}

inline int pair_der_dim(const Tensor& mul, const Tensor& br, std::size_t n) {
  Mat a = delta_system(mul, n, Q(1));
  Mat b = delta_system(br, n, Q(1));
  a.insert(a.end(), b.begin(), b.end());
  return static_cast<int>(n * n) - rank(a);
}

/// dim span{e_i * e_j}.
inline int image_dim(const Tensor& c, std::size_t n) {
  Mat rows;
  for (std::size_t ij = 0; ij < n * n; ++ij) {
    rows.emplace_back(c.begin() + static_cast<long>(ij * n), c.begin() + static_cast<long>(ij * n + n));
  }
  return rank(rows);
}

/// dim {x : x*e_j = 0 for all j}.
inline int annihilator_dim(const Tensor& c, std::size_t n) {
  Mat rows;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<Q> row(n);
      for (std::size_t i = 0; i < n; ++i) {
        row[i] = c[(i * n + j) * n + k];
      }
      rows.push_back(row);
    }
  }
  return static_cast<int>(n) - rank(rows);
}

/// 3x3 inverse by the adjugate.
inline Mat inverse3(const Mat& m) {
  auto a = [&](int i, int j) { return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
  const Q det = a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) - a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
                a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
  Mat inv = zeros(3, 3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (a(r0, c0) * a(r1, c1) - a(r0, c1) * a(r1, c0)) / det;
    }
  }
  return inv;
}

inline Q det3(const Mat& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

/// New structure constants in the basis E_i = sum_j g[j][i] e_j.
inline Tensor change_basis(const Tensor& c, const Mat& g) {
  const std::size_t n = 3;
  const Mat gi = inverse3(g);
  Tensor out(27, Q(0));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      // E_a * E_b in old coordinates
      std::vector<Q> v(n, Q(0));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          const Q w = g[i][a] * g[j][b];
          if (w == 0) {
            continue;
          }
          for (std::size_t k = 0; k < n; ++k) {
            v[k] += w * c[(i * n + j) * n + k];
          }
        }
      }
      for (std::size_t k = 0; k < n; ++k) {
        Q s = 0;
        for (std::size_t l = 0; l < n; ++l) {
          s += gi[k][l] * v[l];
        }
        out[(a * n + b) * n + k] = s;
      }
    }
  }
  return out;
}

inline Mat to_mat(const tpa::Matrix<tpa::Rational>& m) {
  Mat out = zeros(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out[i][j] = q(m(i, j));
    }
  }
  return out;
}

/// Evaluates the bilinear map on arbitrary vectors.
inline std::vector<Q> eval(const Tensor& c, std::size_t n, const std::vector<Q>& x, const std::vector<Q>& y) {
  std::vector<Q> out(n, Q(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        out[k] += x[i] * y[j] * c[(i * n + j) * n + k];
      }
    }
  }
  return out;
}

inline std::vector<Q> random_vector(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> num(-7, 7), den(1, 4);
  std::vector<Q> v(n);
  for (auto& x : v) {
    x = Q(num(rng), den(rng));
    x.canonicalize();
  }
  return v;
}

} // namespace oracle
