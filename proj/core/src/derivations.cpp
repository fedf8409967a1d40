#include "tpa/derivations.hpp"

#include "tpa/identities.hpp"

namespace tpa {

QMatrix to_matrix(const Vector& flat, std::size_t n) {
  if (flat.size() != n * n) {
    throw DimensionMismatch("flat matrix has wrong length");
  }
  QMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      m(k, i) = flat[k * n + i];
    }
  }
  return m;
}

Vector flatten(const QMatrix& m) {
  Vector v(m.rows() * m.cols());
  for (std::size_t k = 0; k < m.rows(); ++k) {
    for (std::size_t i = 0; i < m.cols(); ++i) {
      v[k * m.cols() + i] = m(k, i);
    }
  }
  return v;
}

SC to_tensor(const Vector& flat, std::size_t n) {
  if (flat.size() != n * n * n) {
    throw DimensionMismatch("flat tensor has wrong length");
  }
  SC sc(n);
  sc.data() = flat;
  return sc;
}

QMatrix delta_derivation_system(const SC& sc, const Rational& delta) {
  const std::size_t n = sc.dim();
  auto var = [n](std::size_t k, std::size_t i) { return k * n + i; };
  QMatrix a(n * n * n, n * n);
  std::size_t row = 0;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t m = 0; m < n; ++m, ++row) {
        // phi(e_x*e_y)_m
        for (std::size_t k = 0; k < n; ++k) {
          if (!sc.at(x, y, k).is_zero()) {
            a(row, var(m, k)) += sc.at(x, y, k);
          }
        }
        // -delta (phi(e_x)*e_y + e_x*phi(e_y))_m
        for (std::size_t k = 0; k < n; ++k) {
          if (!sc.at(k, y, m).is_zero()) {
            a(row, var(k, x)) -= delta * sc.at(k, y, m);
          }
          if (!sc.at(x, k, m).is_zero()) {
            a(row, var(k, y)) -= delta * sc.at(x, k, m);
          }
        }
      }
    }
  }
  return a;
}

SolutionSpace delta_derivations(const SC& sc, const Rational& delta) {
  const std::size_t n = sc.dim();
  return {n * n, nullspace(delta_derivation_system(sc, delta))};
}

SolutionSpace derivations(const SC& sc) { return delta_derivations(sc, Rational(1)); }

SolutionSpace pair_derivations(const Pair& pair) {
  const std::size_t n = pair.dim();
  const QMatrix a = delta_derivation_system(pair.mul, Rational(1));
  const QMatrix b = delta_derivation_system(pair.bracket, Rational(1));
  QMatrix both(a.rows() + b.rows(), n * n);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n * n; ++c) {
      both(r, c) = a(r, c);
      both(a.rows() + r, c) = b(r, c);
    }
  }
  return {n * n, nullspace(both)};
}

bool is_delta_derivation(const SC& sc, const QMatrix& phi, const Rational& delta) {
  const QMatrix a = delta_derivation_system(sc, delta);
  const Vector r = a.apply(flatten(phi));
  for (const auto& x : r) {
    if (!x.is_zero()) {
      return false;
    }
  }
  return true;
}

QMatrix half_biderivation_system(const SC& br, bool symmetric) {
  const std::size_t n = br.dim();
  auto var = [n](std::size_t i, std::size_t j, std::size_t k) { return (i * n + j) * n + k; };
  const Rational half(1, 2);
  const std::size_t eq_rows = 2 * n * n * n * n + (symmetric ? n * (n - 1) / 2 * n : 0);
  QMatrix a(eq_rows, n * n * n);
  std::size_t row = 0;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        for (std::size_t m = 0; m < n; ++m) {
          // D([x,y],z) - 1/2([D(x,z),y] + [x,D(y,z)])
          for (std::size_t p = 0; p < n; ++p) {
            if (!br.at(x, y, p).is_zero()) {
              a(row, var(p, z, m)) += br.at(x, y, p);
            }
            if (!br.at(p, y, m).is_zero()) {
              a(row, var(x, z, p)) -= half * br.at(p, y, m);
            }
            if (!br.at(x, p, m).is_zero()) {
              a(row, var(y, z, p)) -= half * br.at(x, p, m);
            }
          }
          ++row;
          // D(x,[y,z]) - 1/2([D(x,y),z] + [y,D(x,z)])
          for (std::size_t p = 0; p < n; ++p) {
            if (!br.at(y, z, p).is_zero()) {
              a(row, var(x, p, m)) += br.at(y, z, p);
            }
            if (!br.at(p, z, m).is_zero()) {
              a(row, var(x, y, p)) -= half * br.at(p, z, m);
            }
            if (!br.at(y, p, m).is_zero()) {
              a(row, var(x, z, p)) -= half * br.at(y, p, m);
            }
          }
          ++row;
        }
      }
    }
  }
  if (symmetric) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k, ++row) {
          a(row, var(i, j, k)) = Rational(1);
          a(row, var(j, i, k)) = Rational(-1);
        }
      }
    }
  }
  return a;
}

SolutionSpace half_biderivations(const SC& bracket, bool symmetric) {
  if (!is_lie(bracket)) {
    throw NotALieAlgebra();
  }
  const std::size_t n = bracket.dim();
  return {n * n * n, nullspace(half_biderivation_system(bracket, symmetric))};
}

bool is_half_biderivation(const SC& bracket, const SC& d) {
  const Vector r = half_biderivation_system(bracket, false).apply(d.data());
  for (const auto& x : r) {
    if (!x.is_zero()) {
      return false;
    }
  }
  return true;
}

QMatrix right_multiplication(const SC& sc, const Vector& z) {
  const std::size_t n = sc.dim();
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector v = sc.evaluate(basis_vector<Rational>(n, i), z);
    for (std::size_t k = 0; k < n; ++k) {
      m(k, i) = v[k];
    }
  }
  return m;
}

} // namespace tpa
