#include "tpa/linear_solve.hpp"

#include <stdexcept>

namespace tpa {

namespace {

std::vector<mpz_class> integer_row(const Matrix<Rational>& a, std::size_t r) {
  mpz_class l = 1;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(r, c).denominator().get_mpz_t());
  }
  std::vector<mpz_class> out(a.cols());
  for (std::size_t c = 0; c < a.cols(); ++c) {
    out[c] = a(r, c).numerator() * (l / a(r, c).denominator());
  }
  return out;
}

Vector back_substitute(const Echelon& e, std::size_t n, Vector x) {
  for (std::size_t r = e.rank(); r-- > 0;) {
    const std::size_t p = e.pivots[r];
    Rational acc(0);
    for (std::size_t j = p + 1; j < n; ++j) {
      if (e.rows[r][j] != 0 && !x[j].is_zero()) {
        acc += Rational(e.rows[r][j], 1) * x[j];
      }
    }
    if (e.cols > n && e.rows[r][n] != 0) {
      acc -= Rational(e.rows[r][n], 1);
    }
    x[p] = -acc / Rational(e.rows[r][p], 1);
  }
  return x;
}

} // namespace

Echelon echelon(const Matrix<Rational>& a) {
  Echelon e;
  e.cols = a.cols();
  std::vector<std::vector<mpz_class>> m;
  m.reserve(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    auto row = integer_row(a, r);
    bool nonzero = false;
    for (const auto& v : row) {
      if (v != 0) {
        nonzero = true;
        break;
      }
    }
    if (nonzero) {
      m.push_back(std::move(row));
    }
  }

  mpz_class prev = 1;
  std::size_t r = 0;
  const std::size_t nrows = m.size();
  for (std::size_t c = 0; c < e.cols && r < nrows; ++c) {
    std::size_t p = r;
    while (p < nrows && m[p][c] == 0) {
      ++p;
    }
    if (p == nrows) {
      continue;
    }
    std::swap(m[p], m[r]);
    const mpz_class& piv = m[r][c];
    for (std::size_t i = r + 1; i < nrows; ++i) {
      const mpz_class f = m[i][c];
      for (std::size_t j = c + 1; j < e.cols; ++j) {
        mpz_class v = piv * m[i][j] - f * m[r][j];
        if (!mpz_divisible_p(v.get_mpz_t(), prev.get_mpz_t())) {
          throw std::logic_error("fraction-free elimination lost exactness");
        }
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = std::move(v);
      }
      m[i][c] = 0;
    }
    prev = piv;
    e.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  e.rows = std::move(m);
  return e;
}

std::size_t rank(const Matrix<Rational>& a) { return echelon(a).rank(); }

Matrix<Rational> rows_to_matrix(const std::vector<Vector>& rows, std::size_t length) {
  Matrix<Rational> m(rows.size(), length);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != length) {
      throw DimensionMismatch("vector length mismatch");
    }
    for (std::size_t c = 0; c < length; ++c) {
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

std::size_t rank_of(const std::vector<Vector>& vectors, std::size_t length) {
  return rank(rows_to_matrix(vectors, length));
}

std::vector<Vector> nullspace(const Matrix<Rational>& a) {
  const std::size_t n = a.cols();
  const Echelon e = echelon(a);
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) {
    is_pivot[p] = true;
  }
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) {
      continue;
    }
    Vector x(n, Rational(0));
    x[f] = Rational(1);
    x = back_substitute(e, n, std::move(x));
    for (const auto& v : x) {
      if (!v.is_zero()) {
        const Rational s = v.inv();
        for (auto& w : x) {
          w *= s;
        }
        break;
      }
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix<Rational>& a, const Vector& b) {
  if (b.size() != a.rows()) {
    throw DimensionMismatch("right-hand side length mismatch");
  }
  const std::size_t n = a.cols();
  Matrix<Rational> aug(a.rows(), n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      aug(r, c) = a(r, c);
    }
    aug(r, n) = b[r];
  }
  const Echelon e = echelon(aug);
  if (!e.pivots.empty() && e.pivots.back() == n) {
    return std::nullopt;
  }
  return back_substitute(e, n, Vector(n, Rational(0)));
}

} // namespace tpa
