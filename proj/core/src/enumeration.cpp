#include "tpa/enumeration.hpp"

namespace tpa {

ProductFamily tp_family(const SC& lie) { return {lie, half_biderivations(lie, true)}; }

SC member(const ProductFamily& family, const Vector& coords) {
  if (coords.size() != family.dim()) {
    throw DimensionMismatch("expected " + std::to_string(family.dim()) + " family coordinates");
  }
  const std::size_t n = family.lie.dim();
  SC out(n);
  for (std::size_t m = 0; m < coords.size(); ++m) {
    if (coords[m].is_zero()) {
      continue;
    }
    for (std::size_t q = 0; q < out.data().size(); ++q) {
      out.data()[q] += coords[m] * family.basis.basis[m][q];
    }
  }
  return out;
}

Vector assoc_residual(const SC& p) {
  const std::size_t n = p.dim();
  Vector r(n * n * n * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector ij = p.product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        const Vector left = p.evaluate(ij, basis_vector<Rational>(n, k));
        const Vector right = p.evaluate(basis_vector<Rational>(n, i), p.product(j, k));
        for (std::size_t m = 0; m < n; ++m) {
          r[((i * n + j) * n + k) * n + m] = left[m] - right[m];
        }
      }
    }
  }
  return r;
}

Vector assoc_residual(const ProductFamily& family, const Vector& coords) {
  return assoc_residual(member(family, coords));
}

Rational residual_norm(const Vector& residual) {
  Rational s(0);
  for (const auto& x : residual) {
    s += x * x;
  }
  return s;
}

bool is_zero_vector(const Vector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) {
      return false;
    }
  }
  return true;
}

std::optional<Vector> check_membership(const ProductFamily& family, const SC& product) {
  const std::size_t len = family.basis.ambient_dim;
  if (product.data().size() != len) {
    throw DimensionMismatch("product dimension differs from the family");
  }
  QMatrix a(len, family.dim());
  for (std::size_t m = 0; m < family.dim(); ++m) {
    for (std::size_t q = 0; q < len; ++q) {
      a(q, m) = family.basis.basis[m][q];
    }
  }
  return solve(a, product.data());
}

std::optional<Vector> check_membership(const SC& lie, const SC& product) {
  return check_membership(tp_family(lie), product);
}

} // namespace tpa
