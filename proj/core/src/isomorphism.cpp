#include "tpa/isomorphism.hpp"

namespace tpa {

bool verify_witness(const Pair& a, const Pair& b, const QMatrix& m) {
  const std::size_t n = a.dim();
  if (b.dim() != n || m.rows() != n || m.cols() != n) {
    throw DimensionMismatch("witness and algebras must share one dimension");
  }
  if (m.determinant().is_zero()) {
    return false;
  }
  return transport(a, m) == b;
}

const std::array<std::string_view, Fingerprint::size>& Fingerprint::names() {
  static const std::array<std::string_view, size> n{
      "dim_mul_image", "dim_bracket_image", "dim_joint_image", "dim_mul_cube",      "dim_annihilator", "dim_center",
      "dim_der_mul",   "dim_der_bracket",   "dim_der_pair",    "dim_half_der_bracket", "has_unit"};
  return n;
}

std::array<int, Fingerprint::size> Fingerprint::values() const {
  return {mul_image, bracket_image, joint_image, mul_cube, annihilator, center,
          der_mul,   der_bracket,   der_pair,    half_der_bracket, has_unit};
}

namespace {

std::vector<Vector> products(const SC& sc) {
  std::vector<Vector> v;
  for (std::size_t i = 0; i < sc.dim(); ++i) {
    for (std::size_t j = 0; j < sc.dim(); ++j) {
      v.push_back(sc.product(i, j));
    }
  }
  return v;
}

int to_int(std::size_t x) { return static_cast<int>(x); }

} // namespace

int image_dim(const SC& sc) { return to_int(rank_of(products(sc), sc.dim())); }

int joint_image_dim(const Pair& pair) {
  auto v = products(pair.mul);
  auto w = products(pair.bracket);
  v.insert(v.end(), w.begin(), w.end());
  return to_int(rank_of(v, pair.dim()));
}

int annihilator_dim(const SC& sc) {
  const std::size_t n = sc.dim();
  // rows (j, m), columns i: coefficient of e_m in e_i * e_j
  QMatrix a(n * n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t m = 0; m < n; ++m) {
      for (std::size_t i = 0; i < n; ++i) {
        a(j * n + m, i) = sc.at(i, j, m);
      }
    }
  }
  return to_int(n - rank(a));
}

std::optional<Vector> unit_element(const SC& sc) {
  const std::size_t n = sc.dim();
  QMatrix a(n * n, n);
  Vector rhs(n * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t m = 0; m < n; ++m) {
      for (std::size_t u = 0; u < n; ++u) {
        a(i * n + m, u) = sc.at(u, i, m);
      }
      rhs[i * n + m] = Rational(i == m ? 1 : 0);
    }
  }
  return solve(a, rhs);
}

Fingerprint fingerprint(const Pair& pair) {
  const std::size_t n = pair.dim();
  Fingerprint f;
  f.mul_image = image_dim(pair.mul);
  f.bracket_image = image_dim(pair.bracket);
  f.joint_image = joint_image_dim(pair);
  {
    const auto sq = products(pair.mul);
    std::vector<Vector> cube;
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& w : sq) {
        cube.push_back(pair.mul.evaluate(basis_vector<Rational>(n, i), w));
      }
    }
    f.mul_cube = to_int(rank_of(cube, n));
  }
  f.annihilator = annihilator_dim(pair.mul);
  f.center = annihilator_dim(pair.bracket);
  f.der_mul = to_int(derivations(pair.mul).dim());
  f.der_bracket = to_int(derivations(pair.bracket).dim());
  f.der_pair = to_int(pair_derivations(pair).dim());
  f.half_der_bracket = to_int(delta_derivations(pair.bracket, Rational(1, 2)).dim());
  f.has_unit = unit_element(pair.mul).has_value() ? 1 : 0;
  return f;
}

std::string_view to_string(Distinction d) { return d == Distinction::proved_noniso ? "proved_noniso" : "unknown"; }

Distinction distinguish(const Pair& a, const Pair& b) {
  if (a.dim() != b.dim()) {
    return Distinction::proved_noniso;
  }
  return fingerprint(a) == fingerprint(b) ? Distinction::unknown : Distinction::proved_noniso;
}

} // namespace tpa
