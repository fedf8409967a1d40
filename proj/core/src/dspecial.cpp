#include "tpa/dspecial.hpp"

#include "tpa/catalog.hpp"
#include "tpa/enumeration.hpp"
#include "tpa/isomorphism.hpp"

namespace tpa {

SC derived_bracket_unchecked(const SC& comm, const QMatrix& d) {
  const std::size_t n = comm.dim();
  if (d.rows() != n || d.cols() != n) {
    throw DimensionMismatch("derivation size differs from algebra dimension");
  }
  SC out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector di = d.column(i);
    for (std::size_t j = 0; j < n; ++j) {
      const Vector dj = d.column(j);
      const Vector a = comm.evaluate(di, basis_vector<Rational>(n, j));
      const Vector b = comm.evaluate(basis_vector<Rational>(n, i), dj);
      for (std::size_t k = 0; k < n; ++k) {
        out.at(i, j, k) = a[k] - b[k];
      }
    }
  }
  return out;
}

SC derived_bracket(const SC& comm, const QMatrix& d) {
  if (!is_delta_derivation(comm, d, Rational(1))) {
    throw NotADerivation();
  }
  return derived_bracket_unchecked(comm, d);
}

bool brackets_all_zero(const SC& comm) {
  const std::size_t n = comm.dim();
  for (const auto& v : derivations(comm).basis) {
    if (!derived_bracket_unchecked(comm, to_matrix(v, n)).is_zero()) {
      return false;
    }
  }
  return true;
}

SC commutator_bracket(const SC& mul2) {
  const std::size_t n = mul2.dim();
  SC out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        out.at(i, j, k) = mul2.at(i, j, k) - mul2.at(j, i, k);
      }
    }
  }
  return out;
}

Feasibility strong_feasibility(const Pair& pair) {
  const std::size_t n = pair.dim();
  const SolutionSpace der = derivations(pair.mul);
  const std::size_t len = n * n * n;
  QMatrix a(len, der.dim());
  for (std::size_t m = 0; m < der.dim(); ++m) {
    const SC b = derived_bracket_unchecked(pair.mul, to_matrix(der.basis[m], n));
    for (std::size_t q = 0; q < len; ++q) {
      a(q, m) = b.data()[q];
    }
  }
  Feasibility f;
  f.der_dim = der.dim();
  if (auto x = solve(a, pair.bracket.data())) {
    Vector flat(n * n, Rational(0));
    for (std::size_t m = 0; m < der.dim(); ++m) {
      for (std::size_t q = 0; q < n * n; ++q) {
        flat[q] += (*x)[m] * der.basis[m][q];
      }
    }
    f.feasible = true;
    f.derivation = to_matrix(flat, n);
  }
  return f;
}

namespace {

// columns are D(e_1), ..., D(e_n)
QMatrix from_images(std::initializer_list<std::initializer_list<Rational>> images) {
  std::vector<std::vector<Rational>> c;
  for (const auto& col : images) {
    c.emplace_back(col);
  }
  return QMatrix::from_columns(c);
}

std::vector<FamilyDerivation> make_family_derivations() {
  using P = std::vector<Rational>;
  std::vector<FamilyDerivation> v;
  v.push_back({"D2_01", "A2_02", [](const P& p) { return from_images({{0, 0}, {0, -p[0]}}); }, ""});
  v.push_back({"DA01", "A02", [](const P& p) { return from_images({{0, 0, 0}, {0, 0, 0}, {0, 0, -p[0]}}); }, ""});
  v.push_back({"DA02", "A04",
               [](const P& p) { return from_images({{0, 0, 0}, {0, -p[0], -p[1]}, {0, 0, -2 * p[0]}}); }, ""});
  v.push_back({"DA03", "A05",
               [](const P& p) { return from_images({{0, 0, 0}, {0, -p[0], -p[1]}, {0, -p[2], -p[3]}}); }, ""});
  // D(e3) = b e3 is free; b = 3 exercises it
  v.push_back({"DA04", "A06", [](const P& p) { return from_images({{0, 0, 0}, {0, -p[0], 0}, {0, 0, 3}}); },
               "D(e3) = 3 e3"});
  // D(e1) = -a e1 + b e2 + c e3 with b = 1, c = 2
  v.push_back({"DA05", "A09",
               [](const P& p) {
                 return from_images({{-p[0], 1, 2}, {0, -2 * p[0], 2}, {0, 0, -3 * p[0]}});
               },
               "D(e1) = -a e1 + e2 + 2 e3"});
  // D(e1) = e e1 + e3, D(e2) = -e3, D(e3) = e e3; the image of e1 (not e3) carries the e1 term
  v.push_back({"DA06", "A10",
               [](const P& p) { return from_images({{p[0], 0, 1}, {0, 0, -1}, {0, 0, p[0]}}); },
               "first derivation image constrains e1; the listed D(e3) = a e1 + d e3 is read as D(e1)"});
  return v;
}

std::pair<std::string, std::vector<Rational>> family_of(const std::string& id, const std::vector<Rational>& p) {
  const Rational z(0);
  const Rational o(1);
  if (id == "D01") return {"DA01", {p[0]}};
  if (id == "D02") return {"DA02", {z, o}};
  if (id == "D03") return {"DA02", {p[0], z}};
  if (id == "D04") return {"DA03", {z, o, z, z}};
  if (id == "D05") return {"DA03", {p[0], z, z, p[0]}};
  if (id == "D06") return {"DA03", {p[0], z, p[1], p[1]}};
  if (id == "D06b") return {"DA04", {p[0]}};
  if (id == "D07") return {"DA05", {p[0]}};
  if (id == "D08") return {"DA06", {p[0]}};
  return {id, p};
}

} // namespace

const std::vector<FamilyDerivation>& family_derivations() {
  static const std::vector<FamilyDerivation> v = make_family_derivations();
  return v;
}

const FamilyDerivation& family_derivation(const std::string& family) {
  for (const auto& f : family_derivations()) {
    if (f.family == family) {
      return f;
    }
  }
  throw UnknownId(family);
}

bool reconstructs(const std::string& id, const std::vector<Rational>& params) {
  const Pair expected = instantiate<Rational>(id, params);
  const auto [family, p] = family_of(id, params);
  const FamilyDerivation& fd = family_derivation(family);
  const SC comm = instantiate<Rational>(fd.comm).mul;
  const SC br = derived_bracket(comm, fd.derivation(p));
  return Pair(comm, br) == expected;
}

QMatrix np01_to_n01_witness() { return QMatrix{{0, 1}, {-1, 0}}; }

N02Obstruction n02_obstruction(const std::vector<std::vector<Rational>>& np02_samples,
                               const std::vector<Rational>& lambdas) {
  N02Obstruction r;
  const Pair n02 = instantiate<Rational>("N02");
  const SC& mul = n02.mul;

  // the unit solves u.e_i = e_i; uniqueness means the homogeneous system is trivial
  if (auto u = unit_element(mul)) {
    QMatrix hom(4, 2);
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t m = 0; m < 2; ++m) {
        for (std::size_t k = 0; k < 2; ++k) {
          hom(i * 2 + m, k) = mul.at(k, i, m);
        }
      }
    }
    r.unique_unit_is_e2 = nullspace(hom).empty() && *u == Vector{Rational(0), Rational(1)};
  }

  // quadratic form x -> (x.x)_2 has matrix diag(0, 1)
  r.nilpotents_in_span_e1 = mul.at(0, 0, 1).is_zero() && mul.at(0, 1, 1).is_zero() && mul.at(1, 0, 1).is_zero() &&
                            mul.at(1, 1, 1).is_one() && mul.at(0, 0, 0).is_zero();

  r.diagonal_automorphisms = !lambdas.empty();
  for (const auto& l : lambdas) {
    const QMatrix g = QMatrix::diagonal({l, Rational(1)});
    r.diagonal_automorphisms = r.diagonal_automorphisms && transport(mul, g) == mul;
  }

  r.commutators_in_span_e1 = !np02_samples.empty();
  for (const auto& s : np02_samples) {
    const SC c = commutator_bracket(instantiate<Rational>("NP02", s).bracket);
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        r.commutators_in_span_e1 = r.commutators_in_span_e1 && c.at(i, j, 1).is_zero();
      }
    }
  }

  {
    const SC& b = n02.bracket;
    bool only_e2 = true;
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        only_e2 = only_e2 && b.at(i, j, 0).is_zero();
      }
    }
    r.n02_bracket_image_is_e2 = only_e2 && image_dim(b) == 1;
  }
  return r;
}

} // namespace tpa
