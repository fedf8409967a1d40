#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "tpa/catalog.hpp"
#include "tpa/identities.hpp"

using namespace tpa;
using Q3 = Matrix<Rational>;

namespace {

std::vector<Rational> e(std::size_t i) { return basis_vector<Rational>(3, i); }

Q3 random_matrix(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  for (;;) {
    Q3 g(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        g(i, j) = Rational(num(rng), den(rng));
      }
    }
    if (!g.determinant().is_zero()) {
      return g;
    }
  }
}

StructureConstants<Rational> random_tensor(std::mt19937_64& rng, bool sparse) {
  std::uniform_int_distribution<int> num(-3, 3), coin(0, 3);
  StructureConstants<Rational> sc(3);
  for (auto& x : sc.data()) {
    x = sparse && coin(rng) != 0 ? Rational(0) : Rational(num(rng));
  }
  return sc;
}

} // namespace

TEST_CASE("evaluate") {
  const auto t29 = instantiate<Rational>("T29");
  CHECK(t29.mul.evaluate(e(0), e(1)) == e(2));
  CHECK(t29.mul.evaluate({0, 0, 0}, e(1)) == std::vector<Rational>{0, 0, 0});
  CHECK(lie_algebra("sl2").evaluate(e(1), e(2)) == e(0));
  CHECK_THROWS_AS(t29.mul.evaluate({1, 0}, e(1)), DimensionMismatch);
}

TEST_CASE("transport examples") {
  const auto t29 = instantiate<Rational>("T29");
  CHECK(transport(t29, Q3::identity(3)) == t29);
  const Rational a(2), b(-3), c(5, 2);
  const auto moved = transport(t29.mul, Q3::diagonal({a, b, c}));
  CHECK(moved.at(0, 1, 2) == a * b / c);
  CHECK(moved.at(1, 0, 2) == a * b / c);

  const Rational a1(3), b1(2);
  const Rational s = (a1 - 1).inv();
  const Q3 g = Q3::from_columns({{s, 0, 0}, {1, a1 * s, 0}, {0, 0, a1}});
  const auto src = instantiate<Rational>("T09", {a1.inv(), b1});
  CHECK(transport(src, g) == instantiate<Rational>("T09", {a1, a1 * b1}));
  CHECK_THROWS_AS(transport(src, Q3::diagonal({1, 0, 1})), SingularMatrix);
}

TEST_CASE("transport agrees with a naive change of basis") {
  std::mt19937_64 rng(21);
  for (const char* id : {"T05", "T09", "T17", "T24", "T01"}) {
    const auto& entry = find_entry(id);
    std::vector<Rational> params(entry.param_names.size(), Rational(3));
    const auto pair = instantiate<Rational>(id, params);
    for (int k = 0; k < 5; ++k) {
      const Q3 g = random_matrix(rng);
      const auto moved = transport(pair, g);
      CHECK(oracle::tensor(moved.mul) == oracle::change_basis(oracle::tensor(pair.mul), oracle::to_mat(g)));
      CHECK(oracle::tensor(moved.bracket) ==
            oracle::change_basis(oracle::tensor(pair.bracket), oracle::to_mat(g)));
    }
  }
}

TEST_CASE("property: transport composes") {
  std::mt19937_64 rng(5);
  const auto pair = instantiate<Rational>("T12", {Rational(-1, 2)});
  for (int k = 0; k < 20; ++k) {
    const Q3 g = random_matrix(rng);
    const Q3 h = random_matrix(rng);
    CHECK(transport(transport(pair, g), h) == transport(pair, g * h));
    CHECK(act(act(pair, g), g.inverse()) == pair);
  }
}

TEST_CASE("identity checks") {
  const auto t07 = instantiate<Rational>("T07", {Rational(1)});
  for (Identity id : {Identity::commutative, Identity::associative, Identity::anticommutative, Identity::jacobi,
                      Identity::transposed_leibniz}) {
    CHECK(holds(t07, id));
  }
  const auto leib = check_identity(t07, Identity::leibniz);
  CHECK_FALSE(leib.holds);
  CHECK_FALSE(leib.violations.empty());

  const AlgebraPair<Rational> zero(StructureConstants<Rational>(3), StructureConstants<Rational>(3));
  for (Identity id : all_identities) {
    CHECK(holds(zero, id));
  }

  const auto t29 = instantiate<Rational>("T29");
  CHECK_FALSE(is_transposed_poisson(AlgebraPair<Rational>(t29.mul, t29.mul)));
  CHECK(is_transposed_poisson(AlgebraPair<Rational>(StructureConstants<Rational>(3), lie_algebra("sl2"))));
  CHECK(is_lie(lie_algebra("g2", {Rational(5)})));
  CHECK(is_commutative_associative(instantiate<Rational>("A04").mul));

  CHECK(parse_identity("jacobi") == Identity::jacobi);
  CHECK_THROWS_AS(parse_identity("novikov"), ParseError);
}

TEST_CASE("violations report 1-based indices and residuals") {
  StructureConstants<Rational> br(3);
  br.at(0, 1, 2) = Rational(1); // [e1,e2] = e3 without the antisymmetric partner
  const AlgebraPair<Rational> p(StructureConstants<Rational>(3), br);
  const auto rep = check_identity(p, Identity::anticommutative);
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0].indices == std::vector<int>{1, 2});
  CHECK(rep.violations[0].residual == std::vector<Rational>{0, 0, 1});
}

TEST_CASE("property: basis-triple checks agree with random-vector instantiation") {
  std::mt19937_64 rng(99);
  using oracle::Q;
  for (int trial = 0; trial < 60; ++trial) {
    const bool sparse = trial % 2 == 0;
    StructureConstants<Rational> m = random_tensor(rng, sparse);
    StructureConstants<Rational> b = random_tensor(rng, sparse);
    // symmetrize / antisymmetrize so the other axioms do not dominate
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        for (std::size_t k = 0; k < 3; ++k) {
          m.at(i, j, k) = m.at(j, i, k);
          b.at(i, j, k) = -b.at(j, i, k);
        }
      }
      for (std::size_t k = 0; k < 3; ++k) {
        b.at(i, i, k) = Rational(0);
      }
    }
    if (trial % 3 == 0) {
      m = instantiate<Rational>("T24").mul;
      b = StructureConstants<Rational>(3);
    }
    const AlgebraPair<Rational> p(m, b);
    const auto tm = oracle::tensor(m);
    const auto tb = oracle::tensor(b);
    bool random_zero_tl = true;
    bool random_zero_assoc = true;
    for (int r = 0; r < 3; ++r) {
      const auto x = oracle::random_vector(rng, 3);
      const auto y = oracle::random_vector(rng, 3);
      const auto z = oracle::random_vector(rng, 3);
      auto lhs = oracle::eval(tm, 3, z, oracle::eval(tb, 3, x, y));
      const auto r1 = oracle::eval(tb, 3, oracle::eval(tm, 3, z, x), y);
      const auto r2 = oracle::eval(tb, 3, x, oracle::eval(tm, 3, z, y));
      const auto a1 = oracle::eval(tm, 3, oracle::eval(tm, 3, x, y), z);
      const auto a2 = oracle::eval(tm, 3, x, oracle::eval(tm, 3, y, z));
      for (std::size_t k = 0; k < 3; ++k) {
        if (2 * lhs[k] - r1[k] - r2[k] != 0) {
          random_zero_tl = false;
        }
        if (a1[k] != a2[k]) {
          random_zero_assoc = false;
        }
      }
    }
    CHECK(holds(p, Identity::transposed_leibniz) == random_zero_tl);
    CHECK(holds(p, Identity::associative) == random_zero_assoc);
  }
}
