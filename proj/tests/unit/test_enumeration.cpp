#include <doctest.h>

#include <random>

#include "tpa/catalog.hpp"
#include "tpa/enumeration.hpp"
#include "tpa/identities.hpp"
#include "tpa/samples.hpp"

using namespace tpa;

namespace {

// The degenerate g2(2) family in the coordinates b12^1, b32^1, b31^3, b33^3 (b32^3 = 0).
SC g2_two(int b12, int b32_1, int b31, int b33) {
  SC m(3);
  m.set_symmetric(0, 0, 1, Rational(b12));
  m.set_symmetric(0, 2, 0, Rational(b33));
  m.set_symmetric(0, 2, 1, Rational(b32_1));
  m.set_symmetric(1, 2, 1, Rational(b33));
  m.set_symmetric(2, 2, 0, Rational(b31));
  m.set_symmetric(2, 2, 2, Rational(b33));
  return m;
}

} // namespace

TEST_CASE("family dimensions") {
  CHECK(tp_family(lie_algebra("g1")).dim() == 3);
  CHECK(tp_family(lie_algebra("g2", {Rational(3)})).dim() == 3);
  CHECK(tp_family(lie_algebra("g2", {Rational(2)})).dim() == 5);
  CHECK(tp_family(lie_algebra("g2", {Rational(0)})).dim() == 5);
  // no nonzero symmetric 1/2-biderivation on sl2, so only the trivial product
  CHECK(tp_family(lie_algebra("sl2")).dim() == 0);
  SC bad(3);
  bad.at(0, 0, 1) = Rational(1);
  CHECK_THROWS_AS(tp_family(bad), NotALieAlgebra);
}

TEST_CASE("associativity residual") {
  const auto g1 = tp_family(lie_algebra("g1"));
  RationalSampler rs(8);
  for (int k = 0; k < 20; ++k) {
    CHECK(is_zero_vector(assoc_residual(g1, {rs.next(), rs.next(), rs.next()})));
  }
  CHECK_THROWS_AS(assoc_residual(g1, {Rational(1)}), DimensionMismatch);

  const SC lie = lie_algebra("g2", {Rational(2)});
  const SC good = g2_two(1, 1, 1, 1);
  REQUIRE(check_membership(lie, good).has_value());
  CHECK(is_zero_vector(assoc_residual(good)));
  const SC bad = g2_two(1, 0, 1, 0);
  REQUIRE(check_membership(lie, bad).has_value());
  CHECK_FALSE(is_zero_vector(assoc_residual(bad)));
  CHECK(residual_norm(assoc_residual(bad)) > Rational(0));
  CHECK(residual_norm(assoc_residual(good)) == Rational(0));
}

TEST_CASE("membership") {
  const SC g1 = lie_algebra("g1");
  const auto t07 = instantiate<Rational>("T07", {Rational(3)});
  const auto family = tp_family(g1);
  const auto coords = check_membership(family, t07.mul);
  REQUIRE(coords.has_value());
  CHECK(member(family, *coords) == t07.mul);

  const auto zero = check_membership(g1, SC(3));
  REQUIRE(zero.has_value());
  CHECK(is_zero_vector(*zero));

  SC idem(3);
  idem.at(0, 0, 0) = Rational(1);
  CHECK_FALSE(check_membership(g1, idem).has_value());
  CHECK_THROWS_AS(member(family, {Rational(1)}), DimensionMismatch);
}

TEST_CASE("every catalog product lies in the family of its bracket") {
  for (const auto& id : tp_ids()) {
    for (const auto& p : default_samples(id)) {
      const std::string name = ParamInstance{id, p}.to_string();
      CAPTURE(name);
      const auto pair = instantiate<Rational>(id, p);
      const auto family = tp_family(pair.bracket);
      const auto coords = check_membership(family, pair.mul);
      REQUIRE(coords.has_value());
      CHECK(is_zero_vector(assoc_residual(family, *coords)));
    }
  }
}

TEST_CASE("property: zero-residual members are transposed Poisson") {
  RationalSampler rs(31);
  for (Rational a : {Rational(0), Rational(1, 2), Rational(2), Rational(3), Rational(-1)}) {
    const SC lie = lie_algebra("g2", {a});
    const auto family = tp_family(lie);
    int zero = 0;
    for (int k = 0; k < 40; ++k) {
      Vector coords(family.dim());
      for (auto& x : coords) {
        // sparse coordinates hit the quadratic zero sets often enough
        x = rs.next_int(0, 2) == 0 ? rs.next() : Rational(0);
      }
      const SC m = member(family, coords);
      const bool assoc = is_zero_vector(assoc_residual(m));
      CHECK(is_transposed_poisson(Pair(m, lie)) == assoc);
      zero += assoc;
    }
    CHECK(zero > 0);
  }
}
