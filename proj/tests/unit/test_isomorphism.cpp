#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "oracle.hpp"
#include "tpa/catalog.hpp"
#include "tpa/derivations.hpp"
#include "tpa/isomorphism.hpp"

using namespace tpa;

namespace {

Pair at(const std::string& id, std::vector<Rational> p = {}) { return instantiate<Rational>(id, p); }

QMatrix random_matrix(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-3, 3), den(1, 2);
  for (;;) {
    QMatrix g(3, 3);
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

} // namespace

TEST_CASE("verify_witness") {
  const Pair t = at("T09", {Rational(2), Rational(1)});
  CHECK(verify_witness(t, t, QMatrix::identity(3)));
  const Rational a(1, 2);
  const Rational s = (a - 1).inv();
  const auto m = QMatrix::from_columns({{s, 0, 0}, {1, a * s, 0}, {0, 0, a}});
  CHECK(verify_witness(at("T09", {Rational(2), Rational(1)}), at("T09", {a, Rational(1, 2)}), m));
  CHECK_FALSE(verify_witness(t, t, QMatrix::diagonal({1, 0, 1})));
  CHECK_THROWS_AS(verify_witness(t, t, QMatrix::identity(2)), DimensionMismatch);

  std::mt19937_64 rng(17);
  for (Rational alpha : {Rational(0), Rational(3), Rational(-1, 2)}) {
    for (int k = 0; k < 25; ++k) {
      CHECK_FALSE(verify_witness(at("T10", {alpha}), at("T11", {alpha}), random_matrix(rng)));
    }
  }
}

TEST_CASE("fingerprint examples") {
  const Fingerprint t20 = fingerprint(at("T20"));
  CHECK(t20.mul_image == 3);
  CHECK(t20.bracket_image == 0);
  CHECK(t20.has_unit == 1);
  CHECK(t20.der_pair == 0);

  const Fingerprint zero = fingerprint(Pair(SC(3), SC(3)));
  CHECK(zero.mul_image == 0);
  CHECK(zero.bracket_image == 0);
  CHECK(zero.joint_image == 0);
  CHECK(zero.der_mul == 9);
  CHECK(zero.der_bracket == 9);
  CHECK(zero.der_pair == 9);

  const Fingerprint t01 = fingerprint(at("T01"));
  CHECK(t01.bracket_image == 3);
  CHECK(t01.mul_image == 0);
  CHECK(t01.der_pair == 3);
}

TEST_CASE("fingerprint regression table") {
  // Computed values; several columns are cross-checked against the naive oracle below.
  const std::map<std::string, std::array<int, 11>> expected = {
      {"T01", {0, 3, 3, 0, 3, 0, 9, 3, 3, 1, 0}},    {"T02", {1, 1, 1, 0, 2, 1, 5, 6, 4, 6, 0}},
      {"T03(0)", {0, 1, 1, 0, 3, 1, 9, 6, 6, 6, 0}}, {"T04(0)", {1, 1, 2, 0, 2, 1, 5, 6, 3, 6, 0}},
      {"T05", {3, 1, 3, 3, 0, 1, 2, 6, 1, 6, 1}},    {"T06", {3, 1, 3, 3, 0, 1, 4, 6, 2, 6, 1}},
      {"T07(0)", {0, 2, 2, 0, 3, 0, 9, 6, 6, 3, 0}}, {"T08", {1, 2, 2, 0, 2, 0, 5, 6, 4, 3, 0}},
      {"T09(2, 1)", {3, 2, 3, 3, 0, 0, 4, 4, 2, 4, 1}}, {"T10(0)", {1, 1, 2, 0, 2, 1, 5, 4, 3, 4, 0}},
      {"T11(0)", {1, 1, 2, 0, 2, 1, 5, 4, 2, 4, 0}}, {"T12(0)", {1, 2, 2, 0, 2, 0, 5, 4, 2, 4, 0}},
      {"T13", {1, 2, 2, 0, 1, 0, 4, 4, 1, 4, 0}},    {"T14", {2, 2, 2, 1, 1, 0, 3, 4, 1, 4, 0}},
      {"T15", {1, 2, 2, 0, 1, 0, 4, 4, 2, 4, 0}},    {"T16", {1, 1, 1, 0, 2, 1, 5, 4, 3, 4, 0}},
      {"T17(0)", {1, 1, 2, 1, 2, 1, 4, 4, 2, 4, 0}}, {"T18", {2, 1, 2, 1, 1, 1, 2, 4, 1, 4, 0}},
      {"T19(1)", {2, 1, 2, 2, 1, 1, 2, 4, 2, 4, 0}}, {"T20", {3, 0, 3, 3, 0, 3, 0, 9, 0, 9, 1}},
      {"T21", {3, 0, 3, 3, 0, 3, 1, 9, 1, 9, 1}},    {"T22", {2, 0, 2, 2, 1, 3, 1, 9, 1, 9, 0}},
      {"T23", {3, 0, 3, 3, 0, 3, 2, 9, 2, 9, 1}},    {"T24", {3, 0, 3, 3, 0, 3, 4, 9, 4, 9, 1}},
      {"T25", {2, 0, 2, 2, 1, 3, 2, 9, 2, 9, 0}},    {"T26", {2, 0, 2, 1, 1, 3, 2, 9, 2, 9, 0}},
      {"T27", {1, 0, 1, 1, 2, 3, 4, 9, 4, 9, 0}},    {"T28", {2, 0, 2, 1, 1, 3, 3, 9, 3, 9, 0}},
      {"T29", {1, 0, 1, 0, 1, 3, 4, 9, 4, 9, 0}},    {"T30", {1, 0, 1, 0, 2, 3, 5, 9, 5, 9, 0}},
  };
  std::size_t seen = 0;
  for (const auto& id : tp_ids()) {
    const auto p = default_samples(id).front();
    const std::string name = ParamInstance{id, p}.to_string();
    CAPTURE(name);
    const Pair pair = at(id, p);
    const Fingerprint f = fingerprint(pair);
    REQUIRE(expected.count(name) == 1);
    CHECK(f.values() == expected.at(name));
    ++seen;

    const auto m = oracle::tensor(pair.mul);
    const auto b = oracle::tensor(pair.bracket);
    CHECK(f.mul_image == oracle::image_dim(m, 3));
    CHECK(f.bracket_image == oracle::image_dim(b, 3));
    CHECK(f.annihilator == oracle::annihilator_dim(m, 3));
    CHECK(f.center == oracle::annihilator_dim(b, 3));
    CHECK(f.der_mul == oracle::delta_dim(m, 3, 1));
    CHECK(f.der_bracket == oracle::delta_dim(b, 3, 1));
    CHECK(f.der_pair == oracle::pair_der_dim(m, b, 3));
    CHECK(f.half_der_bracket == oracle::delta_dim(b, 3, oracle::Q(1, 2)));
  }
  CHECK(seen == 30);
}

TEST_CASE("unit element") {
  const auto u = unit_element(at("T20").mul);
  REQUIRE(u.has_value());
  CHECK(*u == Vector{1, 1, 1});
  CHECK_FALSE(unit_element(at("T29").mul).has_value());
}

TEST_CASE("distinguish") {
  CHECK(distinguish(at("T02"), at("T03", {Rational(1)})) == Distinction::proved_noniso);
  CHECK(distinguish(at("T03", {Rational(2)}), at("T03", {Rational(-2)})) == Distinction::unknown);
  CHECK(distinguish(at("T05"), at("T05")) == Distinction::unknown);
  CHECK(distinguish(at("T10", {Rational(3)}), at("T11", {Rational(3)})) == Distinction::proved_noniso);
  CHECK(to_string(Distinction::proved_noniso) == "proved_noniso");
}

TEST_CASE("property: witnesses invert and fingerprints are invariant") {
  std::mt19937_64 rng(23);
  for (const auto& w : known_isomorphisms()) {
    CAPTURE(w.label);
    for (const auto& p : default_samples(w.driver)) {
      if (!w.admissible(p)) {
        continue;
      }
      const auto s = w.source(p);
      const auto t = w.target(p);
      const Pair a = at(s.id, s.params);
      const Pair b = at(t.id, t.params);
      const QMatrix m = w.matrix(p);
      CHECK(verify_witness(b, a, m.inverse()));
      // soundness: related pairs are never separated
      CHECK(distinguish(a, b) == Distinction::unknown);
    }
  }
  for (const auto& id : tp_ids()) {
    const auto p = default_samples(id).front();
    const Pair a = at(id, p);
    for (int k = 0; k < 3; ++k) {
      CHECK(fingerprint(transport(a, random_matrix(rng))) == fingerprint(a));
    }
  }
}

TEST_CASE("separation of distinct catalog entries") {
  // Pairs of different ids that the invariants do not separate at the default samples.
  const std::set<std::pair<std::string, std::string>> exceptions = {
      {"T11(1/2)", "T12(0)"},
      {"T11(2)", "T12(0)"},
  };
  std::vector<std::pair<ParamInstance, Fingerprint>> all;
  for (const auto& id : tp_ids()) {
    for (const auto& p : default_samples(id)) {
      all.push_back({{id, p}, fingerprint(at(id, p))});
    }
  }
  std::set<std::pair<std::string, std::string>> unseparated;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (all[i].first.id != all[j].first.id && all[i].second == all[j].second) {
        unseparated.insert({all[i].first.to_string(), all[j].first.to_string()});
      }
    }
  }
  CHECK(unseparated == exceptions);
}
