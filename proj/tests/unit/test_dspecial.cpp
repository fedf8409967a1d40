#include <doctest.h>

#include <algorithm>

#include "oracle.hpp"
#include "tpa/catalog.hpp"
#include "tpa/dspecial.hpp"
#include "tpa/identities.hpp"
#include "tpa/isomorphism.hpp"

using namespace tpa;

namespace {

std::vector<std::string> commutative_ids() {
  std::vector<std::string> ids;
  for (const auto& e : catalog_entries()) {
    if (e.kind == EntryKind::commutative) {
      ids.push_back(e.id);
    }
  }
  return ids;
}

// D(x).y - x.D(y) on basis vectors, through the naive evaluator.
oracle::Tensor derived_oracle(const SC& comm, const QMatrix& d) {
  const std::size_t n = comm.dim();
  const auto c = oracle::tensor(comm);
  const auto dm = oracle::to_mat(d);
  oracle::Tensor out(n * n * n, oracle::Q(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<oracle::Q> di(n), dj(n), ei(n, oracle::Q(0)), ej(n, oracle::Q(0));
      for (std::size_t r = 0; r < n; ++r) {
        di[r] = dm[r][i];
        dj[r] = dm[r][j];
      }
      ei[i] = 1;
      ej[j] = 1;
      const auto a = oracle::eval(c, n, di, ej);
      const auto b = oracle::eval(c, n, ei, dj);
      for (std::size_t k = 0; k < n; ++k) {
        out[(i * n + j) * n + k] = a[k] - b[k];
      }
    }
  }
  return out;
}

} // namespace

TEST_CASE("derived bracket examples") {
  const Rational a(3, 2);
  const SC a2 = instantiate<Rational>("A2_02").mul;
  const SC br = derived_bracket(a2, QMatrix::from_columns({{0, 0}, {0, -a}}));
  SC expected(2);
  expected.set_antisymmetric(0, 1, 1, a);
  CHECK(br == expected);
  CHECK(derived_bracket(a2, QMatrix(2, 2)).is_zero());

  const SC a09 = instantiate<Rational>("A09").mul;
  const SC b09 = derived_bracket(a09, family_derivation("DA05").derivation({a}));
  CHECK(b09.at(0, 1, 2) == a);
  CHECK(b09.at(1, 0, 2) == -a);

  CHECK_THROWS_AS(derived_bracket(a2, QMatrix::identity(2)), NotADerivation);
  CHECK_THROWS_AS(derived_bracket_unchecked(a2, QMatrix::identity(3)), DimensionMismatch);
}

TEST_CASE("derived brackets of every Der basis element are transposed Poisson") {
  for (const auto& id : commutative_ids()) {
    CAPTURE(id);
    const SC comm = instantiate<Rational>(id).mul;
    const std::size_t n = comm.dim();
    for (const auto& v : derivations(comm).basis) {
      const QMatrix d = to_matrix(v, n);
      const SC br = derived_bracket(comm, d);
      CHECK(oracle::tensor(br) == derived_oracle(comm, d));
      CHECK(is_transposed_poisson(Pair(comm, br)));
    }
  }
}

TEST_CASE("commutative algebras whose derived brackets all vanish") {
  std::vector<std::string> vanishing;
  for (const auto& id : commutative_ids()) {
    const SC comm = instantiate<Rational>(id).mul;
    bool all_zero = true;
    for (const auto& v : derivations(comm).basis) {
      const auto t = derived_oracle(comm, to_matrix(v, comm.dim()));
      all_zero = all_zero && std::all_of(t.begin(), t.end(), [](const oracle::Q& x) { return x == 0; });
    }
    CHECK(brackets_all_zero(comm) == all_zero);
    if (all_zero) {
      vanishing.push_back(id);
    }
  }
  const std::vector<std::string> expected = {"A01", "A03", "A07", "A08", "A11", "A2_01", "A2_03", "A2_04"};
  CHECK(vanishing == expected);
  CHECK_FALSE(brackets_all_zero(instantiate<Rational>("A05").mul));
}

TEST_CASE("commutator bracket") {
  const Pair np01 = instantiate<Rational>("NP01");
  const SC c = commutator_bracket(np01.bracket);
  CHECK(c.at(1, 0, 0) == Rational(-1));
  CHECK(c.at(0, 1, 0) == Rational(1));
  CHECK(verify_witness(Pair(np01.mul, c), instantiate<Rational>("N01"), np01_to_n01_witness()));
  CHECK(commutator_bracket(instantiate<Rational>("A04").mul).is_zero());

  const std::vector<Rational> p = {Rational(5), Rational(2), Rational(-1)};
  const SC np02 = commutator_bracket(instantiate<Rational>("NP02", p).bracket);
  SC expected(2);
  expected.set_antisymmetric(0, 1, 0, Rational(3));
  CHECK(np02 == expected);
}

TEST_CASE("family derivations reconstruct the D entries") {
  for (const char* id : {"D01", "D02", "D03", "D04", "D05", "D06", "D06b", "D07", "D08", "D2_01"}) {
    CAPTURE(id);
    for (const auto& p : default_samples(id)) {
      CHECK(reconstructs(id, p));
    }
  }
  for (const auto& f : family_derivations()) {
    CAPTURE(f.family);
    for (const auto& p : default_samples(f.family)) {
      CHECK(reconstructs(f.family, p));
      CHECK(is_delta_derivation(instantiate<Rational>(f.comm).mul, f.derivation(p), Rational(1)));
    }
  }
  CHECK_THROWS_AS(family_derivation("DA09"), UnknownId);
}

TEST_CASE("N02 obstruction") {
  const auto ob = n02_obstruction(default_samples("NP02"), {Rational(2), Rational(-1), Rational(1, 3)});
  CHECK(ob.unique_unit_is_e2);
  CHECK(ob.nilpotents_in_span_e1);
  CHECK(ob.diagonal_automorphisms);
  CHECK(ob.commutators_in_span_e1);
  CHECK(ob.n02_bracket_image_is_e2);
  CHECK(ob.holds());
}

TEST_CASE("strong feasibility") {
  const Rational a(2);
  // positive cases: every D-family member is reproduced by some derivation
  for (const char* id : {"DA01", "DA02", "DA03", "DA05", "DA06", "D2_01"}) {
    for (const auto& p : default_samples(id)) {
      const Pair pair = instantiate<Rational>(id, p);
      const auto f = strong_feasibility(pair);
      REQUIRE(f.feasible);
      REQUIRE(f.derivation.has_value());
      CHECK(derived_bracket(pair.mul, *f.derivation) == pair.bracket);
    }
  }
  for (const char* id : {"T02", "T08", "T13", "T14", "T15", "T16", "T18"}) {
    CAPTURE(id);
    const auto f = strong_feasibility(instantiate<Rational>(id));
    CHECK_FALSE(f.feasible);
    CHECK_FALSE(f.derivation.has_value());
  }
  for (const char* id : {"T10", "T11"}) {
    for (const auto& p : default_samples(id)) {
      CHECK_FALSE(strong_feasibility(instantiate<Rational>(id, p)).feasible);
    }
  }
  // T03 with a nonzero parameter is reproduced by D = diag(x, y, x + y), x - y = 1/beta
  const Pair t03 = instantiate<Rational>("T03", {a});
  const auto f = strong_feasibility(t03);
  CHECK(f.feasible);
  const QMatrix d = QMatrix::diagonal({Rational(1, 2), Rational(0), Rational(1, 2)});
  CHECK(derived_bracket(t03.mul, d) == t03.bracket);
}
