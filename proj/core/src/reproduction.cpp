#include "tpa/reproduction.hpp"

#include <algorithm>
#include <sstream>

#include "tpa/catalog.hpp"
#include "tpa/degeneration.hpp"
#include "tpa/derivations.hpp"
#include "tpa/dspecial.hpp"
#include "tpa/enumeration.hpp"
#include "tpa/error.hpp"
#include "tpa/identities.hpp"
#include "tpa/isomorphism.hpp"

namespace tpa {

namespace {

using Params = std::vector<Rational>;

std::string join(const std::vector<std::string>& items, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) {
      out += sep;
    }
    out += items[i];
  }
  return out;
}

ClaimResult claim(int criterion, std::string name, bool pass, std::string detail) {
  return {criterion, std::move(name), pass, std::move(detail)};
}

std::string instance(const std::string& id, const Params& p) { return ParamInstance{id, p}.to_string(); }

std::string ids_with_zero_brackets(const std::vector<std::string>& ids) {
  std::vector<std::string> hits;
  for (const auto& id : ids) {
    if (brackets_all_zero(instantiate<Rational>(id).mul)) {
      hits.push_back(id);
    }
  }
  return join(hits);
}

// Products of the two degenerate enumeration cases, in the coordinates used for
// their associativity conditions.
SC g2_two_product(const Params& b) { // b12^1, b32^1, b31^3, b32^3, b33^3
  SC m(3);
  m.set_symmetric(0, 0, 1, b[0]);
  m.set_symmetric(0, 2, 0, b[4]);
  m.set_symmetric(0, 2, 1, b[1]);
  m.set_symmetric(1, 2, 1, b[4]);
  m.set_symmetric(2, 2, 0, b[2]);
  m.set_symmetric(2, 2, 1, b[3]);
  m.set_symmetric(2, 2, 2, b[4]);
  return m;
}

Rational g2_two_condition(const Params& b) { return b[2] * b[0] - b[1] * b[4]; }

SC g2_zero_product(const Params& b) { // b22^2, b22^3, b31^3, b32^3, b33^3
  SC m(3);
  m.set_symmetric(0, 0, 1, b[0]);
  m.set_symmetric(0, 1, 1, -b[0]);
  m.set_symmetric(0, 2, 0, b[4]);
  m.set_symmetric(0, 2, 1, b[4] - b[1]);
  m.set_symmetric(1, 1, 1, b[0]);
  m.set_symmetric(1, 2, 1, b[1]);
  m.set_symmetric(2, 2, 0, b[2]);
  m.set_symmetric(2, 2, 1, b[3]);
  m.set_symmetric(2, 2, 2, b[4]);
  return m;
}

Rational g2_zero_condition(const Params& b) { return b[1] * b[1] - b[4] * b[1] + (b[2] - b[3]) * b[0]; }

struct ZeroSetResult {
  int satisfying = 0;
  int violating = 0;
  int mismatches = 0;
  int not_members = 0;
};

// Draws points on and off the condition's zero set and compares with the
// associativity residual of the product built from the same coordinates.
template <class Product, class Condition, class Solve>
ZeroSetResult zero_set_test(const SC& lie, Product product, Condition condition, Solve solve_last, std::uint64_t seed,
                            int per_side) {
  RationalSampler rs(seed);
  const ProductFamily family = tp_family(lie);
  ZeroSetResult r;
  auto test = [&](const Params& b, bool expect_zero) {
    const SC m = product(b);
    if (!check_membership(family, m)) {
      ++r.not_members;
      return;
    }
    const bool zero = is_zero_vector(assoc_residual(m));
    if (zero != expect_zero || condition(b).is_zero() != expect_zero) {
      ++r.mismatches;
    }
  };
  while (r.satisfying < per_side) {
    Params b(5);
    for (auto& x : b) {
      x = rs.next();
    }
    if (!solve_last(b, rs)) {
      continue;
    }
    test(b, true);
    ++r.satisfying;
  }
  while (r.violating < per_side) {
    Params b(5);
    for (auto& x : b) {
      x = rs.next();
    }
    if (condition(b).is_zero()) {
      continue;
    }
    test(b, false);
    ++r.violating;
  }
  return r;
}

Matrix<Rational> random_invertible(RationalSampler& rs, std::size_t n) {
  for (;;) {
    Matrix<Rational> g(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        g(i, j) = rs.next_int(0, 2) == 0 ? Rational(0) : rs.next();
      }
    }
    if (!g.determinant().is_zero()) {
      return g;
    }
  }
}

RF random_rf(RationalSampler& rs) {
  auto poly = [&rs](bool nonzero_constant) {
    std::vector<Rational> c(static_cast<std::size_t>(rs.next_int(1, 4)));
    for (auto& x : c) {
      x = rs.next();
    }
    if (nonzero_constant) {
      c[0] = rs.next_nonzero();
    }
    return Polynomial(std::move(c));
  };
  Polynomial den = poly(rs.next_int(0, 1) == 0);
  if (den.is_zero()) {
    den = Polynomial(Rational(1));
  }
  return RF(poly(false), den) * RF::t_pow(rs.next_int(-1, 2));
}

std::optional<Rational> try_limit(const RF& f) {
  try {
    return f.limit_at_zero();
  } catch (const Diverges&) {
    return std::nullopt;
  }
}

const std::vector<std::string>& commutative_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& e : catalog_entries()) {
      if (e.kind == EntryKind::commutative) {
        v.push_back(e.id);
      }
    }
    return v;
  }();
  return ids;
}

const IsoWitness& witness(const std::string& label) {
  for (const auto& w : known_isomorphisms()) {
    if (w.label == label) {
      return w;
    }
  }
  throw UnknownId(label);
}

bool witness_holds(const IsoWitness& w, const Params& p) {
  const ParamInstance s = w.source(p);
  const ParamInstance t = w.target(p);
  return verify_witness(instantiate<Rational>(s.id, s.params), instantiate<Rational>(t.id, t.params), w.matrix(p));
}

} // namespace

bool SuiteReport::criterion_pass(int criterion) const {
  bool seen = false;
  for (const auto& c : claims) {
    if (c.criterion == criterion) {
      seen = true;
      if (!c.pass) {
        return false;
      }
    }
  }
  return seen;
}

bool SuiteReport::all_pass() const {
  for (int k = 1; k <= 8; ++k) {
    if (!criterion_pass(k)) {
      return false;
    }
  }
  return true;
}

std::vector<ClaimResult> check_axioms(const SampleProfile& profile) {
  std::vector<ClaimResult> out;
  std::vector<std::string> failures;
  std::size_t checked = 0;
  for (const auto& id : tp_ids()) {
    for (const auto& p : default_samples(id, profile)) {
      const Pair pair = instantiate<Rational>(id, p);
      ++checked;
      for (Identity which : {Identity::commutative, Identity::associative, Identity::anticommutative,
                             Identity::jacobi, Identity::transposed_leibniz}) {
        if (!holds(pair, which)) {
          failures.push_back(instance(id, p) + ":" + std::string(to_string(which)));
        }
      }
    }
  }
  out.push_back(claim(1, "T01-T30 satisfy the transposed Poisson axioms", failures.empty(),
                      std::to_string(checked) + " instances" +
                          (failures.empty() ? std::string() : "; failing " + join(failures))));

  std::vector<std::string> poisson;
  std::size_t nonzero = 0;
  for (const auto& p : default_samples("T07", profile)) {
    if (p[0].is_zero()) {
      continue;
    }
    ++nonzero;
    if (holds(instantiate<Rational>("T07", p), Identity::leibniz)) {
      poisson.push_back(instance("T07", p));
    }
  }
  out.push_back(claim(1, "T07(beta != 0) violates the Leibniz rule", nonzero > 0 && poisson.empty(),
                      std::to_string(nonzero) + " samples" +
                          (poisson.empty() ? std::string() : "; Leibniz holds at " + join(poisson))));
  return out;
}

std::vector<ClaimResult> check_half_derivation_table() {
  const Rational half(1, 2);
  std::vector<ClaimResult> out;
  auto dim_of = [&half](const std::string& id, const Params& p) {
    return static_cast<int>(delta_derivations(lie_algebra(id, p), half).dim());
  };
  const int g1 = dim_of("g1", {});
  out.push_back(claim(2, "dim of 1/2-derivations of g1 is 3", g1 == 3, "dim " + std::to_string(g1)));
  for (const auto& [alphas, expected] : std::vector<std::pair<std::vector<Rational>, int>>{
           {{Rational(-2), Rational(-1), Rational(3), Rational(5)}, 3},
           {{Rational(0), half, Rational(2)}, 4}}) {
    std::vector<std::string> parts;
    bool ok = true;
    for (const auto& a : alphas) {
      const int d = dim_of("g2", {a});
      ok = ok && d == expected;
      parts.push_back("alpha=" + a.to_string() + ":" + std::to_string(d));
    }
    out.push_back(claim(2, "dim of 1/2-derivations of g2 is " + std::to_string(expected) + " on its alpha set", ok,
                        join(parts)));
  }
  const int sl2 = dim_of("sl2", {});
  out.push_back(claim(2, "dim of 1/2-derivations of sl2 is 1", sl2 == 1, "dim " + std::to_string(sl2)));
  return out;
}

std::vector<ClaimResult> check_enumeration(std::uint64_t seed) {
  std::vector<ClaimResult> out;
  const ProductFamily g1 = tp_family(lie_algebra("g1"));
  const ProductFamily generic = tp_family(lie_algebra("g2", {Rational(3)}));
  const ProductFamily two = tp_family(lie_algebra("g2", {Rational(2)}));
  const ProductFamily zero = tp_family(lie_algebra("g2", {Rational(0)}));
  std::vector<std::string> generic_dims;
  bool generic_ok = true;
  for (int a : {-2, -1, 3, 5}) {
    const auto d = tp_family(lie_algebra("g2", {Rational(a)})).dim();
    generic_ok = generic_ok && d == 3;
    generic_dims.push_back("alpha=" + std::to_string(a) + ":" + std::to_string(d));
  }
  const bool dims_ok = g1.dim() == 3 && generic_ok && two.dim() == 5 && zero.dim() == 5;
  out.push_back(claim(3, "symmetric 1/2-biderivation family dims 3, 3, 5, 5", dims_ok,
                      "g1:" + std::to_string(g1.dim()) + " generic(" + join(generic_dims) +
                          ") g2(2):" + std::to_string(two.dim()) + " g2(0):" + std::to_string(zero.dim())));

  RationalSampler rs(seed);
  int nonzero = 0;
  for (int k = 0; k < 20; ++k) {
    Vector coords(g1.dim());
    for (auto& x : coords) {
      x = rs.next();
    }
    if (!is_zero_vector(assoc_residual(g1, coords))) {
      ++nonzero;
    }
  }
  out.push_back(claim(3, "associativity residual vanishes on g1's family", nonzero == 0,
                      "20 grid points, " + std::to_string(nonzero) + " nonzero residuals"));

  auto report = [](const ZeroSetResult& r) {
    return std::to_string(r.satisfying) + " satisfying, " + std::to_string(r.violating) + " violating, " +
           std::to_string(r.mismatches) + " mismatches, " + std::to_string(r.not_members) + " outside the family";
  };
  const ZeroSetResult r2 = zero_set_test(
      lie_algebra("g2", {Rational(2)}), g2_two_product, g2_two_condition,
      [](Params& b, RationalSampler& s) {
        b[0] = s.next_nonzero();
        b[2] = b[1] * b[4] / b[0];
        return true;
      },
      seed + 1, 10);
  out.push_back(claim(3, "g2(2) residual zero set is b31^3 b12^1 = b32^1 b33^3",
                      r2.mismatches == 0 && r2.not_members == 0, report(r2)));
  const ZeroSetResult r0 = zero_set_test(
      lie_algebra("g2", {Rational(0)}), g2_zero_product, g2_zero_condition,
      [](Params& b, RationalSampler& s) {
        b[0] = s.next_nonzero();
        b[2] = b[3] - (b[1] * b[1] - b[4] * b[1]) / b[0];
        return true;
      },
      seed + 2, 10);
  out.push_back(claim(3, "g2(0) residual zero set is (b22^3)^2 - b33^3 b22^3 + (b31^3 - b32^3) b22^2 = 0",
                      r0.mismatches == 0 && r0.not_members == 0, report(r0)));
  return out;
}

std::vector<ClaimResult> check_witnesses(const SampleProfile& profile) {
  std::vector<ClaimResult> out;
  for (const auto& w : known_isomorphisms()) {
    std::size_t used = 0;
    std::vector<std::string> failures;
    for (const auto& p : default_samples(w.driver, profile)) {
      if (!w.admissible(p)) {
        continue;
      }
      ++used;
      const ParamInstance s = w.source(p);
      const ParamInstance t = w.target(p);
      const Pair a = instantiate<Rational>(s.id, s.params);
      const Pair b = instantiate<Rational>(t.id, t.params);
      if (!verify_witness(a, b, w.matrix(p))) {
        failures.push_back(s.to_string() + " -> " + t.to_string());
      } else if (!(fingerprint(a) == fingerprint(b))) {
        failures.push_back(s.to_string() + " -> " + t.to_string() + " (fingerprints differ)");
      }
    }
    out.push_back(claim(4, w.label, used > 0 && failures.empty(),
                        std::to_string(used) + " admissible samples" +
                            (failures.empty() ? std::string() : "; failing " + join(failures))));
  }
  return out;
}

std::vector<ClaimResult> check_strong_special(const SampleProfile& profile) {
  std::vector<ClaimResult> out;
  const std::vector<std::string> three = {"A01", "A02", "A03", "A04", "A05", "A06",
                                          "A07", "A08", "A09", "A10", "A11"};
  const std::vector<std::string> two = {"A2_01", "A2_02", "A2_03", "A2_04"};
  const std::string z3 = ids_with_zero_brackets(three);
  const std::string z2 = ids_with_zero_brackets(two);
  out.push_back(claim(5, "only A01, A03, A07, A08, A11 induce zero brackets", z3 == "A01, A03, A07, A08, A11", z3));
  out.push_back(claim(5, "only A2_01, A2_03, A2_04 induce zero brackets", z2 == "A2_01, A2_03, A2_04", z2));

  // Items of the negative list, each with the parameter restriction it carries.
  const std::vector<std::pair<std::string, bool>> negative = {
      {"T02", false}, {"T03", true}, {"T08", false}, {"T10", false}, {"T11", false},
      {"T13", false}, {"T14", false}, {"T15", false}, {"T16", false}, {"T18", false}};
  for (const auto& [id, nonzero_only] : negative) {
    std::size_t used = 0;
    std::vector<std::string> feasible;
    for (const auto& p : default_samples(id, profile)) {
      if (nonzero_only && p[0].is_zero()) {
        continue;
      }
      ++used;
      if (strong_feasibility(instantiate<Rational>(id, p)).feasible) {
        feasible.push_back(instance(id, p));
      }
    }
    out.push_back(claim(5, id + (nonzero_only ? "(nonzero parameter)" : "") + " is not strong special",
                        used > 0 && feasible.empty(),
                        std::to_string(used) + " samples" +
                            (feasible.empty() ? std::string() : "; a derivation exists at " + join(feasible))));
  }

  // Positive families: rebuilt from their commutative part, then identified.
  struct Positive {
    std::string id;
    std::string label;                       // identifying witness
    std::function<Params(const Params&)> to; // D parameters -> witness driver parameters
  };
  auto same = [](const Params& p) { return p; };
  const std::vector<Positive> positive = {
      {"D01", "DA01(a) -> T17(-1/a)", same},
      {"D02", "DA02(0, b) -> T05", [](const Params&) { return Params{Rational(0), Rational(1)}; }},
      {"D03", "DA02(a, b) -> T12(-1/a)", [](const Params& p) { return Params{p[0], Rational(0)}; }},
      {"D04", "D04 -> T06", same},
      {"D05", "D05(a) -> T07(-1/a)", same},
      {"D06", "D06(a, b) -> T09(b/a, -1/a)", same},
      {"D06b", "DA04(a) -> T19(-1/a)", same},
      {"D07", "DA05(a) -> T04(-1/a)", same},
      {"D08", "DA06(e) -> T03(-1/e)", same},
  };
  for (const auto& pos : positive) {
    const IsoWitness& w = witness(pos.label);
    std::size_t rebuilt = 0;
    std::size_t identified = 0;
    std::vector<std::string> failures;
    for (const auto& p : default_samples(pos.id, profile)) {
      if (!reconstructs(pos.id, p)) {
        failures.push_back(instance(pos.id, p) + " not rebuilt");
        continue;
      }
      ++rebuilt;
      const Params q = pos.to(p);
      if (!w.admissible(q)) {
        continue;
      }
      if (witness_holds(w, q)) {
        ++identified;
      } else {
        failures.push_back(instance(pos.id, p) + " not identified");
      }
    }
    out.push_back(claim(5, pos.id + " rebuilt and identified via " + pos.label,
                        failures.empty() && rebuilt > 0 && identified > 0,
                        std::to_string(rebuilt) + " rebuilt, " + std::to_string(identified) + " identified" +
                            (failures.empty() ? std::string() : "; " + join(failures))));
  }
  std::vector<std::string> d2;
  for (const auto& p : default_samples("D2_01", profile)) {
    if (!reconstructs("D2_01", p)) {
      d2.push_back(instance("D2_01", p));
    }
  }
  out.push_back(claim(5, "D2_01 rebuilt from A2_02", d2.empty(), d2.empty() ? "all samples" : join(d2)));
  return out;
}

std::vector<ClaimResult> check_novikov(const SampleProfile& profile) {
  std::vector<ClaimResult> out;
  const Pair np01 = instantiate<Rational>("NP01");
  const Pair commuted(np01.mul, commutator_bracket(np01.bracket));
  const bool n01 = verify_witness(commuted, instantiate<Rational>("N01"), np01_to_n01_witness());
  out.push_back(claim(6, "NP01 commutator pair is isomorphic to N01", n01, n01 ? "witness verifies" : "witness fails"));

  const auto samples = sample_params("NP02", std::max<std::size_t>(5, default_samples("NP02", profile).size()),
                                     profile);
  std::vector<std::string> bad;
  for (const auto& p : samples) {
    SC expected(2);
    expected.set_antisymmetric(0, 1, 0, p[0] - p[1]);
    if (!(commutator_bracket(instantiate<Rational>("NP02", p).bracket) == expected)) {
      bad.push_back(instance("NP02", p));
    }
  }
  out.push_back(claim(6, "NP02 commutator is (alpha - beta) e1 on (e1, e2)", samples.size() >= 5 && bad.empty(),
                      std::to_string(samples.size()) + " samples" +
                          (bad.empty() ? std::string() : "; failing " + join(bad))));

  const N02Obstruction ob = n02_obstruction(samples, {Rational(2), Rational(-1), Rational(1, 3), Rational(5)});
  std::ostringstream os;
  os << "unit=" << ob.unique_unit_is_e2 << " nilpotents=" << ob.nilpotents_in_span_e1
     << " automorphisms=" << ob.diagonal_automorphisms << " commutators=" << ob.commutators_in_span_e1
     << " image=" << ob.n02_bracket_image_is_e2;
  out.push_back(claim(6, "N02 is not strong special", ob.holds(), os.str()));
  return out;
}

std::vector<ClaimResult> check_degenerations() {
  std::vector<ClaimResult> out;
  int strict_rows = 0;
  int family_rows = 0;
  for (const auto& row : degeneration_table()) {
    const auto results = verify_table_row(row);
    std::vector<std::string> failures;
    std::vector<std::string> matches;
    bool family = false;
    for (const auto& r : results) {
      if (!r.verified()) {
        failures.push_back(instance("sample", r.sample) + " unmatched");
        continue;
      }
      const auto& rep = r.reports[static_cast<std::size_t>(r.verified_reading)];
      const auto& reading = r.readings[static_cast<std::size_t>(r.verified_reading)];
      family = family || reading.source_depends_on_t();
      const std::string m(to_string(rep.matched));
      if (std::find(matches.begin(), matches.end(), m) == matches.end()) {
        matches.push_back(m);
      }
      if (!rep.checks.passes()) {
        failures.push_back(join(rep.checks.violations, "; "));
      }
    }
    (family ? family_rows : strict_rows) += 1;
    std::ostringstream os;
    os << results.size() << " samples, " << join(matches) << (family ? ", family source (Der non-decreasing)"
                                                                     : ", Der strictly increasing");
    if (!failures.empty()) {
      os << "; " << join(failures, " | ");
    }
    out.push_back(claim(7, "row " + std::to_string(row.index) + ": " + row.label,
                        failures.empty() && !results.empty(), os.str()));
  }
  out.push_back(claim(7, "Der rule split", true,
                      std::to_string(strict_rows) + " fixed-source rows strict, " + std::to_string(family_rows) +
                          " family rows non-strict"));
  const int orbit = orbit_dim(instantiate<Rational>("T20"));
  out.push_back(claim(7, "orbit_dim(T20) = 9", orbit == 9, "orbit_dim " + std::to_string(orbit)));
  return out;
}

std::vector<ClaimResult> check_properties(const SampleProfile& profile, std::uint64_t seed) {
  std::vector<ClaimResult> out;
  const Rational half(1, 2);

  {
    const std::vector<ParamInstance> entries = {
        {"T01", {}}, {"T02", {}}, {"T05", {}}, {"T09", {Rational(2), Rational(1)}}, {"T12", {Rational(-1)}},
        {"T14", {}}, {"T17", {Rational(3)}}, {"T19", {Rational(2)}}, {"T20", {}}, {"T27", {}}};
    RationalSampler rs(seed);
    int trials = 0;
    std::vector<std::string> broken;
    for (const auto& e : entries) {
      const Pair pair = instantiate<Rational>(e.id, e.params);
      const bool before = is_transposed_poisson(pair);
      for (int k = 0; k < 10; ++k, ++trials) {
        if (is_transposed_poisson(transport(pair, random_invertible(rs, 3))) != before) {
          broken.push_back(e.to_string());
        }
      }
    }
    out.push_back(claim(8, "transposed Poisson property is GL-invariant", broken.empty(),
                        std::to_string(trials) + " transports" +
                            (broken.empty() ? std::string() : "; changed at " + join(broken))));
  }

  {
    RationalSampler rs(seed + 1);
    std::size_t checked = 0;
    std::vector<std::string> broken;
    for (const auto& id : tp_ids()) {
      for (const auto& p : default_samples(id, profile)) {
        const Pair pair = instantiate<Rational>(id, p);
        std::vector<Vector> zs;
        for (std::size_t i = 0; i < 3; ++i) {
          zs.push_back(basis_vector<Rational>(3, i));
        }
        zs.push_back({rs.next(), rs.next(), rs.next()});
        for (const auto& z : zs) {
          ++checked;
          if (!is_delta_derivation(pair.bracket, right_multiplication(pair.mul, z), half)) {
            broken.push_back(instance(id, p));
          }
        }
      }
    }
    out.push_back(claim(8, "right multiplications are 1/2-derivations of the bracket", broken.empty(),
                        std::to_string(checked) + " operators" +
                            (broken.empty() ? std::string() : "; failing " + join(broken))));
  }

  {
    std::size_t checked = 0;
    std::vector<std::string> broken;
    for (const auto& id : commutative_ids()) {
      const SC comm = instantiate<Rational>(id).mul;
      const SolutionSpace der = derivations(comm);
      for (std::size_t k = 0; k < der.dim(); ++k) {
        ++checked;
        const Pair pair(comm, derived_bracket(comm, to_matrix(der.basis[k], comm.dim())));
        if (!is_transposed_poisson(pair)) {
          broken.push_back(id + "#" + std::to_string(k));
        }
      }
    }
    out.push_back(claim(8, "derived brackets give transposed Poisson pairs", broken.empty() && checked > 0,
                        std::to_string(checked) + " (algebra, derivation) pairs" +
                            (broken.empty() ? std::string() : "; failing " + join(broken))));
  }

  {
    RationalSampler rs(seed + 2);
    int both = 0;
    int bad = 0;
    for (int k = 0; k < 200; ++k) {
      const RF f = random_rf(rs);
      const RF g = random_rf(rs);
      const auto lf = try_limit(f);
      const auto lg = try_limit(g);
      if (!lf || !lg) {
        continue;
      }
      ++both;
      const auto sum = try_limit(f + g);
      const auto prod = try_limit(f * g);
      if (!sum || !prod || *sum != *lf + *lg || *prod != *lf * *lg) {
        ++bad;
      }
    }
    out.push_back(claim(8, "limit at zero is additive and multiplicative", bad == 0 && both > 0,
                        "200 pairs, " + std::to_string(both) + " with finite limits, " + std::to_string(bad) +
                            " violations"));
  }
  return out;
}

std::vector<std::string> errata() {
  std::vector<std::string> out;
  for (const auto& w : known_isomorphisms()) {
    if (!w.note.empty()) {
      out.push_back("witness " + w.label + ": " + w.note);
    }
  }
  for (const auto& f : family_derivations()) {
    if (!f.note.empty()) {
      out.push_back("derivation " + f.family + ": " + f.note);
    }
  }
  for (const auto& row : degeneration_table()) {
    if (!row.erratum.empty()) {
      out.push_back("row " + std::to_string(row.index) + " " + row.label + ": " + row.erratum);
    }
  }
  out.push_back("negative list: T03(beta != 0) admits a derivation of its commutative part reproducing its "
                "bracket (D = diag(a, d, a + d), a - d = 1/beta)");
  out.push_back("N02 as printed fails the transposed Leibniz rule at (e1, e1, e2); kept as printed for the "
                "non-strong-special argument");
  return out;
}

SuiteReport verify_paper(const SampleProfile& profile) {
  SuiteReport rep;
  rep.profile = profile.name;
  auto append = [&rep](std::vector<ClaimResult> v) {
    for (auto& c : v) {
      rep.claims.push_back(std::move(c));
    }
  };
  append(check_axioms(profile));
  append(check_half_derivation_table());
  append(check_enumeration(profile.seed));
  append(check_witnesses(profile));
  append(check_strong_special(profile));
  append(check_novikov(profile));
  append(check_degenerations());
  append(check_properties(profile, profile.seed));
  rep.errata = errata();
  return rep;
}

} // namespace tpa
