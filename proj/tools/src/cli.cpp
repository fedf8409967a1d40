#include "tpa_cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "tpa/catalog.hpp"
#include "tpa/degeneration.hpp"
#include "tpa/derivations.hpp"
#include "tpa/dspecial.hpp"
#include "tpa/enumeration.hpp"
#include "tpa/error.hpp"
#include "tpa/identities.hpp"
#include "tpa/isomorphism.hpp"
#include "tpa/reproduction.hpp"
#include "tpa_cli/json_io.hpp"

namespace tpa::cli {

namespace {

const std::vector<std::string> kParamNames = {"alpha", "beta", "gamma", "delta", "epsilon"};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot read " + path);
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
    if (!item.empty()) {
      out.push_back(Rational::parse(item));
    }
  }
  return out;
}

/// An algebra named by catalog id and parameters, or read from a JSON file.
struct SourceOptions {
  std::string id;
  std::string params;
  std::string input;
  std::map<std::string, std::string> named;

  void add_to(CLI::App* app, bool with_delta = true, const std::string& id_flag = "--id") {
    app->add_option(id_flag, id, "catalog id");
    app->add_option("--params", params, "comma-separated parameters in catalog order");
    app->add_option("--input", input, "algebra JSON file, - for stdin");
    for (const auto& n : kParamNames) {
      if (n == "delta" && !with_delta) {
        continue;
      }
      app->add_option("--" + n, named[n], "family parameter " + n);
    }
  }

  bool given() const { return !id.empty() || !input.empty(); }

  ParamInstance instance() const {
    const CatalogEntry& e = find_entry(id);
    ParamInstance p{e.id, {}};
    if (!params.empty()) {
      p.params = parse_list(params);
    } else {
      for (const auto& name : e.param_names) {
        auto it = named.find(name);
        if (it == named.end() || it->second.empty()) {
          throw ParseError(e.id + " needs --" + name + " (or --params)");
        }
        p.params.push_back(Rational::parse(it->second));
      }
    }
    if (p.params.size() != e.param_names.size()) {
      throw ParseError(e.id + " takes " + std::to_string(e.param_names.size()) + " parameters");
    }
    return p;
  }

  Json meta() const { return input.empty() ? meta_json(instance()) : Json{{"input", input}}; }

  Pair pair() const {
    if (!input.empty()) {
      return pair_from_json<Rational>(parse_json(read_file(input)));
    }
    if (id.empty()) {
      throw ParseError("give --id or --input");
    }
    const ParamInstance p = instance();
    return instantiate<Rational>(p.id, p.params);
  }
};

Json space_json(const SolutionSpace& s, std::size_t n, bool as_matrices) {
  Json basis = Json::array();
  for (const auto& v : s.basis) {
    basis.push_back(as_matrices ? matrix_to_json(to_matrix(v, n)) : entries_to_json(to_tensor(v, n)));
  }
  Json out;
  out["dim"] = s.dim();
  out["basis"] = basis;
  return out;
}

Json violations_json(const IdentityReport<Rational>& rep, std::size_t limit) {
  Json out = Json::array();
  for (std::size_t i = 0; i < rep.violations.size() && i < limit; ++i) {
    const auto& v = rep.violations[i];
    out.push_back({{"indices", v.indices}, {"residual", vector_to_json(v.residual)}});
  }
  return out;
}

Json claims_json(const std::vector<ClaimResult>& claims) {
  Json out = Json::array();
  for (const auto& c : claims) {
    out.push_back({{"criterion", c.criterion}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  return out;
}

Json report_json(const DegenerationRow& row, const DegenerationReport& rep) {
  Json out;
  out["label"] = row.label;
  out["reading"] = row.reading;
  out["match"] = std::string(to_string(rep.matched));
  out["limit"] = rep.limit ? pair_to_json(*rep.limit) : Json();
  if (!rep.divergence.empty()) {
    out["divergence"] = rep.divergence;
  }
  out["der_source"] = rep.checks.der_source;
  out["der_target"] = rep.checks.der_target;
  out["strict"] = rep.checks.strict;
  out["source_ranks"] = rep.checks.source_ranks;
  out["target_ranks"] = rep.checks.target_ranks;
  out["violations"] = rep.checks.violations;
  return out;
}

Json table_row_json(const TableRow& row, bool& verified, std::vector<int>& post_witness_rows) {
  Json samples = Json::array();
  bool all = true;
  bool needs_post = false;
  for (const auto& r : verify_table_row(row)) {
    Json s;
    s["sample"] = vector_to_json(r.sample);
    s["verified"] = r.verified();
    if (r.verified()) {
      const auto i = static_cast<std::size_t>(r.verified_reading);
      s["report"] = report_json(r.readings[i], r.reports[i]);
      needs_post = needs_post || r.reports[i].matched == Match::via_post_witness;
      all = all && r.reports[i].checks.passes();
    } else {
      all = false;
      Json attempts = Json::array();
      for (std::size_t i = 0; i < r.readings.size(); ++i) {
        attempts.push_back(report_json(r.readings[i], r.reports[i]));
      }
      s["attempts"] = attempts;
    }
    samples.push_back(s);
  }
  if (needs_post) {
    post_witness_rows.push_back(row.index);
  }
  verified = all;
  Json out;
  out["index"] = row.index;
  out["label"] = row.label;
  out["params"] = row.param_names;
  out["verified"] = all;
  out["samples"] = samples;
  if (!row.erratum.empty()) {
    out["erratum"] = row.erratum;
  }
  return out;
}

struct Output {
  Json doc;
  int exit = ok;
};

// ---- subcommands ----

Output cmd_check(const SourceOptions& src, const std::vector<std::string>& only, std::size_t limit) {
  const Pair pair = src.pair();
  std::vector<Identity> ids;
  for (const auto& name : only) {
    ids.push_back(parse_identity(name));
  }
  if (ids.empty()) {
    ids.assign(all_identities.begin(), all_identities.end());
  }
  Json identities;
  Json violations;
  for (Identity id : ids) {
    const auto rep = check_identity(pair, id);
    identities[std::string(to_string(id))] = rep.holds;
    if (!rep.holds) {
      violations[std::string(to_string(id))] = violations_json(rep, limit);
    }
  }
  Json doc;
  doc["meta"] = src.meta();
  doc["transposed_poisson"] = is_transposed_poisson(pair);
  bool poisson = true;
  for (Identity id : all_identities) {
    if (id != Identity::transposed_leibniz && !holds(pair, id)) {
      poisson = false;
    }
  }
  doc["poisson"] = poisson;
  doc["identities"] = identities;
  doc["violations"] = violations.is_null() ? Json::object() : violations;
  return {doc};
}

Output cmd_der(const SourceOptions& src, const std::string& lie, const std::string& of, const std::string& delta) {
  const Rational d = Rational::parse(delta);
  Json doc;
  SolutionSpace space;
  std::size_t n = 0;
  if (!lie.empty()) {
    SourceOptions l = src;
    l.id = lie;
    const ParamInstance p = l.instance();
    const SC sc = lie_algebra(p.id, p.params);
    doc["meta"] = meta_json(p);
    n = sc.dim();
    space = delta_derivations(sc, d);
  } else {
    const Pair pair = src.pair();
    doc["meta"] = src.meta();
    n = pair.dim();
    if (of == "pair") {
      if (!d.is_one()) {
        throw ParseError("--of pair only supports --delta 1");
      }
      space = pair_derivations(pair);
    } else if (of == "mul") {
      space = delta_derivations(pair.mul, d);
    } else {
      space = delta_derivations(pair.bracket, d);
    }
  }
  doc["delta"] = d.to_string();
  const Json s = space_json(space, n, true);
  doc["dim"] = s["dim"];
  doc["basis"] = s["basis"];
  return {doc};
}

Output cmd_biderive(const SourceOptions& src, bool nonsymmetric) {
  SC bracket;
  Json meta;
  if (!src.input.empty()) {
    bracket = src.pair().bracket;
    meta = src.meta();
  } else {
    const ParamInstance p = src.instance();
    bracket = lie_algebra(p.id, p.params);
    meta = meta_json(p);
  }
  const SolutionSpace s = half_biderivations(bracket, !nonsymmetric);
  Json doc;
  doc["meta"] = meta;
  doc["symmetric"] = !nonsymmetric;
  const Json j = space_json(s, bracket.dim(), false);
  doc["dim"] = j["dim"];
  doc["basis"] = j["basis"];
  return {doc};
}

Output cmd_enumerate(const SourceOptions& src, int grid, std::uint64_t seed) {
  const ParamInstance p = src.instance();
  const ProductFamily family = tp_family(lie_algebra(p.id, p.params));
  Json doc;
  doc["meta"] = meta_json(p);
  doc["family_dim"] = family.dim();
  Json basis = Json::array();
  for (const auto& v : family.basis.basis) {
    basis.push_back(entries_to_json(to_tensor(v, family.lie.dim())));
  }
  doc["basis"] = basis;
  RationalSampler rs(seed);
  Json points = Json::array();
  for (int k = 0; k < grid; ++k) {
    Vector coords(family.dim());
    for (auto& x : coords) {
      x = rs.next();
    }
    const Vector r = assoc_residual(family, coords);
    points.push_back({{"coords", vector_to_json(coords)},
                      {"residual_norm", residual_norm(r).to_string()},
                      {"associative", is_zero_vector(r)}});
  }
  doc["grid"] = points;
  return {doc};
}

Output cmd_iso(const std::string& lhs, const std::string& rhs, const std::string& witness, bool known) {
  Json doc;
  if (known) {
    const auto claims = check_witnesses(current_profile());
    const bool pass = std::all_of(claims.begin(), claims.end(), [](const ClaimResult& c) { return c.pass; });
    doc["witnesses"] = claims_json(claims);
    doc["verified"] = pass;
    return {doc, pass ? ok : verification_failed};
  }
  if (lhs.empty() || rhs.empty()) {
    throw ParseError("iso needs --lhs and --rhs (or --known)");
  }
  const Pair a = pair_from_json<Rational>(parse_json(read_file(lhs)));
  const Pair b = pair_from_json<Rational>(parse_json(read_file(rhs)));
  Json fp;
  fp["names"] = Json::array();
  for (auto n : Fingerprint::names()) {
    fp["names"].push_back(std::string(n));
  }
  fp["lhs"] = fingerprint(a).values();
  fp["rhs"] = fingerprint(b).values();
  doc["fingerprints"] = fp;
  doc["distinction"] = std::string(to_string(distinguish(a, b)));
  if (witness.empty()) {
    return {doc};
  }
  const bool v = verify_witness(a, b, matrix_from_json<Rational>(parse_json(read_file(witness))));
  doc["verified"] = v;
  return {doc, v ? ok : verification_failed};
}

Output cmd_fingerprint(const SourceOptions& src) {
  const Fingerprint f = fingerprint(src.pair());
  Json doc;
  doc["meta"] = src.meta();
  Json values;
  const auto vals = f.values();
  for (std::size_t i = 0; i < Fingerprint::size; ++i) {
    values[std::string(Fingerprint::names()[i])] = vals[i];
  }
  doc["fingerprint"] = values;
  return {doc};
}

Output cmd_dspecial(const SourceOptions& src, const std::string& comm, bool all_derivations) {
  Json doc;
  if (!comm.empty()) {
    const SC mul = instantiate<Rational>(comm).mul;
    doc["meta"] = meta_json({comm, {}});
    const SolutionSpace der = derivations(mul);
    doc["der_dim"] = der.dim();
    doc["brackets_all_zero"] = brackets_all_zero(mul);
    if (all_derivations) {
      Json list = Json::array();
      for (const auto& v : der.basis) {
        const QMatrix d = to_matrix(v, mul.dim());
        const SC b = derived_bracket(mul, d);
        list.push_back({{"derivation", matrix_to_json(d)}, {"bracket", entries_to_json(b)}, {"zero", b.is_zero()}});
      }
      doc["derivations"] = list;
    }
    return {doc};
  }
  const Feasibility f = strong_feasibility(src.pair());
  doc["meta"] = src.meta();
  doc["feasible"] = f.feasible;
  doc["der_dim"] = f.der_dim;
  doc["derivation"] = f.derivation ? matrix_to_json(*f.derivation) : Json();
  return {doc};
}

Output cmd_degenerate(int row_index, bool all, const std::string& rows_file, bool dump) {
  const auto& table = degeneration_table();
  Json doc;
  if (dump) {
    Json rows = Json::array();
    for (const auto& row : table) {
      for (const auto& r : verify_table_row(row)) {
        if (r.verified()) {
          rows.push_back(row_to_json(r.readings[static_cast<std::size_t>(r.verified_reading)], row.index));
          break;
        }
      }
    }
    doc["rows"] = rows;
    return {doc};
  }
  if (!rows_file.empty()) {
    const Json in = parse_json(read_file(rows_file));
    const Json& list = in.is_object() && in.contains("rows") ? in.at("rows") : in;
    if (!list.is_array()) {
      throw ParseError("rows file must hold an array of rows");
    }
    Json out = Json::array();
    bool pass = true;
    for (const auto& j : list) {
      const DegenerationRow row = row_from_json(j);
      const DegenerationReport rep = verify_row(row);
      Json r = report_json(row, rep);
      r["index"] = j.value("index", 0);
      const bool ok_row = rep.matched != Match::failed && rep.checks.passes();
      r["verified"] = ok_row;
      pass = pass && ok_row;
      out.push_back(r);
    }
    doc["rows"] = out;
    doc["all_verified"] = pass;
    return {doc, pass ? ok : verification_failed};
  }
  std::vector<const TableRow*> selected;
  if (all) {
    for (const auto& row : table) {
      selected.push_back(&row);
    }
  } else if (row_index >= 1 && row_index <= static_cast<int>(table.size())) {
    selected.push_back(&table[static_cast<std::size_t>(row_index - 1)]);
  } else {
    throw ParseError("--row must be in 1.." + std::to_string(table.size()) + " (or use --all)");
  }
  Json rows = Json::array();
  std::vector<int> post;
  bool pass = true;
  for (const TableRow* row : selected) {
    bool v = false;
    rows.push_back(table_row_json(*row, v, post));
    pass = pass && v;
  }
  doc["rows"] = rows;
  doc["post_witness_rows"] = post;
  doc["all_verified"] = pass;
  return {doc, pass ? ok : verification_failed};
}

Output cmd_catalog(const std::string& action, const std::string& id) {
  Json doc;
  const auto profile = current_profile();
  if (action == "list") {
    Json list = Json::array();
    for (const auto& e : catalog_entries()) {
      Json j;
      j["id"] = e.id;
      j["dim"] = e.dim;
      j["params"] = e.param_names;
      if (!e.param_domain.empty()) {
        j["domain"] = e.param_domain;
      }
      if (!e.alias.empty()) {
        j["alias"] = e.alias;
      }
      list.push_back(j);
    }
    doc["entries"] = list;
    return {doc};
  }
  if (action != "dump") {
    throw ParseError("catalog action must be list or dump");
  }
  Json list = Json::array();
  for (const auto& e : catalog_entries()) {
    if (!id.empty() && e.id != id) {
      continue;
    }
    for (const auto& p : default_samples(e.id, profile)) {
      list.push_back(pair_to_json(instantiate<Rational>(e.id, p), meta_json({e.id, p})));
    }
  }
  if (!id.empty() && list.empty()) {
    throw UnknownId(id);
  }
  doc["profile"] = profile.name;
  doc["algebras"] = list;
  return {doc};
}

Output cmd_verify_paper() {
  const SuiteReport rep = verify_paper(current_profile());
  Json doc;
  doc["profile"] = rep.profile;
  Json criteria;
  for (int k = 1; k <= 8; ++k) {
    criteria[std::to_string(k)] = rep.criterion_pass(k);
  }
  doc["criteria"] = criteria;
  doc["claims"] = claims_json(rep.claims);
  doc["errata"] = rep.errata;
  doc["all_pass"] = rep.all_pass();
  return {doc, rep.all_pass() ? ok : verification_failed};
}

} // namespace

RunResult run(const std::vector<std::string>& args) {
  CLI::App app{"Transposed Poisson structures on low-dimensional algebras", "tpa"};
  app.require_subcommand(1, 1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent the JSON output");
  app.fallthrough();

  SourceOptions check_src;
  std::vector<std::string> check_only;
  std::size_t check_limit = 20;
  auto* check = app.add_subcommand("check", "identity checks on an algebra pair");
  check_src.add_to(check);
  check->add_option("--identity", check_only, "restrict to these identities");
  check->add_option("--max-violations", check_limit, "violations listed per identity");

  SourceOptions der_src;
  std::string der_lie;
  std::string der_of = "bracket";
  std::string der_delta = "1";
  auto* der = app.add_subcommand("der", "delta-derivations");
  der_src.add_to(der, false);
  der->add_option("--lie", der_lie, "Lie (or commutative) catalog id");
  der->add_option("--of", der_of, "mul, bracket or pair")->check(CLI::IsMember({"mul", "bracket", "pair"}));
  der->add_option("--delta", der_delta, "delta as a rational");

  SourceOptions bi_src;
  bool bi_nonsym = false;
  auto* biderive = app.add_subcommand("biderive", "1/2-biderivations of a Lie bracket");
  bi_src.add_to(biderive, true, "--lie");
  biderive->add_flag("--nonsymmetric", bi_nonsym, "drop the symmetry condition");

  SourceOptions en_src;
  int en_grid = 5;
  std::uint64_t en_seed = 1;
  auto* enumerate = app.add_subcommand("enumerate", "transposed Poisson products on a Lie bracket");
  en_src.add_to(enumerate, true, "--lie");
  enumerate->add_option("--grid", en_grid, "random family members to test");
  enumerate->add_option("--seed", en_seed, "grid seed");

  std::string iso_lhs, iso_rhs, iso_witness;
  bool iso_known = false;
  auto* iso = app.add_subcommand("iso", "verify a basis change or compare invariants");
  iso->add_option("--lhs", iso_lhs, "algebra JSON");
  iso->add_option("--rhs", iso_rhs, "algebra JSON");
  iso->add_option("--witness", iso_witness, "row-major matrix JSON; columns are the rhs basis in lhs coordinates");
  iso->add_flag("--known", iso_known, "verify every catalog witness at its samples");

  SourceOptions fp_src;
  auto* fp = app.add_subcommand("fingerprint", "isomorphism invariants");
  fp_src.add_to(fp);

  SourceOptions ds_src;
  std::string ds_comm;
  bool ds_all = false;
  auto* ds = app.add_subcommand("dspecial", "derived brackets and strong feasibility");
  ds_src.add_to(ds);
  ds->add_option("--comm", ds_comm, "commutative catalog id");
  ds->add_flag("--all-derivations", ds_all, "list a Der basis and each derived bracket");

  int dg_row = 0;
  bool dg_all = false;
  bool dg_dump = false;
  std::string dg_rows;
  auto* dg = app.add_subcommand("degenerate", "verify degeneration rows");
  dg->add_option("--row", dg_row, "table row 1..17");
  dg->add_flag("--all", dg_all, "every table row");
  dg->add_option("--rows", dg_rows, "rows data file");
  dg->add_flag("--dump-rows", dg_dump, "emit the table as a rows data file");

  std::string cat_action = "list";
  std::string cat_id;
  auto* cat = app.add_subcommand("catalog", "catalog entries");
  cat->add_option("action", cat_action, "list or dump")->check(CLI::IsMember({"list", "dump"}));
  cat->add_option("--id", cat_id, "restrict dump to one id");

  auto* vp = app.add_subcommand("verify-paper", "run the full reproduction suite");

  RunResult result;
  std::ostringstream out;
  std::ostringstream err;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    result.out = out.str();
    result.err = err.str();
    result.exit = code == 0 ? ok : usage_error;
    return result;
  }

  try {
    Output o;
    if (check->parsed()) {
      o = cmd_check(check_src, check_only, check_limit);
    } else if (der->parsed()) {
      o = cmd_der(der_src, der_lie, der_of, der_delta);
    } else if (biderive->parsed()) {
      o = cmd_biderive(bi_src, bi_nonsym);
    } else if (enumerate->parsed()) {
      o = cmd_enumerate(en_src, en_grid, en_seed);
    } else if (iso->parsed()) {
      o = cmd_iso(iso_lhs, iso_rhs, iso_witness, iso_known);
    } else if (fp->parsed()) {
      o = cmd_fingerprint(fp_src);
    } else if (ds->parsed()) {
      o = cmd_dspecial(ds_src, ds_comm, ds_all);
    } else if (dg->parsed()) {
      o = cmd_degenerate(dg_row, dg_all, dg_rows, dg_dump);
    } else if (cat->parsed()) {
      o = cmd_catalog(cat_action, cat_id);
    } else if (vp->parsed()) {
      o = cmd_verify_paper();
    }
    result.out = o.doc.dump(pretty ? 2 : -1) + "\n";
    result.exit = o.exit;
  } catch (const Error& e) {
    result.err = Json{{"error", e.what()}}.dump() + "\n";
    result.exit = usage_error;
  } catch (const nlohmann::json::exception& e) {
    result.err = Json{{"error", e.what()}}.dump() + "\n";
    result.exit = usage_error;
  } catch (const std::exception& e) {
    result.err = Json{{"error", std::string("internal: ") + e.what()}}.dump() + "\n";
    result.exit = verification_failed;
  }
  return result;
}

} // namespace tpa::cli
