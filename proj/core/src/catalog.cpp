#include "tpa/catalog.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace tpa {

namespace {

using Params = std::vector<Rational>;

const std::string kA = "alpha";
const std::string kB = "beta";
const std::string kG = "gamma";
const std::string kD = "delta";
const std::string kE = "epsilon";

std::vector<CatalogEntry> make_entries() {
  std::vector<CatalogEntry> v;
  auto add = [&v](std::string id, std::size_t dim, std::vector<std::string> names, EntryKind kind,
                  std::string domain = {}, std::string alias = {}) {
    v.push_back({std::move(id), dim, std::move(names), std::move(domain), kind, std::move(alias)});
  };
  add("h", 3, {}, EntryKind::lie);
  add("g1", 3, {}, EntryKind::lie);
  add("g2", 3, {kA}, EntryKind::lie);
  add("sl2", 3, {}, EntryKind::lie);

  const std::map<std::string, std::vector<std::string>> tp_params = {
      {"T03", {kB}}, {"T04", {kB}}, {"T07", {kB}}, {"T09", {kA, kB}}, {"T10", {kA}},
      {"T11", {kA}}, {"T12", {kB}}, {"T17", {kB}}, {"T19", {kG}}};
  for (int k = 1; k <= 30; ++k) {
    std::string id = (k < 10 ? "T0" : "T") + std::to_string(k);
    auto it = tp_params.find(id);
    std::vector<std::string> names = it == tp_params.end() ? std::vector<std::string>{} : it->second;
    add(id, 3, names, EntryKind::transposed_poisson, id == "T19" ? "gamma != 0" : "");
  }
  add("T10*", 3, {kA}, EntryKind::internal);

  for (int k = 1; k <= 11; ++k) {
    add((k < 10 ? "A0" : "A") + std::to_string(k), 3, {}, EntryKind::commutative);
  }
  for (int k = 1; k <= 4; ++k) {
    add("A2_0" + std::to_string(k), 2, {}, EntryKind::commutative);
  }

  add("DA01", 3, {kA}, EntryKind::derived_family);
  add("DA02", 3, {kA, kB}, EntryKind::derived_family);
  add("DA03", 3, {kA, kB, kG, kD}, EntryKind::derived_family);
  add("DA04", 3, {kA}, EntryKind::derived_family);
  add("DA05", 3, {kA}, EntryKind::derived_family);
  add("DA06", 3, {kE}, EntryKind::derived_family);
  add("D2_01", 2, {kA}, EntryKind::derived_family);

  add("D01", 3, {kA}, EntryKind::strong_special, "", "DA01(alpha)");
  add("D02", 3, {}, EntryKind::strong_special, "", "DA02(0, 1)");
  add("D03", 3, {kA}, EntryKind::strong_special, "", "DA02(alpha, 0)");
  add("D04", 3, {}, EntryKind::strong_special, "", "DA03(0, 1, 0, 0)");
  add("D05", 3, {kA}, EntryKind::strong_special, "", "DA03(alpha, 0, 0, alpha)");
  add("D06", 3, {kA, kB}, EntryKind::strong_special, "", "DA03(alpha, 0, beta, beta)");
  add("D06b", 3, {kA}, EntryKind::strong_special, "", "DA04(alpha)");
  add("D07", 3, {kA}, EntryKind::strong_special, "", "DA05(alpha)");
  add("D08", 3, {kA}, EntryKind::strong_special, "", "DA06(alpha)");

  add("N01", 2, {}, EntryKind::non_strong_2d);
  add("N02", 2, {}, EntryKind::non_strong_2d);
  add("NP01", 2, {}, EntryKind::novikov_poisson);
  add("NP02", 2, {kA, kB, kG}, EntryKind::novikov_poisson);
  return v;
}

template <Field S>
class Builder {
public:
  explicit Builder(std::size_t n) : p_(n) {}
  // 1-based indices
  Builder& m(int i, int j, int k, const S& v) {
    p_.mul.set_symmetric(i - 1, j - 1, k - 1, v);
    return *this;
  }
  Builder& b(int i, int j, int k, const S& v) {
    p_.bracket.set_antisymmetric(i - 1, j - 1, k - 1, v);
    return *this;
  }
  Builder& raw(int i, int j, int k, const S& v) {
    p_.bracket.at(i - 1, j - 1, k - 1) = v;
    return *this;
  }
  AlgebraPair<S> done() { return std::move(p_); }

private:
  AlgebraPair<S> p_;
};

template <Field S>
void lie_h(Builder<S>& x) {
  x.b(1, 2, 3, S(1));
}
template <Field S>
void lie_g1(Builder<S>& x) {
  x.b(1, 3, 1, S(1)).b(2, 3, 2, S(1));
}
template <Field S>
void lie_g2(Builder<S>& x, const S& a) {
  x.b(1, 3, 1, S(1)).b(1, 3, 2, S(1)).b(2, 3, 2, a);
}
template <Field S>
void lie_sl2(Builder<S>& x) {
  x.b(1, 2, 3, S(1)).b(1, 3, 2, S(-1)).b(2, 3, 1, S(1));
}

// 3-dimensional commutative associative algebras, numbered 1..11.
template <Field S>
void comm3(Builder<S>& x, int k) {
  const S one(1);
  switch (k) {
  case 1: x.m(1, 1, 1, one).m(2, 2, 2, one).m(3, 3, 3, one); break;
  case 2: x.m(1, 1, 1, one).m(2, 2, 2, one).m(1, 3, 3, one); break;
  case 3: x.m(1, 1, 1, one).m(2, 2, 2, one); break;
  case 4: x.m(1, 1, 1, one).m(1, 2, 2, one).m(1, 3, 3, one).m(2, 2, 3, one); break;
  case 5: x.m(1, 1, 1, one).m(1, 2, 2, one).m(1, 3, 3, one); break;
  case 6: x.m(1, 1, 1, one).m(1, 2, 2, one); break;
  case 7: x.m(1, 1, 1, one).m(2, 2, 3, one); break;
  case 8: x.m(1, 1, 1, one); break;
  case 9: x.m(1, 1, 2, one).m(1, 2, 3, one); break;
  case 10: x.m(1, 2, 3, one); break;
  case 11: x.m(1, 1, 2, one); break;
  default: break;
  }
}

template <Field S>
void comm2(Builder<S>& x, int k) {
  const S one(1);
  switch (k) {
  case 1: x.m(1, 1, 1, one).m(2, 2, 2, one); break;
  case 2: x.m(1, 1, 1, one).m(1, 2, 2, one); break;
  case 3: x.m(1, 1, 1, one); break;
  case 4: x.m(1, 1, 2, one); break;
  default: break;
  }
}

int number_suffix(std::string_view id, std::size_t from) {
  int k = 0;
  for (std::size_t i = from; i < id.size(); ++i) {
    k = k * 10 + (id[i] - '0');
  }
  return k;
}

template <Field S>
AlgebraPair<S> build(const CatalogEntry& e, const std::vector<S>& p) {
  Builder<S> x(e.dim);
  const S one(1);
  const S zero(0);
  const std::string& id = e.id;
  auto P = [&p](std::size_t i) -> const S& { return p[i]; };

  if (id == "h") {
    lie_h(x);
  } else if (id == "g1") {
    lie_g1(x);
  } else if (id == "g2") {
    lie_g2(x, P(0));
  } else if (id == "sl2") {
    lie_sl2(x);
  } else if (id == "T01") {
    lie_sl2(x);
  } else if (id == "T02") {
    lie_h(x);
    x.m(2, 2, 3, one);
  } else if (id == "T03") {
    lie_h(x);
    x.m(1, 2, 3, P(0));
  } else if (id == "T04") {
    lie_h(x);
    x.m(1, 2, 3, P(0)).m(2, 2, 1, one);
  } else if (id == "T05") {
    lie_h(x);
    x.m(1, 1, 3, one).m(1, 2, 1, one).m(2, 2, 2, one).m(2, 3, 3, one);
  } else if (id == "T06") {
    lie_h(x);
    x.m(1, 2, 1, one).m(2, 2, 2, one).m(2, 3, 3, one);
  } else if (id == "T07") {
    lie_g1(x);
    x.m(1, 3, 1, P(0)).m(2, 3, 2, P(0)).m(3, 3, 3, P(0));
  } else if (id == "T08") {
    lie_g1(x);
    x.m(3, 3, 1, one);
  } else if (id == "T09") {
    lie_g2(x, P(0));
    x.m(1, 3, 1, P(1)).m(2, 3, 2, P(1)).m(3, 3, 3, P(1));
  } else if (id == "T10") {
    lie_g2(x, P(0));
    x.m(3, 3, 2, one);
  } else if (id == "T10*") {
    lie_g2(x, P(0));
    x.m(3, 3, 1, one - P(0)).m(3, 3, 2, one);
  } else if (id == "T11") {
    lie_g2(x, P(0));
    x.m(3, 3, 1, one);
  } else if (id == "T12") {
    lie_g2(x, S(2));
    x.m(1, 1, 2, one).m(1, 3, 1, P(0)).m(2, 3, 2, P(0)).m(3, 3, 3, P(0));
  } else if (id == "T13") {
    lie_g2(x, S(2));
    x.m(1, 1, 2, one).m(3, 3, 2, one);
  } else if (id == "T14") {
    lie_g2(x, S(2));
    x.m(1, 3, 2, one).m(3, 3, 1, one);
  } else if (id == "T15") {
    lie_g2(x, S(2));
    x.m(1, 3, 2, one);
  } else if (id == "T16") {
    lie_g2(x, zero);
    x.m(3, 3, 1, one).m(3, 3, 2, one);
  } else if (id == "T17") {
    lie_g2(x, zero);
    x.m(1, 1, 2, one).m(1, 2, 2, -one).m(1, 3, 1, P(0)).m(2, 2, 2, one).m(2, 3, 2, P(0)).m(3, 3, 3, P(0));
  } else if (id == "T18") {
    lie_g2(x, zero);
    x.m(1, 1, 2, one).m(1, 2, 2, -one).m(2, 2, 2, one).m(3, 3, 1, one).m(3, 3, 2, one);
  } else if (id == "T19") {
    lie_g2(x, zero);
    x.m(1, 3, 1, P(0)).m(1, 3, 2, P(0)).m(3, 3, 3, P(0));
  } else if (id.size() == 3 && id[0] == 'T') {
    comm3(x, number_suffix(id, 1) - 19); // T20..T30 carry A01..A11 with zero bracket
  } else if (id.rfind("A2_", 0) == 0) {
    comm2(x, number_suffix(id, 3));
  } else if (id.size() == 3 && id[0] == 'A') {
    comm3(x, number_suffix(id, 1));
  } else if (id == "DA01") {
    comm3(x, 2);
    x.b(1, 3, 3, P(0));
  } else if (id == "DA02") {
    comm3(x, 4);
    x.b(1, 2, 2, P(0)).b(1, 2, 3, P(1)).b(1, 3, 3, S(2) * P(0));
  } else if (id == "DA03") {
    comm3(x, 5);
    x.b(1, 2, 2, P(0)).b(1, 2, 3, P(1)).b(1, 3, 2, P(2)).b(1, 3, 3, P(3));
  } else if (id == "DA04") {
    comm3(x, 6);
    x.b(1, 2, 2, P(0));
  } else if (id == "DA05") {
    comm3(x, 9);
    x.b(1, 2, 3, P(0));
  } else if (id == "DA06") {
    comm3(x, 10);
    x.b(1, 2, 3, P(0));
  } else if (id == "D2_01") {
    comm2(x, 2);
    x.b(1, 2, 2, P(0));
  } else if (id == "N01") {
    x.m(1, 1, 2, one).b(1, 2, 2, one);
  } else if (id == "N02") {
    x.m(1, 2, 1, one).m(2, 2, 2, one).b(1, 2, 2, one);
  } else if (id == "NP01") {
    x.m(2, 2, 1, one).raw(2, 1, 1, -one);
  } else if (id == "NP02") {
    x.m(1, 2, 1, one).m(2, 2, 2, one);
    x.raw(1, 2, 1, P(0)).raw(2, 1, 1, P(1)).raw(2, 2, 1, P(2)).raw(2, 2, 2, P(0));
  } else {
    throw UnknownId(id);
  }
  return x.done();
}

/// Maps a strong-special name onto its derived family and parameters.
template <Field S>
std::pair<std::string, std::vector<S>> resolve_alias(const std::string& id, const std::vector<S>& p) {
  const S zero(0);
  const S one(1);
  if (id == "D01") return {"DA01", {p[0]}};
  if (id == "D02") return {"DA02", {zero, one}};
  if (id == "D03") return {"DA02", {p[0], zero}};
  if (id == "D04") return {"DA03", {zero, one, zero, zero}};
  if (id == "D05") return {"DA03", {p[0], zero, zero, p[0]}};
  if (id == "D06") return {"DA03", {p[0], zero, p[1], p[1]}};
  if (id == "D06b") return {"DA04", {p[0]}};
  if (id == "D07") return {"DA05", {p[0]}};
  if (id == "D08") return {"DA06", {p[0]}};
  return {id, p};
}

// Special sample values per family.
std::vector<Params> singles(std::initializer_list<Rational> xs) {
  std::vector<Params> out;
  for (const auto& x : xs) {
    out.push_back({x});
  }
  return out;
}

const std::vector<Params>& lie_alpha_samples() {
  static const std::vector<Params> v =
      singles({Rational(0), Rational(1, 2), Rational(2), Rational(1), Rational(-1), Rational(3), Rational(-2),
               Rational(5), Rational(-1, 2)});
  return v;
}

std::vector<Params> specials(const std::string& id) {
  const Rational half(1, 2);
  if (id == "g2" || id == "T10" || id == "T11" || id == "T10*") {
    return lie_alpha_samples();
  }
  if (id == "T09") {
    return {{Rational(2), Rational(1)},   {Rational(0), Rational(1)},     {half, Rational(0)},
            {Rational(2), Rational(0)},   {Rational(1), Rational(2)},     {Rational(-1), half},
            {Rational(3), Rational(-1)},  {Rational(-2), Rational(3)},    {Rational(5), Rational(0)},
            {Rational(-1, 2), Rational(2)}, {Rational(0), Rational(0)},   {half, Rational(-3)}};
  }
  if (id == "T03" || id == "T04" || id == "T07" || id == "T12" || id == "T17") {
    return singles({Rational(0), Rational(1), Rational(-1), Rational(4), half, Rational(9), Rational(-2),
                    Rational(1, 4)});
  }
  if (id == "T19") {
    return singles({Rational(1), Rational(-1), Rational(4), half, Rational(-3), Rational(9)});
  }
  if (id == "DA02") {
    return {{Rational(0), Rational(1)}, {Rational(0), Rational(-2)}, {Rational(1), Rational(0)},
            {Rational(2), Rational(3)}, {Rational(-1, 2), Rational(1)}, {Rational(3), Rational(-1, 3)},
            {Rational(0), Rational(0)}};
  }
  if (id == "DA03") {
    return {{Rational(0), Rational(1), Rational(0), Rational(0)},
            {Rational(1), Rational(0), Rational(0), Rational(1)},
            {Rational(2), Rational(0), Rational(3), Rational(3)},
            {Rational(1), Rational(2), Rational(-1, 2), Rational(-1)},
            {Rational(-1), Rational(0), Rational(0), Rational(-1)},
            {half, Rational(1), Rational(2), Rational(3)}};
  }
  if (id == "D06") {
    return {{Rational(1), Rational(2)},  {Rational(2), Rational(1)}, {Rational(-1), Rational(3)},
            {half, Rational(-2)},        {Rational(3), Rational(3)}, {Rational(0), Rational(1)}};
  }
  if (id == "NP02") {
    return {{Rational(1), Rational(0), Rational(0)},   {Rational(1), Rational(1), Rational(2)},
            {Rational(2), Rational(-1), half},         {Rational(0), Rational(3), Rational(-1)},
            {Rational(-1, 2), half, Rational(5)},      {Rational(0), Rational(0), Rational(0)}};
  }
  // remaining one-parameter families
  return singles({Rational(1), Rational(-1), Rational(2), half, Rational(-3), Rational(0)});
}

} // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = make_entries();
  return entries;
}

const CatalogEntry& find_entry(std::string_view id) {
  for (const auto& e : catalog_entries()) {
    if (e.id == id) {
      return e;
    }
  }
  throw UnknownId(std::string(id));
}

const std::vector<std::string>& tp_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (int k = 1; k <= 30; ++k) {
      v.push_back((k < 10 ? "T0" : "T") + std::to_string(k));
    }
    return v;
  }();
  return ids;
}

template <Field S>
bool admissible(std::string_view id, const std::vector<S>& params) {
  const CatalogEntry& e = find_entry(id);
  if (params.size() != e.param_names.size()) {
    throw InadmissibleParameter(e.id + " expects " + std::to_string(e.param_names.size()) + " parameter(s), got " +
                                std::to_string(params.size()));
  }
  if (e.id == "T19") {
    return !params[0].is_zero();
  }
  return true;
}

template <Field S>
AlgebraPair<S> instantiate(std::string_view id, const std::vector<S>& params) {
  const CatalogEntry& e = find_entry(id);
  if (!admissible(id, params)) {
    throw InadmissibleParameter(e.id + " requires " + e.param_domain);
  }
  auto [target, p] = resolve_alias(e.id, params);
  return build(find_entry(target), p);
}

template AlgebraPair<Rational> instantiate<Rational>(std::string_view, const std::vector<Rational>&);
template AlgebraPair<RationalFunction> instantiate<RationalFunction>(std::string_view,
                                                                   const std::vector<RationalFunction>&);
template bool admissible<Rational>(std::string_view, const std::vector<Rational>&);
template bool admissible<RationalFunction>(std::string_view, const std::vector<RationalFunction>&);

StructureConstants<Rational> lie_algebra(std::string_view id, const std::vector<Rational>& params) {
  const auto p = instantiate<Rational>(id, params);
  return find_entry(id).kind == EntryKind::commutative ? p.mul : p.bracket;
}

std::vector<Params> sample_params(std::string_view id, std::size_t count, const SampleProfile& profile) {
  const CatalogEntry& e = find_entry(id);
  if (e.param_names.empty()) {
    return {Params{}};
  }
  std::vector<Params> out;
  for (auto& s : specials(e.id)) {
    if (out.size() == count) {
      return out;
    }
    if (admissible(e.id, s)) {
      out.push_back(std::move(s));
    }
  }
  std::uint64_t salt = 1469598103934665603ULL;
  for (char ch : e.id) {
    salt = (salt ^ static_cast<unsigned char>(ch)) * 1099511628211ULL;
  }
  RationalSampler rng(profile.seed ^ salt);
  std::size_t attempts = 0;
  while (out.size() < count && attempts++ < 100000) {
    Params s;
    for (std::size_t i = 0; i < e.param_names.size(); ++i) {
      s.push_back(rng.next());
    }
    if (admissible(e.id, s) && std::find(out.begin(), out.end(), s) == out.end()) {
      out.push_back(std::move(s));
    }
  }
  return out;
}

std::vector<Params> default_samples(std::string_view id, const SampleProfile& profile) {
  const CatalogEntry& e = find_entry(id);
  if (e.param_names.empty()) {
    return {Params{}};
  }
  std::size_t n = 0;
  for (const auto& s : specials(e.id)) {
    n += admissible(e.id, s) ? 1 : 0;
  }
  // the profile's tail adds two points beyond the special values
  return sample_params(id, std::max<std::size_t>(n, 3) + (profile.name == "paper" ? 0 : 2), profile);
}

std::string ParamInstance::to_string() const {
  std::ostringstream os;
  os << id;
  if (!params.empty()) {
    os << '(';
    for (std::size_t i = 0; i < params.size(); ++i) {
      os << (i ? ", " : "") << params[i].to_string();
    }
    os << ')';
  }
  return os.str();
}

namespace {

Matrix<Rational> cols(std::initializer_list<std::initializer_list<Rational>> columns) {
  std::vector<std::vector<Rational>> c;
  for (const auto& col : columns) {
    c.emplace_back(col);
  }
  return Matrix<Rational>::from_columns(c);
}

bool any(const Params&) { return true; }

std::vector<IsoWitness> make_witnesses() {
  std::vector<IsoWitness> w;

  w.push_back({"T03(b) -> T03(-b)", "T03", any,
               [](const Params& p) { return ParamInstance{"T03", {p[0]}}; },
               [](const Params& p) { return ParamInstance{"T03", {-p[0]}}; },
               [](const Params&) { return cols({{0, 1, 0}, {1, 0, 0}, {0, 0, -1}}); },
               "no diagonal basis change works; swaps e1 and e2"});

  w.push_back({"T09(1/a, b/a) -> T09(a, b)", "T09",
               [](const Params& p) { return !p[0].is_zero() && !p[0].is_one(); },
               [](const Params& p) { return ParamInstance{"T09", {p[0].inv(), p[1] / p[0]}}; },
               [](const Params& p) { return ParamInstance{"T09", {p[0], p[1]}}; },
               [](const Params& p) {
                 const Rational a = p[0];
                 const Rational s = (a - 1).inv();
                 return cols({{s, 0, 0}, {1, a * s, 0}, {0, 0, a}});
               },
               "basis E maps the (1/a, b/a) member onto the (a, b) member"});

  w.push_back({"g2(1/a) -> g2(a)", "g2", [](const Params& p) { return !p[0].is_zero() && !p[0].is_one(); },
               [](const Params& p) { return ParamInstance{"g2", {p[0].inv()}}; },
               [](const Params& p) { return ParamInstance{"g2", {p[0]}}; },
               [](const Params& p) {
                 const Rational a = p[0];
                 const Rational s = (a - 1).inv();
                 return cols({{s, 0, 0}, {1, a * s, 0}, {0, 0, a}});
               },
               ""});

  w.push_back({"T10*(b) -> T10(1/b)", "T10*", [](const Params& p) { return !p[0].is_zero(); },
               [](const Params& p) { return ParamInstance{"T10*", {p[0]}}; },
               [](const Params& p) { return ParamInstance{"T10", {p[0].inv()}}; },
               [](const Params& p) {
                 const Rational b = p[0];
                 const Rational b2 = b * b;
                 return cols({{b.inv(), 0, 0}, {(1 - b) / b2, b2.inv(), 0}, {0, 0, b.inv()}});
               },
               ""});

  w.push_back({"T11(1/b) -> T11(b)", "T11", [](const Params& p) { return !p[0].is_zero(); },
               [](const Params& p) { return ParamInstance{"T11", {p[0].inv()}}; },
               [](const Params& p) { return ParamInstance{"T11", {p[0]}}; },
               [](const Params& p) {
                 const Rational b = p[0];
                 const Rational b2 = b * b;
                 return cols({{b2, 0, 0}, {(b - 1) * b2, b2 * b, 0}, {0, 0, b}});
               },
               "basis E maps the 1/b member onto the b member"});

  w.push_back({"DA01(a) -> T17(-1/a)", "DA01", [](const Params& p) { return !p[0].is_zero(); },
               [](const Params& p) { return ParamInstance{"DA01", {p[0]}}; },
               [](const Params& p) { return ParamInstance{"T17", {-p[0].inv()}}; },
               [](const Params& p) {
                 const Rational s = -p[0].inv();
                 return cols({{0, -1, 1}, {0, 1, 0}, {s, s, 0}});
               },
               ""});

  w.push_back({"DA02(0, b) -> T05", "DA02", [](const Params& p) { return p[0].is_zero() && !p[1].is_zero(); },
               [](const Params& p) { return ParamInstance{"DA02", {p[0], p[1]}}; },
               [](const Params&) { return ParamInstance{"T05", {}}; },
               [](const Params& p) {
                 const Rational b = p[1];
                 return cols({{0, -b, 0}, {1, 0, 0}, {0, 0, b * b}});
               },
               "E3 = +b^2 e3; the sign -b^2 gives e1.e1 = -E3"});

  w.push_back({"DA02(a, b) -> T12(-1/a)", "DA02", [](const Params& p) { return !p[0].is_zero(); },
               [](const Params& p) { return ParamInstance{"DA02", {p[0], p[1]}}; },
               [](const Params& p) { return ParamInstance{"T12", {-p[0].inv()}}; },
               [](const Params& p) {
                 const Rational a = p[0];
                 return cols({{0, 1, 1 - p[1] / a}, {0, 0, 1}, {-a.inv(), 0, 0}});
               },
               ""});

  w.push_back({"DA04(a) -> T19(-1/a)", "DA04", [](const Params& p) { return !p[0].is_zero(); },
               [](const Params& p) { return ParamInstance{"DA04", {p[0]}}; },
               [](const Params& p) { return ParamInstance{"T19", {-p[0].inv()}}; },
               [](const Params& p) { return cols({{0, 1, -1}, {0, 0, 1}, {-p[0].inv(), 0, 0}}); }, ""});

  w.push_back({"DA05(a) -> T04(-1/a)", "DA05", [](const Params& p) { return !p[0].is_zero(); },
               [](const Params& p) { return ParamInstance{"DA05", {p[0]}}; },
               [](const Params& p) { return ParamInstance{"T04", {-p[0].inv()}}; },
               [](const Params& p) { return cols({{0, 1, 0}, {1, 0, 0}, {0, 0, -p[0]}}); }, ""});

  w.push_back({"DA06(e) -> T03(-1/e)", "DA06", [](const Params& p) { return !p[0].is_zero(); },
               [](const Params& p) { return ParamInstance{"DA06", {p[0]}}; },
               [](const Params& p) { return ParamInstance{"T03", {-p[0].inv()}}; },
               [](const Params& p) { return cols({{0, 1, 0}, {1, 0, 0}, {0, 0, -p[0]}}); }, ""});

  w.push_back({"D06(a, b) -> D06(b, a)", "D06",
               [](const Params& p) { return !p[0].is_zero() && !p[1].is_zero(); },
               [](const Params& p) { return ParamInstance{"D06", {p[0], p[1]}}; },
               [](const Params& p) { return ParamInstance{"D06", {p[1], p[0]}}; },
               [](const Params& p) {
                 const Rational a = p[0];
                 const Rational b = p[1];
                 return cols({{1, 0, 0}, {0, -b, a - b}, {0, 0, -a}});
               },
               ""});

  w.push_back({"D08(a) -> D08(-a)", "D08", any,
               [](const Params& p) { return ParamInstance{"D08", {p[0]}}; },
               [](const Params& p) { return ParamInstance{"D08", {-p[0]}}; },
               [](const Params&) { return cols({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}); }, ""});

  w.push_back({"D04 -> T06", "D04", any, [](const Params&) { return ParamInstance{"D04", {}}; },
               [](const Params&) { return ParamInstance{"T06", {}}; },
               [](const Params&) { return cols({{0, 1, 0}, {1, 0, 0}, {0, 0, -1}}); }, ""});

  w.push_back({"D05(a) -> T07(-1/a)", "D05", [](const Params& p) { return !p[0].is_zero(); },
               [](const Params& p) { return ParamInstance{"D05", {p[0]}}; },
               [](const Params& p) { return ParamInstance{"T07", {-p[0].inv()}}; },
               [](const Params& p) { return cols({{0, 1, 0}, {0, 0, 1}, {-p[0].inv(), 0, 0}}); }, ""});

  w.push_back({"D06(a, b) -> T09(b/a, -1/a)", "D06", [](const Params& p) { return !p[0].is_zero(); },
               [](const Params& p) { return ParamInstance{"D06", {p[0], p[1]}}; },
               [](const Params& p) { return ParamInstance{"T09", {p[1] / p[0], -p[0].inv()}}; },
               [](const Params& p) {
                 const Rational a = p[0];
                 const Rational b = p[1];
                 return cols({{0, 1, 1}, {0, b / a, (b - a) / a}, {-a.inv(), 0, 0}});
               },
               ""});
  return w;
}

} // namespace

const std::vector<IsoWitness>& known_isomorphisms() {
  static const std::vector<IsoWitness> w = make_witnesses();
  return w;
}

} // namespace tpa
