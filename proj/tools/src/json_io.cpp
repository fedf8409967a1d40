#include "tpa_cli/json_io.hpp"

#include "tpa/error.hpp"

namespace tpa::cli {

namespace {

template <Field S>
S scalar_from_json(const Json& j) {
  if (j.is_string()) {
    return parse_scalar<S>(j.get<std::string>());
  }
  if (j.is_number_integer()) {
    return S(j.get<long long>());
  }
  throw ParseError("expected a scalar string, got " + j.dump());
}

std::size_t index_from_json(const Json& j, std::size_t dim) {
  if (!j.is_number_integer()) {
    throw ParseError("expected a 1-based index, got " + j.dump());
  }
  const long long i = j.get<long long>();
  if (i < 1 || static_cast<std::size_t>(i) > dim) {
    throw ParseError("index " + std::to_string(i) + " out of range 1.." + std::to_string(dim));
  }
  return static_cast<std::size_t>(i - 1);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

} // namespace

template <Field S>
Json entries_to_json(const StructureConstants<S>& sc) {
  Json out = Json::array();
  const std::size_t n = sc.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (!sc.at(i, j, k).is_zero()) {
          out.push_back(Json::array({i + 1, j + 1, k + 1, sc.at(i, j, k).to_string()}));
        }
      }
    }
  }
  return out;
}

template <Field S>
StructureConstants<S> entries_from_json(const Json& j, std::size_t dim) {
  StructureConstants<S> sc(dim);
  if (j.is_null()) {
    return sc;
  }
  if (!j.is_array()) {
    throw ParseError("structure constants must be an array");
  }
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 4) {
      throw ParseError("entry must be [i, j, k, \"c\"]: " + e.dump());
    }
    sc.at(index_from_json(e[0], dim), index_from_json(e[1], dim), index_from_json(e[2], dim)) =
        scalar_from_json<S>(e[3]);
  }
  return sc;
}

template <Field S>
Json pair_to_json(const AlgebraPair<S>& pair, const Json& meta) {
  Json out;
  out["dim"] = pair.dim();
  out["mul"] = entries_to_json(pair.mul);
  out["bracket"] = entries_to_json(pair.bracket);
  if (!meta.is_null()) {
    out["meta"] = meta;
  }
  return out;
}

template <Field S>
AlgebraPair<S> pair_from_json(const Json& j) {
  const Json& d = field(j, "dim");
  if (!d.is_number_integer() || d.get<long long>() < 1 || d.get<long long>() > 8) {
    throw ParseError("dim must be an integer in 1..8");
  }
  const auto n = static_cast<std::size_t>(d.get<long long>());
  return AlgebraPair<S>(entries_from_json<S>(j.value("mul", Json()), n),
                        entries_from_json<S>(j.value("bracket", Json()), n));
}

template <Field S>
Json matrix_to_json(const Matrix<S>& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      row.push_back(m(r, c).to_string());
    }
    out.push_back(std::move(row));
  }
  return out;
}

template <Field S>
Matrix<S> matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty()) {
    throw ParseError("matrix must be a non-empty array of rows");
  }
  Matrix<S> m(j.size(), j[0].size());
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != m.cols()) {
      throw ParseError("matrix rows must have equal length");
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      m(r, c) = scalar_from_json<S>(j[r][c]);
    }
  }
  return m;
}

Json vector_to_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& x : v) {
    out.push_back(x.to_string());
  }
  return out;
}

Json meta_json(const ParamInstance& p) {
  Json m;
  m["id"] = p.id;
  m["params"] = vector_to_json(p.params);
  return m;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Json row_to_json(const DegenerationRow& row, int index) {
  Json out = pair_to_json(row.source());
  out["index"] = index;
  out["label"] = row.label;
  out["reading"] = row.reading;
  Json family;
  family["g"] = matrix_to_json(row.g);
  Json src;
  src["id"] = row.source_id;
  src["params"] = Json::array();
  for (const auto& f : row.source_params) {
    src["params"].push_back(f.to_string());
  }
  family["source"] = src;
  Json tgt;
  tgt["id"] = row.target_id;
  tgt["params"] = vector_to_json(row.target_params);
  family["target"] = tgt;
  out["family"] = family;
  out["post_witness"] = row.post_witness ? matrix_to_json(*row.post_witness) : Json();
  return out;
}

DegenerationRow row_from_json(const Json& j) {
  const Json& family = field(j, "family");
  const Json& src = field(family, "source");
  const Json& tgt = field(family, "target");
  DegenerationRow row;
  row.label = j.value("label", std::string());
  row.reading = j.value("reading", std::string());
  row.source_id = field(src, "id").get<std::string>();
  for (const auto& p : src.value("params", Json::array())) {
    row.source_params.push_back(scalar_from_json<RF>(p));
  }
  row.target_id = field(tgt, "id").get<std::string>();
  for (const auto& p : tgt.value("params", Json::array())) {
    row.target_params.push_back(scalar_from_json<Rational>(p));
  }
  row.g = matrix_from_json<RF>(field(family, "g"));
  if (j.contains("post_witness") && !j.at("post_witness").is_null()) {
    row.post_witness = matrix_from_json<Rational>(j.at("post_witness"));
  }
  // The algebra block, when present, must be the named source.
  if (j.contains("dim") && !(pair_from_json<RF>(j) == row.source())) {
    throw ParseError("row \"" + row.label + "\": structure constants disagree with the family source");
  }
  return row;
}

template Json entries_to_json(const StructureConstants<Rational>&);
template Json entries_to_json(const StructureConstants<RationalFunction>&);
template StructureConstants<Rational> entries_from_json(const Json&, std::size_t);
template StructureConstants<RationalFunction> entries_from_json(const Json&, std::size_t);
template Json pair_to_json(const AlgebraPair<Rational>&, const Json&);
template Json pair_to_json(const AlgebraPair<RationalFunction>&, const Json&);
template AlgebraPair<Rational> pair_from_json(const Json&);
template AlgebraPair<RationalFunction> pair_from_json(const Json&);
template Json matrix_to_json(const Matrix<Rational>&);
template Json matrix_to_json(const Matrix<RationalFunction>&);
template Matrix<Rational> matrix_from_json(const Json&);
template Matrix<RationalFunction> matrix_from_json(const Json&);

} // namespace tpa::cli
