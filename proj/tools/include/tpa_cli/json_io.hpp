#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tpa/algebra.hpp"
#include "tpa/catalog.hpp"
#include "tpa/degeneration.hpp"

namespace tpa::cli {

using Json = nlohmann::ordered_json;

/// Nonzero entries as [i, j, k, "c"] with 1-based indices, in index order.
template <Field S>
Json entries_to_json(const StructureConstants<S>& sc);
template <Field S>
StructureConstants<S> entries_from_json(const Json& j, std::size_t dim);

/// {"dim": n, "mul": [...], "bracket": [...]}, plus "meta" when given.
template <Field S>
Json pair_to_json(const AlgebraPair<S>& pair, const Json& meta = nullptr);
/// Throws ParseError on malformed input.
template <Field S>
AlgebraPair<S> pair_from_json(const Json& j);

/// Row-major list of rows of scalar strings.
template <Field S>
Json matrix_to_json(const Matrix<S>& m);
template <Field S>
Matrix<S> matrix_from_json(const Json& j);

Json vector_to_json(const std::vector<Rational>& v);
Json meta_json(const ParamInstance& p);

/// Parses JSON text; throws ParseError.
Json parse_json(const std::string& text);

/// One concrete degeneration in the shipped row format: the source algebra in the
/// algebra format (over Q(t)) extended with a "family" block.
Json row_to_json(const DegenerationRow& row, int index);
DegenerationRow row_from_json(const Json& j);

} // namespace tpa::cli
