#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tpa/catalog.hpp"
#include "tpa/derivations.hpp"

namespace tpa {

using RF = RationalFunction;
using RFMatrix = Matrix<RationalFunction>;
using RFPair = AlgebraPair<RationalFunction>;

/// One parametrized basis: the action g(t) (columns g_1(t), ..., g_n(t)) applied to a
/// source whose parameters may depend on t, followed by t -> 0.
struct DegenerationRow {
  std::string label;
  std::string source_id;
  std::vector<RF> source_params;
  RFMatrix g;
  std::string target_id;
  std::vector<Rational> target_params;
  std::optional<QMatrix> post_witness; // basis change applied to the limit before comparing
  std::string reading;                 // how a family parameter is substituted, if ambiguous

  bool source_depends_on_t() const;
  /// The source with t replaced by t0 (a generic family member).
  Pair source_at(const Rational& t0) const;
  RFPair source() const;
  Pair target() const;
};

enum class Match { exact, via_post_witness, failed };
std::string_view to_string(Match m);

/// Closed conditions that every degeneration source -> target satisfies.
struct NecessaryReport {
  int der_source = 0;
  int der_target = 0;
  bool strict = true;                  // strict Der increase required
  std::array<int, 3> source_ranks{};   // dim V.V, dim [V,V], dim of their span
  std::array<int, 3> target_ranks{};
  std::vector<std::string> violations;
  bool passes() const { return violations.empty(); }
};

/// strict = false relaxes the Der condition to dim Der(target) >= dim Der(source),
/// which is what a one-parameter family of sources guarantees.
NecessaryReport necessary_checks(const Pair& source, const Pair& target, bool strict = true);

int orbit_dim(const Pair& pair);

/// Entrywise limit at t = 0; throws Diverges.
Pair limit_at_zero(const RFPair& pair);

struct DegenerationReport {
  Match matched = Match::failed;
  std::optional<Pair> limit;
  std::string divergence;  // non-empty when some entry has a pole at t = 0
  NecessaryReport checks;  // Der dims and rank conditions between source and target
};

/// Acts by g(t), takes t -> 0, compares with the target (then through post_witness).
/// Throws SingularFamily when det g(t) is identically zero.
DegenerationReport verify_row(const DegenerationRow& row);

/// A row of the degeneration table: free parameters are sampled, and each sample
/// yields the candidate readings to try in order.
struct TableRow {
  int index = 0;
  std::string label;
  std::vector<std::string> param_names;
  std::vector<std::vector<Rational>> samples;
  std::function<std::vector<DegenerationRow>(const std::vector<Rational>&)> readings;
  std::string erratum;
};

const std::vector<TableRow>& degeneration_table();

struct TableRowResult {
  std::vector<Rational> sample;
  std::vector<DegenerationRow> readings;
  std::vector<DegenerationReport> reports;  // one per attempted reading
  int verified_reading = -1;                // first reading that matched
  bool verified() const { return verified_reading >= 0; }
};

std::vector<TableRowResult> verify_table_row(const TableRow& row);

/// Searches g = diag(t^a, t^b, t^c), |a|, |b|, |c| <= bound, for a degeneration.
std::optional<std::array<int, 3>> diagonal_search(const Pair& source, const Pair& target, int bound = 6);

struct AuditPair {
  ParamInstance source;
  ParamInstance target;
  friend bool operator==(const AuditPair&, const AuditPair&) = default;
};

/// Whether a sampled member of a component family avoids the special parameter
/// values (T09: alpha in {0, 1/2, 2} or beta = 0; T12, T17: beta = 0) whose members
/// also lie in the closures of other orbits.
bool is_generic_member(const ParamInstance& member);

/// For every catalog pair outside a component family and every sampled member of
/// the five components (T01, T20, T09, T12, T17), either necessary_checks fails,
/// the degeneration is realized by the table's closure, or the pair is reported open.
/// Open pairs are searched with diagonal families; a hit on a generic member would
/// contradict rigidity.
struct RigidityAudit {
  std::size_t candidates = 0;
  std::vector<AuditPair> realized;
  std::vector<AuditPair> open;
  std::vector<AuditPair> diagonal_hits;
  std::vector<AuditPair> generic_diagonal_hits;
  std::vector<AuditPair> unexpected_open;  // open pairs whose families are not listed
  bool consistent() const { return generic_diagonal_hits.empty() && unexpected_open.empty(); }
};
RigidityAudit rigidity_audit();

/// (source id, component id) families in which undecided pairs are expected.
const std::vector<std::pair<std::string, std::string>>& expected_open_families();

} // namespace tpa
