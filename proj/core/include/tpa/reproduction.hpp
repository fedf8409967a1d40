#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tpa/samples.hpp"

namespace tpa {

struct ClaimResult {
  int criterion = 0;  // 1..8
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string profile;
  std::vector<ClaimResult> claims;
  std::vector<std::string> errata;
  bool criterion_pass(int criterion) const;
  bool all_pass() const;
};

std::vector<ClaimResult> check_axioms(const SampleProfile& profile);
std::vector<ClaimResult> check_half_derivation_table();
std::vector<ClaimResult> check_enumeration(std::uint64_t seed);
std::vector<ClaimResult> check_witnesses(const SampleProfile& profile);
std::vector<ClaimResult> check_strong_special(const SampleProfile& profile);
std::vector<ClaimResult> check_novikov(const SampleProfile& profile);
std::vector<ClaimResult> check_degenerations();
std::vector<ClaimResult> check_properties(const SampleProfile& profile, std::uint64_t seed);

/// Every correction and conflict the suite relies on, one line each.
std::vector<std::string> errata();

/// Runs all eight groups in order.
SuiteReport verify_paper(const SampleProfile& profile = current_profile());

} // namespace tpa
