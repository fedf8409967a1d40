#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tpa/rational.hpp"

namespace tpa {

/// Deterministic sample profile. "paper" uses only the fixed special values plus a
/// fixed-seed tail; a numeric TPA_SAMPLE_SEED keeps the special values and reseeds the tail.
struct SampleProfile {
  std::string name = "paper";
  std::uint64_t seed = 0;
};

/// Reads TPA_SAMPLE_SEED; unset or "paper" gives the default profile.
/// Throws ParseError on anything other than "paper" or a non-negative integer.
SampleProfile current_profile();

/// Small random rationals p/q with |p| <= max_num and 1 <= q <= max_den.
class RationalSampler {
public:
  explicit RationalSampler(std::uint64_t seed, int max_num = 9, int max_den = 5)
      : rng_(seed), num_(-max_num, max_num), den_(1, max_den) {}

  Rational next() { return Rational(num_(rng_), den_(rng_)); }
  Rational next_nonzero() {
    for (;;) {
      Rational r = next();
      if (!r.is_zero()) {
        return r;
      }
    }
  }
  int next_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  std::mt19937_64& engine() { return rng_; }

private:
  std::mt19937_64 rng_;
  std::uniform_int_distribution<int> num_;
  std::uniform_int_distribution<int> den_;
};

} // namespace tpa
