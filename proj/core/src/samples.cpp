#include "tpa/samples.hpp"

#include <cstdlib>
#include <string_view>

#include "tpa/error.hpp"

namespace tpa {

SampleProfile current_profile() {
  const char* env = std::getenv("TPA_SAMPLE_SEED");
  if (env == nullptr || std::string_view(env).empty() || std::string_view(env) == "paper") {
    return {};
  }
  const std::string text(env);
  std::uint64_t seed = 0;
  for (char ch : text) {
    if (ch < '0' || ch > '9') {
      throw ParseError("TPA_SAMPLE_SEED must be \"paper\" or a non-negative integer: " + text);
    }
    seed = seed * 10 + static_cast<std::uint64_t>(ch - '0');
  }
  return {"seed:" + text, seed};
}

} // namespace tpa
