#include "tpa/identities.hpp"

namespace tpa {

std::string_view to_string(Identity id) {
  switch (id) {
  case Identity::commutative: return "commutative";
  case Identity::associative: return "associative";
  case Identity::anticommutative: return "anticommutative";
  case Identity::jacobi: return "jacobi";
  case Identity::transposed_leibniz: return "transposed_leibniz";
  case Identity::leibniz: return "leibniz";
  }
  return "?";
}

Identity parse_identity(std::string_view name) {
  for (Identity id : all_identities) {
    if (to_string(id) == name) {
      return id;
    }
  }
  throw ParseError("unknown identity: " + std::string(name));
}

} // namespace tpa
