#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vtube/gauss_code.hpp"

namespace vtube {

// Named diagrams accepted wherever a code is expected.
inline const std::vector<std::pair<std::string_view, std::string_view>>& catalog() {
  static const std::vector<std::pair<std::string_view, std::string_view>> entries = {
      {"unknot", "()"},
      {"unlink", "() ()"},
      {"kink", "(O1+ U1+)"},
      {"trefoil", "(O1+ U2+ O3+ U1+ O2+ U3+)"},
      {"left-trefoil", "(U1- O2- U3- O1- U2- O3-)"},
      {"figure8", "(O1+ U2- O4- U1+ O3+ U4- O2- U3+)"},
      {"cinquefoil", "(O1+ U2+ O3+ U4+ O5+ U1+ O2+ U3+ O4+ U5+)"},
      {"hopf", "(O1+ U2+) (U1+ O2+)"},
      {"borromean", "(O1+ U2- O4- U5+) (U1+ O3+ U4- O6-) (O2- U3+ O5+ U6-)"},
      {"VT", "(O1+ O2+ U1+ U2+)"},
      {"virtual-trefoil", "(O1+ O2+ U1+ U2+)"},
      {"virtual-hopf", "(O1+) (U1+)"},
      {"arc", "[]"},
      {"arc-under-loop", "[U1+] (O1+)"},
      {"arc-over-loop", "[O1+] (U1+)"},
      {"trefoil-knotoid", "[O1+ U2+ O3+ U1+ O2+ U3+]"},
  };
  return entries;
}

inline std::optional<GaussCode> lookup(std::string_view name) {
  for (const auto& [n, text] : catalog())
    if (n == name) return parse(text);
  return std::nullopt;
}

// A catalog name or Gauss-code text.
inline GaussCode resolve(std::string_view text) {
  if (auto c = lookup(text)) return *c;
  return parse(text);
}

}  // namespace vtube
