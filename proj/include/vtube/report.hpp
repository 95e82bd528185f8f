#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vtube/alexander.hpp"
#include "vtube/bracket.hpp"
#include "vtube/canonical.hpp"
#include "vtube/errors.hpp"
#include "vtube/gauss_code.hpp"
#include "vtube/group.hpp"
#include "vtube/invariants.hpp"
#include "vtube/wirtinger.hpp"

namespace vtube {

// One named value, or the reason it does not apply to the code.
struct InvariantEntry {
  std::string name;
  bool applicable = true;
  std::string reason;
  std::string text;
  std::optional<std::uint64_t> count;
  std::optional<LaurentPolynomial> polynomial;
};

struct InvariantReport {
  std::string code;  // canonical
  std::vector<InvariantEntry> entries;

  const InvariantEntry* find(std::string_view name) const {
    for (const auto& e : entries)
      if (e.name == name) return &e;
    return nullptr;
  }
};

inline const std::vector<std::string>& invariant_names() {
  static const std::vector<std::string> names = {"components", "abelianization", "group",    "colorings(R3)", "colorings(R5)", "colorings(R7)",
                                                 "homs(S3)",   "homs(S4)",       "alexander", "bracket",       "f-polynomial"};
  return names;
}

inline constexpr int kBracketReportLimit = 20;

inline InvariantEntry compute_invariant(const GaussCode& code, const std::string& name) {
  InvariantEntry e;
  e.name = name;
  auto counted = [&e](std::uint64_t v) {
    e.count = v;
    e.text = std::to_string(v);
  };
  auto poly = [&e](LaurentPolynomial p) {
    e.text = p.to_pretty_string();
    e.polynomial = std::move(p);
  };
  auto inapplicable = [&e](std::string why) {
    e.applicable = false;
    e.reason = std::move(why);
  };
  if (name == "components") {
    e.text = std::to_string(code.closed_count()) + " closed, " + std::to_string(code.open_count()) + " open";
  } else if (name == "abelianization") {
    e.text = to_string(abelianization(wirtinger_group(code)));
  } else if (name == "group") {
    e.text = to_string(tietze_simplify(wirtinger_group(code)));
  } else if (name == "colorings(R3)") {
    counted(count_quandle_colorings(code, probes::R3()));
  } else if (name == "colorings(R5)") {
    counted(count_quandle_colorings(code, probes::R5()));
  } else if (name == "colorings(R7)") {
    counted(count_quandle_colorings(code, probes::R7()));
  } else if (name == "homs(S3)") {
    counted(count_group_homs(wirtinger_group(code), probes::S3()));
  } else if (name == "homs(S4)") {
    counted(count_group_homs(wirtinger_group(code), probes::S4()));
  } else if (name == "alexander") {
    if (!is_knot(code))
      inapplicable("needs exactly one closed component");
    else
      poly(alexander_polynomial(code));
  } else if (name == "bracket" || name == "f-polynomial") {
    if (!code.all_closed())
      inapplicable("undefined for open components");
    else if (code.crossing_count() > kBracketReportLimit)
      inapplicable("more than " + std::to_string(kBracketReportLimit) + " crossings");
    else
      poly(name == "bracket" ? kauffman_bracket(code) : f_polynomial(code));
  } else {
    throw DomainError("unknown invariant '" + name + "'");
  }
  return e;
}

inline InvariantReport invariant_report(const GaussCode& code, const std::vector<std::string>& names) {
  InvariantReport r;
  r.code = serialize(canonical_form(code));
  for (const auto& n : names) r.entries.push_back(compute_invariant(code, n));
  return r;
}

}  // namespace vtube
