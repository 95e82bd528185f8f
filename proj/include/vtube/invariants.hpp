#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vtube/alexander.hpp"
#include "vtube/bracket.hpp"
#include "vtube/gauss_code.hpp"
#include "vtube/group.hpp"
#include "vtube/moves.hpp"
#include "vtube/quandle.hpp"
#include "vtube/wirtinger.hpp"

namespace vtube {

// The finite probes shipped with the library.
namespace probes {

inline const FiniteQuandle& R3() {
  static const FiniteQuandle q = dihedral_quandle(3);
  return q;
}
inline const FiniteQuandle& R5() {
  static const FiniteQuandle q = dihedral_quandle(5);
  return q;
}
inline const FiniteQuandle& R7() {
  static const FiniteQuandle q = dihedral_quandle(7);
  return q;
}
inline const FiniteGroup& S3() {
  static const FiniteGroup g = symmetric_group(3);
  return g;
}
inline const FiniteGroup& S4() {
  static const FiniteGroup g = symmetric_group(4);
  return g;
}

}  // namespace probes

inline bool is_knot(const GaussCode& code) { return code.component_count() == 1 && code.all_closed(); }

struct InvariantWitness {
  std::string name;
  std::string source_value;
  std::string target_value;
};

namespace detail {

struct CheapInvariant {
  std::string name;
  std::function<bool(const GaussCode&)> applicable;
  std::function<std::string(const GaussCode&)> value;
};

inline std::vector<CheapInvariant> cheap_invariants(MoveSet set) {
  std::vector<CheapInvariant> out;
  auto always = [](const GaussCode&) { return true; };
  out.push_back({"components", always, [](const GaussCode& c) {
                   return std::to_string(c.closed_count()) + " closed, " + std::to_string(c.open_count()) + " open";
                 }});
  out.push_back({"abelianization", always, [](const GaussCode& c) { return to_string(abelianization(wirtinger_group(c))); }});
  out.push_back({"colorings(R3)", always,
                 [](const GaussCode& c) { return std::to_string(count_quandle_colorings(c, probes::R3())); }});
  out.push_back({"colorings(R5)", always,
                 [](const GaussCode& c) { return std::to_string(count_quandle_colorings(c, probes::R5())); }});
  out.push_back({"homs(S3)", always, [](const GaussCode& c) { return std::to_string(count_group_homs(wirtinger_group(c), probes::S3())); }});
  out.push_back({"alexander", [](const GaussCode& c) { return is_knot(c) && c.crossing_count() <= 40; },
                 [](const GaussCode& c) { return alexander_polynomial(c).to_pretty_string(); }});
  // The bracket is a virtual invariant only; welded and end moves break it.
  if (!set.contains(MoveFamily::OC))
    out.push_back({"f-polynomial", [](const GaussCode& c) { return c.all_closed() && c.crossing_count() <= 16; },
                   [](const GaussCode& c) { return f_polynomial(c).to_pretty_string(); }});
  return out;
}

}  // namespace detail

// First invariant, valid for the move set, on which the two codes differ.
inline std::optional<InvariantWitness> distinguishing_invariant(const GaussCode& a, const GaussCode& b, MoveSet set) {
  for (const auto& inv : detail::cheap_invariants(set)) {
    if (!inv.applicable(a) || !inv.applicable(b)) continue;
    std::string va = inv.value(a), vb = inv.value(b);
    if (va != vb) return InvariantWitness{inv.name, va, vb};
  }
  return std::nullopt;
}

}  // namespace vtube
