#pragma once

#include <cstdint>
#include <vector>

#include "vtube/arcs.hpp"
#include "vtube/gauss_code.hpp"
#include "vtube/group.hpp"
#include "vtube/quandle.hpp"

namespace vtube {

// Relator for u_out = o^e u_in o^-e, written o^e u_in o^-e u_out^-1.
inline Word conjugation_relator(int over, int under_in, int under_out, int sign) {
  return {sign * over, under_in, -sign * over, -under_out};
}

// Upper Wirtinger presentation: one generator per arc, one relator per
// crossing in label order. Open-component ends leave their arcs free.
inline GroupPresentation wirtinger_group(const GaussCode& code) {
  const ArcDecomposition d = decompose_arcs(code);
  std::vector<Word> rels;
  rels.reserve(d.crossings.size());
  for (const auto& c : d.crossings) rels.push_back(conjugation_relator(c.over_arc + 1, c.under_in + 1, c.under_out + 1, c.sign));
  return GroupPresentation(static_cast<int>(d.arcs.size()), std::move(rels));
}

// u_out = u_in ▷^e o. A negative crossing is recorded as u_out ▷ o = u_in.
inline QuandlePresentation knot_quandle(const GaussCode& code) {
  const ArcDecomposition d = decompose_arcs(code);
  std::vector<QuandleRelation> rels;
  for (const auto& c : d.crossings) {
    if (c.sign > 0)
      rels.push_back({c.under_in + 1, c.over_arc + 1, c.under_out + 1});
    else
      rels.push_back({c.under_out + 1, c.over_arc + 1, c.under_in + 1});
  }
  return QuandlePresentation(static_cast<int>(d.arcs.size()), std::move(rels));
}

inline std::uint64_t count_quandle_colorings(const GaussCode& code, const FiniteQuandle& q) {
  return count_colorings(knot_quandle(code), q);
}

}  // namespace vtube
