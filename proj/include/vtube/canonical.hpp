#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "vtube/gauss_code.hpp"

namespace vtube {

namespace detail {

struct CanonicalState {
  std::vector<bool> remaining;
  std::vector<int> relabel;  // 0 = not yet labelled
  int next_label = 1;
  std::vector<std::pair<int, int>> picks;  // (component, rotation)
};

inline std::vector<Passage> rotated(const Component& c, int rotation) {
  std::vector<Passage> out;
  out.reserve(c.passages.size());
  const int n = c.size();
  for (int i = 0; i < n; ++i) out.push_back(c.passages[static_cast<std::size_t>((rotation + i) % n)]);
  return out;
}

}  // namespace detail

// Least representative under rotation of closed components, reordering of
// components and first-appearance relabelling, in GaussCode::sort_key order.
// Components are fixed one at a time; the lexicographic order makes the
// choice for the first slot independent of later slots, so only tied
// partial states are carried forward.
inline GaussCode canonical_form(const GaussCode& code) {
  const int ncomp = code.component_count();
  if (ncomp == 0) return code;
  const std::size_t label_space = static_cast<std::size_t>(code.max_label()) + 1;

  std::vector<detail::CanonicalState> states(1);
  states[0].remaining.assign(static_cast<std::size_t>(ncomp), true);
  states[0].relabel.assign(label_space, 0);

  for (int slot = 0; slot < ncomp; ++slot) {
    std::vector<int> best;
    std::vector<detail::CanonicalState> next;
    std::map<std::pair<std::vector<bool>, std::vector<int>>, bool> seen;
    for (const auto& st : states) {
      for (int ci = 0; ci < ncomp; ++ci) {
        if (!st.remaining[static_cast<std::size_t>(ci)]) continue;
        const Component& comp = code.component(ci);
        const int rotations = (comp.closed() && comp.size() > 0) ? comp.size() : 1;
        for (int r = 0; r < rotations; ++r) {
          detail::CanonicalState cand = st;
          std::vector<int> seg;
          seg.reserve(static_cast<std::size_t>(comp.size()) + 2);
          seg.push_back(static_cast<int>(comp.kind));
          seg.push_back(comp.size());
          for (int i = 0; i < comp.size(); ++i) {
            const Passage& p = comp.passages[static_cast<std::size_t>((r + i) % comp.size())];
            int& lab = cand.relabel[static_cast<std::size_t>(p.crossing)];
            if (lab == 0) lab = cand.next_label++;
            seg.push_back(GaussCode::encode(p, lab));
            if (!best.empty() && static_cast<int>(seg.size()) <= static_cast<int>(best.size()) &&
                std::lexicographical_compare(best.begin(), best.begin() + static_cast<long>(seg.size()), seg.begin(), seg.end()))
              break;  // already worse than the best prefix
          }
          if (static_cast<int>(seg.size()) != comp.size() + 2) continue;
          if (best.empty() || seg < best) {
            best = seg;
            next.clear();
            seen.clear();
          } else if (seg != best) {
            continue;
          }
          cand.remaining[static_cast<std::size_t>(ci)] = false;
          cand.picks.emplace_back(ci, r);
          auto key = std::make_pair(cand.remaining, cand.relabel);
          if (seen.emplace(std::move(key), true).second) next.push_back(std::move(cand));
        }
      }
    }
    states = std::move(next);
  }

  const detail::CanonicalState& winner = states.front();
  std::vector<Component> comps;
  comps.reserve(static_cast<std::size_t>(ncomp));
  for (auto [ci, r] : winner.picks) {
    const Component& src = code.component(ci);
    Component c{src.kind, src.closed() && src.size() > 0 ? detail::rotated(src, r) : src.passages};
    for (auto& p : c.passages) p.crossing = winner.relabel[static_cast<std::size_t>(p.crossing)];
    comps.push_back(std::move(c));
  }
  return GaussCode(std::move(comps));
}

inline bool is_canonical(const GaussCode& code) { return canonical_form(code) == code; }

}  // namespace vtube
