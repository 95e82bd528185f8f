#pragma once

#include <vector>

#include "vtube/gauss_code.hpp"

namespace vtube {

// A maximal stretch of a component between under-passages (or component
// ends). Interior passages are all over-passages.
struct Arc {
  int component = 0;
  int index_in_component = 0;
  bool capped_start = false;
  bool capped_end = false;
  std::vector<PassageRef> overs;  // in orientation order
  int next = -1;                  // arc entered after this arc's terminal under-passage; -1 at an open end
};

struct CrossingArcs {
  int label = 0;
  int sign = +1;
  int over_arc = 0;
  int over_position = 0;  // index of the over-passage among over_arc's overs
  int under_in = 0;
  int under_out = 0;
  PassageRef over;
  PassageRef under;
};

struct ArcDecomposition {
  std::vector<Arc> arcs;
  std::vector<CrossingArcs> crossings;  // sorted by label
};

// Arcs are numbered component by component. On a closed component with
// under-passages q_0 < ... < q_{u-1}, arc k ends at q_k and arc 0 is the
// wrap-around arc. On an open component arc k ends at q_k and arc u runs to
// the end.
inline ArcDecomposition decompose_arcs(const GaussCode& code) {
  ArcDecomposition out;
  // (component, position) -> (arc, role-specific index)
  std::vector<std::vector<int>> arc_of(static_cast<std::size_t>(code.component_count()));
  std::vector<std::vector<int>> slot_of(static_cast<std::size_t>(code.component_count()));
  // under passage -> (incoming arc, outgoing arc)
  std::vector<std::vector<std::pair<int, int>>> under_arcs(static_cast<std::size_t>(code.component_count()));

  for (int ci = 0; ci < code.component_count(); ++ci) {
    const Component& comp = code.component(ci);
    const int L = comp.size();
    std::vector<int> unders;
    for (int p = 0; p < L; ++p)
      if (comp.passages[static_cast<std::size_t>(p)].role == Role::Under) unders.push_back(p);
    const int u = static_cast<int>(unders.size());
    const int base = static_cast<int>(out.arcs.size());
    const int arc_count = comp.closed() ? (u == 0 ? 1 : u) : u + 1;
    for (int k = 0; k < arc_count; ++k) {
      Arc a;
      a.component = ci;
      a.index_in_component = k;
      out.arcs.push_back(a);
    }
    auto& aof = arc_of[static_cast<std::size_t>(ci)];
    auto& sof = slot_of[static_cast<std::size_t>(ci)];
    auto& uarcs = under_arcs[static_cast<std::size_t>(ci)];
    aof.assign(static_cast<std::size_t>(L), -1);
    sof.assign(static_cast<std::size_t>(L), -1);
    uarcs.assign(static_cast<std::size_t>(L), {-1, -1});

    if (comp.closed()) {
      // Walk once around starting just after the last under-passage, so
      // every arc's overs are visited in orientation order.
      const int start = u == 0 ? 0 : (unders.back() + 1) % L;
      int arc = 0;
      for (int step = 0; step < L; ++step) {
        const int p = (start + step) % L;
        const Passage& ps = comp.passages[static_cast<std::size_t>(p)];
        if (ps.role == Role::Under) {
          const int in = base + arc;
          const int out_arc = base + (arc + 1) % u;
          uarcs[static_cast<std::size_t>(p)] = {in, out_arc};
          out.arcs[static_cast<std::size_t>(in)].next = out_arc;
          arc = (arc + 1) % u;
        } else {
          Arc& a = out.arcs[static_cast<std::size_t>(base + arc)];
          aof[static_cast<std::size_t>(p)] = base + arc;
          sof[static_cast<std::size_t>(p)] = static_cast<int>(a.overs.size());
          a.overs.push_back({ci, p});
        }
      }
      if (u == 0) out.arcs[static_cast<std::size_t>(base)].next = base;
    } else {
      int arc = 0;
      for (int p = 0; p < L; ++p) {
        const Passage& ps = comp.passages[static_cast<std::size_t>(p)];
        if (ps.role == Role::Under) {
          uarcs[static_cast<std::size_t>(p)] = {base + arc, base + arc + 1};
          out.arcs[static_cast<std::size_t>(base + arc)].next = base + arc + 1;
          ++arc;
        } else {
          Arc& a = out.arcs[static_cast<std::size_t>(base + arc)];
          aof[static_cast<std::size_t>(p)] = base + arc;
          sof[static_cast<std::size_t>(p)] = static_cast<int>(a.overs.size());
          a.overs.push_back({ci, p});
        }
      }
      out.arcs[static_cast<std::size_t>(base)].capped_start = true;
      out.arcs[static_cast<std::size_t>(base + u)].capped_end = true;
    }
  }

  for (const auto& x : code.crossings()) {
    CrossingArcs c;
    c.label = x.label;
    c.sign = x.sign;
    c.over = x.over;
    c.under = x.under;
    c.over_arc = arc_of[static_cast<std::size_t>(x.over.component)][static_cast<std::size_t>(x.over.position)];
    c.over_position = slot_of[static_cast<std::size_t>(x.over.component)][static_cast<std::size_t>(x.over.position)];
    auto [in, out_arc] = under_arcs[static_cast<std::size_t>(x.under.component)][static_cast<std::size_t>(x.under.position)];
    c.under_in = in;
    c.under_out = out_arc;
    out.crossings.push_back(c);
  }
  return out;
}

}  // namespace vtube
