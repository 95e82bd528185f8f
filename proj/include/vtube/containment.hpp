#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "vtube/errors.hpp"
#include "vtube/gauss_code.hpp"
#include "vtube/tube.hpp"

namespace vtube {

// Pairs a vertical double's K-copy with its mirror K*. For each original
// crossing c: c on K, c* on K*, and the two K-over-K* crossings (x, y)
// created next to them.
struct StackPairing {
  std::vector<std::pair<int, int>> components;  // (K component, K* component)
  std::vector<std::pair<int, int>> crossings;   // (c, c*)
  std::vector<std::pair<int, int>> witnesses;   // (x, y), aligned with crossings
  std::vector<std::pair<PassageRef, PassageRef>> passages;  // passage of c on K -> passage of c* on K*
};

// A disk fiber of some tube, marked because it takes part in a containment.
struct Fiber {
  int tube = 0;
  int component = 0;
  PassageRef base;
  int orientation = +1;
  int crossing = 0;
};

struct Containment {
  int inner = 0;  // fiber index
  int outer = 0;
  int crossing = 0;
};

struct ContainmentDiagram {
  std::vector<Fiber> fibers;
  std::vector<Containment> containments;
  std::vector<int> component_lengths;  // passages per component of the source
  std::optional<StackPairing> pairing;
};

inline void validate(const ContainmentDiagram& d) {
  const int nf = static_cast<int>(d.fibers.size());
  for (const auto& c : d.containments) {
    if (c.inner < 0 || c.inner >= nf || c.outer < 0 || c.outer >= nf) throw DomainError("containment references a missing fiber");
    if (c.inner == c.outer) throw DomainError("a fiber cannot contain itself");
    if (d.fibers[static_cast<std::size_t>(c.inner)].orientation != d.fibers[static_cast<std::size_t>(c.outer)].orientation)
      throw DomainError("contained fibers must have agreeing orientations");
  }
}

// Under-fiber: the terminal fiber of the under-tube. Over-fiber: the fiber
// of the over-tube it sits in. Both carry the crossing sign as orientation.
inline ContainmentDiagram containment_diagram(const TubeComplex& t) {
  validate(t);
  ContainmentDiagram d;
  int comps = 0;
  for (const auto& tb : t.tubes) comps = std::max(comps, tb.component + 1);
  d.component_lengths.assign(static_cast<std::size_t>(comps), 0);
  for (const auto& tb : t.tubes) d.component_lengths[static_cast<std::size_t>(tb.component)] += tb.length + (tb.next >= 0 ? 1 : 0);
  for (const auto& id : t.identifications) {
    const int inner = static_cast<int>(d.fibers.size());
    d.fibers.push_back({id.under_tube, t.tubes[static_cast<std::size_t>(id.under_tube)].component, id.under_base, id.sign, id.crossing});
    d.fibers.push_back({id.over_tube, t.tubes[static_cast<std::size_t>(id.over_tube)].component, id.over_base, id.sign, id.crossing});
    d.containments.push_back({inner, inner + 1, id.crossing});
  }
  return d;
}

inline ContainmentDiagram containment_diagram(const TubeComplex& t, StackPairing pairing) {
  ContainmentDiagram d = containment_diagram(t);
  d.pairing = std::move(pairing);
  return d;
}

// For every fiber, the fibers inside it (transitively) must be pairwise
// nested. A cyclic containment is never in tube form.
inline bool is_virtual_tube_form(const ContainmentDiagram& d) {
  validate(d);
  const std::size_t n = d.fibers.size();
  std::vector<std::vector<bool>> inside(n, std::vector<bool>(n, false));  // inside[a][b]: a within b
  for (const auto& c : d.containments) inside[static_cast<std::size_t>(c.inner)][static_cast<std::size_t>(c.outer)] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (inside[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (inside[k][j]) inside[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    if (inside[i][i]) return false;
  for (std::size_t f = 0; f < n; ++f)
    for (std::size_t a = 0; a < n; ++a) {
      if (!inside[a][f]) continue;
      for (std::size_t b = a + 1; b < n; ++b)
        if (inside[b][f] && !inside[a][b] && !inside[b][a]) return false;
    }
  return true;
}

namespace detail {

inline bool adjacent_on(const ContainmentDiagram& d, PassageRef a, PassageRef b) {
  if (a.component != b.component) return false;
  const int len = d.component_lengths.at(static_cast<std::size_t>(a.component));
  const int diff = ((a.position - b.position) % len + len) % len;
  return diff == 1 || diff == len - 1;
}

}  // namespace detail

// K lies entirely above K*; every paired self-crossing reverses its
// containment on the mirror side; the K-over-K* witnesses sit next to the
// paired passages; and the pairing accounts for every containment.
inline bool is_stack_form(const ContainmentDiagram& d) {
  if (!d.pairing) throw DomainError("stack form needs a pairing");
  validate(d);
  const StackPairing& p = *d.pairing;
  if (p.crossings.size() != p.witnesses.size()) return false;

  std::map<int, int> upper;  // K component -> K* component
  std::set<int> lower;
  for (auto [k, ks] : p.components) {
    if (!upper.emplace(k, ks).second || !lower.insert(ks).second || upper.count(ks) || lower.count(k)) return false;
  }
  if (upper.size() + lower.size() != d.component_lengths.size()) return false;

  std::map<int, const Containment*> at;  // crossing -> containment
  for (const auto& c : d.containments) at[c.crossing] = &c;
  const auto& fib = [&d](int i) -> const Fiber& { return d.fibers[static_cast<std::size_t>(i)]; };

  for (const auto& c : d.containments)
    if (upper.count(fib(c.inner).component) && lower.count(fib(c.outer).component)) return false;

  std::map<PassageRef, PassageRef> mirror;
  for (auto [a, b] : p.passages) {
    auto it = upper.find(a.component);
    if (it == upper.end() || it->second != b.component || !mirror.emplace(a, b).second) return false;
  }

  std::set<int> accounted;
  for (std::size_t i = 0; i < p.crossings.size(); ++i) {
    auto [c, cs] = p.crossings[i];
    auto [x, y] = p.witnesses[i];
    for (int l : {c, cs, x, y})
      if (!at.count(l) || !accounted.insert(l).second) return false;
    const Fiber& c_in = fib(at[c]->inner);
    const Fiber& c_out = fib(at[c]->outer);
    const Fiber& s_in = fib(at[cs]->inner);
    const Fiber& s_out = fib(at[cs]->outer);
    if (!upper.count(c_in.component) || !upper.count(c_out.component)) return false;
    auto mo = mirror.find(c_out.base), mi = mirror.find(c_in.base);
    if (mo == mirror.end() || mi == mirror.end()) return false;
    // c: u inside o. c*: mirror(o) inside mirror(u).
    if (!(s_in.base == mo->second) || !(s_out.base == mi->second)) return false;
    const Fiber& x_in = fib(at[x]->inner);
    const Fiber& x_out = fib(at[x]->outer);
    const Fiber& y_in = fib(at[y]->inner);
    const Fiber& y_out = fib(at[y]->outer);
    if (!detail::adjacent_on(d, x_out.base, c_out.base) || !detail::adjacent_on(d, x_in.base, s_out.base)) return false;
    if (!detail::adjacent_on(d, y_out.base, c_in.base) || !detail::adjacent_on(d, y_in.base, s_in.base)) return false;
  }
  return accounted.size() == d.containments.size();
}

}  // namespace vtube
