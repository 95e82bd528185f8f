#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "vtube/arcs.hpp"
#include "vtube/errors.hpp"
#include "vtube/gauss_code.hpp"
#include "vtube/group.hpp"
#include "vtube/wirtinger.hpp"

namespace vtube {

// arc x D^{n-m+1}. next is the tube entered through the terminal fiber,
// -1 when that end is capped.
struct Tube {
  int component = 0;
  int index_in_component = 0;
  int next = -1;
  int length = 0;  // number of over-fibers along the tube
};

enum class TubeEnd { Start, End };

struct Cap {
  int tube = 0;
  TubeEnd end = TubeEnd::Start;

  friend bool operator==(const Cap&, const Cap&) = default;
};

// The terminal fiber of under_tube sits inside over_tube at `position`.
// under_base / over_base record the passages of the source code.
struct Identification {
  int crossing = 0;
  int under_tube = 0;
  int over_tube = 0;
  int position = 0;
  int sign = +1;
  PassageRef under_base;
  PassageRef over_base;
};

struct TubeComplex {
  DimensionMeta meta;
  std::vector<Tube> tubes;
  std::vector<Cap> caps;
  std::vector<Identification> identifications;  // by crossing label
};

inline void validate(const TubeComplex& t) {
  const int nt = static_cast<int>(t.tubes.size());
  auto tube_ok = [nt](int i) { return i >= 0 && i < nt; };
  for (const auto& tb : t.tubes)
    if (tb.next != -1 && !tube_ok(tb.next)) throw DomainError("tube successor out of range");
  for (const auto& c : t.caps)
    if (!tube_ok(c.tube)) throw DomainError("cap on a missing tube");
  std::set<std::pair<int, int>> used;
  for (const auto& id : t.identifications) {
    if (!tube_ok(id.under_tube) || !tube_ok(id.over_tube)) throw DomainError("identification references a missing tube");
    const auto& over = t.tubes[static_cast<std::size_t>(id.over_tube)];
    if (id.position < 0 || id.position >= over.length) throw DomainError("identification position out of range");
    if (!used.insert({id.over_tube, id.position}).second) throw DomainError("two identifications share a position");
    if (id.sign != 1 && id.sign != -1) throw DomainError("identification sign must be +1 or -1");
  }
}

// Tubes follow the arcs of the code; one identification per crossing.
inline TubeComplex tube(const GaussCode& code, int n) {
  TubeComplex t;
  t.meta = DimensionMeta(1, n);
  const ArcDecomposition d = decompose_arcs(code);
  for (std::size_t i = 0; i < d.arcs.size(); ++i) {
    const Arc& a = d.arcs[i];
    t.tubes.push_back({a.component, a.index_in_component, a.next, static_cast<int>(a.overs.size())});
    if (a.capped_start) t.caps.push_back({static_cast<int>(i), TubeEnd::Start});
    if (a.capped_end) t.caps.push_back({static_cast<int>(i), TubeEnd::End});
  }
  for (const auto& c : d.crossings) t.identifications.push_back({c.label, c.under_in, c.over_arc, c.over_position, c.sign, c.under, c.over});
  return t;
}

// Van Kampen reading of the complex: one generator per tube; passing
// through an over-tube conjugates the under-tube's generator.
inline GroupPresentation tube_presentation(const TubeComplex& t) {
  validate(t);
  std::vector<Word> rels;
  for (const auto& id : t.identifications) {
    const int out = t.tubes[static_cast<std::size_t>(id.under_tube)].next;
    if (out < 0) throw DomainError("identification on a capped tube end");
    rels.push_back(conjugation_relator(id.over_tube + 1, id.under_tube + 1, out + 1, id.sign));
  }
  return GroupPresentation(static_cast<int>(t.tubes.size()), std::move(rels));
}

// Each tube is contractible; each junction between consecutive tubes and
// each identification glues along a disk.
inline int euler_characteristic(const TubeComplex& t) {
  validate(t);
  int chi = static_cast<int>(t.tubes.size());
  for (const auto& tb : t.tubes)
    if (tb.next >= 0) --chi;
  return chi - static_cast<int>(t.identifications.size());
}

}  // namespace vtube
