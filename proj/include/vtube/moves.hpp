#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "vtube/errors.hpp"
#include "vtube/gauss_code.hpp"

namespace vtube {

enum class MoveFamily : unsigned { R1 = 1, R2 = 2, R3 = 4, OC = 8, EndUnder = 16 };

class MoveSet {
 public:
  constexpr MoveSet() = default;
  constexpr MoveSet(std::initializer_list<MoveFamily> fams) {
    for (auto f : fams) bits_ |= static_cast<unsigned>(f);
  }

  static constexpr MoveSet virtual_moves() { return {MoveFamily::R1, MoveFamily::R2, MoveFamily::R3}; }
  static constexpr MoveSet welded() { return {MoveFamily::R1, MoveFamily::R2, MoveFamily::R3, MoveFamily::OC}; }
  static constexpr MoveSet linkoid() { return {MoveFamily::R1, MoveFamily::R2, MoveFamily::R3, MoveFamily::EndUnder}; }

  constexpr bool contains(MoveFamily f) const noexcept { return (bits_ & static_cast<unsigned>(f)) != 0; }
  constexpr MoveSet with(MoveFamily f) const noexcept {
    MoveSet s = *this;
    s.bits_ |= static_cast<unsigned>(f);
    return s;
  }
  constexpr unsigned bits() const noexcept { return bits_; }

  friend constexpr bool operator==(const MoveSet&, const MoveSet&) = default;

 private:
  unsigned bits_ = 0;
};

enum class MoveKind { R1_add, R1_remove, R2_add, R2_remove, R3, OC_swap, End_add, End_remove };

inline std::string_view to_string(MoveKind k) {
  switch (k) {
    case MoveKind::R1_add: return "R1_add";
    case MoveKind::R1_remove: return "R1_remove";
    case MoveKind::R2_add: return "R2_add";
    case MoveKind::R2_remove: return "R2_remove";
    case MoveKind::R3: return "R3";
    case MoveKind::OC_swap: return "OC_swap";
    case MoveKind::End_add: return "End_add";
    case MoveKind::End_remove: return "End_remove";
  }
  return "?";
}

inline std::optional<MoveKind> move_kind_from_string(std::string_view s) {
  for (auto k : {MoveKind::R1_add, MoveKind::R1_remove, MoveKind::R2_add, MoveKind::R2_remove, MoveKind::R3, MoveKind::OC_swap,
                 MoveKind::End_add, MoveKind::End_remove})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

inline MoveFamily family_of(MoveKind k) {
  switch (k) {
    case MoveKind::R1_add:
    case MoveKind::R1_remove: return MoveFamily::R1;
    case MoveKind::R2_add:
    case MoveKind::R2_remove: return MoveFamily::R2;
    case MoveKind::R3: return MoveFamily::R3;
    case MoveKind::OC_swap: return MoveFamily::OC;
    case MoveKind::End_add:
    case MoveKind::End_remove: return MoveFamily::EndUnder;
  }
  return MoveFamily::R1;
}

inline bool is_additive(MoveKind k) { return k == MoveKind::R1_add || k == MoveKind::R2_add || k == MoveKind::End_add; }

// One local rewrite at a specific locus.
//
// locus, by kind (positions are passage indices; "gap g" means insertion
// before passage g, and g == length appends on an open component):
//   R1_remove  [first, second]            the kink's two adjacent passages
//   R1_add     [gap]
//   R2_remove  [over_1, over_2, under_1, under_2]   two adjacent pairs
//   R2_add     [over gap, under gap]
//   R3         [top, middle, bottom]      start of each adjacent pair
//   OC_swap    [first]                    start of the adjacent over pair
//   End_remove [end passage, its over partner]
//   End_add    [open component end, over gap]
struct MoveInstance {
  MoveKind kind = MoveKind::R1_remove;
  std::vector<PassageRef> locus;
  int sign = +1;              // R1_add, End_add: new crossing; R2_add: first over passage
  bool under_first = false;   // R1_add: U before O; R2_add in a single gap: under pair first
  bool antiparallel = false;  // R2_add: under pair in reversed order
  bool at_tail = false;       // End moves: the last passage rather than the first

  friend bool operator==(const MoveInstance&, const MoveInstance&) = default;
};

namespace detail {

// The valid oriented Reidemeister III configurations. With a = top over
// middle, b = top over bottom, c = middle over bottom, and
//   t = a precedes b on the top strand,
//   m = a precedes c on the middle strand,
//   o = b precedes c on the bottom strand,
// the move is realisable iff sign(b) = sign(a)(-1)^(m+o) and
// sign(c) = sign(a)(-1)^(t+o). The rewrite reverses all three pairs.
inline bool r3_configuration_valid(bool t, bool m, bool o, int sa, int sb, int sc) {
  const int eb = ((m + o) % 2 == 0) ? sa : -sa;
  const int ec = ((t + o) % 2 == 0) ? sa : -sa;
  return sb == eb && sc == ec;
}

struct Edit {
  std::set<PassageRef> deletions;
  std::map<PassageRef, std::vector<Passage>> insertions;  // gap -> passages inserted there, in order
  std::vector<std::pair<PassageRef, PassageRef>> swaps;
};

inline GaussCode rebuild(const GaussCode& code, const Edit& e) {
  std::vector<Component> comps = code.components();
  for (auto [a, b] : e.swaps)
    std::swap(comps[static_cast<std::size_t>(a.component)].passages[static_cast<std::size_t>(a.position)],
              comps[static_cast<std::size_t>(b.component)].passages[static_cast<std::size_t>(b.position)]);
  std::vector<Component> out;
  for (int ci = 0; ci < static_cast<int>(comps.size()); ++ci) {
    const Component& c = comps[static_cast<std::size_t>(ci)];
    Component n{c.kind, {}};
    for (int p = 0; p <= c.size(); ++p) {
      if (auto it = e.insertions.find({ci, p}); it != e.insertions.end())
        n.passages.insert(n.passages.end(), it->second.begin(), it->second.end());
      if (p < c.size() && !e.deletions.count({ci, p})) n.passages.push_back(c.passages[static_cast<std::size_t>(p)]);
    }
    out.push_back(std::move(n));
  }
  return GaussCode(std::move(out));
}

inline std::vector<PassageRef> gaps(const GaussCode& code) {
  std::vector<PassageRef> out;
  for (int ci = 0; ci < code.component_count(); ++ci) {
    const Component& c = code.component(ci);
    const int count = c.closed() ? std::max(c.size(), 1) : c.size() + 1;
    for (int g = 0; g < count; ++g) out.push_back({ci, g});
  }
  return out;
}

inline bool valid_gap(const GaussCode& code, PassageRef g) {
  if (g.component < 0 || g.component >= code.component_count()) return false;
  const Component& c = code.component(g.component);
  const int count = c.closed() ? std::max(c.size(), 1) : c.size() + 1;
  return g.position >= 0 && g.position < count;
}

inline bool valid_ref(const GaussCode& code, PassageRef r) {
  return r.component >= 0 && r.component < code.component_count() && r.position >= 0 &&
         r.position < code.component(r.component).size();
}

inline bool adjacent(const GaussCode& code, PassageRef a, PassageRef b) {
  auto n = code.next(a);
  return n && *n == b;
}

inline void require(bool ok, const MoveInstance& mv, const char* what) {
  if (!ok) throw MoveError(std::string(to_string(mv.kind)) + ": " + what);
}

// Windows of two consecutive passages, each unordered pair listed once
// except on a two-passage closed component, where both readings are real.
inline std::vector<PassageRef> windows(const GaussCode& code) {
  std::vector<PassageRef> out;
  for (int ci = 0; ci < code.component_count(); ++ci) {
    const Component& c = code.component(ci);
    const int count = c.closed() ? (c.size() >= 2 ? c.size() : 0) : std::max(c.size() - 1, 0);
    for (int p = 0; p < count; ++p) out.push_back({ci, p});
  }
  return out;
}

struct R3Roles {
  int a = 0, b = 0, c = 0;
  bool t = false, m = false, o = false;
};

// Identify the triangle roles of three windows, if they form one.
inline std::optional<R3Roles> r3_roles(const GaussCode& code, PassageRef top, PassageRef mid, PassageRef bot) {
  for (auto r : {top, mid, bot})
    if (!valid_ref(code, r) || !code.next(r)) return std::nullopt;
  const PassageRef top2 = *code.next(top), mid2 = *code.next(mid), bot2 = *code.next(bot);
  const Passage &t1 = code.at(top), &t2 = code.at(top2), &m1 = code.at(mid), &m2 = code.at(mid2), &b1 = code.at(bot),
                &b2 = code.at(bot2);
  if (t1.role != Role::Over || t2.role != Role::Over || t1.crossing == t2.crossing) return std::nullopt;
  if (b1.role != Role::Under || b2.role != Role::Under || b1.crossing == b2.crossing) return std::nullopt;
  // middle: one under (crossing a) and one over (crossing c)
  if (m1.role == m2.role) return std::nullopt;
  const Passage& mu = m1.role == Role::Under ? m1 : m2;
  const Passage& mo = m1.role == Role::Over ? m1 : m2;
  R3Roles r;
  r.a = mu.crossing;
  r.c = mo.crossing;
  if (t1.crossing == r.a)
    r.b = t2.crossing;
  else if (t2.crossing == r.a)
    r.b = t1.crossing;
  else
    return std::nullopt;
  if (r.c == r.a || r.c == r.b) return std::nullopt;
  if (!((b1.crossing == r.b && b2.crossing == r.c) || (b1.crossing == r.c && b2.crossing == r.b))) return std::nullopt;
  r.t = t1.crossing == r.a;
  r.m = m1.role == Role::Under;
  r.o = b1.crossing == r.b;
  const int sa = code.crossing(r.a).sign, sb = code.crossing(r.b).sign, sc = code.crossing(r.c).sign;
  if (!r3_configuration_valid(r.t, r.m, r.o, sa, sb, sc)) return std::nullopt;
  return r;
}

}  // namespace detail

// Rewrites code by mv. The result is validated but not canonicalised.
// Throws MoveError when the locus does not match.
inline GaussCode apply(const GaussCode& code, const MoveInstance& mv) {
  using detail::require;
  detail::Edit e;
  const int fresh = code.max_label() + 1;
  switch (mv.kind) {
    case MoveKind::R1_remove: {
      require(mv.locus.size() == 2 && detail::valid_ref(code, mv.locus[0]) && detail::valid_ref(code, mv.locus[1]), mv, "bad locus");
      require(detail::adjacent(code, mv.locus[0], mv.locus[1]), mv, "passages are not adjacent");
      require(code.at(mv.locus[0]).crossing == code.at(mv.locus[1]).crossing, mv, "passages belong to different crossings");
      e.deletions = {mv.locus[0], mv.locus[1]};
      break;
    }
    case MoveKind::R1_add: {
      require(mv.locus.size() == 1 && detail::valid_gap(code, mv.locus[0]), mv, "bad gap");
      require(mv.sign == 1 || mv.sign == -1, mv, "bad sign");
      Passage o{fresh, Role::Over, mv.sign}, u{fresh, Role::Under, mv.sign};
      e.insertions[mv.locus[0]] = mv.under_first ? std::vector<Passage>{u, o} : std::vector<Passage>{o, u};
      break;
    }
    case MoveKind::R2_remove: {
      require(mv.locus.size() == 4, mv, "bad locus");
      for (auto r : mv.locus) require(detail::valid_ref(code, r), mv, "bad locus");
      require(detail::adjacent(code, mv.locus[0], mv.locus[1]) && detail::adjacent(code, mv.locus[2], mv.locus[3]), mv,
              "pairs are not adjacent");
      const Passage &o1 = code.at(mv.locus[0]), &o2 = code.at(mv.locus[1]), &u1 = code.at(mv.locus[2]), &u2 = code.at(mv.locus[3]);
      require(o1.role == Role::Over && o2.role == Role::Over && u1.role == Role::Under && u2.role == Role::Under, mv,
              "roles do not match");
      require(o1.crossing != o2.crossing, mv, "over pair is a single crossing");
      require((u1.crossing == o1.crossing && u2.crossing == o2.crossing) || (u1.crossing == o2.crossing && u2.crossing == o1.crossing),
              mv, "pairs do not share crossings");
      require(o1.sign == -o2.sign, mv, "signs are not opposite");
      e.deletions = {mv.locus.begin(), mv.locus.end()};
      break;
    }
    case MoveKind::R2_add: {
      require(mv.locus.size() == 2 && detail::valid_gap(code, mv.locus[0]) && detail::valid_gap(code, mv.locus[1]), mv, "bad gap");
      require(mv.sign == 1 || mv.sign == -1, mv, "bad sign");
      const int i = fresh, j = fresh + 1;
      std::vector<Passage> overs{{i, Role::Over, mv.sign}, {j, Role::Over, -mv.sign}};
      std::vector<Passage> unders{{i, Role::Under, mv.sign}, {j, Role::Under, -mv.sign}};
      if (mv.antiparallel) std::swap(unders[0], unders[1]);
      if (mv.locus[0] == mv.locus[1]) {
        std::vector<Passage> all = mv.under_first ? unders : overs;
        const auto& rest = mv.under_first ? overs : unders;
        all.insert(all.end(), rest.begin(), rest.end());
        e.insertions[mv.locus[0]] = all;
      } else {
        e.insertions[mv.locus[0]] = overs;
        e.insertions[mv.locus[1]] = unders;
      }
      break;
    }
    case MoveKind::R3: {
      require(mv.locus.size() == 3, mv, "bad locus");
      auto roles = detail::r3_roles(code, mv.locus[0], mv.locus[1], mv.locus[2]);
      require(roles.has_value(), mv, "windows do not form a valid triangle");
      for (auto r : mv.locus) e.swaps.emplace_back(r, *code.next(r));
      break;
    }
    case MoveKind::OC_swap: {
      require(mv.locus.size() == 1 && detail::valid_ref(code, mv.locus[0]) && code.next(mv.locus[0]), mv, "bad locus");
      const PassageRef a = mv.locus[0], b = *code.next(a);
      require(code.at(a).role == Role::Over && code.at(b).role == Role::Over, mv, "both passages must be over-passages");
      require(code.at(a).crossing != code.at(b).crossing, mv, "passages belong to one crossing");
      e.swaps.emplace_back(a, b);
      break;
    }
    case MoveKind::End_remove: {
      require(mv.locus.size() == 2 && detail::valid_ref(code, mv.locus[0]) && detail::valid_ref(code, mv.locus[1]), mv, "bad locus");
      const Component& c = code.component(mv.locus[0].component);
      require(!c.closed(), mv, "component is closed");
      require(mv.locus[0].position == (mv.at_tail ? c.size() - 1 : 0), mv, "passage is not at the end");
      const Passage& u = code.at(mv.locus[0]);
      require(u.role == Role::Under, mv, "end passage is not an under-passage");
      require(code.crossing(u.crossing).over == mv.locus[1], mv, "over partner does not match");
      e.deletions = {mv.locus[0], mv.locus[1]};
      break;
    }
    case MoveKind::End_add: {
      require(mv.locus.size() == 2 && detail::valid_gap(code, mv.locus[1]), mv, "bad locus");
      require(mv.locus[0].component >= 0 && mv.locus[0].component < code.component_count(), mv, "bad component");
      const Component& c = code.component(mv.locus[0].component);
      require(!c.closed(), mv, "component is closed");
      require(mv.locus[0].position == (mv.at_tail ? c.size() : 0), mv, "locus is not an end");
      require(mv.sign == 1 || mv.sign == -1, mv, "bad sign");
      const Passage o{fresh, Role::Over, mv.sign}, u{fresh, Role::Under, mv.sign};
      e.insertions[mv.locus[1]].push_back(o);
      auto& end_slot = e.insertions[mv.locus[0]];
      if (mv.at_tail)
        end_slot.push_back(u);
      else
        end_slot.insert(end_slot.begin(), u);
      break;
    }
  }
  return detail::rebuild(code, e);
}

struct EnumerateOptions {
  bool additive = true;
};

// Every applicable instance of the families in set, in a fixed order.
inline std::vector<MoveInstance> enumerate_moves(const GaussCode& code, MoveSet set, EnumerateOptions opts = {}) {
  std::vector<MoveInstance> out;
  const auto wins = detail::windows(code);

  if (set.contains(MoveFamily::R1)) {
    for (const auto& x : code.crossings()) {
      if (detail::adjacent(code, x.over, x.under))
        out.push_back({MoveKind::R1_remove, {x.over, x.under}});
      else if (detail::adjacent(code, x.under, x.over))
        out.push_back({MoveKind::R1_remove, {x.under, x.over}});
    }
  }

  if (set.contains(MoveFamily::R2)) {
    std::set<std::pair<int, int>> seen;
    for (auto w : wins) {
      const PassageRef w2 = *code.next(w);
      const Passage &p = code.at(w), &q = code.at(w2);
      if (p.role != Role::Over || q.role != Role::Over || p.crossing == q.crossing || p.sign != -q.sign) continue;
      const PassageRef ui = code.crossing(p.crossing).under, uj = code.crossing(q.crossing).under;
      std::vector<PassageRef> locus;
      if (detail::adjacent(code, ui, uj))
        locus = {w, w2, ui, uj};
      else if (detail::adjacent(code, uj, ui))
        locus = {w, w2, uj, ui};
      else
        continue;
      if (!seen.emplace(std::min(p.crossing, q.crossing), std::max(p.crossing, q.crossing)).second) continue;
      out.push_back({MoveKind::R2_remove, locus});
    }
  }

  if (set.contains(MoveFamily::R3)) {
    std::set<std::vector<PassageRef>> seen;
    for (auto top : wins) {
      const PassageRef top2 = *code.next(top);
      const Passage &t1 = code.at(top), &t2 = code.at(top2);
      if (t1.role != Role::Over || t2.role != Role::Over || t1.crossing == t2.crossing) continue;
      for (int a : {t1.crossing, t2.crossing}) {
        const PassageRef ua = code.crossing(a).under;
        std::vector<PassageRef> mids;
        if (auto pv = code.prev(ua); pv && code.at(*pv).role == Role::Over) mids.push_back(*pv);
        if (auto nx = code.next(ua); nx && code.at(*nx).role == Role::Over) mids.push_back(ua);
        for (auto mid : mids) {
          const PassageRef mid2 = *code.next(mid);
          const int c = (mid == ua) ? code.at(mid2).crossing : code.at(mid).crossing;
          const int b = a == t1.crossing ? t2.crossing : t1.crossing;
          if (c == a || c == b) continue;
          const PassageRef ub = code.crossing(b).under, uc = code.crossing(c).under;
          std::vector<PassageRef> bots;
          if (detail::adjacent(code, ub, uc)) bots.push_back(ub);
          if (detail::adjacent(code, uc, ub)) bots.push_back(uc);
          for (auto bot : bots) {
            if (!detail::r3_roles(code, top, mid, bot)) continue;
            std::vector<PassageRef> key{top, top2, mid, mid2, bot, *code.next(bot)};
            std::sort(key.begin(), key.end());
            if (!seen.insert(key).second) continue;
            out.push_back({MoveKind::R3, {top, mid, bot}});
          }
        }
      }
    }
  }

  if (set.contains(MoveFamily::OC)) {
    for (auto w : wins) {
      const Component& c = code.component(w.component);
      if (c.closed() && c.size() == 2 && w.position == 1) continue;
      const PassageRef w2 = *code.next(w);
      const Passage &p = code.at(w), &q = code.at(w2);
      if (p.role == Role::Over && q.role == Role::Over && p.crossing != q.crossing) out.push_back({MoveKind::OC_swap, {w}});
    }
  }

  if (set.contains(MoveFamily::EndUnder)) {
    for (int ci = 0; ci < code.component_count(); ++ci) {
      const Component& c = code.component(ci);
      if (c.closed() || c.size() == 0) continue;
      const Passage& first = c.passages.front();
      if (first.role == Role::Under)
        out.push_back({MoveKind::End_remove, {{ci, 0}, code.crossing(first.crossing).over}, first.sign, false, false, false});
      const Passage& last = c.passages.back();
      if (c.size() > 1 && last.role == Role::Under)
        out.push_back({MoveKind::End_remove, {{ci, c.size() - 1}, code.crossing(last.crossing).over}, last.sign, false, false, true});
    }
  }

  if (!opts.additive) return out;
  const auto gaps = detail::gaps(code);

  if (set.contains(MoveFamily::R1))
    for (auto g : gaps)
      for (bool under_first : {false, true})
        for (int s : {1, -1}) out.push_back({MoveKind::R1_add, {g}, s, under_first, false, false});

  if (set.contains(MoveFamily::R2))
    for (auto go : gaps)
      for (auto gu : gaps)
        for (bool anti : {false, true})
          for (int s : {1, -1}) {
            out.push_back({MoveKind::R2_add, {go, gu}, s, false, anti, false});
            if (go == gu) out.push_back({MoveKind::R2_add, {go, gu}, s, true, anti, false});
          }

  if (set.contains(MoveFamily::EndUnder))
    for (int ci = 0; ci < code.component_count(); ++ci) {
      const Component& c = code.component(ci);
      if (c.closed()) continue;
      for (bool tail : {false, true})
        for (auto g : gaps)
          for (int s : {1, -1}) out.push_back({MoveKind::End_add, {{ci, tail ? c.size() : 0}, g}, s, false, false, tail});
    }

  return out;
}

// Crossing count change of a move kind.
inline int crossing_delta(MoveKind k) {
  switch (k) {
    case MoveKind::R1_add:
    case MoveKind::End_add: return 1;
    case MoveKind::R1_remove:
    case MoveKind::End_remove: return -1;
    case MoveKind::R2_add: return 2;
    case MoveKind::R2_remove: return -2;
    default: return 0;
  }
}

inline MoveKind inverse_kind(MoveKind k) {
  switch (k) {
    case MoveKind::R1_add: return MoveKind::R1_remove;
    case MoveKind::R1_remove: return MoveKind::R1_add;
    case MoveKind::R2_add: return MoveKind::R2_remove;
    case MoveKind::R2_remove: return MoveKind::R2_add;
    case MoveKind::End_add: return MoveKind::End_remove;
    case MoveKind::End_remove: return MoveKind::End_add;
    default: return k;
  }
}

}  // namespace vtube
