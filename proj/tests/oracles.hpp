#pragma once

// Slow, independent reference computations. None of them call the library
// routine they are used to check.

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "vtube/io.hpp"
#include "vtube/vtube.hpp"

namespace oracle {

using namespace vtube;

inline std::vector<GaussCode> corpus() {
  std::ifstream in(VTUBE_CORPUS);
  std::vector<GaussCode> out;
  for (const auto& l : read_corpus(in))
    if (l.code) out.push_back(*l.code);
  return out;
}

inline std::vector<GaussCode> corpus_knots() {
  std::vector<GaussCode> out;
  for (auto& c : corpus())
    if (c.all_closed()) out.push_back(c);
  return out;
}

// Planar diagrams only: all braid closures in the corpus.
inline bool is_classical(const GaussCode& code);

// ---------------------------------------------------------------- canonical

using Key = std::vector<int>;

inline Key flat_key(const std::vector<Component>& comps) {
  std::map<int, int> relabel;
  Key k;
  for (const auto& c : comps) {
    k.push_back(c.kind == ComponentKind::Closed ? 0 : 1);
    k.push_back(static_cast<int>(c.passages.size()));
    for (const auto& p : c.passages) {
      auto it = relabel.emplace(p.crossing, static_cast<int>(relabel.size()) + 1).first;
      k.push_back(it->second * 4 + (p.role == Role::Under ? 2 : 0) + (p.sign < 0 ? 1 : 0));
    }
  }
  return k;
}

inline std::vector<Component> relabeled(const std::vector<Component>& comps) {
  std::map<int, int> relabel;
  std::vector<Component> out = comps;
  for (auto& c : out)
    for (auto& p : c.passages) p.crossing = relabel.emplace(p.crossing, static_cast<int>(relabel.size()) + 1).first->second;
  return out;
}

// Minimum over every component order and every rotation of every closed
// component.
inline GaussCode brute_canonical(const GaussCode& code) {
  std::vector<int> order(static_cast<std::size_t>(code.component_count()));
  std::iota(order.begin(), order.end(), 0);
  Key best;
  std::vector<Component> best_comps;
  bool have = false;
  do {
    std::vector<int> rot(order.size(), 0);
    while (true) {
      std::vector<Component> comps;
      for (std::size_t i = 0; i < order.size(); ++i) {
        Component c = code.component(order[i]);
        std::rotate(c.passages.begin(), c.passages.begin() + rot[i], c.passages.end());
        comps.push_back(std::move(c));
      }
      Key k = flat_key(comps);
      if (!have || k < best) {
        best = k;
        best_comps = comps;
        have = true;
      }
      std::size_t i = 0;
      for (; i < order.size(); ++i) {
        const Component& c = code.component(order[i]);
        const int period = c.kind == ComponentKind::Closed ? std::max(1, c.size()) : 1;
        if (++rot[i] < period) break;
        rot[i] = 0;
      }
      if (i == order.size()) break;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return GaussCode(relabeled(best_comps));
}

// ---------------------------------------------------------------- arcs

struct OracleArcs {
  int count = 0;
  struct Rel {
    int over, in, out, sign;
  };
  std::vector<Rel> rels;  // by crossing label
};

// Arc k of a component holds the passages preceded by k unders; on a closed
// component the last stretch wraps into arc 0.
inline OracleArcs oracle_arcs(const GaussCode& code) {
  OracleArcs a;
  std::map<int, int> over_arc;
  std::map<int, std::pair<int, int>> under_arcs;
  std::map<int, int> sign;
  for (const auto& comp : code.components()) {
    int u = 0;
    for (const auto& p : comp.passages) u += p.role == Role::Under;
    const bool closed = comp.kind == ComponentKind::Closed;
    const int arcs = closed ? std::max(u, 1) : u + 1;
    auto id = [&](int k) { return a.count + (closed && u > 0 ? k % u : k); };
    int seen = 0;
    for (const auto& p : comp.passages) {
      sign[p.crossing] = p.sign;
      if (p.role == Role::Over) {
        over_arc[p.crossing] = id(seen);
      } else {
        under_arcs[p.crossing] = {id(seen), id(seen + 1)};
        ++seen;
      }
    }
    a.count += arcs;
  }
  for (auto [label, s] : sign) a.rels.push_back({over_arc[label], under_arcs[label].first, under_arcs[label].second, s});
  return a;
}

// ---------------------------------------------------------------- counting

// Every labeling of arcs by dihedral colors mod n, filtered by the crossing
// rule 2*over - in = out.
inline std::uint64_t dihedral_colorings(const GaussCode& code, int n) {
  const OracleArcs a = oracle_arcs(code);
  std::vector<int> col(static_cast<std::size_t>(a.count), 0);
  std::uint64_t total = 0;
  while (true) {
    bool ok = true;
    for (const auto& r : a.rels)
      if (((2 * col[static_cast<std::size_t>(r.over)] - col[static_cast<std::size_t>(r.in)]) % n + n) % n != col[static_cast<std::size_t>(r.out)]) {
        ok = false;
        break;
      }
    total += ok;
    std::size_t i = 0;
    for (; i < col.size(); ++i) {
      if (++col[i] < n) break;
      col[i] = 0;
    }
    if (i == col.size()) break;
  }
  return total;
}

using Perm = std::array<int, 3>;

inline Perm compose(const Perm& p, const Perm& q) { return {p[static_cast<std::size_t>(q[0])], p[static_cast<std::size_t>(q[1])], p[static_cast<std::size_t>(q[2])]}; }
inline Perm invert(const Perm& p) {
  Perm r{};
  for (int i = 0; i < 3; ++i) r[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])] = i;
  return r;
}

// Assignments of permutations of three letters to arcs satisfying
// out = over^s in over^-s at every crossing.
inline std::uint64_t s3_homs(const GaussCode& code) {
  std::vector<Perm> all;
  Perm p{0, 1, 2};
  do all.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const OracleArcs a = oracle_arcs(code);
  std::vector<int> pick(static_cast<std::size_t>(a.count), 0);
  std::uint64_t total = 0;
  while (true) {
    bool ok = true;
    for (const auto& r : a.rels) {
      Perm o = all[static_cast<std::size_t>(pick[static_cast<std::size_t>(r.over)])];
      if (r.sign < 0) o = invert(o);
      const Perm lhs = compose(compose(o, all[static_cast<std::size_t>(pick[static_cast<std::size_t>(r.in)])]), invert(o));
      if (lhs != all[static_cast<std::size_t>(pick[static_cast<std::size_t>(r.out)])]) {
        ok = false;
        break;
      }
    }
    total += ok;
    std::size_t i = 0;
    for (; i < pick.size(); ++i) {
      if (++pick[i] < 6) break;
      pick[i] = 0;
    }
    if (i == pick.size()) break;
  }
  return total;
}

// ---------------------------------------------------------------- Alexander

// Crossing rows of the Alexander matrix (multiplied through by t at
// negative crossings): over 1-t / t-1, incoming t / 1, outgoing -1 / -t.
inline std::vector<std::vector<LaurentPolynomial>> crossing_matrix(const GaussCode& code) {
  const OracleArcs a = oracle_arcs(code);
  const auto t = LaurentPolynomial::monomial(1, 1, "t");
  const auto one = LaurentPolynomial::constant(1, "t");
  std::vector<std::vector<LaurentPolynomial>> m(a.rels.size(), std::vector<LaurentPolynomial>(static_cast<std::size_t>(a.count), LaurentPolynomial("t")));
  for (std::size_t i = 0; i < a.rels.size(); ++i) {
    const auto& r = a.rels[i];
    auto& row = m[i];
    if (r.sign > 0) {
      row[static_cast<std::size_t>(r.over)] += one - t;
      row[static_cast<std::size_t>(r.in)] += t;
      row[static_cast<std::size_t>(r.out)] += -one;
    } else {
      row[static_cast<std::size_t>(r.over)] += t - one;
      row[static_cast<std::size_t>(r.in)] += one;
      row[static_cast<std::size_t>(r.out)] += -t;
    }
  }
  return m;
}

inline LaurentPolynomial laplace_det(const std::vector<std::vector<LaurentPolynomial>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPolynomial::constant(1, "t");
  if (n == 1) return m[0][0];
  LaurentPolynomial total("t");
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<LaurentPolynomial>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<LaurentPolynomial> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    const LaurentPolynomial term = m[0][j] * laplace_det(minor);
    total += (j % 2 == 0) ? term : -term;
  }
  return total;
}

// Classical knots: one cofactor of the crossing matrix, normalised.
inline LaurentPolynomial alexander_cofactor(const GaussCode& code, std::size_t row, std::size_t col) {
  auto m = crossing_matrix(code);
  if (m.empty()) return LaurentPolynomial::constant(1, "t");
  m.erase(m.begin() + static_cast<std::ptrdiff_t>(row));
  for (auto& r : m) r.erase(r.begin() + static_cast<std::ptrdiff_t>(col));
  LaurentPolynomial d = laplace_det(m);
  if (d.is_zero()) return d;
  d = d.shifted(-d.min_degree());
  if (d.leading_coefficient() < 0) d = -d;
  return d;
}

// ---------------------------------------------------------------- bracket

// The four ends at a crossing in counterclockwise order starting from the
// outgoing over end. A positive crossing has the under strand turning left
// of the over strand.
inline std::array<int, 4> ccw_ends(int o, int u, int sign) {
  const int o_in = 2 * o, o_out = 2 * o + 1, u_in = 2 * u, u_out = 2 * u + 1;
  if (sign > 0) return {o_out, u_out, o_in, u_in};
  return {o_out, u_in, o_in, u_out};
}

// State sum with loops traced explicitly. The A-smoothing joins the two
// regions swept by turning the over strand counterclockwise.
inline LaurentPolynomial state_sum_bracket(const GaussCode& code) {
  std::vector<int> base;  // first point index of each component
  int points = 0, empty = 0;
  for (const auto& c : code.components()) {
    base.push_back(points);
    points += c.size();
    empty += c.size() == 0;
  }
  std::vector<int> along(static_cast<std::size_t>(2 * points), -1);  // end -> end across a semi-arc
  for (int ci = 0; ci < code.component_count(); ++ci) {
    const int len = code.component(ci).size();
    for (int p = 0; p < len; ++p) {
      const int a = 2 * (base[static_cast<std::size_t>(ci)] + p) + 1;
      const int b = 2 * (base[static_cast<std::size_t>(ci)] + (p + 1) % len);
      along[static_cast<std::size_t>(a)] = b;
      along[static_cast<std::size_t>(b)] = a;
    }
  }
  std::vector<std::array<int, 4>> sites;
  for (const auto& x : code.crossings())
    sites.push_back(ccw_ends(base[static_cast<std::size_t>(x.over.component)] + x.over.position,
                             base[static_cast<std::size_t>(x.under.component)] + x.under.position, x.sign));
  const std::size_t n = sites.size();
  const auto delta = -LaurentPolynomial::monomial(1, 2) - LaurentPolynomial::monomial(1, -2);
  LaurentPolynomial total;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    std::vector<int> across(static_cast<std::size_t>(2 * points), -1);
    int a_count = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& e = sites[i];
      const bool a = (s >> i) & 1U;
      a_count += a;
      const auto link = [&](int x, int y) {
        across[static_cast<std::size_t>(x)] = y;
        across[static_cast<std::size_t>(y)] = x;
      };
      if (a) {
        link(e[0], e[3]);
        link(e[1], e[2]);
      } else {
        link(e[0], e[1]);
        link(e[2], e[3]);
      }
    }
    std::vector<bool> seen(static_cast<std::size_t>(2 * points), false);
    int loops = empty;
    for (int start = 0; start < 2 * points; ++start) {
      if (seen[static_cast<std::size_t>(start)]) continue;
      ++loops;
      int x = start;
      bool use_along = true;
      while (!seen[static_cast<std::size_t>(x)]) {
        seen[static_cast<std::size_t>(x)] = true;
        const int y = use_along ? along[static_cast<std::size_t>(x)] : across[static_cast<std::size_t>(x)];
        seen[static_cast<std::size_t>(y)] = true;
        x = use_along ? across[static_cast<std::size_t>(y)] : along[static_cast<std::size_t>(y)];
      }
    }
    LaurentPolynomial term = LaurentPolynomial::monomial(1, a_count - static_cast<int>(n - static_cast<std::size_t>(a_count)));
    for (int k = 1; k < loops; ++k) term = term * delta;
    total += term;
  }
  return total;
}

// ---------------------------------------------------------------- R3

struct R3Pattern {
  bool t, m, o;
  int sa, sb, sc;
  friend auto operator<=>(const R3Pattern&, const R3Pattern&) = default;
};

// Three straight lines through a small triangle, every choice of
// orientation, height order and side of the triple point.
inline std::set<R3Pattern> realisable_r3_patterns() {
  struct Line {
    double px, py, dx, dy;
  };
  std::set<R3Pattern> out;
  for (int side : {1, -1})
    for (int orient = 0; orient < 8; ++orient) {
      std::array<Line, 3> lines = {Line{0, 0, 1, 0}, Line{0, 0, 0, 1}, Line{0.5 * side, 0.5 * side, 1, -1}};
      for (int i = 0; i < 3; ++i)
        if ((orient >> i) & 1) {
          lines[static_cast<std::size_t>(i)].dx = -lines[static_cast<std::size_t>(i)].dx;
          lines[static_cast<std::size_t>(i)].dy = -lines[static_cast<std::size_t>(i)].dy;
        }
      std::array<int, 3> h{0, 1, 2};
      do {
        // h[i] = height rank of line i; 2 = top
        auto meet = [&](int i, int j) {
          const Line &a = lines[static_cast<std::size_t>(i)], &b = lines[static_cast<std::size_t>(j)];
          const double den = a.dx * b.dy - a.dy * b.dx;
          const double s = ((b.px - a.px) * b.dy - (b.py - a.py) * b.dx) / den;
          return std::pair{a.px + s * a.dx, a.py + s * a.dy};
        };
        auto param = [&](int i, std::pair<double, double> pt) {
          const Line& l = lines[static_cast<std::size_t>(i)];
          return pt.first * l.dx + pt.second * l.dy;
        };
        auto sign = [&](int over, int under) {
          const Line &a = lines[static_cast<std::size_t>(over)], &b = lines[static_cast<std::size_t>(under)];
          return a.dx * b.dy - a.dy * b.dx > 0 ? 1 : -1;
        };
        int top = 0, mid = 0, bot = 0;
        for (int i = 0; i < 3; ++i) {
          if (h[static_cast<std::size_t>(i)] == 2) top = i;
          if (h[static_cast<std::size_t>(i)] == 1) mid = i;
          if (h[static_cast<std::size_t>(i)] == 0) bot = i;
        }
        const auto pa = meet(top, mid), pb = meet(top, bot), pc = meet(mid, bot);
        R3Pattern p{param(top, pa) < param(top, pb), param(mid, pa) < param(mid, pc), param(bot, pb) < param(bot, pc),
                    sign(top, mid), sign(top, bot), sign(mid, bot)};
        out.insert(p);
      } while (std::next_permutation(h.begin(), h.end()));
    }
  return out;
}

// ---------------------------------------------------------------- cells

// Explicit CW structure on C0 = M x D: a vertex per passage point, per
// empty circle and per open end; an edge per semi-arc. Each identification
// glues a disk onto a disk.
inline int cell_count_euler(const GaussCode& code) {
  int v = 0, e = 0;
  for (const auto& c : code.components()) {
    if (c.kind == ComponentKind::Closed) {
      v += std::max(c.size(), 1);
      e += std::max(c.size(), 1);
    } else {
      v += c.size() + 2;
      e += c.size() + 1;
    }
  }
  return v - e - code.crossing_count();
}

// ---------------------------------------------------------------- planarity

// Genus of the diagram's supporting surface via face tracing, with the
// rotation at each crossing taken from ccw_ends.
inline int diagram_genus(const GaussCode& code) {
  std::vector<int> base;
  int points = 0;
  for (const auto& c : code.components()) {
    base.push_back(points);
    points += c.size();
  }
  if (points == 0) return 0;
  std::vector<int> next_end(static_cast<std::size_t>(2 * points));  // semi-arc partner
  for (int ci = 0; ci < code.component_count(); ++ci) {
    const int len = code.component(ci).size();
    for (int p = 0; p < len; ++p) {
      const int a = 2 * (base[static_cast<std::size_t>(ci)] + p) + 1, b = 2 * (base[static_cast<std::size_t>(ci)] + (p + 1) % len);
      next_end[static_cast<std::size_t>(a)] = b;
      next_end[static_cast<std::size_t>(b)] = a;
    }
  }
  std::vector<int> rot(static_cast<std::size_t>(2 * points));
  for (const auto& x : code.crossings()) {
    const auto e = ccw_ends(base[static_cast<std::size_t>(x.over.component)] + x.over.position,
                            base[static_cast<std::size_t>(x.under.component)] + x.under.position, x.sign);
    for (int i = 0; i < 4; ++i) rot[static_cast<std::size_t>(e[static_cast<std::size_t>(i)])] = e[static_cast<std::size_t>((i + 1) % 4)];
  }
  std::vector<bool> seen(static_cast<std::size_t>(2 * points), false);
  int faces = 0;
  for (int d = 0; d < 2 * points; ++d) {
    if (seen[static_cast<std::size_t>(d)]) continue;
    ++faces;
    for (int x = d; !seen[static_cast<std::size_t>(x)]; x = rot[static_cast<std::size_t>(next_end[static_cast<std::size_t>(x)])]) seen[static_cast<std::size_t>(x)] = true;
  }
  // connected components of the diagram as a graph
  std::vector<int> comp(static_cast<std::size_t>(code.component_count()));
  std::iota(comp.begin(), comp.end(), 0);
  std::function<int(int)> find = [&](int x) { return comp[static_cast<std::size_t>(x)] == x ? x : comp[static_cast<std::size_t>(x)] = find(comp[static_cast<std::size_t>(x)]); };
  for (const auto& x : code.crossings()) comp[static_cast<std::size_t>(find(x.over.component))] = find(x.under.component);
  std::set<int> roots;
  for (int ci = 0; ci < code.component_count(); ++ci)
    if (code.component(ci).size() > 0) roots.insert(find(ci));
  const int k = static_cast<int>(roots.size());
  const int n = code.crossing_count();
  // V - E + F = 2k - 2g with V = n, E = 2n
  return (2 * k - (n - 2 * n + faces)) / 2;
}

inline bool is_classical(const GaussCode& code) { return code.all_closed() && diagram_genus(code) == 0; }

}  // namespace oracle
