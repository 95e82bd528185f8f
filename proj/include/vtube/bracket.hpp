#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "vtube/errors.hpp"
#include "vtube/gauss_code.hpp"
#include "vtube/laurent.hpp"

namespace vtube {

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
    return true;
  }
};

// Every passage point contributes an incoming end (2i) and an outgoing end
// (2i+1). Semi-arcs join an outgoing end to the next incoming end; each
// smoothing adds two more edges at its crossing. Loops of a state are the
// connected components of the resulting 2-regular graph.
struct SmoothingGraph {
  int ends = 0;
  int empty_loops = 0;
  std::vector<std::pair<int, int>> semi_arcs;
  struct Site {
    int over = 0;
    int under = 0;
    int sign = 1;
  };
  std::vector<Site> sites;

  explicit SmoothingGraph(const GaussCode& code) {
    std::vector<std::vector<int>> point(static_cast<std::size_t>(code.component_count()));
    int next = 0;
    for (int ci = 0; ci < code.component_count(); ++ci) {
      const Component& c = code.component(ci);
      if (c.size() == 0) {
        ++empty_loops;
        continue;
      }
      for (int p = 0; p < c.size(); ++p) point[static_cast<std::size_t>(ci)].push_back(next++);
      for (int p = 0; p < c.size(); ++p) {
        int a = point[static_cast<std::size_t>(ci)][static_cast<std::size_t>(p)];
        int b = point[static_cast<std::size_t>(ci)][static_cast<std::size_t>((p + 1) % c.size())];
        semi_arcs.emplace_back(2 * a + 1, 2 * b);
      }
    }
    ends = 2 * next;
    for (const auto& x : code.crossings())
      sites.push_back({point[static_cast<std::size_t>(x.over.component)][static_cast<std::size_t>(x.over.position)],
                       point[static_cast<std::size_t>(x.under.component)][static_cast<std::size_t>(x.under.position)], x.sign});
  }

  // oriented[i]: crossing i gets the orientation-respecting smoothing.
  int loops(const std::vector<bool>& oriented) const {
    UnionFind uf(ends);
    int components = ends;
    for (auto [a, b] : semi_arcs) components -= uf.unite(a, b) ? 1 : 0;
    for (std::size_t i = 0; i < sites.size(); ++i) {
      const int o = sites[i].over, u = sites[i].under;
      if (oriented[i]) {
        components -= uf.unite(2 * o, 2 * u + 1) ? 1 : 0;
        components -= uf.unite(2 * u, 2 * o + 1) ? 1 : 0;
      } else {
        components -= uf.unite(2 * o, 2 * u) ? 1 : 0;
        components -= uf.unite(2 * o + 1, 2 * u + 1) ? 1 : 0;
      }
    }
    return components + empty_loops;
  }
};

}  // namespace detail

// Kauffman bracket by state sum, normalised so the unknot is 1. At a
// positive crossing the A-smoothing is the oriented one, at a negative
// crossing the unoriented one, so a positive kink contributes -A^3.
inline LaurentPolynomial kauffman_bracket(const GaussCode& code) {
  if (!code.all_closed()) throw DomainError("bracket is undefined for open components");
  if (code.component_count() == 0) return LaurentPolynomial::constant(1);
  const detail::SmoothingGraph g(code);
  const int n = static_cast<int>(g.sites.size());
  if (n > 30) throw DomainError("too many crossings for the state sum");

  // delta^k for k = 0..(max loops)
  const LaurentPolynomial delta = LaurentPolynomial::monomial(-1, 2) + LaurentPolynomial::monomial(-1, -2);
  std::vector<LaurentPolynomial> delta_pow{LaurentPolynomial::constant(1)};

  // count[a - b + n][loops] accumulated first, then expanded.
  std::vector<std::vector<std::int64_t>> count(static_cast<std::size_t>(2 * n + 1));
  std::vector<bool> oriented(static_cast<std::size_t>(n));
  for (std::uint64_t state = 0; state < (std::uint64_t{1} << n); ++state) {
    int a_minus_b = 0;
    for (int i = 0; i < n; ++i) {
      const bool a_smoothing = (state >> i) & 1U;
      a_minus_b += a_smoothing ? 1 : -1;
      oriented[static_cast<std::size_t>(i)] = a_smoothing == (g.sites[static_cast<std::size_t>(i)].sign > 0);
    }
    const int loops = g.loops(oriented);
    auto& row = count[static_cast<std::size_t>(a_minus_b + n)];
    if (static_cast<int>(row.size()) < loops) row.resize(static_cast<std::size_t>(loops), 0);
    ++row[static_cast<std::size_t>(loops - 1)];
  }

  LaurentPolynomial total;
  for (int s = 0; s <= 2 * n; ++s) {
    const auto& row = count[static_cast<std::size_t>(s)];
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row[k] == 0) continue;
      while (delta_pow.size() <= k) delta_pow.push_back(delta_pow.back() * delta);
      total += delta_pow[k].shifted(s - n, row[k]);
    }
  }
  return total;
}

// Writhe-normalised bracket (-A^3)^{-w} <K>.
inline LaurentPolynomial f_polynomial(const GaussCode& code) {
  const LaurentPolynomial b = kauffman_bracket(code);
  const int w = writhe(code);
  const int sign = (w % 2 == 0) ? 1 : -1;
  return b.shifted(-3 * w, sign);
}

}  // namespace vtube
