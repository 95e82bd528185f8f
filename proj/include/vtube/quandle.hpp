#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "vtube/errors.hpp"

namespace vtube {

// Relation a ▷ b = c on generator indices (1-based).
struct QuandleRelation {
  int a = 0;
  int b = 0;
  int c = 0;

  friend bool operator==(const QuandleRelation&, const QuandleRelation&) = default;
};

struct QuandlePresentation {
  int generator_count = 0;
  std::vector<QuandleRelation> relations;

  QuandlePresentation() = default;
  QuandlePresentation(int gens, std::vector<QuandleRelation> rels) : generator_count(gens), relations(std::move(rels)) {
    for (const auto& r : relations)
      for (int x : {r.a, r.b, r.c})
        if (x < 1 || x > generator_count) throw DomainError("quandle relation index " + std::to_string(x) + " out of range");
  }

  friend bool operator==(const QuandlePresentation&, const QuandlePresentation&) = default;
};

// Finite quandle on 0..q-1 given by its operation table x ▷ y = table[x][y].
// Idempotence, bijective right translations and right self-distributivity
// are checked on construction.
class FiniteQuandle {
 public:
  FiniteQuandle(std::string name, std::vector<std::vector<int>> table) : name_(std::move(name)), table_(std::move(table)) {
    const int q = size();
    if (q == 0) throw DomainError("empty quandle");
    for (const auto& row : table_) {
      if (static_cast<int>(row.size()) != q) throw DomainError("quandle table is not square");
      for (int v : row)
        if (v < 0 || v >= q) throw DomainError("quandle table entry out of range");
    }
    inverse_.assign(static_cast<std::size_t>(q), std::vector<int>(static_cast<std::size_t>(q), -1));
    for (int x = 0; x < q; ++x)
      if (op(x, x) != x) throw DomainError("quandle is not idempotent at " + std::to_string(x));
    for (int y = 0; y < q; ++y)
      for (int x = 0; x < q; ++x) {
        int& slot = inverse_[static_cast<std::size_t>(op(x, y))][static_cast<std::size_t>(y)];
        if (slot >= 0) throw DomainError("right translation by " + std::to_string(y) + " is not bijective");
        slot = x;
      }
    for (int x = 0; x < q; ++x)
      for (int y = 0; y < q; ++y)
        for (int z = 0; z < q; ++z)
          if (op(op(x, y), z) != op(op(x, z), op(y, z))) throw DomainError("quandle is not right self-distributive");
  }

  const std::string& name() const noexcept { return name_; }
  int size() const noexcept { return static_cast<int>(table_.size()); }
  int op(int x, int y) const { return table_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]; }
  // The unique z with z ▷ y = x.
  int op_inverse(int x, int y) const { return inverse_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]; }

 private:
  std::string name_;
  std::vector<std::vector<int>> table_;
  std::vector<std::vector<int>> inverse_;
};

// R_n: x ▷ y = 2y - x mod n.
inline FiniteQuandle dihedral_quandle(int n) {
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = ((2 * y - x) % n + n) % n;
  return FiniteQuandle("R" + std::to_string(n), std::move(t));
}

// Number of generator labelings by elements of q satisfying every relation.
inline std::uint64_t count_colorings(const QuandlePresentation& p, const FiniteQuandle& q) {
  std::vector<int> value(static_cast<std::size_t>(p.generator_count) + 1, -1);
  auto v = [&](int g) -> int& { return value[static_cast<std::size_t>(g)]; };

  auto propagate = [&](std::vector<int>& trail) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& r : p.relations) {
        int a = v(r.a), b = v(r.b), c = v(r.c);
        if (b < 0) continue;
        if (a >= 0 && c >= 0) {
          if (q.op(a, b) != c) return false;
        } else if (a >= 0) {
          v(r.c) = q.op(a, b);
          trail.push_back(r.c);
          changed = true;
        } else if (c >= 0) {
          v(r.a) = q.op_inverse(c, b);
          trail.push_back(r.a);
          changed = true;
        }
      }
    }
    return true;
  };

  auto search = [&](auto&& self) -> std::uint64_t {
    std::vector<int> trail;
    std::uint64_t total = 0;
    if (propagate(trail)) {
      int free_gen = 0;
      for (int g = 1; g <= p.generator_count && free_gen == 0; ++g)
        if (v(g) < 0) free_gen = g;
      if (free_gen == 0) {
        total = 1;
      } else {
        for (int x = 0; x < q.size(); ++x) {
          v(free_gen) = x;
          total += self(self);
        }
        v(free_gen) = -1;
      }
    }
    for (int g : trail) v(g) = -1;
    return total;
  };
  return search(search);
}

}  // namespace vtube
