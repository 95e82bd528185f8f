#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vtube/errors.hpp"

namespace vtube {

// Word in a free group: generator g is +g, its inverse is -g (1-based).
using Word = std::vector<int>;

inline Word inverse(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (auto& x : r) x = -x;
  return r;
}

inline Word free_reduce(const Word& w) {
  Word r;
  r.reserve(w.size());
  for (int x : w) {
    if (!r.empty() && r.back() == -x)
      r.pop_back();
    else
      r.push_back(x);
  }
  return r;
}

inline Word cyclic_reduce(Word w) {
  w = free_reduce(w);
  std::size_t i = 0, j = w.size();
  while (j - i >= 2 && w[i] == -w[j - 1]) {
    ++i;
    --j;
  }
  return Word(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(j));
}

struct GroupPresentation {
  int generator_count = 0;
  std::vector<Word> relators;

  GroupPresentation() = default;
  GroupPresentation(int gens, std::vector<Word> rels) : generator_count(gens), relators(std::move(rels)) { validate(); }

  void validate() const {
    if (generator_count < 0) throw DomainError("negative generator count");
    for (const auto& r : relators)
      for (int x : r)
        if (x == 0 || std::abs(x) > generator_count)
          throw DomainError("relator letter " + std::to_string(x) + " out of range");
  }

  friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;
};

// Renumbers generators by first appearance in the relators (unused
// generators keep their relative order at the end). Relator order is kept.
inline GroupPresentation canonically_relabeled(const GroupPresentation& p) {
  std::vector<int> map(static_cast<std::size_t>(p.generator_count) + 1, 0);
  int next = 1;
  for (const auto& r : p.relators)
    for (int x : r) {
      int& m = map[static_cast<std::size_t>(std::abs(x))];
      if (m == 0) m = next++;
    }
  for (int g = 1; g <= p.generator_count; ++g)
    if (map[static_cast<std::size_t>(g)] == 0) map[static_cast<std::size_t>(g)] = next++;
  GroupPresentation out;
  out.generator_count = p.generator_count;
  for (const auto& r : p.relators) {
    Word w;
    for (int x : r) w.push_back(x > 0 ? map[static_cast<std::size_t>(x)] : -map[static_cast<std::size_t>(-x)]);
    out.relators.push_back(std::move(w));
  }
  return out;
}

inline std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (int x : w) {
    if (!s.empty()) s += ' ';
    s += "x" + std::to_string(std::abs(x));
    if (x < 0) s += "^-1";
  }
  return s;
}

inline std::string to_string(const GroupPresentation& p) {
  std::string s = "<";
  for (int g = 1; g <= p.generator_count; ++g) s += (g > 1 ? ", x" : "x") + std::to_string(g);
  s += " |";
  for (std::size_t i = 0; i < p.relators.size(); ++i) s += (i ? ", " : " ") + to_string(p.relators[i]);
  return s + " >";
}

// Finite group by Cayley table over elements 0..size-1. Group axioms are
// verified on construction.
class FiniteGroup {
 public:
  FiniteGroup(std::string name, std::vector<std::vector<int>> table) : name_(std::move(name)), table_(std::move(table)) {
    const int n = size();
    if (n == 0) throw DomainError("empty group");
    for (const auto& row : table_) {
      if (static_cast<int>(row.size()) != n) throw DomainError("group table is not square");
      for (int v : row)
        if (v < 0 || v >= n) throw DomainError("group table entry out of range");
    }
    identity_ = -1;
    for (int e = 0; e < n && identity_ < 0; ++e) {
      bool ok = true;
      for (int x = 0; x < n && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
      if (ok) identity_ = e;
    }
    if (identity_ < 0) throw DomainError("group table has no identity");
    inverse_.assign(static_cast<std::size_t>(n), -1);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (mul(x, y) == identity_) inverse_[static_cast<std::size_t>(x)] = y;
    for (int x = 0; x < n; ++x)
      if (inverse_[static_cast<std::size_t>(x)] < 0) throw DomainError("group table element without inverse");
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (mul(mul(x, y), z) != mul(x, mul(y, z))) throw DomainError("group table is not associative");
  }

  const std::string& name() const noexcept { return name_; }
  int size() const noexcept { return static_cast<int>(table_.size()); }
  int identity() const noexcept { return identity_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }

 private:
  std::string name_;
  std::vector<std::vector<int>> table_;
  int identity_ = 0;
  std::vector<int> inverse_;
};

inline FiniteGroup cyclic_group(int n) {
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  return FiniteGroup("Z" + std::to_string(n), std::move(t));
}

// Symmetric group on k letters; elements are permutations in lexicographic
// order, product (p*q)(i) = p(q(i)).
inline FiniteGroup symmetric_group(int k) {
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> perms;
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  const int n = static_cast<int>(perms.size());
  auto index_of = [&](const std::vector<int>& p) {
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), p) - perms.begin());
  };
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> c(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i)
        c[static_cast<std::size_t>(i)] = perms[static_cast<std::size_t>(a)][static_cast<std::size_t>(perms[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)])];
      t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = index_of(c);
    }
  return FiniteGroup("S" + std::to_string(k), std::move(t));
}

namespace detail {

class HomCounter {
 public:
  HomCounter(const GroupPresentation& p, const FiniteGroup& g) : p_(p), g_(g) {
    for (auto& r : p_.relators) r = cyclic_reduce(r);
    p_.relators.erase(std::remove_if(p_.relators.begin(), p_.relators.end(), [](const Word& w) { return w.empty(); }), p_.relators.end());
    value_.assign(static_cast<std::size_t>(p.generator_count) + 1, -1);
  }

  std::uint64_t count() { return search(); }

 private:
  int eval(int letter) const {
    int v = value_[static_cast<std::size_t>(std::abs(letter))];
    return letter > 0 ? v : g_.inv(v);
  }

  // Returns false if some relator is violated; assigns forced generators
  // (a relator with a single unknown letter occurring once) into trail.
  bool propagate(std::vector<int>& trail) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& r : p_.relators) {
        int unknown = 0, occurrences = 0, where = -1;
        for (std::size_t i = 0; i < r.size(); ++i) {
          int gen = std::abs(r[i]);
          if (value_[static_cast<std::size_t>(gen)] >= 0) continue;
          if (unknown == 0 || unknown == gen) {
            unknown = gen;
            ++occurrences;
            where = static_cast<int>(i);
          } else {
            occurrences = 99;
            break;
          }
        }
        if (unknown == 0) {
          int acc = g_.identity();
          for (int x : r) acc = g_.mul(acc, eval(x));
          if (acc != g_.identity()) return false;
          continue;
        }
        if (occurrences != 1) continue;
        // r = A x^e B = 1  =>  x^e = A^{-1} B^{-1}
        int a = g_.identity(), b = g_.identity();
        for (int i = 0; i < where; ++i) a = g_.mul(a, eval(r[static_cast<std::size_t>(i)]));
        for (std::size_t i = static_cast<std::size_t>(where) + 1; i < r.size(); ++i) b = g_.mul(b, eval(r[i]));
        int xe = g_.mul(g_.inv(a), g_.inv(b));
        int x = r[static_cast<std::size_t>(where)] > 0 ? xe : g_.inv(xe);
        value_[static_cast<std::size_t>(unknown)] = x;
        trail.push_back(unknown);
        changed = true;
      }
    }
    return true;
  }

  std::uint64_t search() {
    std::vector<int> trail;
    std::uint64_t total = 0;
    if (propagate(trail)) {
      int free_gen = 0;
      for (int g = 1; g <= p_.generator_count && free_gen == 0; ++g)
        if (value_[static_cast<std::size_t>(g)] < 0) free_gen = g;
      if (free_gen == 0) {
        total = 1;
      } else {
        for (int v = 0; v < g_.size(); ++v) {
          value_[static_cast<std::size_t>(free_gen)] = v;
          total += search();
        }
        value_[static_cast<std::size_t>(free_gen)] = -1;
      }
    }
    for (int g : trail) value_[static_cast<std::size_t>(g)] = -1;
    return total;
  }

  GroupPresentation p_;
  const FiniteGroup& g_;
  std::vector<int> value_;
};

}  // namespace detail

// Number of homomorphisms from the presented group to g.
inline std::uint64_t count_group_homs(const GroupPresentation& p, const FiniteGroup& g) {
  return detail::HomCounter(p, g).count();
}

struct AbelianInvariants {
  int free_rank = 0;
  std::vector<std::int64_t> torsion;  // d_1 | d_2 | ..., each > 1

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

inline std::string to_string(const AbelianInvariants& a) {
  std::string s;
  if (a.free_rank > 0) s = a.free_rank == 1 ? "Z" : "Z^" + std::to_string(a.free_rank);
  for (auto d : a.torsion) s += (s.empty() ? "" : " + ") + std::string("Z/") + std::to_string(d);
  return s.empty() ? "0" : s;
}

// Smith normal form of the exponent-sum matrix (relators x generators).
inline AbelianInvariants abelianization(const GroupPresentation& p) {
  using I = std::int64_t;
  const std::size_t rows = p.relators.size();
  const std::size_t cols = static_cast<std::size_t>(p.generator_count);
  std::vector<std::vector<I>> m(rows, std::vector<I>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i)
    for (int x : p.relators[i]) m[i][static_cast<std::size_t>(std::abs(x) - 1)] += x > 0 ? 1 : -1;

  std::vector<I> diagonal;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // pivot: smallest nonzero magnitude in the remaining block
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (m[i][j] != 0 && (pr == rows || std::llabs(m[i][j]) < std::llabs(m[pr][pc]))) {
          pr = i;
          pc = j;
        }
    if (pr == rows) break;
    std::swap(m[t], m[pr]);
    for (auto& row : m) std::swap(row[t], row[pc]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        I q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) {
          std::swap(m[t], m[i]);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        I q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) {
          for (auto& row : m) std::swap(row[t], row[j]);
          clean = false;
        }
      }
      if (clean) {
        // enforce divisibility of the remaining block by the pivot
        for (std::size_t i = t + 1; i < rows && clean; ++i)
          for (std::size_t j = t + 1; j < cols && clean; ++j)
            if (m[i][j] % m[t][t] != 0) {
              for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
              clean = false;
            }
      }
    }
    diagonal.push_back(std::llabs(m[t][t]));
    ++t;
  }

  AbelianInvariants out;
  out.free_rank = static_cast<int>(cols - diagonal.size());
  for (I d : diagonal)
    if (d > 1) out.torsion.push_back(d);
  std::sort(out.torsion.begin(), out.torsion.end());
  return out;
}

struct TietzeEffort {
  int max_rounds = 1000;
  std::size_t max_relator_length = 4096;
};

// Relator-driven elimination: a generator occurring exactly once in some
// relator is solved for and substituted away. Also performs free and cyclic
// reduction and drops trivial or duplicate relators. The result presents an
// isomorphic group and never has more generators.
inline GroupPresentation tietze_simplify(const GroupPresentation& p, TietzeEffort effort = {}) {
  std::vector<Word> rels;
  for (const auto& r : p.relators) rels.push_back(cyclic_reduce(r));
  std::vector<bool> alive(static_cast<std::size_t>(p.generator_count) + 1, true);

  auto tidy = [&] {
    std::vector<Word> out;
    for (auto& r : rels) {
      r = cyclic_reduce(r);
      if (r.empty()) continue;
      bool dup = false;
      for (const auto& o : out)
        if (o == r || o == inverse(r)) dup = true;
      if (!dup) out.push_back(r);
    }
    rels = std::move(out);
  };
  tidy();

  for (int round = 0; round < effort.max_rounds; ++round) {
    // choose the shortest relator offering a singly-occurring generator
    int best_rel = -1, best_gen = 0;
    for (std::size_t i = 0; i < rels.size(); ++i) {
      if (best_rel >= 0 && rels[i].size() >= rels[static_cast<std::size_t>(best_rel)].size()) continue;
      std::vector<int> counts(alive.size(), 0);
      for (int x : rels[i]) ++counts[static_cast<std::size_t>(std::abs(x))];
      for (int x : rels[i])
        if (counts[static_cast<std::size_t>(std::abs(x))] == 1) {
          best_rel = static_cast<int>(i);
          best_gen = std::abs(x);
          break;
        }
    }
    if (best_rel < 0) break;
    const Word r = rels[static_cast<std::size_t>(best_rel)];
    std::size_t pos = 0;
    while (std::abs(r[pos]) != best_gen) ++pos;
    // r = A x^e B  =>  x^e = A^{-1} B^{-1} = (B A)^{-1}
    Word ba(r.begin() + static_cast<long>(pos) + 1, r.end());
    ba.insert(ba.end(), r.begin(), r.begin() + static_cast<long>(pos));
    Word xe = inverse(ba);
    Word x = r[pos] > 0 ? xe : inverse(xe);
    Word xinv = inverse(x);
    bool too_long = false;
    std::vector<Word> next;
    for (std::size_t i = 0; i < rels.size(); ++i) {
      if (static_cast<int>(i) == best_rel) continue;
      Word w;
      for (int l : rels[i]) {
        if (std::abs(l) == best_gen) {
          const Word& sub = l > 0 ? x : xinv;
          w.insert(w.end(), sub.begin(), sub.end());
        } else {
          w.push_back(l);
        }
      }
      w = cyclic_reduce(w);
      if (w.size() > effort.max_relator_length) too_long = true;
      next.push_back(std::move(w));
    }
    if (too_long) break;
    rels = std::move(next);
    alive[static_cast<std::size_t>(best_gen)] = false;
    tidy();
  }

  std::vector<int> map(alive.size(), 0);
  int k = 0;
  for (int g = 1; g <= p.generator_count; ++g)
    if (alive[static_cast<std::size_t>(g)]) map[static_cast<std::size_t>(g)] = ++k;
  GroupPresentation out;
  out.generator_count = k;
  for (const auto& r : rels) {
    Word w;
    for (int l : r) w.push_back(l > 0 ? map[static_cast<std::size_t>(l)] : -map[static_cast<std::size_t>(-l)]);
    out.relators.push_back(std::move(w));
  }
  return out;
}

}  // namespace vtube
