#pragma once

#include <algorithm>
#include <cstddef>
#include <future>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "vtube/canonical.hpp"
#include "vtube/errors.hpp"
#include "vtube/gauss_code.hpp"
#include "vtube/invariants.hpp"
#include "vtube/moves.hpp"

namespace vtube {

struct SearchBudget {
  int max_depth = 10;
  std::size_t max_nodes = 1000000;

  SearchBudget() = default;
  SearchBudget(int depth, std::size_t nodes) : max_depth(depth), max_nodes(nodes) {
    if (depth < 0) throw DomainError("search depth must be nonnegative");
    if (nodes == 0) throw DomainError("node budget must be positive");
  }
};

struct CertificateStep {
  MoveInstance move;
  GaussCode result;  // canonical
};

// Path of moves from canonical_form(source) to canonical_form(target). Each
// move applies to the canonical code reached by the previous step.
struct EquivalenceCertificate {
  GaussCode source;
  GaussCode target;
  std::vector<CertificateStep> path;
};

inline bool replays(const EquivalenceCertificate& cert) {
  GaussCode cur = canonical_form(cert.source);
  for (const auto& step : cert.path) {
    try {
      cur = canonical_form(apply(cur, step.move));
    } catch (const MoveError&) {
      return false;
    }
    if (!(cur == step.result)) return false;
  }
  return cur == canonical_form(cert.target);
}

enum class Verdict { Found, Exhausted, DistinctByInvariant };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Found: return "Found";
    case Verdict::Exhausted: return "Exhausted";
    case Verdict::DistinctByInvariant: return "DistinctByInvariant";
  }
  return "?";
}

struct SearchResult {
  Verdict verdict = Verdict::Exhausted;
  std::optional<EquivalenceCertificate> certificate;
  std::optional<InvariantWitness> witness;
  std::size_t nodes_visited = 0;
};

struct SearchOptions {
  unsigned threads = 1;
  bool check_invariants = true;
};

namespace detail {

struct Child {
  std::string key;
  GaussCode code;
  MoveInstance move;
};

// Children of one canonical node, each child listed once (first move wins).
inline std::vector<Child> expand(const GaussCode& node, MoveSet set) {
  std::vector<Child> out;
  std::set<std::string> seen;
  for (const auto& mv : enumerate_moves(node, set)) {
    GaussCode child = canonical_form(apply(node, mv));
    std::string key = serialize(child);
    if (seen.insert(key).second) out.push_back({std::move(key), std::move(child), mv});
  }
  return out;
}

// Expansion of a whole frontier; order of the result matches the input.
inline std::vector<std::vector<Child>> expand_all(const std::vector<const GaussCode*>& frontier, MoveSet set, unsigned threads) {
  std::vector<std::vector<Child>> out(frontier.size());
  if (threads <= 1 || frontier.size() < 2) {
    for (std::size_t i = 0; i < frontier.size(); ++i) out[i] = expand(*frontier[i], set);
    return out;
  }
  std::vector<std::future<void>> jobs;
  const std::size_t chunk = (frontier.size() + threads - 1) / threads;
  for (std::size_t start = 0; start < frontier.size(); start += chunk) {
    const std::size_t stop = std::min(frontier.size(), start + chunk);
    jobs.push_back(std::async(std::launch::async, [&, start, stop] {
      for (std::size_t i = start; i < stop; ++i) out[i] = expand(*frontier[i], set);
    }));
  }
  for (auto& j : jobs) j.get();
  return out;
}

struct Visit {
  GaussCode code;
  std::string parent;  // empty at the root
  MoveInstance move;   // parent -> this node
  int depth = 0;
};

using VisitMap = std::unordered_map<std::string, Visit>;

// A move on `from` whose canonical result is `to`.
inline std::optional<MoveInstance> move_between(const GaussCode& from, const std::string& to, MoveSet set) {
  for (const auto& mv : enumerate_moves(from, set))
    if (serialize(canonical_form(apply(from, mv))) == to) return mv;
  return std::nullopt;
}

}  // namespace detail

// Bidirectional breadth-first search over canonical forms. Frontiers are
// expanded in canonical-key order so certificates are deterministic.
// Exhausted only means the budget ran out.
inline SearchResult search_equivalence(const GaussCode& source, const GaussCode& target, MoveSet set, SearchBudget budget,
                                       SearchOptions opts = {}) {
  SearchResult res;
  const GaussCode src = canonical_form(source), tgt = canonical_form(target);
  const std::string src_key = serialize(src), tgt_key = serialize(tgt);
  if (src_key == tgt_key) {
    res.verdict = Verdict::Found;
    res.certificate = EquivalenceCertificate{source, target, {}};
    res.nodes_visited = 1;
    return res;
  }
  if (opts.check_invariants) {
    if (auto w = distinguishing_invariant(src, tgt, set)) {
      res.verdict = Verdict::DistinctByInvariant;
      res.witness = std::move(w);
      return res;
    }
  }

  detail::VisitMap side[2];
  std::vector<std::string> frontier[2];
  int depth[2] = {0, 0};
  side[0].emplace(src_key, detail::Visit{src, "", {}, 0});
  side[1].emplace(tgt_key, detail::Visit{tgt, "", {}, 0});
  frontier[0] = {src_key};
  frontier[1] = {tgt_key};

  std::optional<std::string> meet;
  bool out_of_nodes = false;
  while (depth[0] + depth[1] < budget.max_depth && !meet && !out_of_nodes) {
    const int s = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    if (frontier[s].empty()) break;
    std::vector<const GaussCode*> nodes;
    for (const auto& k : frontier[s]) nodes.push_back(&side[s].at(k).code);
    auto children = detail::expand_all(nodes, set, opts.threads);
    std::vector<std::string> next;
    std::optional<std::pair<int, std::string>> best_meet;  // (depth on other side, key)
    for (std::size_t i = 0; i < children.size() && !out_of_nodes; ++i) {
      for (auto& ch : children[i]) {
        if (side[s].count(ch.key)) continue;
        if (side[0].size() + side[1].size() >= budget.max_nodes) {
          out_of_nodes = true;
          break;
        }
        const std::string key = ch.key;
        side[s].emplace(key, detail::Visit{std::move(ch.code), frontier[s][i], ch.move, depth[s] + 1});
        next.push_back(key);
        if (auto it = side[1 - s].find(key); it != side[1 - s].end()) {
          std::pair<int, std::string> cand{it->second.depth, key};
          if (!best_meet || cand < *best_meet) best_meet = cand;
        }
      }
    }
    std::sort(next.begin(), next.end());
    frontier[s] = std::move(next);
    ++depth[s];
    if (best_meet) meet = best_meet->second;
  }
  res.nodes_visited = side[0].size() + side[1].size();
  if (!meet) {
    res.verdict = Verdict::Exhausted;
    return res;
  }

  EquivalenceCertificate cert{source, target, {}};
  // source half: walk parents back from the meeting node
  std::vector<CertificateStep> head;
  for (std::string k = *meet; !side[0].at(k).parent.empty(); k = side[0].at(k).parent) {
    const auto& v = side[0].at(k);
    head.push_back({v.move, v.code});
  }
  std::reverse(head.begin(), head.end());
  cert.path = std::move(head);
  // target half: each backward edge is re-derived in the forward direction
  for (std::string k = *meet; !side[1].at(k).parent.empty(); k = side[1].at(k).parent) {
    const auto& v = side[1].at(k);
    const auto& parent = side[1].at(v.parent);
    auto mv = detail::move_between(v.code, v.parent, set);
    if (!mv) throw std::logic_error("move set is not closed under inverses");
    cert.path.push_back({*mv, parent.code});
  }
  res.verdict = Verdict::Found;
  res.certificate = std::move(cert);
  return res;
}

// All canonical forms reachable from code within the budget.
inline std::set<GaussCode> orbit(const GaussCode& code, MoveSet set, SearchBudget budget, SearchOptions opts = {}) {
  const GaussCode start = canonical_form(code);
  std::unordered_map<std::string, GaussCode> seen;
  seen.emplace(serialize(start), start);
  std::vector<std::string> frontier{serialize(start)};
  for (int d = 0; d < budget.max_depth && !frontier.empty(); ++d) {
    std::vector<const GaussCode*> nodes;
    for (const auto& k : frontier) nodes.push_back(&seen.at(k));
    auto children = detail::expand_all(nodes, set, opts.threads);
    std::vector<std::string> next;
    bool full = false;
    for (auto& list : children) {
      for (auto& ch : list) {
        if (seen.count(ch.key)) continue;
        if (seen.size() >= budget.max_nodes) {
          full = true;
          break;
        }
        next.push_back(ch.key);
        seen.emplace(ch.key, std::move(ch.code));
      }
      if (full) break;
    }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
    if (full) break;
  }
  std::set<GaussCode> out;
  for (auto& [k, c] : seen) out.insert(c);
  return out;
}

}  // namespace vtube
