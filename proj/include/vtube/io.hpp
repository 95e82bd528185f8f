#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "vtube/containment.hpp"
#include "vtube/errors.hpp"
#include "vtube/gauss_code.hpp"
#include "vtube/moves.hpp"
#include "vtube/report.hpp"
#include "vtube/search.hpp"
#include "vtube/tube.hpp"

namespace vtube {

using json = nlohmann::json;

inline void to_json(json& j, const PassageRef& r) { j = json::array({r.component, r.position}); }
inline void from_json(const json& j, PassageRef& r) {
  r.component = j.at(0).get<int>();
  r.position = j.at(1).get<int>();
}

inline void to_json(json& j, const MoveInstance& m) {
  j = json{{"kind", std::string(to_string(m.kind))}, {"locus", m.locus}, {"sign", m.sign}};
  if (m.under_first) j["under_first"] = true;
  if (m.antiparallel) j["antiparallel"] = true;
  if (m.at_tail) j["at_tail"] = true;
}

inline void from_json(const json& j, MoveInstance& m) {
  const auto kind = move_kind_from_string(j.at("kind").get<std::string>());
  if (!kind) throw DomainError("unknown move kind " + j.at("kind").dump());
  m.kind = *kind;
  m.locus = j.at("locus").get<std::vector<PassageRef>>();
  m.sign = j.value("sign", 1);
  m.under_first = j.value("under_first", false);
  m.antiparallel = j.value("antiparallel", false);
  m.at_tail = j.value("at_tail", false);
}

inline void to_json(json& j, const EquivalenceCertificate& c) {
  j = json{{"source", serialize(c.source)}, {"target", serialize(c.target)}, {"steps", json::array()}};
  for (const auto& s : c.path) j["steps"].push_back({{"move", s.move}, {"result", serialize(s.result)}});
}

inline void from_json(const json& j, EquivalenceCertificate& c) {
  c.source = parse(j.at("source").get<std::string>());
  c.target = parse(j.at("target").get<std::string>());
  c.path.clear();
  for (const auto& s : j.at("steps")) c.path.push_back({s.at("move").get<MoveInstance>(), parse(s.at("result").get<std::string>())});
}

inline void to_json(json& j, const InvariantWitness& w) {
  j = json{{"invariant", w.name}, {"source", w.source_value}, {"target", w.target_value}};
}

inline void to_json(json& j, const SearchResult& r) {
  j = json{{"verdict", std::string(to_string(r.verdict))}, {"nodes_visited", r.nodes_visited}};
  if (r.certificate) j["certificate"] = *r.certificate;
  if (r.witness) j["witness"] = *r.witness;
}

inline void to_json(json& j, const TubeComplex& t) {
  j = json{{"m", t.meta.m}, {"n", t.meta.n}, {"tubes", json::array()}, {"caps", json::array()}, {"identifications", json::array()}};
  for (const auto& tb : t.tubes)
    j["tubes"].push_back({{"component", tb.component}, {"index", tb.index_in_component}, {"next", tb.next}, {"length", tb.length}});
  for (const auto& c : t.caps) j["caps"].push_back({{"tube", c.tube}, {"end", c.end == TubeEnd::Start ? "start" : "end"}});
  for (const auto& id : t.identifications)
    j["identifications"].push_back({{"crossing", id.crossing},
                                    {"under_tube", id.under_tube},
                                    {"over_tube", id.over_tube},
                                    {"position", id.position},
                                    {"sign", id.sign}});
}

inline void to_json(json& j, const StackPairing& p) {
  j = json{{"components", p.components}, {"crossings", p.crossings}, {"witnesses", p.witnesses}, {"passages", json::array()}};
  for (const auto& [a, b] : p.passages) j["passages"].push_back({a, b});
}

inline void to_json(json& j, const ContainmentDiagram& d) {
  j = json{{"fibers", json::array()}, {"containments", json::array()}};
  for (const auto& f : d.fibers)
    j["fibers"].push_back({{"tube", f.tube}, {"component", f.component}, {"base", f.base}, {"orientation", f.orientation}, {"crossing", f.crossing}});
  for (const auto& c : d.containments) j["containments"].push_back({{"inner", c.inner}, {"outer", c.outer}, {"crossing", c.crossing}});
  if (d.pairing) j["pairing"] = *d.pairing;
}

inline void to_json(json& j, const InvariantReport& r) {
  j = json{{"code", r.code}, {"invariants", json::object()}};
  for (const auto& e : r.entries) {
    json& v = j["invariants"][e.name];
    if (!e.applicable)
      v = json{{"inapplicable", e.reason}};
    else if (e.count)
      v = *e.count;
    else if (e.polynomial)
      v = e.polynomial->term_list();
    else
      v = e.text;
  }
}

inline std::string tsv_header(const std::vector<std::string>& names) {
  std::string s = "line\tcode";
  for (const auto& n : names) s += "\t" + n;
  return s + "\terror";
}

inline std::string tsv_cell(const InvariantEntry& e) { return e.applicable ? e.text : "n/a (" + e.reason + ")"; }

struct CorpusLine {
  int line = 0;
  std::string text;
  std::optional<GaussCode> code;
  std::string error;
};

// One link per line; blank lines and lines starting with '#' are skipped.
inline std::vector<CorpusLine> read_corpus(std::istream& in) {
  std::vector<CorpusLine> out;
  std::string s;
  int line = 0;
  while (std::getline(in, s)) {
    ++line;
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos || s[first] == '#') continue;
    const auto last = s.find_last_not_of(" \t\r");
    CorpusLine c;
    c.line = line;
    c.text = s.substr(first, last - first + 1);
    try {
      c.code = parse(c.text);
    } catch (const std::exception& e) {
      c.error = e.what();
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace vtube
