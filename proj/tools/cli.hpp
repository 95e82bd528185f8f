#pragma once

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vtube/catalog.hpp"
#include "vtube/io.hpp"
#include "vtube/spin.hpp"
#include "vtube/vertical_double.hpp"
#include "vtube/vtube.hpp"

namespace vtube::cli {

enum Exit : int { kOk = 0, kInvalid = 1, kExhausted = 2, kInternal = 3 };

inline MoveSet parse_move_set(const std::string& spec) {
  if (spec == "virtual") return MoveSet::virtual_moves();
  if (spec == "welded") return MoveSet::welded();
  if (spec == "linkoid") return MoveSet::linkoid();
  MoveSet s;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "R1") s = s.with(MoveFamily::R1);
    else if (item == "R2") s = s.with(MoveFamily::R2);
    else if (item == "R3") s = s.with(MoveFamily::R3);
    else if (item == "OC") s = s.with(MoveFamily::OC);
    else if (item == "EndUnder") s = s.with(MoveFamily::EndUnder);
    else throw DomainError("unknown move family '" + item + "'");
  }
  if (s.bits() == 0) throw DomainError("empty move set");
  return s;
}

inline unsigned thread_count() {
  if (const char* v = std::getenv("VTUBE_THREADS")) {
    const int n = std::atoi(v);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return 1;
}

// Rows computed in chunks, emitted by input position.
template <class F>
auto map_ordered(std::size_t count, unsigned threads, F f) {
  using R = decltype(f(std::size_t{0}));
  std::vector<R> out(count);
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
    return out;
  }
  std::vector<std::future<void>> jobs;
  for (unsigned t = 0; t < threads; ++t)
    jobs.push_back(std::async(std::launch::async, [&, t] {
      for (std::size_t i = t; i < count; i += threads) out[i] = f(i);
    }));
  for (auto& j : jobs) j.get();
  return out;
}

inline int cmd_parse(const std::string& code, const std::string& file, std::ostream& out, std::ostream& err) {
  if (file.empty()) {
    out << serialize(canonical_form(resolve(code))) << "\n";
    return kOk;
  }
  std::ifstream in(file);
  if (!in) throw DomainError("cannot open " + file);
  int status = kOk;
  for (const auto& line : read_corpus(in)) {
    if (line.code) {
      out << serialize(canonical_form(*line.code)) << "\n";
    } else {
      err << file << ":" << line.line << ": " << line.error << "\n";
      status = kInvalid;
    }
  }
  return status;
}

struct InvariantFlags {
  bool all = false;
  bool f_poly = false;
  bool bracket = false;
  bool alexander = false;
  bool colorings = false;
  bool homs = false;
  bool group = false;
  bool as_json = false;
  bool as_tsv = false;
};

inline std::vector<std::string> selected_invariants(const InvariantFlags& f) {
  std::vector<std::string> names;
  const bool none = !(f.f_poly || f.bracket || f.alexander || f.colorings || f.homs || f.group);
  for (const auto& n : invariant_names()) {
    bool want = f.all || none;
    if (f.f_poly && n == "f-polynomial") want = true;
    if (f.bracket && n == "bracket") want = true;
    if (f.alexander && n == "alexander") want = true;
    if (f.colorings && n.rfind("colorings", 0) == 0) want = true;
    if (f.homs && n.rfind("homs", 0) == 0) want = true;
    if (f.group && (n == "group" || n == "abelianization")) want = true;
    if (want) names.push_back(n);
  }
  return names;
}

inline int cmd_invariants(const std::string& code, const InvariantFlags& flags, std::ostream& out) {
  const auto names = selected_invariants(flags);
  const InvariantReport r = invariant_report(resolve(code), names);
  if (flags.as_json) {
    out << json(r).dump(2) << "\n";
  } else if (flags.as_tsv) {
    out << "code";
    for (const auto& e : r.entries) out << "\t" << e.name;
    out << "\n" << r.code;
    for (const auto& e : r.entries) out << "\t" << tsv_cell(e);
    out << "\n";
  } else {
    out << "code: " << r.code << "\n";
    for (const auto& e : r.entries) {
      out << e.name << ": ";
      if (!e.applicable)
        out << "n/a (" << e.reason << ")\n";
      else if (e.name == "f-polynomial")
        out << "f = " << e.text << "\n";
      else
        out << e.text << "\n";
    }
  }
  return kOk;
}

inline int cmd_search(const std::string& source, const std::string& target, const std::string& moves, int depth, std::size_t nodes,
                      std::ostream& out) {
  const GaussCode a = resolve(source), b = resolve(target);
  SearchOptions opts;
  opts.threads = thread_count();
  const SearchResult r = search_equivalence(a, b, parse_move_set(moves), SearchBudget(depth, nodes), opts);
  out << to_string(r.verdict);
  if (r.verdict == Verdict::Found) out << " (" << r.certificate->path.size() << " moves)";
  if (r.verdict == Verdict::DistinctByInvariant)
    out << " " << r.witness->name << ": " << r.witness->source_value << " vs " << r.witness->target_value;
  out << "\n" << json(r).dump(2) << "\n";
  return r.verdict == Verdict::Exhausted ? kExhausted : kOk;
}

inline int cmd_tube(const std::string& code, int n, bool check, std::ostream& out) {
  const GaussCode k = resolve(code);
  const TubeComplex t = tube(k, n);
  json j{{"code", serialize(k)}, {"complex", t}, {"diagram", containment_diagram(t)}, {"euler_characteristic", euler_characteristic(t)}};
  out << j.dump(2) << "\n";
  if (!check) return kOk;
  const auto lhs = canonically_relabeled(tube_presentation(t));
  const auto rhs = canonically_relabeled(wirtinger_group(k));
  const bool equal = lhs == rhs;
  out << "tube presentation:     " << to_string(lhs) << "\n";
  out << "wirtinger presentation: " << to_string(rhs) << "\n";
  out << "presentations equal: " << (equal ? "true" : "false") << "\n";
  return equal ? kOk : kInvalid;
}

inline int cmd_vd(const std::string& code, int n, std::ostream& out) {
  auto [vd, pairing] = vertical_double(resolve(code));
  const ContainmentDiagram d = containment_diagram(tube(vd, n), pairing);
  const bool stack = is_stack_form(d);
  json j{{"code", serialize(vd)}, {"pairing", pairing}, {"diagram", d}, {"stack_form", stack}};
  out << j.dump(2) << "\n";
  out << "stack form: " << (stack ? "true" : "false") << "\n";
  return stack ? kOk : kInvalid;
}

inline int cmd_table(const std::string& file, const std::string& list, std::ostream& out, std::ostream& err) {
  std::ifstream in(file);
  if (!in) throw DomainError("cannot open " + file);
  std::vector<std::string> names;
  if (list == "all") {
    names = invariant_names();
  } else {
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) names.push_back(item);
  }
  for (const auto& n : names)
    if (std::find(invariant_names().begin(), invariant_names().end(), n) == invariant_names().end())
      throw DomainError("unknown invariant '" + n + "'");
  const auto lines = read_corpus(in);
  const auto rows = map_ordered(lines.size(), thread_count(), [&](std::size_t i) {
    const CorpusLine& l = lines[i];
    std::string row = std::to_string(l.line) + "\t";
    std::string error = l.error;
    bool ok = false;
    if (l.code) {
      try {
        const InvariantReport r = invariant_report(*l.code, names);
        row += r.code;
        for (const auto& e : r.entries) row += "\t" + tsv_cell(e);
        ok = true;
      } catch (const std::exception& e) {
        error = e.what();
      }
    }
    if (!ok) {
      row += l.text;
      for (std::size_t k = 0; k < names.size(); ++k) row += "\t";
    }
    return std::pair{row + "\t" + error, ok};
  });
  out << tsv_header(names) << "\n";
  bool any = false;
  for (const auto& [row, ok] : rows) {
    out << row << "\n";
    any = any || ok;
  }
  if (!any) err << "no row could be computed\n";
  return any ? kOk : kInvalid;
}

// argv-style entry point; args excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Virtual and welded knots, their invariants, and the tube map", "vtube"};
  app.require_subcommand(1);

  std::string code, code2, file, moves = "virtual", table_list = "all";
  int n = 2, depth = 10;
  std::size_t nodes = 1000000;
  bool check = false;
  InvariantFlags flags;

  auto* parse_cmd = app.add_subcommand("parse", "Print the canonical form of a code or of every line in a corpus file");
  parse_cmd->add_option("code", code, "Gauss code or catalog name");
  parse_cmd->add_option("--file", file, "Corpus file, one code per line");

  auto* inv = app.add_subcommand("invariants", "Compute invariants of a code");
  inv->add_option("code", code, "Gauss code or catalog name")->required();
  inv->add_flag("--all", flags.all, "Every invariant");
  inv->add_flag("--f-poly", flags.f_poly, "Writhe-normalised bracket");
  inv->add_flag("--bracket", flags.bracket, "Kauffman bracket");
  inv->add_flag("--alexander", flags.alexander, "Alexander polynomial");
  inv->add_flag("--colorings", flags.colorings, "Dihedral quandle colorings");
  inv->add_flag("--homs", flags.homs, "Homomorphisms into symmetric groups");
  inv->add_flag("--group", flags.group, "Group presentation and abelianization");
  auto* fmt_json = inv->add_flag("--json", flags.as_json, "JSON report");
  inv->add_flag("--tsv", flags.as_tsv, "TSV report")->excludes(fmt_json);

  auto* search = app.add_subcommand("search", "Search for a move sequence between two codes");
  search->add_option("source", code, "Source code")->required();
  search->add_option("target", code2, "Target code")->required();
  search->add_option("--moves", moves, "virtual, welded, linkoid, or a comma list of R1,R2,R3,OC,EndUnder")->capture_default_str();
  search->add_option("--depth", depth, "Maximum path length")->capture_default_str();
  search->add_option("--nodes", nodes, "Maximum number of visited codes")->capture_default_str();

  auto* tube_cmd = app.add_subcommand("tube", "Build the tube complex of a code");
  tube_cmd->add_option("code", code, "Gauss code or catalog name")->required();
  tube_cmd->add_option("-n", n, "Ambient parameter, at least 2")->capture_default_str();
  tube_cmd->add_flag("--check", check, "Compare the tube presentation with the Wirtinger presentation");

  auto* vd = app.add_subcommand("vd", "Vertical double and its stack-form check");
  vd->add_option("code", code, "Gauss code or catalog name")->required();
  vd->add_option("-n", n, "Ambient parameter, at least 2")->capture_default_str();

  auto* table = app.add_subcommand("table", "Tabulate invariants of a corpus file as TSV");
  table->add_option("file", file, "Corpus file")->required();
  table->add_option("--invariants", table_list, "Comma list of invariant names, or all")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kInvalid;
  }

  try {
    if (*parse_cmd) {
      if (code.empty() == file.empty()) throw DomainError("give either a code or --file");
      return cmd_parse(code, file, out, err);
    }
    if (*inv) return cmd_invariants(code, flags, out);
    if (*search) return cmd_search(code, code2, moves, depth, nodes, out);
    if (*tube_cmd) return cmd_tube(code, n, check, out);
    if (*vd) return cmd_vd(code, n, out);
    if (*table) return cmd_table(file, table_list, out, err);
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return kInvalid;
  } catch (const ValidationError& e) {
    err << e.what() << "\n";
    return kInvalid;
  } catch (const DomainError& e) {
    err << e.what() << "\n";
    return kInvalid;
  } catch (const MoveError& e) {
    err << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInvalid;
}

}  // namespace vtube::cli
