#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vtube/errors.hpp"

namespace vtube {

enum class Role : std::uint8_t { Over = 0, Under = 1 };
enum class ComponentKind : std::uint8_t { Closed = 0, Open = 1 };

constexpr Role opposite(Role r) noexcept { return r == Role::Over ? Role::Under : Role::Over; }

// One passage of a strand through a classical crossing. sign is +1 for a
// right-handed crossing and is stored on both passages of the crossing.
struct Passage {
  int crossing = 0;
  Role role = Role::Over;
  int sign = +1;

  friend bool operator==(const Passage&, const Passage&) = default;
};

struct Component {
  ComponentKind kind = ComponentKind::Closed;
  std::vector<Passage> passages;

  bool closed() const noexcept { return kind == ComponentKind::Closed; }
  int size() const noexcept { return static_cast<int>(passages.size()); }

  friend bool operator==(const Component&, const Component&) = default;
};

struct PassageRef {
  int component = 0;
  int position = 0;

  friend auto operator<=>(const PassageRef&, const PassageRef&) = default;
};

struct CrossingInfo {
  int label = 0;
  int sign = +1;
  PassageRef over;
  PassageRef under;
};

// Intrinsic dimension m and ambient parameter n of a tube construction.
struct DimensionMeta {
  int m = 1;
  int n = 2;

  DimensionMeta() = default;
  DimensionMeta(int m_, int n_) : m(m_), n(n_) {
    if (m < 1) throw DomainError("m must be >= 1");
    if (n < 2 * m) throw DomainError("n must be >= 2m (got m=" + std::to_string(m) + ", n=" + std::to_string(n) + ")");
  }

  friend bool operator==(const DimensionMeta&, const DimensionMeta&) = default;
};

// A virtual link or linkoid diagram, recorded as signed over/under passage
// sequences per component. Virtual crossings are not represented. Instances
// are validated on construction and immutable afterwards.
class GaussCode {
 public:
  GaussCode() = default;

  explicit GaussCode(std::vector<Component> components) : components_(std::move(components)) { index(); }

  static GaussCode unknot() { return GaussCode({Component{}}); }

  const std::vector<Component>& components() const noexcept { return components_; }
  const Component& component(int i) const { return components_.at(static_cast<std::size_t>(i)); }
  int component_count() const noexcept { return static_cast<int>(components_.size()); }
  int crossing_count() const noexcept { return static_cast<int>(crossings_.size()); }

  int closed_count() const noexcept {
    return static_cast<int>(std::count_if(components_.begin(), components_.end(), [](const Component& c) { return c.closed(); }));
  }
  int open_count() const noexcept { return component_count() - closed_count(); }
  bool all_closed() const noexcept { return open_count() == 0; }

  const Passage& at(PassageRef r) const {
    return components_.at(static_cast<std::size_t>(r.component)).passages.at(static_cast<std::size_t>(r.position));
  }

  // Crossings sorted by label.
  const std::vector<CrossingInfo>& crossings() const noexcept { return crossings_; }

  const CrossingInfo& crossing(int label) const {
    auto it = std::lower_bound(crossings_.begin(), crossings_.end(), label,
                               [](const CrossingInfo& c, int l) { return c.label < l; });
    if (it == crossings_.end() || it->label != label) throw std::out_of_range("no crossing " + std::to_string(label));
    return *it;
  }

  bool has_crossing(int label) const {
    auto it = std::lower_bound(crossings_.begin(), crossings_.end(), label,
                               [](const CrossingInfo& c, int l) { return c.label < l; });
    return it != crossings_.end() && it->label == label;
  }

  int max_label() const noexcept { return crossings_.empty() ? 0 : crossings_.back().label; }

  // Neighbouring passage along the component; closed components wrap,
  // open components stop at their ends.
  std::optional<PassageRef> next(PassageRef r) const {
    const Component& c = component(r.component);
    if (r.position + 1 < c.size()) return PassageRef{r.component, r.position + 1};
    if (c.closed() && c.size() > 1) return PassageRef{r.component, 0};
    return std::nullopt;
  }
  std::optional<PassageRef> prev(PassageRef r) const {
    const Component& c = component(r.component);
    if (r.position > 0) return PassageRef{r.component, r.position - 1};
    if (c.closed() && c.size() > 1) return PassageRef{r.component, c.size() - 1};
    return std::nullopt;
  }

  friend bool operator==(const GaussCode& a, const GaussCode& b) { return a.components_ == b.components_; }

  // Flat integer key: per component [kind, length, passages...], passage
  // encoded as label*4 + role*2 + (sign < 0). Lexicographic order on this
  // key defines the canonical representative.
  std::vector<int> sort_key() const {
    std::vector<int> key;
    for (const auto& c : components_) append_key(key, c, nullptr);
    return key;
  }

  friend bool operator<(const GaussCode& a, const GaussCode& b) { return a.sort_key() < b.sort_key(); }

  static int encode(const Passage& p, int label) noexcept {
    return label * 4 + (p.role == Role::Under ? 2 : 0) + (p.sign < 0 ? 1 : 0);
  }

  static void append_key(std::vector<int>& key, const Component& c, const std::vector<int>* relabel) {
    key.push_back(static_cast<int>(c.kind));
    key.push_back(c.size());
    for (const auto& p : c.passages) key.push_back(encode(p, relabel ? (*relabel)[static_cast<std::size_t>(p.crossing)] : p.crossing));
  }

 private:
  void index();

  std::vector<Component> components_;
  std::vector<CrossingInfo> crossings_;
};

inline void GaussCode::index() {
  struct Seen {
    int label;
    Passage passage;
    PassageRef ref;
  };
  std::vector<Seen> seen;
  for (int ci = 0; ci < component_count(); ++ci) {
    const auto& comp = components_[static_cast<std::size_t>(ci)];
    for (int pi = 0; pi < comp.size(); ++pi) {
      const Passage& p = comp.passages[static_cast<std::size_t>(pi)];
      if (p.crossing <= 0) throw ValidationError(p.crossing, "crossing " + std::to_string(p.crossing) + " is not positive");
      if (p.sign != 1 && p.sign != -1) throw ValidationError(p.crossing, "crossing " + std::to_string(p.crossing) + " has invalid sign");
      seen.push_back({p.crossing, p, {ci, pi}});
    }
  }
  std::stable_sort(seen.begin(), seen.end(), [](const Seen& a, const Seen& b) { return a.label < b.label; });
  crossings_.clear();
  for (std::size_t i = 0; i < seen.size();) {
    std::size_t j = i;
    while (j < seen.size() && seen[j].label == seen[i].label) ++j;
    const int label = seen[i].label;
    const std::string name = "crossing " + std::to_string(label);
    if (j - i == 1) throw ValidationError(label, name + " appears once");
    if (j - i > 2) throw ValidationError(label, name + " appears " + std::to_string(j - i) + " times");
    const Seen& a = seen[i];
    const Seen& b = seen[i + 1];
    if (a.passage.role == b.passage.role)
      throw ValidationError(label, name + " appears twice with role " + (a.passage.role == Role::Over ? "Over" : "Under"));
    if (a.passage.sign != b.passage.sign) throw ValidationError(label, name + " has mismatched signs");
    CrossingInfo info;
    info.label = label;
    info.sign = a.passage.sign;
    info.over = a.passage.role == Role::Over ? a.ref : b.ref;
    info.under = a.passage.role == Role::Over ? b.ref : a.ref;
    crossings_.push_back(info);
    i = j;
  }
}

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  GaussCode parse_link() {
    std::vector<Component> comps;
    skip_ws();
    if (eof()) throw ParseError(pos_, "expected '(' or '['");
    while (!eof()) {
      comps.push_back(parse_component());
      skip_ws();
    }
    return GaussCode(std::move(comps));
  }

 private:
  bool eof() const { return pos_ >= s_.size(); }
  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  Component parse_component() {
    Component c;
    char open = s_[pos_];
    char close;
    if (open == '(') {
      c.kind = ComponentKind::Closed;
      close = ')';
    } else if (open == '[') {
      c.kind = ComponentKind::Open;
      close = ']';
    } else {
      throw ParseError(pos_, std::string("expected '(' or '[' but found '") + open + "'");
    }
    ++pos_;
    skip_ws();
    while (true) {
      if (eof()) throw ParseError(pos_, std::string("unterminated component, expected '") + close + "'");
      if (s_[pos_] == close) {
        ++pos_;
        return c;
      }
      c.passages.push_back(parse_passage());
      skip_ws();
    }
  }

  Passage parse_passage() {
    Passage p;
    char r = s_[pos_];
    if (r == 'O')
      p.role = Role::Over;
    else if (r == 'U')
      p.role = Role::Under;
    else
      throw ParseError(pos_, std::string("expected 'O' or 'U' but found '") + r + "'");
    ++pos_;
    if (eof() || s_[pos_] < '1' || s_[pos_] > '9') throw ParseError(pos_, "expected a nonzero crossing number");
    long long v = 0;
    while (!eof() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1000000000LL) throw ParseError(pos_, "crossing number too large");
      ++pos_;
    }
    p.crossing = static_cast<int>(v);
    if (eof() || (s_[pos_] != '+' && s_[pos_] != '-')) throw ParseError(pos_, "expected '+' or '-'");
    p.sign = s_[pos_] == '+' ? 1 : -1;
    ++pos_;
    return p;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// Throws ParseError for malformed text and ValidationError for bad pairing.
inline GaussCode parse(std::string_view text) { return detail::Parser(text).parse_link(); }

inline std::string to_string(const Passage& p) {
  return std::string(p.role == Role::Over ? "O" : "U") + std::to_string(p.crossing) + (p.sign > 0 ? "+" : "-");
}

inline std::string serialize(const GaussCode& code) {
  std::string out;
  for (const auto& c : code.components()) {
    if (!out.empty()) out += ' ';
    out += c.closed() ? '(' : '[';
    for (std::size_t i = 0; i < c.passages.size(); ++i) {
      if (i) out += ' ';
      out += to_string(c.passages[i]);
    }
    out += c.closed() ? ')' : ']';
  }
  return out;
}

// Vertical mirror: over and under exchange, every crossing changes hand.
inline GaussCode mirror_vertical(const GaussCode& code) {
  std::vector<Component> comps = code.components();
  for (auto& c : comps)
    for (auto& p : c.passages) {
      p.role = opposite(p.role);
      p.sign = -p.sign;
    }
  return GaussCode(std::move(comps));
}

inline int writhe(const GaussCode& code) {
  int w = 0;
  for (const auto& c : code.crossings()) w += c.sign;
  return w;
}

// Restriction to a subset of components; crossings with a passage outside
// the subset are dropped.
inline GaussCode subcode(const GaussCode& code, const std::vector<int>& keep) {
  std::vector<bool> kept(static_cast<std::size_t>(code.component_count()), false);
  for (int k : keep) kept.at(static_cast<std::size_t>(k)) = true;
  std::vector<Component> comps;
  for (int k : keep) {
    Component c{code.component(k).kind, {}};
    for (const auto& p : code.component(k).passages) {
      const CrossingInfo& x = code.crossing(p.crossing);
      if (kept[static_cast<std::size_t>(x.over.component)] && kept[static_cast<std::size_t>(x.under.component)]) c.passages.push_back(p);
    }
    comps.push_back(std::move(c));
  }
  return GaussCode(std::move(comps));
}

}  // namespace vtube
