#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <vector>

#include "vtube/errors.hpp"
#include "vtube/gauss_code.hpp"
#include "vtube/group.hpp"
#include "vtube/laurent.hpp"
#include "vtube/wirtinger.hpp"

namespace vtube {

namespace poly {

// Dense polynomial in Z[t], index = degree, no trailing zeros.
using Poly = std::vector<std::int64_t>;

inline void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly from_laurent(const LaurentPolynomial& l, int shift) {
  Poly p;
  for (const auto& [e, c] : l.terms()) {
    const int d = e + shift;
    if (d < 0) throw std::logic_error("negative degree after shift");
    if (static_cast<int>(p.size()) <= d) p.resize(static_cast<std::size_t>(d) + 1, 0);
    p[static_cast<std::size_t>(d)] = c;
  }
  return p;
}

inline LaurentPolynomial to_laurent(const Poly& p, const std::string& var) {
  LaurentPolynomial l(var);
  for (std::size_t i = 0; i < p.size(); ++i) l.add_term(static_cast<int>(i), p[i]);
  return l;
}

inline Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

inline Poly sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// a / b when b divides a exactly in Z[t].
inline Poly div_exact(Poly a, const Poly& b) {
  if (b.empty()) throw std::domain_error("division by zero polynomial");
  trim(a);
  if (a.empty()) return {};
  if (a.size() < b.size()) throw std::logic_error("inexact polynomial division");
  Poly q(a.size() - b.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    const std::int64_t lead = a[k + b.size() - 1];
    if (lead % b.back() != 0) throw std::logic_error("inexact polynomial division");
    const std::int64_t c = lead / b.back();
    q[k] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
  }
  trim(a);
  if (!a.empty()) throw std::logic_error("inexact polynomial division");
  trim(q);
  return q;
}

inline std::int64_t content(const Poly& p) {
  std::int64_t g = 0;
  for (auto c : p) g = std::gcd(g, c);
  return g;
}

inline Poly primitive(Poly p) {
  std::int64_t g = content(p);
  if (g > 1)
    for (auto& c : p) c /= g;
  return p;
}

// Pseudo-remainder of a by b.
inline Poly prem(Poly a, const Poly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const std::int64_t la = a.back(), lb = b.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& c : a) c *= lb;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= la * b[j];
    trim(a);
    a = primitive(a);
  }
  return a;
}

// gcd in Z[t], positive leading coefficient.
inline Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  if (a.empty()) return b.empty() ? Poly{} : (b.back() < 0 ? sub({}, b) : b);
  if (b.empty()) return a.back() < 0 ? sub({}, a) : a;
  const std::int64_t c = std::gcd(content(a), content(b));
  a = primitive(a);
  b = primitive(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    Poly r = prem(a, b);
    a = std::move(b);
    b = primitive(std::move(r));
  }
  a = primitive(a);
  for (auto& x : a) x *= c;
  if (a.back() < 0)
    for (auto& x : a) x = -x;
  return a;
}

// Fraction-free (Bareiss) determinant over Z[t].
inline Poly determinant(std::vector<std::vector<Poly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return {1};
  int sign = 1;
  Poly prev{1};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].empty()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].empty()) ++swap_row;
      if (swap_row == n) return {};
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = div_exact(sub(mul(m[i][j], m[k][k]), mul(m[i][k], m[k][j])), prev);
    prev = m[k][k];
  }
  Poly d = m[n - 1][n - 1];
  if (sign < 0)
    for (auto& c : d) c = -c;
  return d;
}

}  // namespace poly

// Fox derivative d(word)/d(x_gen) under the map sending every generator to t.
inline LaurentPolynomial fox_derivative_abelian(const Word& w, int gen, const std::string& var = "t") {
  LaurentPolynomial out(var);
  int prefix = 0;
  for (int x : w) {
    if (std::abs(x) == gen) {
      if (x > 0)
        out.add_term(prefix, 1);
      else
        out.add_term(prefix - 1, -1);
    }
    prefix += x > 0 ? 1 : -1;
  }
  return out;
}

// Alexander matrix: rows = relators, columns = generators.
inline std::vector<std::vector<LaurentPolynomial>> alexander_matrix(const GroupPresentation& p) {
  std::vector<std::vector<LaurentPolynomial>> m;
  for (const auto& r : p.relators) {
    std::vector<LaurentPolynomial> row;
    for (int g = 1; g <= p.generator_count; ++g) row.push_back(fox_derivative_abelian(r, g));
    m.push_back(std::move(row));
  }
  return m;
}

// Fix the unit ambiguity ±t^k: lowest degree 0, positive leading coefficient.
inline LaurentPolynomial normalize_unit(const LaurentPolynomial& p) {
  if (p.is_zero()) return p;
  LaurentPolynomial r = p.shifted(-p.min_degree());
  if (r.leading_coefficient() < 0) r = -r;
  return r;
}

// gcd of the maximal minors of the Alexander matrix with one column
// removed. Rows sum to zero against (t-1), so the result does not depend on
// which column is removed.
inline LaurentPolynomial alexander_from_presentation(const GroupPresentation& p, int deleted_column = 0) {
  const int cols = p.generator_count;
  if (deleted_column < 0 || deleted_column >= cols) throw DomainError("deleted column out of range");
  const auto a = alexander_matrix(p);
  const int rows = static_cast<int>(a.size());
  const int k = cols - 1;  // minor size
  if (k == 0) return LaurentPolynomial::constant(1, "t");
  if (rows < k) return LaurentPolynomial("t");

  // Row-wise shift to Z[t]; multiplying a row by t^s changes minors by units.
  std::vector<std::vector<poly::Poly>> m;
  for (const auto& row : a) {
    int lo = 0;
    bool any = false;
    for (int j = 0; j < cols; ++j) {
      if (j == deleted_column || row[static_cast<std::size_t>(j)].is_zero()) continue;
      lo = any ? std::min(lo, row[static_cast<std::size_t>(j)].min_degree()) : row[static_cast<std::size_t>(j)].min_degree();
      any = true;
    }
    std::vector<poly::Poly> prow;
    for (int j = 0; j < cols; ++j)
      if (j != deleted_column) prow.push_back(poly::from_laurent(row[static_cast<std::size_t>(j)], -lo));
    m.push_back(std::move(prow));
  }

  // gcd over all choices of k rows (rows - k deletions); Wirtinger
  // presentations of knots have rows == cols, so this is one deleted row.
  poly::Poly g;
  std::vector<int> pick(static_cast<std::size_t>(k));
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    std::vector<std::vector<poly::Poly>> sub;
    for (int r : pick) sub.push_back(m[static_cast<std::size_t>(r)]);
    g = poly::gcd(g, poly::determinant(std::move(sub)));
    if (g.size() == 1 && g[0] == 1) break;
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == rows - k + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return normalize_unit(poly::to_laurent(g, "t"));
}

// Knots only: exactly one component, closed.
inline LaurentPolynomial alexander_polynomial(const GaussCode& code, int deleted_column = 0) {
  if (code.component_count() != 1 || !code.all_closed())
    throw DomainError("Alexander polynomial needs exactly one closed component");
  return alexander_from_presentation(wirtinger_group(code), deleted_column);
}

}  // namespace vtube
