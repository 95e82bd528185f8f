#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vtube {

// Integer Laurent polynomial in one variable. Zero coefficients are never
// stored, so structural equality is polynomial equality.
class LaurentPolynomial {
 public:
  using Coefficient = std::int64_t;

  LaurentPolynomial() = default;
  explicit LaurentPolynomial(std::string variable) : variable_(std::move(variable)) {}

  static LaurentPolynomial constant(Coefficient c, std::string variable = "A") {
    return monomial(c, 0, std::move(variable));
  }

  static LaurentPolynomial monomial(Coefficient c, int exponent, std::string variable = "A") {
    LaurentPolynomial p(std::move(variable));
    p.add_term(exponent, c);
    return p;
  }

  const std::string& variable() const noexcept { return variable_; }
  const std::map<int, Coefficient>& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  Coefficient coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
  }

  int min_degree() const {
    if (is_zero()) throw std::domain_error("degree of zero polynomial");
    return terms_.begin()->first;
  }
  int max_degree() const {
    if (is_zero()) throw std::domain_error("degree of zero polynomial");
    return terms_.rbegin()->first;
  }
  Coefficient leading_coefficient() const { return is_zero() ? 0 : terms_.rbegin()->second; }
  Coefficient trailing_coefficient() const { return is_zero() ? 0 : terms_.begin()->second; }

  void add_term(int exponent, Coefficient c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPolynomial& operator-=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial r(a.variable_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }

  // Multiplication by the unit c * x^k.
  LaurentPolynomial shifted(int k, Coefficient scale = 1) const {
    LaurentPolynomial r(variable_);
    for (const auto& [e, c] : terms_) r.add_term(e + k, c * scale);
    return r;
  }

  // x -> x^{-1}
  LaurentPolynomial inverted_variable() const {
    LaurentPolynomial r(variable_);
    for (const auto& [e, c] : terms_) r.add_term(-e, c);
    return r;
  }

  LaurentPolynomial pow(int k) const {
    if (k < 0) {
      if (!is_monomial() || (trailing_coefficient() != 1 && trailing_coefficient() != -1))
        throw std::domain_error("negative power of a non-unit");
      LaurentPolynomial inv = monomial(trailing_coefficient(), -min_degree(), variable_);
      return inv.pow(-k);
    }
    LaurentPolynomial r = constant(1, variable_);
    LaurentPolynomial base = *this;
    while (k > 0) {
      if (k & 1) r *= base;
      base *= base;
      k >>= 1;
    }
    return r;
  }

  // Equality ignores the display variable.
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a.terms_ == b.terms_; }

  // Sorted "coeff*x^exp" terms, lowest exponent first.
  std::vector<std::string> term_list() const {
    std::vector<std::string> out;
    for (const auto& [e, c] : terms_) out.push_back(std::to_string(c) + "*" + variable_ + "^" + std::to_string(e));
    return out;
  }

  std::string to_terms_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (const auto& t : term_list()) {
      if (!s.empty()) s += " + ";
      s += t;
    }
    return s;
  }

  // Human form, highest exponent first: "t^2 - t + 1".
  std::string to_pretty_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      auto [e, c] = *it;
      Coefficient mag = c < 0 ? -c : c;
      if (s.empty())
        s += c < 0 ? "-" : "";
      else
        s += c < 0 ? " - " : " + ";
      if (e == 0) {
        s += std::to_string(mag);
        continue;
      }
      if (mag != 1) s += std::to_string(mag);
      s += variable_;
      if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
  }

 private:
  std::string variable_ = "A";
  std::map<int, Coefficient> terms_;
};

}  // namespace vtube
