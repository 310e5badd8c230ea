#pragma once

// Dense-exponent monomials and sparse rational polynomials over a fixed
// list of generators.

#include "hypertoric/exactlin.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace hypertoric {

struct Monomial {
  std::vector<std::uint32_t> exps;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> e) : exps(std::move(e)) {}

  static Monomial variable(std::size_t nvars, std::size_t var, std::uint32_t power = 1) {
    Monomial m(nvars);
    m.exps[var] = power;
    return m;
  }

  std::size_t nvars() const { return exps.size(); }
  bool is_one() const {
    for (auto e : exps)
      if (e) return false;
    return true;
  }

  // sum_i weights[i] * exps[i]
  std::uint64_t weighted_degree(const std::vector<std::uint32_t>& weights) const {
    std::uint64_t deg = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) deg += std::uint64_t(weights[i]) * exps[i];
    return deg;
  }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps.size(); ++i)
      if (exps[i] > other.exps[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m(a.nvars());
    for (std::size_t i = 0; i < a.exps.size(); ++i) m.exps[i] = a.exps[i] + b.exps[i];
    return m;
  }
  // Exact quotient; b must divide a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial m(a.nvars());
    for (std::size_t i = 0; i < a.exps.size(); ++i) {
      if (b.exps[i] > a.exps[i]) throw std::invalid_argument("monomial does not divide");
      m.exps[i] = a.exps[i] - b.exps[i];
    }
    return m;
  }
  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m(a.nvars());
    for (std::size_t i = 0; i < a.exps.size(); ++i) m.exps[i] = std::max(a.exps[i], b.exps[i]);
    return m;
  }
  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.exps.size(); ++i)
      if (a.exps[i] && b.exps[i]) return false;
    return true;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Canonical storage order is lexicographic on exponent vectors; monomial
// orders for elimination live with the Groebner code.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial monomial(const Monomial& m, const Rational& c = 1) {
    Polynomial p(m.nvars());
    p.add_term(m, c);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Monomial& m, const Rational& c) {
    if (m.nvars() != nvars_) throw std::invalid_argument("monomial arity mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  // Homogeneity under the given generator weights.
  bool is_homogeneous(const std::vector<std::uint32_t>& weights) const {
    if (terms_.empty()) return true;
    const auto deg = terms_.begin()->first.weighted_degree(weights);
    for (const auto& [m, c] : terms_)
      if (m.weighted_degree(weights) != deg) return false;
    return true;
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial p(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) p.add_term(ma * mb, ca * cb);
    return p;
  }
  friend Polynomial operator*(const Rational& s, const Polynomial& a) {
    Polynomial p(a.nvars_);
    for (const auto& [m, c] : a.terms_) p.add_term(m, s * c);
    return p;
  }
  friend Polynomial operator*(const Monomial& s, const Polynomial& a) {
    Polynomial p(a.nvars_);
    for (const auto& [m, c] : a.terms_) p.terms_.emplace(s * m, c);
    return p;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t nvars_ = 0;
  TermMap terms_;
};

}  // namespace hypertoric
