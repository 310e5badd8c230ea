#pragma once

// Graded dimensions of a presented ring by brute-force linear algebra:
// in each degree, the span of {m * g : g a relation, m a monomial} inside
// the space of all monomials of that degree. No Groebner machinery.

#include "hypertoric/exactlin.hpp"
#include "hypertoric/groebner.hpp"  // PoincarePolynomial only
#include "hypertoric/polynomial.hpp"
#include "hypertoric/presentation.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hypertoric {

namespace detail {

// All monomials of exact weighted degree `degree`, lexicographic.
inline std::vector<Monomial> monomials_of_degree(const std::vector<std::uint32_t>& weights,
                                                 std::uint64_t degree) {
  std::vector<Monomial> out;
  Monomial cur(weights.size());
  auto rec = [&](auto&& self, std::size_t v, std::uint64_t remaining) -> void {
    if (v == weights.size()) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    for (std::uint32_t e = 0; std::uint64_t(e) * weights[v] <= remaining; ++e) {
      cur.exps[v] = e;
      self(self, v + 1, remaining - std::uint64_t(e) * weights[v]);
    }
    cur.exps[v] = 0;
  };
  rec(rec, 0, degree);
  return out;
}

// Sparse integer row: (column, value) sorted by column, no zeros.
using SparseRow = std::vector<std::pair<std::size_t, Integer>>;

inline void divide_content(SparseRow& row) {
  Integer g = 0;
  for (const auto& [c, v] : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (g > 1)
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  if (!row.empty() && row.front().second < 0)
    for (auto& [c, v] : row) v = -v;
}

// Incremental fraction-free echelon form keyed by leading column.
class SparseEchelon {
 public:
  // Returns true if the row was independent of the rows seen so far.
  bool insert(SparseRow row) {
    divide_content(row);
    while (!row.empty()) {
      auto it = pivots_.find(row.front().first);
      if (it == pivots_.end()) {
        pivots_.emplace(row.front().first, std::move(row));
        return true;
      }
      const SparseRow& piv = it->second;
      const Integer a = piv.front().second;  // positive
      const Integer b = row.front().second;
      // row <- a*row - b*piv, which cancels the leading column.
      SparseRow next;
      next.reserve(row.size() + piv.size());
      std::size_t i = 0, j = 0;
      while (i < row.size() || j < piv.size()) {
        if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
          next.emplace_back(row[i].first, a * row[i].second);
          ++i;
        } else if (i == row.size() || piv[j].first < row[i].first) {
          next.emplace_back(piv[j].first, -b * piv[j].second);
          ++j;
        } else {
          Integer v = a * row[i].second - b * piv[j].second;
          if (v != 0) next.emplace_back(row[i].first, std::move(v));
          ++i;
          ++j;
        }
      }
      row = std::move(next);
      divide_content(row);
    }
    return false;
  }
  std::size_t rank() const { return pivots_.size(); }

 private:
  std::map<std::size_t, SparseRow> pivots_;
};

}  // namespace detail

// dim of the degree-`degree` piece of the quotient.
inline std::uint64_t graded_dimension(const RingPresentation& pres, std::uint64_t degree) {
  const auto weights = pres.degrees();
  const auto basis = detail::monomials_of_degree(weights, degree);
  if (basis.empty()) return 0;
  std::map<Monomial, std::size_t> column;
  for (std::size_t i = 0; i < basis.size(); ++i) column.emplace(basis[i], i);

  detail::SparseEchelon echelon;
  for (const auto& rel : pres.relations) {
    const Polynomial& g = rel.poly;
    if (g.is_zero()) continue;
    const std::uint64_t gdeg = g.terms().begin()->first.weighted_degree(weights);
    if (gdeg > degree) continue;
    // Clear denominators once per relation.
    Integer den = 1;
    for (const auto& [m, c] : g.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<std::pair<Monomial, Integer>> scaled;
    for (const auto& [m, c] : g.terms()) {
      Rational v = c * Rational(den);
      scaled.emplace_back(m, v.get_num());
    }
    for (const auto& mult : detail::monomials_of_degree(weights, degree - gdeg)) {
      if (echelon.rank() == basis.size()) return 0;
      detail::SparseRow row;
      for (const auto& [m, v] : scaled) row.emplace_back(column.at(mult * m), v);
      std::sort(row.begin(), row.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      echelon.insert(std::move(row));
    }
  }
  return basis.size() - echelon.rank();
}

struct OracleResult {
  PoincarePolynomial poincare;  // includes zero coefficients up to max_degree
  std::uint64_t max_degree = 0;
  bool tail_warning = false;    // top two computed degrees nonzero
  std::string warning;
};

// Graded dimensions for every even degree up to max_degree. Once a run of
// zero pieces as wide as the largest generator degree is found, every higher
// piece is zero too (each higher monomial has a factor landing in the run),
// so those degrees are filled in without building matrices.
inline OracleResult oracle_poincare(const RingPresentation& pres, std::uint64_t max_degree) {
  if (max_degree % 2 != 0) throw std::invalid_argument("oracle_poincare: max degree must be even");
  OracleResult res;
  res.max_degree = max_degree;
  std::uint64_t widest = 2;
  for (auto w : pres.degrees()) widest = std::max<std::uint64_t>(widest, w);

  std::uint64_t zero_run = 0;
  bool vanished = false;
  for (std::uint64_t deg = 0; deg <= max_degree; deg += 2) {
    std::uint64_t dim = vanished ? 0 : graded_dimension(pres, deg);
    res.poincare[deg] = dim;
    zero_run = dim == 0 ? zero_run + 2 : 0;
    if (deg > 0 && zero_run >= widest) vanished = true;
  }
  if (max_degree >= 2 && res.poincare[max_degree] != 0 && res.poincare[max_degree - 2] != 0) {
    res.tail_warning = true;
    res.warning = "top two computed degrees are nonzero; max degree may be too small";
  }
  return res;
}

// Drop zero coefficients so the result compares equal to a Groebner-side
// Poincare polynomial.
inline PoincarePolynomial trimmed(const PoincarePolynomial& p) {
  PoincarePolynomial out;
  for (const auto& [d, v] : p)
    if (v) out.emplace(d, v);
  return out;
}

}  // namespace hypertoric
