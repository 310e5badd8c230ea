#pragma once

// The finite stabilizer group Gamma inside T = ker(exp beta), generated by
// the groups Gamma_S attached to bases {a_j : j in S^c}. Elements are
// stored by their logweight tuples (a_{lambda_1}(t), ..., a_{lambda_n}(t)),
// which identify t because T -> T^n is injective.

#include "hypertoric/arrangement.hpp"
#include "hypertoric/errors.hpp"
#include "hypertoric/exactlin.hpp"

#include <deque>
#include <map>
#include <string>
#include <vector>

namespace hypertoric {

using IndexSet = std::vector<std::size_t>;  // sorted, 0-based

struct TorusElement {
  RatVector logweights;  // entries in [0, 1)
  RatVector lift;        // X in Q^n with beta*X integral and frac(X) == logweights

  bool is_identity() const {
    for (const auto& a : logweights)
      if (a != 0) return false;
    return true;
  }
  friend bool operator==(const TorusElement& a, const TorusElement& b) {
    return a.logweights == b.logweights;
  }
  friend bool operator<(const TorusElement& a, const TorusElement& b) {
    return a.logweights < b.logweights;
  }
};

inline RatVector add_logweights(const RatVector& a, const RatVector& b) {
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = frac_of(a[i] + b[i]);
  return out;
}

inline TorusElement multiply(const TorusElement& a, const TorusElement& b) {
  TorusElement t;
  t.logweights = add_logweights(a.logweights, b.logweights);
  t.lift.resize(a.lift.size());
  for (std::size_t i = 0; i < a.lift.size(); ++i) t.lift[i] = a.lift[i] + b.lift[i];
  return t;
}

inline TorusElement identity_element(std::size_t n) {
  return {RatVector(n, Rational(0)), RatVector(n, Rational(0))};
}

// All S^c with |S^c| = d and det(a_j : j in S^c) != 0, lexicographic.
inline std::vector<IndexSet> enumerate_bases(const IntMatrix& normals) {
  std::vector<IndexSet> out;
  detail::for_each_subset(normals.rows(), normals.cols(), [&](std::span<const std::size_t> s) {
    if (determinant(normals.select_rows(s)) != 0) out.emplace_back(s.begin(), s.end());
    return true;
  });
  return out;
}

// Elements of Gamma_S = ∩_{i in S} ker(exp lambda_i), built from the
// isomorphism with (span_Q{a_j} ∩ Z^d) / span_Z{a_j}, j in S^c: a coset
// representative y is written both as sum c_i a_i (c integral) and as
// sum d_j a_j over the basis (d rational); the lift has x_k = c_k on S and
// c_k - d_k on S^c.
inline std::vector<TorusElement> gamma_S(const ArrangementSpec& spec, const IndexSet& basis) {
  const std::size_t n = spec.n(), d = spec.d();
  if (basis.size() != d) throw std::invalid_argument("gamma_S: complement must have d elements");
  IntMatrix sub = spec.normals.select_rows(basis);  // d x d, rows a_j
  if (determinant(sub) == 0) throw std::invalid_argument("gamma_S: normals do not form a basis");

  std::vector<IntVector> vecs;
  for (std::size_t j : basis) vecs.push_back(spec.normals.row(j));
  LatticeQuotient q = lattice_quotient(vecs, d);
  const IntMatrix beta = spec.beta();
  const IntMatrix sub_t = sub.transpose();  // columns a_j

  std::vector<TorusElement> out;
  IntVector digits(q.invariant_factors.size(), Integer(0));
  for (;;) {
    IntVector y(d, Integer(0));
    for (std::size_t f = 0; f < digits.size(); ++f)
      for (std::size_t r = 0; r < d; ++r) y[r] += digits[f] * q.coset_reps[f][r];

    auto c = integer_solve(beta, y);
    if (!c) throw ValidationError("gamma_S: normals do not span Z^d");
    RatVector yq(y.begin(), y.end());
    auto coeffs = rational_feasible(sub_t, yq);
    RatVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = Rational((*c)[i]);
    for (std::size_t jj = 0; jj < d; ++jj) x[basis[jj]] -= (*coeffs)[jj];

    TorusElement t;
    t.logweights.resize(n);
    for (std::size_t i = 0; i < n; ++i) t.logweights[i] = frac_of(x[i]);
    t.lift = std::move(x);
    out.push_back(std::move(t));

    // Mixed-radix increment over the cyclic factors.
    std::size_t pos = 0;
    while (pos < digits.size()) {
      digits[pos] += 1;
      if (digits[pos] < q.invariant_factors[pos]) break;
      digits[pos] = 0;
      ++pos;
    }
    if (pos == digits.size()) break;
  }
  return out;
}

struct SectorPairData {
  IndexSet A, B, C;
};

class StabilizerGroup {
 public:
  StabilizerGroup() = default;

  // Elements must already be closed; they get sorted lexicographically.
  explicit StabilizerGroup(std::vector<TorusElement> elements) : elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    for (std::size_t i = 0; i < elements_.size(); ++i) index_[elements_[i].logweights] = i;
    const std::size_t m = elements_.size();
    fixed_.resize(m);
    moved_.resize(m);
    for (std::size_t e = 0; e < m; ++e)
      for (std::size_t i = 0; i < elements_[e].logweights.size(); ++i)
        (elements_[e].logweights[i] == 0 ? fixed_ : moved_)[e].push_back(i);
    table_.assign(m, std::vector<std::size_t>(m));
    inverse_.assign(m, 0);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        RatVector prod = add_logweights(elements_[a].logweights, elements_[b].logweights);
        auto it = index_.find(prod);
        if (it == index_.end()) throw std::logic_error("stabilizer group is not closed");
        table_[a][b] = it->second;
        if (it->second == 0) inverse_[a] = b;
      }
  }

  std::size_t order() const { return elements_.size(); }
  const std::vector<TorusElement>& elements() const { return elements_; }
  const TorusElement& element(std::size_t e) const { return elements_[e]; }
  std::size_t identity() const { return 0; }

  // S(t): coordinates fixed by t.
  const IndexSet& fixed(std::size_t e) const { return fixed_[e]; }
  // S(t)^c.
  const IndexSet& moved(std::size_t e) const { return moved_[e]; }
  // Each moved coordinate contributes a_lambda(t) + a_{-lambda}(t) = 1,
  // since the normal weights come in pairs +-lambda_i.
  std::size_t age(std::size_t e) const { return moved_[e].size(); }
  std::size_t degree(std::size_t e) const { return 2 * age(e); }

  std::size_t multiply(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }

  std::optional<std::size_t> index_of(const RatVector& logweights) const {
    auto it = index_.find(logweights);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

 private:
  std::vector<TorusElement> elements_;
  std::map<RatVector, std::size_t> index_;
  std::vector<IndexSet> fixed_, moved_;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inverse_;
};

struct GroupOptions {
  std::size_t element_budget = 1000000;
};

// Closure of the union of all Gamma_S under logweight addition, breadth
// first against that union.
inline StabilizerGroup full_group(const ArrangementSpec& spec, const GroupOptions& opts = {}) {
  const std::size_t n = spec.n();
  std::vector<TorusElement> generators;
  std::map<RatVector, TorusElement> seen;
  seen.emplace(RatVector(n, Rational(0)), identity_element(n));
  auto over_budget = [&] {
    if (seen.size() > opts.element_budget)
      throw BudgetExceededError("stabilizer group exceeds element budget of " +
                                std::to_string(opts.element_budget));
  };
  for (const auto& basis : enumerate_bases(spec.normals))
    for (auto& t : gamma_S(spec, basis))
      if (!t.is_identity() && seen.emplace(t.logweights, t).second) {
        over_budget();
        generators.push_back(t);
      }

  std::deque<TorusElement> queue(generators.begin(), generators.end());
  while (!queue.empty()) {
    TorusElement cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators) {
      TorusElement next = hypertoric::multiply(cur, g);
      if (seen.contains(next.logweights)) continue;
      seen.emplace(next.logweights, next);
      over_budget();
      queue.push_back(std::move(next));
    }
  }
  std::vector<TorusElement> all;
  all.reserve(seen.size());
  for (auto& [key, t] : seen) all.push_back(std::move(t));
  return StabilizerGroup(std::move(all));
}

inline SectorPairData abc_sets(const StabilizerGroup& group, std::size_t t1, std::size_t t2) {
  SectorPairData out;
  const std::size_t t12 = group.multiply(t1, t2);
  const auto& a1 = group.element(t1).logweights;
  const auto& a2 = group.element(t2).logweights;
  const auto& a12 = group.element(t12).logweights;
  for (std::size_t i = 0; i < a1.size(); ++i) {
    if (a1[i] == 0 || a2[i] == 0) continue;
    if (a12[i] == 0) {
      out.A.push_back(i);
      continue;
    }
    // a1 + a2 - a12 is 0 or 1 because all three lie in [0, 1).
    if (a1[i] + a2[i] - a12[i] == 0)
      out.B.push_back(i);
    else
      out.C.push_back(i);
  }
  return out;
}

}  // namespace hypertoric
