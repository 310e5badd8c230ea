#pragma once

// Buchberger's algorithm over Q for ideals that are homogeneous in a
// positive weighted grading, plus the graded quotient data that follows
// from a reduced basis: normal forms, standard monomials, Poincare series.

#include "hypertoric/errors.hpp"
#include "hypertoric/exactlin.hpp"
#include "hypertoric/polynomial.hpp"
#include "hypertoric/presentation.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

namespace hypertoric {

// Variables 0..n_u-1 are the u's, the rest are gammas. Monomials compare by
// weighted degree, then by number of gamma factors, then reverse
// lexicographically on the variable list gamma_1..gamma_m, u_1..u_n (so u_n
// is the cheapest variable). The middle step makes gamma_{t1} gamma_{t2}
// lead every sector-product relation.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  MonomialOrder(std::vector<std::uint32_t> weights, std::size_t n_u)
      : weights_(std::move(weights)), n_u_(n_u) {
    for (auto w : weights_)
      if (w == 0) throw std::invalid_argument("monomial order needs positive weights");
  }
  static MonomialOrder for_presentation(const RingPresentation& pres) {
    return MonomialOrder(pres.degrees(), pres.n_u);
  }

  const std::vector<std::uint32_t>& weights() const { return weights_; }
  std::size_t n_u() const { return n_u_; }
  std::size_t nvars() const { return weights_.size(); }

  std::uint64_t degree(const Monomial& m) const { return m.weighted_degree(weights_); }

  std::uint64_t gamma_degree(const Monomial& m) const {
    std::uint64_t g = 0;
    for (std::size_t v = n_u_; v < m.exps.size(); ++v) g += m.exps[v];
    return g;
  }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    if (auto c = degree(a) <=> degree(b); c != 0) return c;
    if (auto c = gamma_degree(a) <=> gamma_degree(b); c != 0) return c;
    for (std::size_t v = n_u_; v-- > 0;)
      if (a.exps[v] != b.exps[v]) return b.exps[v] <=> a.exps[v];
    for (std::size_t v = weights_.size(); v-- > n_u_;)
      if (a.exps[v] != b.exps[v]) return b.exps[v] <=> a.exps[v];
    return std::strong_ordering::equal;
  }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

 private:
  std::vector<std::uint32_t> weights_;
  std::size_t n_u_ = 0;
};

struct Term {
  Monomial mono;
  Rational coef;
};

// Terms sorted strictly decreasing under a MonomialOrder, no zero coefficients.
using OrderedPoly = std::vector<Term>;

namespace detail {

inline OrderedPoly to_ordered(const Polynomial& p, const MonomialOrder& ord) {
  OrderedPoly out;
  out.reserve(p.size());
  for (const auto& [m, c] : p.terms()) out.push_back({m, c});
  std::sort(out.begin(), out.end(),
            [&](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
  return out;
}

inline Polynomial from_ordered(const OrderedPoly& p, std::size_t nvars) {
  Polynomial out(nvars);
  for (const auto& t : p) out.add_term(t.mono, t.coef);
  return out;
}

inline void make_monic(OrderedPoly& p) {
  if (p.empty() || p.front().coef == 1) return;
  const Rational inv = 1 / p.front().coef;
  for (auto& t : p) t.coef *= inv;
}

// f - c * m * g
inline OrderedPoly sub_scaled(const OrderedPoly& f, const Rational& c, const Monomial& m,
                              const OrderedPoly& g, const MonomialOrder& ord) {
  OrderedPoly out;
  out.reserve(f.size() + g.size());
  std::size_t i = 0, j = 0;
  while (i < f.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(f[i++]);
      continue;
    }
    Monomial gm = m * g[j].mono;
    if (i == f.size()) {
      out.push_back({std::move(gm), -c * g[j].coef});
      ++j;
      continue;
    }
    auto cmp = ord.compare(f[i].mono, gm);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back({std::move(gm), -c * g[j].coef});
      ++j;
    } else {
      Rational v = f[i].coef - c * g[j].coef;
      if (v != 0) out.push_back({std::move(gm), std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

// Full reduction of f modulo `basis` (every term ends up irreducible).
inline OrderedPoly reduce(OrderedPoly f, const std::vector<OrderedPoly>& basis,
                          const MonomialOrder& ord, std::optional<std::size_t> skip = {}) {
  OrderedPoly rem;
  while (!f.empty()) {
    const Term& lt = f.front();
    const OrderedPoly* divisor = nullptr;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (skip && *skip == k) continue;
      if (!basis[k].empty() && basis[k].front().mono.divides(lt.mono)) {
        divisor = &basis[k];
        break;
      }
    }
    if (!divisor) {
      rem.push_back(lt);
      f.erase(f.begin());
      continue;
    }
    const Rational c = lt.coef / divisor->front().coef;
    const Monomial q = lt.mono / divisor->front().mono;
    f = sub_scaled(f, c, q, *divisor, ord);
  }
  return rem;
}

inline OrderedPoly s_polynomial(const OrderedPoly& f, const OrderedPoly& g,
                                const MonomialOrder& ord) {
  const Monomial l = lcm(f.front().mono, g.front().mono);
  // Both are monic: S = (l / lt f) f - (l / lt g) g.
  OrderedPoly zero;
  OrderedPoly a = sub_scaled(zero, Rational(-1) / f.front().coef, l / f.front().mono, f, ord);
  return sub_scaled(a, Rational(1) / g.front().coef, l / g.front().mono, g, ord);
}

}  // namespace detail

class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(MonomialOrder order, std::vector<OrderedPoly> polys)
      : order_(std::move(order)), polys_(std::move(polys)) {}

  const MonomialOrder& order() const { return order_; }
  const std::vector<OrderedPoly>& elements() const { return polys_; }
  std::size_t size() const { return polys_.size(); }

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    for (const auto& p : polys_) out.push_back(p.front().mono);
    return out;
  }

  std::vector<Polynomial> polynomials() const {
    std::vector<Polynomial> out;
    for (const auto& p : polys_) out.push_back(detail::from_ordered(p, order_.nvars()));
    return out;
  }

  Polynomial normal_form(const Polynomial& f) const {
    auto r = detail::reduce(detail::to_ordered(f, order_), polys_, order_);
    return detail::from_ordered(r, order_.nvars());
  }

  bool reduces_to_zero(const Polynomial& f) const { return normal_form(f).is_zero(); }

 private:
  MonomialOrder order_;
  std::vector<OrderedPoly> polys_;
};

// Reduced Groebner basis with monic elements, sorted by leading monomial
// (ascending). Pairs are processed lowest lcm first; the product and chain
// criteria skip pairs known to reduce to zero.
inline GroebnerBasis buchberger(const std::vector<Polynomial>& relations,
                                const MonomialOrder& order) {
  std::vector<OrderedPoly> basis;
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> pending_keys;

  auto add = [&](OrderedPoly f) {
    detail::make_monic(f);
    const std::size_t idx = basis.size();
    for (std::size_t k = 0; k < idx; ++k) {
      if (coprime(basis[k].front().mono, f.front().mono)) continue;
      pending.push_back({k, idx, lcm(basis[k].front().mono, f.front().mono)});
      pending_keys.emplace(k, idx);
    }
    basis.push_back(std::move(f));
  };

  std::vector<OrderedPoly> inputs;
  for (const auto& r : relations)
    if (!r.is_zero()) inputs.push_back(detail::to_ordered(r, order));
  std::stable_sort(inputs.begin(), inputs.end(), [&](const OrderedPoly& a, const OrderedPoly& b) {
    return order.compare(a.front().mono, b.front().mono) < 0;
  });
  for (auto& f : inputs) {
    auto r = detail::reduce(std::move(f), basis, order);
    if (!r.empty()) add(std::move(r));
  }

  auto key_pending = [&](std::size_t a, std::size_t b) {
    return pending_keys.contains({std::min(a, b), std::max(a, b)});
  };

  while (!pending.empty()) {
    auto best = std::min_element(pending.begin(), pending.end(), [&](const Pair& a, const Pair& b) {
      auto c = order.compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    });
    Pair p = *best;
    pending.erase(best);
    pending_keys.erase({p.i, p.j});

    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == p.i || k == p.j) continue;
      if (!basis[k].front().mono.divides(p.lcm)) continue;
      chain = !key_pending(p.i, k) && !key_pending(p.j, k);
    }
    if (chain) continue;

    auto s = detail::s_polynomial(basis[p.i], basis[p.j], order);
    auto r = detail::reduce(std::move(s), basis, order);
    if (!r.empty()) add(std::move(r));
  }

  // Minimalize: keep one element per minimal leading monomial.
  std::vector<OrderedPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& li = basis[i].front().mono;
      const auto& lj = basis[j].front().mono;
      if (lj.divides(li) && (lj != li || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // Interreduce tails.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    auto r = detail::reduce(minimal[i], minimal, order, i);
    detail::make_monic(r);
    minimal[i] = std::move(r);
  }
  std::sort(minimal.begin(), minimal.end(), [&](const OrderedPoly& a, const OrderedPoly& b) {
    return order.compare(a.front().mono, b.front().mono) < 0;
  });
  return GroebnerBasis(order, std::move(minimal));
}

// Monomials outside the leading-term ideal, ascending in the order; nullopt
// unless every variable has a pure power among the leading monomials.
inline std::optional<std::vector<Monomial>> standard_monomials(const GroebnerBasis& gb) {
  const std::size_t nv = gb.order().nvars();
  const auto leads = gb.leading_monomials();
  std::vector<std::uint32_t> bound(nv, 0);
  for (const auto& m : leads) {
    std::size_t support = 0, var = 0;
    for (std::size_t v = 0; v < nv; ++v)
      if (m.exps[v]) {
        ++support;
        var = v;
      }
    if (support == 1 && (bound[var] == 0 || m.exps[var] < bound[var])) bound[var] = m.exps[var];
  }
  for (auto b : bound)
    if (b == 0) return std::nullopt;

  auto in_lead_ideal = [&](const Monomial& m) {
    for (const auto& l : leads)
      if (l.divides(m)) return true;
    return false;
  };
  std::vector<Monomial> out;
  Monomial cur(nv);
  // Depth-first over exponent vectors; divisibility is monotone so a
  // reducible prefix prunes the whole subtree.
  auto dfs = [&](auto&& self, std::size_t v) -> void {
    if (v == nv) {
      out.push_back(cur);
      return;
    }
    for (std::uint32_t e = 0; e < bound[v]; ++e) {
      cur.exps[v] = e;
      if (in_lead_ideal(cur)) break;
      self(self, v + 1);
    }
    cur.exps[v] = 0;
  };
  dfs(dfs, 0);
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    return gb.order().compare(a, b) < 0;
  });
  return out;
}

// Degree -> dimension of that graded piece.
using PoincarePolynomial = std::map<std::uint64_t, std::uint64_t>;

inline std::uint64_t euler_characteristic(const PoincarePolynomial& p) {
  std::uint64_t total = 0;
  for (const auto& [deg, dim] : p) total += dim;
  return total;
}

inline PoincarePolynomial poincare(const GroebnerBasis& gb) {
  auto standard = standard_monomials(gb);
  if (!standard) throw NotFiniteError("quotient ring is not finite dimensional");
  PoincarePolynomial p;
  for (const auto& m : *standard) p[gb.order().degree(m)] += 1;
  return p;
}

inline GroebnerBasis groebner_basis(const RingPresentation& pres) {
  return buchberger(pres.polynomials(), MonomialOrder::for_presentation(pres));
}

}  // namespace hypertoric
