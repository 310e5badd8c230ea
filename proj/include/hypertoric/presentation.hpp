#pragma once

// Ring presentation of the orbifold cohomology:
//   Q[u_1..u_n][gamma_t : t in Gamma \ {id}] / (I + J + K),
// with gamma_id already replaced by 1. Generator order is u_1..u_n followed
// by one gamma per nontrivial group element, in lexicographic logweight
// order (the group stores elements in that order, identity first).

#include "hypertoric/arrangement.hpp"
#include "hypertoric/errors.hpp"
#include "hypertoric/polynomial.hpp"
#include "hypertoric/stabilizers.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hypertoric {

enum class RelationOrigin { I, J, K };

inline const char* to_string(RelationOrigin o) {
  switch (o) {
    case RelationOrigin::I: return "I";
    case RelationOrigin::J: return "J";
    case RelationOrigin::K: return "K";
  }
  return "?";
}

struct Generator {
  std::string name;
  std::uint32_t degree = 2;
  std::optional<std::size_t> element;  // group element for gamma generators
};

struct Relation {
  Polynomial poly;
  RelationOrigin origin;
  std::vector<std::size_t> sectors;  // I: {t1, t2}; K: {t}; J: {}
};

struct RingPresentation {
  std::size_t n_u = 0;
  std::vector<Generator> generators;
  std::vector<Relation> relations;

  std::size_t nvars() const { return generators.size(); }
  std::size_t n_gamma() const { return generators.size() - n_u; }

  std::vector<std::uint32_t> degrees() const {
    std::vector<std::uint32_t> w;
    w.reserve(generators.size());
    for (const auto& g : generators) w.push_back(g.degree);
    return w;
  }
  std::uint64_t degree(const Monomial& m) const { return m.weighted_degree(degrees()); }

  std::vector<Polynomial> polynomials() const {
    std::vector<Polynomial> out;
    out.reserve(relations.size());
    for (const auto& r : relations) out.push_back(r.poly);
    return out;
  }
  std::vector<Polynomial> polynomials(RelationOrigin origin) const {
    std::vector<Polynomial> out;
    for (const auto& r : relations)
      if (r.origin == origin) out.push_back(r.poly);
    return out;
  }
};

namespace detail {

// Variable index of gamma_t, or nullopt for the identity (gamma_id = 1).
inline std::optional<std::size_t> gamma_variable(std::size_t n_u, std::size_t element) {
  if (element == 0) return std::nullopt;
  return n_u + element - 1;
}

inline std::size_t presentation_nvars(std::size_t n_u, const StabilizerGroup& group) {
  return n_u + group.order() - 1;
}

}  // namespace detail

// gamma_t1 gamma_t2 - (-1)^{|A|+|B|} prod_A u_i^2 prod_{B u C} u_j gamma_{t1 t2}
// for every unordered pair of nontrivial elements.
inline std::vector<Relation> ideal_I(const StabilizerGroup& group, std::size_t n_u) {
  const std::size_t nvars = detail::presentation_nvars(n_u, group);
  std::vector<Relation> out;
  for (std::size_t t1 = 1; t1 < group.order(); ++t1)
    for (std::size_t t2 = t1; t2 < group.order(); ++t2) {
      const SectorPairData abc = abc_sets(group, t1, t2);
      const std::size_t t12 = group.multiply(t1, t2);

      Monomial lhs(nvars);
      lhs.exps[*detail::gamma_variable(n_u, t1)] += 1;
      lhs.exps[*detail::gamma_variable(n_u, t2)] += 1;

      Monomial rhs(nvars);
      for (std::size_t i : abc.A) rhs.exps[i] += 2;
      for (std::size_t j : abc.B) rhs.exps[j] += 1;
      for (std::size_t k : abc.C) rhs.exps[k] += 1;
      if (auto g = detail::gamma_variable(n_u, t12)) rhs.exps[*g] += 1;

      const bool negative = (abc.A.size() + abc.B.size()) % 2 == 1;
      Polynomial p(nvars);
      p.add_term(lhs, 1);
      p.add_term(rhs, negative ? Rational(1) : Rational(-1));
      out.push_back({std::move(p), RelationOrigin::I, {t1, t2}});
    }
  return out;
}

// The image of beta^*: for each coordinate j of Z^d, sum_i (a_i)_j u_i.
inline std::vector<Relation> ideal_J(const IntMatrix& normals, std::size_t nvars) {
  std::vector<Relation> out;
  for (std::size_t j = 0; j < normals.cols(); ++j) {
    Polynomial p(nvars);
    for (std::size_t i = 0; i < normals.rows(); ++i)
      p.add_term(Monomial::variable(nvars, i), Rational(normals(i, j)));
    out.push_back({std::move(p), RelationOrigin::J, {}});
  }
  return out;
}

// For each sector t: gamma_t * prod_{i in L} u_i for every inclusion-minimal
// L ⊆ S(t) with (∩_{i in L} H_i) ∩ (∩_{j in S(t)^c} H_j) empty.
inline std::vector<Relation> ideal_K(const ArrangementSpec& spec, const StabilizerGroup& group) {
  const std::size_t n = spec.n(), d = spec.d();
  const std::size_t nvars = detail::presentation_nvars(n, group);
  std::vector<Relation> out;
  for (std::size_t t = 0; t < group.order(); ++t) {
    const IndexSet& fixed = group.fixed(t);
    const IndexSet& moved = group.moved(t);
    std::vector<IndexSet> kept;

    auto emit = [&](const IndexSet& L) {
      Monomial m(nvars);
      for (std::size_t i : L) m.exps[i] += 1;
      if (auto g = detail::gamma_variable(n, t)) m.exps[*g] += 1;
      out.push_back({Polynomial::monomial(m), RelationOrigin::K, {t}});
      kept.push_back(L);
    };
    auto joint_empty = [&](std::span<const std::size_t> local) {
      IndexSet rows(moved.begin(), moved.end());
      for (std::size_t li : local) rows.push_back(fixed[li]);
      return intersection_empty(spec, rows);
    };

    if (joint_empty({})) {
      emit({});
      continue;  // every other L is a multiple
    }
    // In a simple arrangement every proper subset of a minimal empty set
    // meets, so it has at most d + 1 members.
    const std::size_t max_size = d + 1 >= moved.size() ? d + 1 - moved.size() : 0;
    for (std::size_t size = 1; size <= std::min(max_size, fixed.size()); ++size) {
      detail::for_each_subset(fixed.size(), size, [&](std::span<const std::size_t> local) {
        IndexSet L;
        for (std::size_t li : local) L.push_back(fixed[li]);
        for (const auto& k : kept)
          if (std::includes(L.begin(), L.end(), k.begin(), k.end())) return true;
        if (joint_empty(local)) emit(L);
        return true;
      });
    }
  }
  return out;
}

// Presentation for a validated, simple arrangement with a prebuilt group.
inline RingPresentation build_presentation(const ArrangementSpec& spec,
                                           const StabilizerGroup& group) {
  RingPresentation pres;
  pres.n_u = spec.n();
  for (std::size_t i = 0; i < spec.n(); ++i)
    pres.generators.push_back({"u" + std::to_string(i + 1), 2, std::nullopt});
  for (std::size_t e = 1; e < group.order(); ++e)
    pres.generators.push_back(
        {"g" + std::to_string(e), static_cast<std::uint32_t>(group.degree(e)), e});

  for (auto& r : ideal_I(group, spec.n())) pres.relations.push_back(std::move(r));
  for (auto& r : ideal_J(spec.normals, pres.nvars())) pres.relations.push_back(std::move(r));
  for (auto& r : ideal_K(spec, group)) pres.relations.push_back(std::move(r));
  return pres;
}

inline RingPresentation build_presentation(const ArrangementSpec& spec) {
  require_valid(spec);
  if (!spec.has_offsets()) throw NotSimpleError("arrangement has no offsets (central)");
  if (!is_simple(spec)) throw NotSimpleError("arrangement is not simple");
  return build_presentation(spec, full_group(spec));
}

}  // namespace hypertoric
