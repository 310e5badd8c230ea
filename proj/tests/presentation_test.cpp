#include "hypertoric/presentation.hpp"

#include "corpus.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace hypertoric;

namespace {

RatVector whole(std::initializer_list<long> v) {
  RatVector r;
  for (long x : v) r.emplace_back(x);
  return r;
}

const ArrangementSpec kP2{IntMatrix{{1, 0}, {0, 1}, {-2, -1}}, whole({0, 0, 1})};
const ArrangementSpec kFourLines{IntMatrix{{1, 0}, {0, 1}, {-1, -1}, {-1, 1}}, whole({0, 0, 1, 2})};

// Polynomial from (coefficient, exponent vector) pairs.
Polynomial poly(std::size_t nvars, std::initializer_list<std::pair<long, std::vector<std::uint32_t>>> terms) {
  Polynomial p(nvars);
  for (const auto& [c, e] : terms) p.add_term(Monomial(e), Rational(c));
  return p;
}

std::set<std::vector<std::uint32_t>> monomial_set(const std::vector<Relation>& rels) {
  std::set<std::vector<std::uint32_t>> out;
  for (const auto& r : rels) {
    EXPECT_EQ(r.poly.size(), 1u);
    out.insert(r.poly.terms().begin()->first.exps);
  }
  return out;
}

// Inclusion-minimal L ⊆ S(t) with (∩_L H) ∩ (∩_{S(t)^c} H) empty, by
// scanning every subset of S(t) in order of increasing size.
std::set<std::vector<std::uint32_t>> brute_force_K(const ArrangementSpec& spec,
                                                   const StabilizerGroup& g, std::size_t t) {
  const std::size_t n = spec.n(), nvars = n + g.order() - 1;
  const IndexSet& fixed = g.fixed(t);
  const IndexSet& moved = g.moved(t);
  std::vector<std::uint32_t> masks;
  for (std::uint32_t mask = 0; mask < (1u << fixed.size()); ++mask) masks.push_back(mask);
  std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    return __builtin_popcount(a) < __builtin_popcount(b);
  });
  std::vector<std::uint32_t> minimal;
  std::set<std::vector<std::uint32_t>> out;
  for (std::uint32_t mask : masks) {
    bool covered = false;
    for (auto m : minimal) covered = covered || (m & mask) == m;
    if (covered) continue;
    IndexSet rows(moved);
    for (std::size_t b = 0; b < fixed.size(); ++b)
      if (mask >> b & 1) rows.push_back(fixed[b]);
    std::sort(rows.begin(), rows.end());
    if (!intersection_empty(spec, rows)) continue;
    minimal.push_back(mask);
    std::vector<std::uint32_t> e(nvars, 0);
    for (std::size_t b = 0; b < fixed.size(); ++b)
      if (mask >> b & 1) e[fixed[b]] = 1;
    if (t != 0) e[n + t - 1] = 1;
    out.insert(e);
  }
  return out;
}

}  // namespace

TEST(IdealI, WeightedPlane) {
  auto g = full_group(kP2);
  auto rels = ideal_I(g, 3);
  ASSERT_EQ(rels.size(), 1u);
  EXPECT_EQ(rels[0].poly, poly(4, {{1, {0, 0, 0, 2}}, {-1, {0, 2, 2, 0}}}));
}

TEST(IdealI, FourLines) {
  auto g = full_group(kFourLines);
  auto rels = ideal_I(g, 4);
  ASSERT_EQ(rels.size(), 1u);
  EXPECT_EQ(rels[0].poly, poly(5, {{1, {0, 0, 0, 0, 2}}, {-1, {0, 0, 2, 2, 0}}}));
}

TEST(IdealI, OddInvolutionSign) {
  // In dimension 1 with normals (1), (1), (-2): the element of order 2 moves
  // only coordinate 3, so A = {3} is odd and the relation is gamma^2 + u3^2.
  ArrangementSpec spec{IntMatrix{{1}, {1}, {-2}}, whole({0, 1, 1})};
  auto g = full_group(spec);
  bool found = false;
  for (const auto& r : ideal_I(g, 3)) {
    const auto t1 = r.sectors[0], t2 = r.sectors[1];
    if (t1 != t2 || g.multiply(t1, t2) != 0 || g.moved(t1).size() % 2 == 0) continue;
    Polynomial expect(r.poly.nvars());
    Monomial gg(r.poly.nvars());
    gg.exps[3 + t1 - 1] = 2;
    expect.add_term(gg, 1);
    Monomial uu(r.poly.nvars());
    for (auto i : g.moved(t1)) uu.exps[i] = 2;
    expect.add_term(uu, 1);
    EXPECT_EQ(r.poly, expect);
    found = true;
  }
  EXPECT_TRUE(found);
}

TEST(IdealI, OddBSign) {
  // Normals (1), (1), (-3): the element t with logweights (0, 0, 1/3) has
  // 1/3 + 1/3 - 2/3 = 0 on coordinate 3, so B = {3} and the relation is
  // gamma_t^2 + u3 gamma_{t^2}.
  ArrangementSpec spec{IntMatrix{{1}, {1}, {-3}}, whole({0, 1, 1})};
  auto g = full_group(spec);
  ASSERT_EQ(g.order(), 3u);
  ASSERT_EQ(g.element(1).logweights, (RatVector{0, 0, Rational(1, 3)}));
  auto rels = ideal_I(g, 3);
  ASSERT_EQ(rels[0].sectors, (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(rels[0].poly, poly(5, {{1, {0, 0, 0, 2, 0}}, {1, {0, 0, 1, 0, 1}}}));
}

TEST(IdealI, SignMatchesAbcSizes) {
  for (const auto& e : corpus::random_corpus(60, 3)) {
    auto g = full_group(e.spec);
    const std::size_t n = e.spec.n();
    for (const auto& r : ideal_I(g, n)) {
      const auto t1 = r.sectors[0], t2 = r.sectors[1];
      auto s = abc_sets(g, t1, t2);
      Monomial lhs(r.poly.nvars()), rhs(r.poly.nvars());
      lhs.exps[n + t1 - 1] += 1;
      lhs.exps[n + t2 - 1] += 1;
      for (auto i : s.A) rhs.exps[i] += 2;
      for (auto i : s.B) rhs.exps[i] += 1;
      for (auto i : s.C) rhs.exps[i] += 1;
      if (auto t = g.multiply(t1, t2); t != 0) rhs.exps[n + t - 1] += 1;
      ASSERT_EQ(r.poly.size(), 2u) << e.name;
      ASSERT_EQ(r.poly.coefficient(lhs), 1) << e.name;
      ASSERT_EQ(r.poly.coefficient(rhs), (s.A.size() + s.B.size()) % 2 ? 1 : -1) << e.name;
    }
  }
}

TEST(IdealJ, Examples) {
  auto j = ideal_J(kP2.normals, 4);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0].poly, poly(4, {{1, {1, 0, 0, 0}}, {-2, {0, 0, 1, 0}}}));
  EXPECT_EQ(j[1].poly, poly(4, {{1, {0, 1, 0, 0}}, {-1, {0, 0, 1, 0}}}));

  auto k = ideal_J(kFourLines.normals, 5);
  EXPECT_EQ(k[0].poly, poly(5, {{1, {1, 0, 0, 0, 0}}, {-1, {0, 0, 1, 0, 0}}, {-1, {0, 0, 0, 1, 0}}}));
  EXPECT_EQ(k[1].poly, poly(5, {{1, {0, 1, 0, 0, 0}}, {-1, {0, 0, 1, 0, 0}}, {1, {0, 0, 0, 1, 0}}}));
}

TEST(IdealJ, StandardBasisPlusAntidiagonal) {
  const std::size_t d = 3;
  IntMatrix a(d + 1, d);
  for (std::size_t j = 0; j < d; ++j) {
    a(j, j) = 1;
    a(d, j) = -1;
  }
  auto rels = ideal_J(a, d + 1);
  ASSERT_EQ(rels.size(), d);
  for (std::size_t j = 0; j < d; ++j) {
    Polynomial expect(d + 1);
    expect.add_term(Monomial::variable(d + 1, j), 1);
    expect.add_term(Monomial::variable(d + 1, d), -1);
    EXPECT_EQ(rels[j].poly, expect);
  }
}

TEST(IdealK, WeightedPlane) {
  auto g = full_group(kP2);
  auto k = ideal_K(kP2, g);
  EXPECT_EQ(monomial_set(k), (std::set<std::vector<std::uint32_t>>{{1, 1, 1, 0}, {1, 0, 0, 1}}));
}

TEST(IdealK, FourLines) {
  auto g = full_group(kFourLines);
  std::vector<Relation> id, twisted;
  for (auto& r : ideal_K(kFourLines, g)) (r.sectors[0] == 0 ? id : twisted).push_back(r);
  EXPECT_EQ(monomial_set(id), (std::set<std::vector<std::uint32_t>>{
                                  {0, 1, 1, 1, 0}, {1, 0, 1, 1, 0}, {1, 1, 0, 1, 0}, {1, 1, 1, 0, 0}}));
  EXPECT_EQ(monomial_set(twisted),
            (std::set<std::vector<std::uint32_t>>{{1, 0, 0, 0, 1}, {0, 1, 0, 0, 1}}));
}

TEST(IdealK, MatchesExhaustiveSearch) {
  auto entries = corpus::random_corpus(60, 3);
  for (const auto& f : corpus::fixtures()) entries.push_back(f);
  for (const auto& e : entries) {
    auto g = full_group(e.spec);
    auto all = ideal_K(e.spec, g);
    for (std::size_t t = 0; t < g.order(); ++t) {
      std::vector<Relation> mine;
      for (const auto& r : all)
        if (r.sectors[0] == t) mine.push_back(r);
      ASSERT_EQ(monomial_set(mine), brute_force_K(e.spec, g, t)) << e.name << " sector " << t;
      // Only indices in S(t) appear among the u's.
      for (const auto& r : mine)
        for (std::size_t i : g.moved(t)) ASSERT_EQ(r.poly.terms().begin()->first.exps[i], 0u);
    }
  }
}

TEST(Presentation, Homogeneity) {
  auto entries = corpus::random_corpus(60, 3);
  for (const auto& f : corpus::fixtures()) entries.push_back(f);
  for (const auto& e : entries) {
    auto g = full_group(e.spec);
    auto pres = build_presentation(e.spec, g);
    const auto w = pres.degrees();
    for (const auto& r : pres.relations) ASSERT_TRUE(r.poly.is_homogeneous(w)) << e.name;
    for (std::size_t a = 1; a < g.order(); ++a)
      for (std::size_t b = 1; b < g.order(); ++b) {
        auto s = abc_sets(g, a, b);
        ASSERT_EQ(2 * (g.age(a) + g.age(b)),
                  2 * (2 * s.A.size() + s.B.size() + s.C.size()) + 2 * g.age(g.multiply(a, b)));
      }
  }
}

TEST(Presentation, InverseSpecialization) {
  for (const auto& e : corpus::random_corpus(60, 3)) {
    auto g = full_group(e.spec);
    const std::size_t n = e.spec.n();
    for (const auto& r : ideal_I(g, n)) {
      const auto t1 = r.sectors[0], t2 = r.sectors[1];
      if (g.multiply(t1, t2) != 0) continue;
      Polynomial expect(r.poly.nvars());
      Monomial lhs(r.poly.nvars()), rhs(r.poly.nvars());
      lhs.exps[n + t1 - 1] += 1;
      lhs.exps[n + t2 - 1] += 1;
      for (auto i : g.moved(t1)) rhs.exps[i] = 2;
      expect.add_term(lhs, 1);
      expect.add_term(rhs, g.moved(t1).size() % 2 ? 1 : -1);
      ASSERT_EQ(r.poly, expect) << e.name;
    }
  }
}

TEST(Presentation, SymmetricInPair) {
  // ideal_I emits t1 <= t2 only; the swapped relation must be identical.
  for (const auto& e : corpus::random_corpus(30, 3)) {
    auto g = full_group(e.spec);
    for (std::size_t a = 1; a < g.order(); ++a)
      for (std::size_t b = 1; b < g.order(); ++b) {
        auto x = abc_sets(g, a, b), y = abc_sets(g, b, a);
        ASSERT_EQ(x.A.size() + x.B.size(), y.A.size() + y.B.size());
        ASSERT_EQ(g.multiply(a, b), g.multiply(b, a));
      }
  }
}

TEST(Presentation, JIsIndependent) {
  for (const auto& e : corpus::random_corpus(30, 3)) {
    auto j = ideal_J(e.spec.normals, e.spec.n());
    ASSERT_EQ(j.size(), e.spec.d());
    EXPECT_EQ(rank(e.spec.beta()), e.spec.d());
  }
}

TEST(Presentation, Generators) {
  auto pres = build_presentation(kFourLines);
  ASSERT_EQ(pres.nvars(), 5u);
  EXPECT_EQ(pres.generators[4].name, "g1");
  EXPECT_EQ(pres.generators[4].degree, 4u);
  EXPECT_EQ(pres.generators[0].name, "u1");
  EXPECT_EQ(pres.generators[0].degree, 2u);
}

TEST(Presentation, SmoothHasNoTwistedSectors) {
  ArrangementSpec smooth{IntMatrix{{1, 0}, {0, 1}, {-1, -1}}, whole({0, 0, 1})};
  auto pres = build_presentation(smooth);
  EXPECT_EQ(pres.n_gamma(), 0u);
  EXPECT_TRUE(pres.polynomials(RelationOrigin::I).empty());
  // J together with u1 u2 u3.
  std::vector<Polynomial> expected = {poly(3, {{1, {1, 0, 0}}, {-1, {0, 0, 1}}}),
                                      poly(3, {{1, {0, 1, 0}}, {-1, {0, 0, 1}}}),
                                      poly(3, {{1, {1, 1, 1}}})};
  EXPECT_EQ(pres.polynomials(), expected);
}

TEST(Presentation, RejectsBadInput) {
  EXPECT_THROW(build_presentation({IntMatrix{{2, 0}, {0, 2}, {-1, -1}}, whole({0, 0, 1})}),
               ValidationError);
  EXPECT_THROW(build_presentation({kFourLines.normals, whole({0, 0, 1, 1})}), NotSimpleError);
  EXPECT_THROW(build_presentation({kFourLines.normals, {}}), NotSimpleError);
}
