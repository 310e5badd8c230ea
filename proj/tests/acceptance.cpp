// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include "hypertoric.hpp"

#include "corpus.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

using namespace hypertoric;

namespace {

RatVector whole(std::initializer_list<long> v) {
  RatVector r;
  for (long x : v) r.emplace_back(x);
  return r;
}

RatVector frac(std::initializer_list<std::pair<long, long>> v) {
  RatVector r;
  for (auto [p, q] : v) r.push_back(make_rational(p, q));
  return r;
}

Polynomial poly(std::size_t nvars, std::initializer_list<std::pair<long, std::vector<std::uint32_t>>> terms) {
  Polynomial p(nvars);
  for (const auto& [c, e] : terms) p.add_term(Monomial(e), Rational(c));
  return p;
}

PoincarePolynomial pp(std::initializer_list<std::pair<const std::uint64_t, std::uint64_t>> v) {
  return PoincarePolynomial(v);
}

std::string show(const PoincarePolynomial& p) {
  std::ostringstream s;
  bool first = true;
  for (const auto& [d, v] : p) {
    s << (first ? "" : " + ") << v << "t^" << d;
    first = false;
  }
  return s.str();
}

bool contains(const std::vector<Polynomial>& rels, const Polynomial& p) {
  return std::find(rels.begin(), rels.end(), p) != rels.end();
}

// Collects failures for one criterion.
struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

struct Criterion {
  std::string id, title;
  double budget_seconds;  // 0 = no runtime bound
  std::function<void(Check&)> body;
};

const ArrangementSpec kP2{IntMatrix{{1, 0}, {0, 1}, {-2, -1}}, whole({0, 0, 1})};
const ArrangementSpec kFourLines{IntMatrix{{1, 0}, {0, 1}, {-1, -1}, {-1, 1}}, whole({0, 0, 1, 2})};
const ArrangementSpec kSmooth{IntMatrix{{1, 0}, {0, 1}, {-1, -1}}, whole({0, 0, 1})};

void ac1(Check& c) {
  auto g = full_group(kP2);
  c.expect(g.order() == 2, "group order " + std::to_string(g.order()));
  if (g.order() == 2) c.expect(g.element(1).logweights == frac({{0, 1}, {1, 2}, {1, 2}}), "logweights");
  auto pres = build_presentation(kP2, g);
  auto rels = pres.polynomials();
  c.expect(contains(rels, poly(4, {{1, {0, 0, 0, 2}}, {-1, {0, 2, 2, 0}}})), "gamma^2 - u2^2 u3^2");
  c.expect(contains(rels, poly(4, {{1, {1, 0, 0, 0}}, {-2, {0, 0, 1, 0}}})), "u1 - 2u3");
  c.expect(contains(rels, poly(4, {{1, {0, 1, 0, 0}}, {-1, {0, 0, 1, 0}}})), "u2 - u3");
  c.expect(contains(rels, poly(4, {{1, {1, 1, 1, 0}}})), "u1 u2 u3");
  c.expect(contains(rels, poly(4, {{1, {1, 0, 0, 1}}})), "gamma u1");
  auto p = poincare(groebner_basis(pres));
  c.expect(p == pp({{0, 1}, {2, 1}, {4, 2}}), "poincare " + show(p));
  c.expect(euler_characteristic(p) == 4, "euler " + std::to_string(euler_characteristic(p)));
}

void ac2(Check& c) {
  for (long n = 2; n <= 6; ++n) {
    auto p = poincare(groebner_basis(
        build_presentation({IntMatrix{{1, 0}, {0, 1}, {-n, -1}}, whole({0, 0, 1})})));
    c.expect(p == pp({{0, 1}, {2, 1}, {4, std::uint64_t(n)}}), "M" + std::to_string(n) + ": " + show(p));
    c.expect(euler_characteristic(p) == std::uint64_t(n + 2), "M" + std::to_string(n) + " euler");
  }
}

void ac3(Check& c) {
  c.expect(is_simple(kFourLines), "offsets (0,0,1,2) not simple");
  auto g = full_group(kFourLines);
  c.expect(g.order() == 2, "group order " + std::to_string(g.order()));
  if (g.order() == 2)
    c.expect(g.element(1).logweights == frac({{0, 1}, {0, 1}, {1, 2}, {1, 2}}), "logweights");
  std::set<std::vector<std::uint32_t>> kid;
  for (const auto& r : ideal_K(kFourLines, g))
    if (r.sectors[0] == 0) kid.insert(r.poly.terms().begin()->first.exps);
  c.expect(kid == std::set<std::vector<std::uint32_t>>{{0, 1, 1, 1, 0}, {1, 0, 1, 1, 0},
                                                       {1, 1, 0, 1, 0}, {1, 1, 1, 0, 0}},
           "K_id generators");
  auto p = poincare(groebner_basis(build_presentation(kFourLines, g)));
  c.expect(p == pp({{0, 1}, {2, 2}, {4, 4}}), "poincare " + show(p));
  c.expect(euler_characteristic(p) == 7, "euler " + std::to_string(euler_characteristic(p)));
}

void ac4(Check& c) {
  auto g = full_group(kSmooth);
  c.expect(g.order() == 1, "group order " + std::to_string(g.order()));
  auto pres = build_presentation(kSmooth, g);
  c.expect(pres.n_gamma() == 0, "twisted generators present");
  // Q[u1,u2,u3]/<u1 - u3, u2 - u3, u1 u2 u3>
  std::vector<Polynomial> ordinary = {poly(3, {{1, {1, 0, 0}}, {-1, {0, 0, 1}}}),
                                      poly(3, {{1, {0, 1, 0}}, {-1, {0, 0, 1}}}),
                                      poly(3, {{1, {1, 1, 1}}})};
  auto rels = pres.polynomials();
  c.expect(std::is_permutation(rels.begin(), rels.end(), ordinary.begin(), ordinary.end()),
           "relations differ from ordinary cohomology presentation");
  auto p = poincare(groebner_basis(pres));
  c.expect(p == pp({{0, 1}, {2, 1}, {4, 1}}), "poincare " + show(p));
}

void ac5(Check& c) {
  for (const auto& f : corpus::fixtures()) {
    std::set<RatVector> offsets;
    std::set<PoincarePolynomial> results;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      ArrangementSpec spec{f.spec.normals, random_simple_affinization(f.spec.normals, {seed, 1000})};
      c.expect(is_simple(spec), f.name + " seed " + std::to_string(seed) + " not simple");
      offsets.insert(spec.offsets);
      results.insert(poincare(groebner_basis(build_presentation(spec))));
    }
    c.expect(offsets.size() == 10, f.name + ": only " + std::to_string(offsets.size()) +
                                       " distinct affinizations");
    c.expect(results.size() == 1, f.name + ": Poincare polynomial depends on offsets");
    if (results.size() == 1)
      c.expect(*results.begin() == poincare(groebner_basis(build_presentation(f.spec))),
               f.name + ": differs from fixture offsets");
  }
}

const std::vector<corpus::Entry>& random_corpus() {
  static const auto entries = corpus::random_corpus(60);
  return entries;
}

void ac6(Check& c) {
  const auto& entries = random_corpus();
  c.expect(entries.size() >= 50, "corpus too small");
  std::size_t checked = 0;
  for (const auto& e : entries) {
    c.expect(e.spec.n() <= 6 && e.spec.d() <= 3, e.name + " outside n <= 6, d <= 3");
    auto g = full_group(e.spec);
    auto pres = build_presentation(e.spec, g);
    for (const auto& r : pres.relations) {
      if (r.origin != RelationOrigin::I) continue;
      const auto t1 = r.sectors[0], t2 = r.sectors[1];
      auto s = abc_sets(g, t1, t2);
      const auto lhs = 2 * (g.age(t1) + g.age(t2));
      const auto rhs = 2 * (2 * s.A.size() + s.B.size() + s.C.size()) + 2 * g.age(g.multiply(t1, t2));
      c.expect(lhs == rhs, e.name + ": degree mismatch");
      c.expect(r.poly.is_homogeneous(pres.degrees()), e.name + ": inhomogeneous I-relation");
      ++checked;
    }
  }
  c.expect(checked > 0, "no I-relations in corpus");
}

void ac7(Check& c) {
  auto entries = corpus::fixtures();
  for (const auto& e : random_corpus()) entries.push_back(e);
  for (const auto& e : entries) {
    auto pres = build_presentation(e.spec);
    auto gb = poincare(groebner_basis(pres));
    auto oracle = trimmed(oracle_poincare(pres, 4 * e.spec.n()).poincare);
    c.expect(gb == oracle, e.name + ": groebner " + show(gb) + " vs oracle " + show(oracle));
  }
}

void ac8(Check& c) {
  auto entries = corpus::fixtures();
  for (const auto& e : random_corpus()) entries.push_back(e);
  for (const auto& e : entries) {
    auto g = full_group(e.spec);
    const std::size_t m = g.order();
    c.expect(g.element(0).is_identity(), e.name + ": identity");
    for (std::size_t a = 0; a < m; ++a) {
      bool has_inverse = false;
      for (std::size_t b = 0; b < m; ++b) {
        auto prod = add_logweights(g.element(a).logweights, g.element(b).logweights);
        c.expect(g.index_of(prod).has_value(), e.name + ": not closed");
        has_inverse = has_inverse || g.index_of(prod) == std::optional<std::size_t>(0);
        for (std::size_t d = 0; d < m; ++d)
          c.expect(g.multiply(g.multiply(a, b), d) == g.multiply(a, g.multiply(b, d)),
                   e.name + ": not associative");
      }
      c.expect(has_inverse, e.name + ": missing inverse");
      const auto& t = g.element(a).logweights;
      const auto& inv = g.element(g.inverse(a)).logweights;
      for (std::size_t i : g.moved(a))
        c.expect(t[i] + inv[i] == 1, e.name + ": a(t) + a(t^-1) != 1");
    }
    for (const auto& basis : enumerate_bases(e.spec.normals)) {
      const Integer det = abs(determinant(e.spec.normals.select_rows(basis)));
      c.expect(Integer(gamma_S(e.spec, basis).size()) == det, e.name + ": |Gamma_S| != |det|");
    }
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "weighted projective plane end-to-end", 1, ac1},
      {"AC2", "M_n family, n = 2..6", 5, ac2},
      {"AC3", "four-line arrangement end-to-end", 1, ac3},
      {"AC4", "smooth reduction to ordinary cohomology", 0, ac4},
      {"AC5", "independence of affinization, seeds 0..9", 30, ac5},
      {"AC6", "I-relation homogeneity over random corpus", 0, ac6},
      {"AC7", "oracle agrees with Groebner Poincare polynomial", 300, ac7},
      {"AC8", "group axioms, |Gamma_S| = |det|, a(t) + a(t^-1) = 1", 0, ac8},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      check.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.budget_seconds > 0 && secs >= cr.budget_seconds)
      check.failures.push_back("runtime " + std::to_string(secs) + " s over budget");
    const bool ok = check.failures.empty();
    failed += !ok;
    std::printf("%s %s  %s  (%.3f s%s)\n", cr.id.c_str(), ok ? "PASS" : "FAIL", cr.title.c_str(),
                secs, cr.budget_seconds > 0 ? (" / " + std::to_string(int(cr.budget_seconds)) + " s").c_str() : "");
    for (std::size_t i = 0; i < check.failures.size() && i < 10; ++i)
      std::printf("    %s\n", check.failures[i].c_str());
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed ? 1 : 0;
}
