#pragma once

// Rational cooriented weighted hyperplane arrangements
//   H_i = { x : <x, a_i> = r_i },  a_i in Z^d, r_i in Q,
// with the torus weights lambda_i read off the integer kernel of
// beta = [a_1 | ... | a_n].

#include "hypertoric/errors.hpp"
#include "hypertoric/exactlin.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace hypertoric {

struct ArrangementSpec {
  IntMatrix normals;  // n x d, row i is a_i (taken as given, not primitivized)
  RatVector offsets;  // length n; empty means "central, not yet affinized"

  std::size_t n() const { return normals.rows(); }
  std::size_t d() const { return normals.cols(); }
  std::size_t k() const { return n() >= d() ? n() - d() : 0; }
  bool has_offsets() const { return !offsets.empty(); }

  // d x n, column i is a_i.
  IntMatrix beta() const { return normals.transpose(); }
};

struct ValidationCheck {
  std::string name;
  bool passed = true;
  std::optional<std::size_t> index;  // 0-based offending hyperplane, if any
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  std::string summary() const {
    std::ostringstream os;
    for (const auto& c : checks)
      if (!c.passed) os << c.name << ": " << c.message << "; ";
    return os.str();
  }
};

// lambdas(i, :) is the weight lambda_i in Z^k.
struct WeightMatrix {
  IntMatrix lambdas;

  IntVector lambda(std::size_t i) const { return lambdas.row(i); }
};

inline WeightMatrix compute_weights(const ArrangementSpec& spec) {
  return {integer_kernel_basis(spec.beta())};
}

inline ValidationReport validate(const ArrangementSpec& spec) {
  ValidationReport report;
  const std::size_t n = spec.n(), d = spec.d();

  ValidationCheck shape{"shape", true, std::nullopt, ""};
  if (n == 0 || d == 0) {
    shape.passed = false;
    shape.message = "need at least one hyperplane in a space of dimension >= 1";
  } else if (spec.has_offsets() && spec.offsets.size() != n) {
    shape.passed = false;
    shape.message = "offsets has " + std::to_string(spec.offsets.size()) + " entries, expected " +
                    std::to_string(n);
  }
  report.checks.push_back(shape);
  if (!shape.passed) return report;

  ValidationCheck nonzero{"nonzero-normals", true, std::nullopt, ""};
  for (std::size_t i = 0; i < n; ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < d; ++j) zero = zero && spec.normals(i, j) == 0;
    if (zero) {
      nonzero.passed = false;
      nonzero.index = i;
      nonzero.message = "normal a_" + std::to_string(i + 1) + " is the zero vector";
      break;
    }
  }
  report.checks.push_back(nonzero);

  ValidationCheck torus{"torus-rank", true, std::nullopt, ""};
  if (n < d + 1) {
    torus.passed = false;
    torus.message = "k = n - d must be at least 1 (n=" + std::to_string(n) +
                    ", d=" + std::to_string(d) + ")";
  }
  report.checks.push_back(torus);

  ValidationCheck span{"z-span", true, std::nullopt, ""};
  {
    IntVector factors = invariant_factors(spec.beta());
    if (factors.size() < d) {
      span.passed = false;
      span.message = "normals span a sublattice of rank " + std::to_string(factors.size()) +
                     " < d";
    } else {
      for (const auto& f : factors)
        if (f != 1) {
          span.passed = false;
          span.message = "normals do not span Z^d (invariant factor " + f.get_str() + ")";
          break;
        }
    }
  }
  report.checks.push_back(span);

  ValidationCheck weights{"nonzero-weights", true, std::nullopt, ""};
  {
    WeightMatrix w = compute_weights(spec);
    for (std::size_t i = 0; i < n; ++i) {
      bool zero = true;
      for (std::size_t j = 0; j < w.lambdas.cols(); ++j) zero = zero && w.lambdas(i, j) == 0;
      if (zero) {
        weights.passed = false;
        weights.index = i;
        weights.message = "weight lambda_" + std::to_string(i + 1) + " is zero";
        break;
      }
    }
  }
  report.checks.push_back(weights);
  return report;
}

inline void require_valid(const ArrangementSpec& spec) {
  ValidationReport r = validate(spec);
  if (!r.passed()) throw ValidationError("invalid arrangement: " + r.summary());
}

// True iff { <x, a_i> = r_i : i in subset } has no rational solution.
inline bool intersection_empty(const ArrangementSpec& spec, std::span<const std::size_t> subset) {
  if (subset.empty()) return false;
  RatVector rhs;
  rhs.reserve(subset.size());
  for (std::size_t i : subset) rhs.push_back(spec.offsets.at(i));
  return !rational_feasible(spec.normals.select_rows(subset), rhs).has_value();
}

namespace detail {

// Calls f(subset) for every subset of {0..n-1} of size `size`, in
// lexicographic order. Stops early when f returns false.
template <typename F>
bool for_each_subset(std::size_t n, std::size_t size, F&& f) {
  if (size > n) return true;
  std::vector<std::size_t> idx(size);
  for (std::size_t i = 0; i < size; ++i) idx[i] = i;
  for (;;) {
    if (!f(std::span<const std::size_t>(idx))) return false;
    std::size_t pos = size;
    while (pos > 0 && idx[pos - 1] == n - size + pos - 1) --pos;
    if (pos == 0) return true;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

// A violating set (dependent normals, nonempty intersection) contains a
// circuit, which has at most rank + 1 <= d + 1 elements and still meets.
inline bool is_simple(const ArrangementSpec& spec) {
  const std::size_t n = spec.n(), d = spec.d();
  if (!spec.has_offsets()) return n <= d && rank(spec.normals) == n;
  for (std::size_t size = 2; size <= std::min(n, d + 1); ++size) {
    bool ok = detail::for_each_subset(n, size, [&](std::span<const std::size_t> subset) {
      if (rank(spec.normals.select_rows(subset)) == subset.size()) return true;
      return intersection_empty(spec, subset);
    });
    if (!ok) return false;
  }
  return true;
}

struct AffinizationOptions {
  std::uint64_t seed = 0;
  std::size_t retry_budget = 1000;
};

// Integer offsets drawn from [-B, B]; B starts at n and grows with every
// retry. The draw uses raw mt19937_64 output so it is reproducible across
// standard libraries.
inline RatVector random_simple_affinization(const IntMatrix& normals,
                                            const AffinizationOptions& opts = {}) {
  std::mt19937_64 rng(opts.seed);
  ArrangementSpec candidate{normals, {}};
  const std::size_t n = normals.rows();
  for (std::size_t attempt = 0; attempt < opts.retry_budget; ++attempt) {
    const std::uint64_t bound = n + attempt;
    const std::uint64_t width = 2 * bound + 1;
    candidate.offsets.assign(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      const auto draw = static_cast<long>(rng() % width) - static_cast<long>(bound);
      candidate.offsets[i] = Rational(draw);
    }
    if (is_simple(candidate)) return candidate.offsets;
  }
  throw NotSimpleError("no simple affinization found within " +
                       std::to_string(opts.retry_budget) + " attempts");
}

}  // namespace hypertoric
