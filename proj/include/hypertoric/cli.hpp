#pragma once

// Command-line pipeline: input document -> validation -> affinization ->
// simplicity -> weights -> group -> presentation -> Groebner -> Poincare,
// with an optional brute-force cross-check. Produces a JSON result document
// and a text report carrying the same numbers.

#include "hypertoric/arrangement.hpp"
#include "hypertoric/errors.hpp"
#include "hypertoric/groebner.hpp"
#include "hypertoric/io.hpp"
#include "hypertoric/oracle.hpp"
#include "hypertoric/presentation.hpp"
#include "hypertoric/stabilizers.hpp"

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

namespace hypertoric::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 64,
  kValidationFailed = 65,
  kNotSimple = 66,
  kOracleMismatch = 70,
  kNotFinite = 71,
};

inline const char* status_name(int code) {
  switch (code) {
    case kOk: return "ok";
    case kParseError: return "parse-error";
    case kValidationFailed: return "validation-failed";
    case kNotSimple: return "not-simple";
    case kOracleMismatch: return "oracle-mismatch";
    case kNotFinite: return "not-finite";
  }
  return "error";
}

struct PipelineOptions {
  bool affinize = false;
  std::optional<std::uint64_t> seed;        // overrides the document's
  std::optional<std::uint64_t> max_degree;  // overrides the document's
  bool check_oracle = false;
};

struct Outcome {
  int exit_code = kOk;
  io::Json document;
  std::string report;
  std::string message;  // diagnostic for standard error
};

namespace detail {

inline std::string join_rationals(const RatVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + io::format_rational(v[i]);
  return s + ")";
}

inline std::string join_indices(const IndexSet& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i] + 1);
  return s + "}";
}

inline std::string join_integers(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
  return s + ")";
}

}  // namespace detail

inline Outcome run_document(const io::InputDocument& in, const PipelineOptions& opts) {
  Outcome out;
  io::Json& doc = out.document;
  std::ostringstream rep;
  doc["schemaVersion"] = io::kSchemaVersion;
  doc["status"] = "ok";

  auto fail = [&](int code, const std::string& msg) {
    out.exit_code = code;
    out.message = msg;
    doc["status"] = status_name(code);
    doc["error"] = msg;
    rep << "error: " << msg << "\n";
    out.report = rep.str();
    return out;
  };

  ArrangementSpec spec{in.normals, in.offsets.value_or(RatVector{})};
  const std::size_t n = spec.n(), d = spec.d();
  const std::uint64_t seed = opts.seed.value_or(in.seed.value_or(0));
  const std::uint64_t max_degree = opts.max_degree.value_or(in.max_degree.value_or(4 * n));
  if (max_degree % 2 != 0) return fail(kParseError, "maxDegree must be even");

  const ValidationReport validation = validate(spec);
  doc["validation"] = io::validation_json(validation);
  rep << "validation: " << (validation.passed() ? "passed" : "FAILED") << "\n";
  for (const auto& c : validation.checks)
    if (!c.passed) rep << "  " << c.name << ": " << c.message << "\n";
  if (!validation.passed()) return fail(kValidationFailed, validation.summary());

  bool affinized = false;
  if (!spec.has_offsets() || (opts.affinize && !is_simple(spec))) {
    try {
      spec.offsets = random_simple_affinization(spec.normals, {seed, 1000});
    } catch (const NotSimpleError& e) {
      return fail(kNotSimple, e.what());
    }
    affinized = true;
  }
  const bool simple = is_simple(spec);

  io::Json arr;
  arr["n"] = n;
  arr["d"] = d;
  arr["k"] = spec.k();
  arr["normals"] = io::matrix_rows_json(spec.normals);
  arr["offsets"] = io::rationals_json(spec.offsets);
  arr["affinized"] = affinized;
  if (affinized) arr["seed"] = seed;
  arr["simple"] = simple;
  doc["arrangement"] = std::move(arr);

  rep << "arrangement: n = " << n << ", d = " << d << ", k = " << spec.k() << "\n";
  for (std::size_t i = 0; i < n; ++i)
    rep << "  a" << i + 1 << " = " << detail::join_integers(spec.normals.row(i))
        << ", offset " << io::format_rational(spec.offsets[i]) << "\n";
  if (affinized) rep << "  offsets generated with seed " << seed << "\n";
  rep << "  simple: " << (simple ? "yes" : "no") << "\n";
  if (!simple)
    return fail(kNotSimple, "arrangement is not simple (rerun with --affinize to replace offsets)");

  const WeightMatrix weights = compute_weights(spec);
  doc["weights"] = io::matrix_rows_json(weights.lambdas);
  rep << "weights:\n";
  for (std::size_t i = 0; i < n; ++i)
    rep << "  lambda" << i + 1 << " = " << detail::join_integers(weights.lambda(i)) << "\n";

  StabilizerGroup group = full_group(spec);
  doc["group"] = io::group_json(group);
  rep << "group: order " << group.order() << "\n";
  for (std::size_t e = 0; e < group.order(); ++e)
    rep << "  " << io::element_name(e) << ": logweights "
        << detail::join_rationals(group.element(e).logweights) << ", S = "
        << detail::join_indices(group.fixed(e)) << ", degree " << group.degree(e) << "\n";
  rep << "  table:\n";
  for (std::size_t a = 0; a < group.order(); ++a) {
    rep << "   ";
    for (std::size_t b = 0; b < group.order(); ++b) rep << " " << io::element_name(group.multiply(a, b));
    rep << "\n";
  }

  const RingPresentation pres = build_presentation(spec, group);
  const MonomialOrder order = MonomialOrder::for_presentation(pres);
  doc["presentation"] = io::presentation_json(pres);
  rep << "presentation:\n  generators:";
  for (const auto& g : pres.generators) rep << " " << g.name << "[" << g.degree << "]";
  rep << "\n  relations:\n";
  for (const auto& r : pres.relations)
    rep << "    " << to_string(r.origin) << ": " << io::polynomial_string(r.poly, pres, order) << "\n";

  PoincarePolynomial p;
  GroebnerBasis gb = buchberger(pres.polynomials(), order);
  io::Json gbj = io::Json::array();
  for (const auto& g : gb.polynomials()) gbj.push_back(io::polynomial_json(g, pres, order));
  doc["groebnerBasis"] = std::move(gbj);
  rep << "groebner basis: " << gb.size() << " elements\n";
  for (const auto& g : gb.polynomials()) rep << "  " << io::polynomial_string(g, pres, order) << "\n";
  try {
    p = poincare(gb);
  } catch (const NotFiniteError& e) {
    return fail(kNotFinite, e.what());
  }
  doc["poincare"] = io::poincare_json(p);
  doc["eulerCharacteristic"] = euler_characteristic(p);
  rep << "poincare: " << io::poincare_string(p) << "\n";
  rep << "euler characteristic: " << euler_characteristic(p) << "\n";

  if (opts.check_oracle) {
    const OracleResult oracle = oracle_poincare(pres, max_degree);
    bool agree = true;
    for (const auto& [deg, dim] : oracle.poincare) {
      auto it = p.find(deg);
      if ((it == p.end() ? 0 : it->second) != dim) agree = false;
    }
    for (const auto& [deg, dim] : p)
      if (deg > max_degree) agree = false;
    io::Json oj;
    oj["maxDegree"] = max_degree;
    oj["poincare"] = io::poincare_json(trimmed(oracle.poincare));
    if (oracle.tail_warning) oj["warning"] = oracle.warning;
    doc["oracle"] = std::move(oj);
    doc["oracleAgreement"] = agree;
    rep << "oracle (max degree " << max_degree << "): " << io::poincare_string(trimmed(oracle.poincare))
        << ", " << (agree ? "agrees" : "DISAGREES") << "\n";
    if (oracle.tail_warning) rep << "  warning: " << oracle.warning << "\n";
    if (!agree) return fail(kOracleMismatch, "oracle and Groebner Poincare polynomials differ");
  }

  out.report = rep.str();
  return out;
}

struct Arguments {
  std::string input;
  std::optional<std::string> json_path;  // "-" for standard output
  bool report = false;
  PipelineOptions pipeline;
};

inline std::string dump(const io::Json& doc) { return doc.dump(2) + "\n"; }

// Text report goes to `out` unless only --json was asked for. Diagnostics
// go to `err`.
inline int run(const Arguments& args, std::ostream& out, std::ostream& err) {
  const bool want_report = args.report || !args.json_path;
  Outcome outcome;
  try {
    std::ifstream file(args.input, std::ios::binary);
    if (!file) throw ParseError("cannot open input file " + args.input);
    std::ostringstream text;
    text << file.rdbuf();
    outcome = run_document(io::parse_input_text(text.str()), args.pipeline);
  } catch (const ParseError& e) {
    outcome.exit_code = kParseError;
    outcome.message = e.what();
    outcome.document = {{"schemaVersion", io::kSchemaVersion},
                        {"status", status_name(kParseError)},
                        {"error", e.what()}};
    outcome.report = std::string("error: ") + e.what() + "\n";
  } catch (const BudgetExceededError& e) {
    outcome.exit_code = kNotFinite;
    outcome.message = e.what();
    outcome.document = {{"schemaVersion", io::kSchemaVersion},
                        {"status", status_name(kNotFinite)},
                        {"error", e.what()}};
    outcome.report = std::string("error: ") + e.what() + "\n";
  }

  if (args.json_path) {
    if (*args.json_path == "-") {
      out << dump(outcome.document);
    } else {
      std::ofstream f(*args.json_path, std::ios::binary);
      if (!f) {
        err << "cannot write " << *args.json_path << "\n";
        return kParseError;
      }
      f << dump(outcome.document);
    }
  }
  if (want_report) out << outcome.report;
  if (!outcome.message.empty()) err << "hypertoric_cr: " << outcome.message << "\n";
  return outcome.exit_code;
}

}  // namespace hypertoric::cli
