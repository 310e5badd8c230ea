#pragma once

// JSON wire format for arrangement input documents and result documents.
// Rationals travel as lowest-terms "p/q" strings ("p" when q = 1).

#include "hypertoric/arrangement.hpp"
#include "hypertoric/errors.hpp"
#include "hypertoric/exactlin.hpp"
#include "hypertoric/groebner.hpp"
#include "hypertoric/presentation.hpp"
#include "hypertoric/stabilizers.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <regex>
#include <string>
#include <string_view>

namespace hypertoric::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

struct InputDocument {
  IntMatrix normals;                 // n x d, row i = a_i
  std::optional<RatVector> offsets;  // length n when present
  std::optional<std::uint64_t> max_degree;
  std::optional<std::uint64_t> seed;
};

inline std::string format_rational(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

inline Rational parse_rational(const Json& v) {
  if (v.is_number_integer()) {
    return Rational(Integer(v.dump()));
  }
  if (!v.is_string()) throw ParseError("rational must be a \"p/q\" string or an integer");
  static const std::regex pattern(R"(^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$)");
  const std::string s = v.get<std::string>();
  std::smatch m;
  if (!std::regex_match(s, m, pattern)) throw ParseError("malformed rational \"" + s + "\"");
  Integer num(m[1].str()[0] == '+' ? m[1].str().substr(1) : m[1].str());
  Integer den = m[2].matched ? Integer(m[2].str()) : Integer(1);
  if (den == 0) throw ParseError("zero denominator in \"" + s + "\"");
  return make_rational(num, den);
}

inline Integer parse_integer(const Json& v) {
  if (v.is_number_integer()) return Integer(v.dump());
  if (v.is_string()) {
    static const std::regex pattern(R"(^\s*[+-]?\d+\s*$)");
    std::string s = v.get<std::string>();
    if (!std::regex_match(s, pattern)) throw ParseError("malformed integer \"" + s + "\"");
    s.erase(0, s.find_first_not_of(" \t"));
    s.erase(s.find_last_not_of(" \t") + 1);
    if (s[0] == '+') s.erase(0, 1);
    return Integer(s);
  }
  throw ParseError("normal entries must be integers");
}

inline Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

inline std::uint64_t parse_count(const Json& v, const char* what) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
    throw ParseError(std::string(what) + " must be a nonnegative integer");
  return v.get<std::uint64_t>();
}

inline InputDocument parse_input(const Json& doc) {
  if (!doc.is_object()) throw ParseError("input document must be a JSON object");
  if (doc.contains("schemaVersion") && doc["schemaVersion"] != kSchemaVersion)
    throw ParseError("unsupported schemaVersion");
  if (!doc.contains("normals") || !doc["normals"].is_array() || doc["normals"].empty())
    throw ParseError("\"normals\" must be a nonempty array of integer rows");
  const Json& rows = doc["normals"];
  const std::size_t n = rows.size();
  if (!rows[0].is_array() || rows[0].empty()) throw ParseError("normals rows must be nonempty arrays");
  const std::size_t d = rows[0].size();
  InputDocument in;
  in.normals = IntMatrix(n, d);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != d)
      throw ParseError("normals must be rectangular (row " + std::to_string(i + 1) + ")");
    for (std::size_t j = 0; j < d; ++j) in.normals(i, j) = parse_integer(rows[i][j]);
  }
  if (doc.contains("offsets") && !doc["offsets"].is_null()) {
    const Json& off = doc["offsets"];
    if (!off.is_array() || off.size() != n)
      throw ParseError("\"offsets\" must be an array with one entry per normal");
    RatVector r;
    for (const auto& v : off) r.push_back(parse_rational(v));
    in.offsets = std::move(r);
  }
  if (doc.contains("options")) {
    const Json& opt = doc["options"];
    if (!opt.is_object()) throw ParseError("\"options\" must be an object");
    if (opt.contains("maxDegree")) in.max_degree = parse_count(opt["maxDegree"], "maxDegree");
    if (opt.contains("seed")) in.seed = parse_count(opt["seed"], "seed");
  }
  return in;
}

inline InputDocument parse_input_text(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_input(doc);
}

inline Json validation_json(const ValidationReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json j = {{"name", c.name}, {"passed", c.passed}};
    if (c.index) j["index"] = *c.index + 1;
    if (!c.message.empty()) j["message"] = c.message;
    checks.push_back(std::move(j));
  }
  return {{"passed", report.passed()}, {"checks", std::move(checks)}};
}

inline Json matrix_rows_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json rationals_json(const RatVector& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(format_rational(q));
  return out;
}

inline Json index_set_json(const IndexSet& s) {
  Json out = Json::array();
  for (auto i : s) out.push_back(i + 1);
  return out;
}

inline std::string element_name(std::size_t e) { return e == 0 ? "id" : "g" + std::to_string(e); }

inline Json group_json(const StabilizerGroup& g) {
  Json elements = Json::array();
  for (std::size_t e = 0; e < g.order(); ++e)
    elements.push_back({{"name", element_name(e)},
                        {"logweights", rationals_json(g.element(e).logweights)},
                        {"fixed", index_set_json(g.fixed(e))},
                        {"degree", g.degree(e)}});
  Json table = Json::array();
  for (std::size_t a = 0; a < g.order(); ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < g.order(); ++b) row.push_back(element_name(g.multiply(a, b)));
    table.push_back(std::move(row));
  }
  return {{"order", g.order()}, {"elements", std::move(elements)}, {"table", std::move(table)}};
}

inline Json monomial_json(const Monomial& m, const RingPresentation& pres) {
  Json exps = Json::object();
  for (std::size_t v = 0; v < m.nvars(); ++v)
    if (m.exps[v]) exps[pres.generators[v].name] = m.exps[v];
  return exps;
}

// Terms listed leading term first under the elimination order.
inline Json polynomial_json(const Polynomial& p, const RingPresentation& pres,
                            const MonomialOrder& order) {
  Json terms = Json::array();
  for (const auto& t : detail::to_ordered(p, order))
    terms.push_back({{"coefficient", format_rational(t.coef)},
                     {"exponents", monomial_json(t.mono, pres)}});
  return terms;
}

inline Json presentation_json(const RingPresentation& pres) {
  const MonomialOrder order = MonomialOrder::for_presentation(pres);
  Json gens = Json::array();
  for (const auto& g : pres.generators) {
    Json j = {{"name", g.name}, {"degree", g.degree}};
    if (g.element) j["element"] = element_name(*g.element);
    gens.push_back(std::move(j));
  }
  Json rels = Json::array();
  for (const auto& r : pres.relations) {
    Json sectors = Json::array();
    for (auto s : r.sectors) sectors.push_back(element_name(s));
    rels.push_back({{"origin", to_string(r.origin)},
                    {"sectors", std::move(sectors)},
                    {"degree", pres.degree(r.poly.terms().begin()->first)},
                    {"terms", polynomial_json(r.poly, pres, order)}});
  }
  return {{"generators", std::move(gens)}, {"relations", std::move(rels)}};
}

inline Json poincare_json(const PoincarePolynomial& p) {
  Json out = Json::object();
  for (const auto& [deg, dim] : p) out[std::to_string(deg)] = dim;
  return out;
}

// "1 + t^2 + 2t^4"
inline std::string poincare_string(const PoincarePolynomial& p) {
  std::string s;
  for (const auto& [deg, dim] : p) {
    if (dim == 0) continue;
    if (!s.empty()) s += " + ";
    if (deg == 0) {
      s += std::to_string(dim);
      continue;
    }
    if (dim != 1) s += std::to_string(dim);
    s += deg == 1 ? "t" : "t^" + std::to_string(deg);
  }
  return s.empty() ? "0" : s;
}

inline std::string polynomial_string(const Polynomial& p, const RingPresentation& pres,
                                     const MonomialOrder& order) {
  std::string s;
  for (const auto& t : detail::to_ordered(p, order)) {
    Rational c = t.coef;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    std::string mono;
    for (std::size_t v = 0; v < t.mono.nvars(); ++v) {
      if (!t.mono.exps[v]) continue;
      if (!mono.empty()) mono += "*";
      mono += pres.generators[v].name;
      if (t.mono.exps[v] > 1) mono += "^" + std::to_string(t.mono.exps[v]);
    }
    if (mono.empty())
      s += format_rational(c);
    else if (c == 1)
      s += mono;
    else
      s += format_rational(c) + "*" + mono;
  }
  return s.empty() ? "0" : s;
}

}  // namespace hypertoric::io
