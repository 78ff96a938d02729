// JSON / CSV serialization for decompositions, grids and scalar results.
//
// Rationals serialize as {"num": "<decimal>", "den": "<decimal>"} with
// arbitrary-precision decimal strings; floating-point values are printed
// with 17 significant digits so a round-trip through text is bit-exact.
#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "barnes/errors.hpp"
#include "barnes/rational.hpp"
#include "barnes/reduction.hpp"
#include "barnes/special_values.hpp"

namespace barnes {

using Json = nlohmann::json;

inline std::string format_double17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

inline Json rational_to_json(const Rational& r) {
  return Json{{"num", r.num().get_str()}, {"den", r.den().get_str()}};
}

inline Rational rational_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw DomainError("rational JSON must be {\"num\": ..., \"den\": ...}");
  const std::string num = j.at("num").get<std::string>();
  const std::string den = j.at("den").get<std::string>();
  try {
    return Rational(BigInt(num), BigInt(den));
  } catch (const std::invalid_argument&) {
    throw DomainError("malformed integer string in rational JSON");
  }
}

inline Json decomposition_to_json(const HurwitzDecomposition& d) {
  Json terms = Json::array();
  for (const auto& t : d.terms)
    terms.push_back(Json{{"k", t.k},
                         {"y", rational_to_json(t.y)},
                         {"coeff", rational_to_json(t.coeff)}});
  return Json{{"N", d.N}, {"w", rational_to_json(d.w)}, {"terms", terms}};
}

inline HurwitzDecomposition decomposition_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("N") || !j.contains("w") ||
      !j.contains("terms"))
    throw DomainError("decomposition JSON must have N, w, terms");
  HurwitzDecomposition d;
  d.N = j.at("N").get<unsigned>();
  d.w = rational_from_json(j.at("w"));
  if (d.w.sign() <= 0) throw DomainError("scale w must be positive");
  for (const auto& jt : j.at("terms")) {
    HurwitzTerm t;
    t.k = jt.at("k").get<unsigned>();
    t.y = rational_from_json(jt.at("y"));
    t.coeff = rational_from_json(jt.at("coeff"));
    if (t.y.sign() <= 0) throw DomainError("term shift y must be positive");
    d.terms.push_back(std::move(t));
  }
  return d;
}

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

inline std::string grid_to_csv(const Zeta0Grid& g) {
  std::string out = "w1,w2,value\n";
  for (std::size_t i = 0; i < g.w1.size(); ++i)
    for (std::size_t j = 0; j < g.w2.size(); ++j) {
      out += format_double17(g.w1[i]);
      out += ',';
      out += format_double17(g.w2[j]);
      out += ',';
      out += format_double17(g.values[i][j]);
      out += '\n';
    }
  return out;
}

inline Json grid_to_json(const Zeta0Grid& g) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < g.w1.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < g.w2.size(); ++j)
      row.push_back(g.values[i][j]);
    rows.push_back(std::move(row));
  }
  return Json{{"w1", g.w1}, {"w2", g.w2}, {"values", rows}};
}

}  // namespace barnes
