#pragma once

// JSON and plain-text renderings of engine results.

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lexlab/cohomology.hpp"
#include "lexlab/hilbert.hpp"
#include "lexlab/lab.hpp"
#include "lexlab/lex.hpp"
#include "lexlab/parse.hpp"

namespace lexlab {

using json = nlohmann::ordered_json;

inline json to_json(const MonomialIdeal& I, const RingSpec& ring) {
  json a = json::array();
  for (const auto& g : I.gens()) a.push_back(format_monomial(g, ring));
  return a;
}

inline MonomialIdeal ideal_from_json(const json& j, const RingSpec& ring) {
  std::vector<Monomial> gens;
  for (const auto& s : j) gens.push_back(parse_monomial(s.get<std::string>(), ring));
  return MonomialIdeal(ring.n(), std::move(gens));
}

inline json to_json(const QPolynomial& p) {
  json a = json::array();
  for (const auto& c : p.coefficients()) a.push_back(c.get_str());
  return a;
}

inline json to_json(const HilbertData& h) {
  return {{"values", h.values}, {"numerator", h.numerator}, {"polynomial", to_json(h.polynomial)},
          {"polynomial_text", h.polynomial.to_string()}, {"d0", h.d0}};
}

inline json to_json(const GotzmannData& g) { return {{"a", g.a}, {"v", g.v}, {"h", g.h}, {"l", g.l}}; }

inline json to_json(const ExchangeReport& e, const RingSpec& ring) {
  return {{"holds", e.holds}, {"left", to_json(e.left, ring)}, {"right", to_json(e.right, ring)}};
}

inline json to_json(const DegreeWindow& w) { return json::array({w.lo, w.hi}); }

inline DegreeWindow window_from_json(const json& j) { return {j.at(0).get<std::int64_t>(), j.at(1).get<std::int64_t>()}; }

/// Nonzero entries only: {"window": [lo, hi], "rows": {"i": {"j": v}}}.
inline json to_json(const LCTable& t) {
  json rows = json::object();
  for (std::size_t i = 0; i <= t.n(); ++i) {
    json row = json::object();
    for (std::int64_t j = t.window().lo; j <= t.window().hi; ++j)
      if (auto v = t.at(i, j); v != 0) row[std::to_string(j)] = v;
    rows[std::to_string(i)] = row;
  }
  return {{"n", t.n()}, {"window", to_json(t.window())}, {"rows", rows}};
}

inline LCTable lc_table_from_json(const json& j) {
  LCTable t(j.at("n").get<std::size_t>(), window_from_json(j.at("window")));
  for (const auto& [i, row] : j.at("rows").items())
    for (const auto& [k, v] : row.items()) t.set(std::stoul(i), std::stoll(k), v.get<std::int64_t>());
  return t;
}

inline Verdict verdict_from_string(const std::string& s) {
  for (auto v : {Verdict::Consistent, Verdict::WindowInconclusive, Verdict::TheoremViolation})
    if (s == to_string(v)) return v;
  throw ParseError("unknown verdict '" + s + "'", 0);
}

inline json to_json(const VerificationReport& r, const RingSpec& ring) {
  json j = {{"ideal", to_json(r.ideal, ring)},
            {"via_gin", r.via_gin},
            {"lex", to_json(r.lex, ring)},
            {"saturations", to_json(r.saturations, ring)},
            {"condition_i", r.condition_i},
            {"lc_window", to_json(r.lc_window)},
            {"default_window_covered", r.default_window_covered},
            {"tables", {{"ideal", to_json(r.table)}, {"lex", to_json(r.lex_table)}}},
            {"condition_ii_on_window", r.condition_ii_on_window}};
  j["first_mismatch"] = r.first_mismatch ? json::array({r.first_mismatch->first, r.first_mismatch->second}) : json();
  j["gin"] = r.gin ? to_json(*r.gin, ring) : json();
  j["condition_iii"] = r.condition_iii ? json(*r.condition_iii) : json();
  j["verdict"] = to_string(r.verdict);
  return j;
}

inline VerificationReport report_from_json(const json& j, const RingSpec& ring) {
  VerificationReport r;
  r.ideal = ideal_from_json(j.at("ideal"), ring);
  r.via_gin = j.at("via_gin").get<bool>();
  r.lex = ideal_from_json(j.at("lex"), ring);
  const auto& s = j.at("saturations");
  r.saturations = {s.at("holds").get<bool>(), ideal_from_json(s.at("left"), ring), ideal_from_json(s.at("right"), ring)};
  r.condition_i = j.at("condition_i").get<bool>();
  r.lc_window = window_from_json(j.at("lc_window"));
  r.default_window_covered = j.at("default_window_covered").get<bool>();
  r.table = lc_table_from_json(j.at("tables").at("ideal"));
  r.lex_table = lc_table_from_json(j.at("tables").at("lex"));
  r.condition_ii_on_window = j.at("condition_ii_on_window").get<bool>();
  if (const auto& m = j.at("first_mismatch"); !m.is_null())
    r.first_mismatch = std::pair{m.at(0).get<std::size_t>(), m.at(1).get<std::int64_t>()};
  if (const auto& g = j.at("gin"); !g.is_null()) r.gin = ideal_from_json(g, ring);
  if (const auto& c = j.at("condition_iii"); !c.is_null()) r.condition_iii = c.get<bool>();
  r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  return r;
}

inline json to_json(const RigidityReport& rep, const RingSpec& ring) {
  json entries = json::array();
  for (const auto& e : rep.entries) {
    json eq = json::array();
    for (bool b : e.equal) eq.push_back(b);
    entries.push_back({{"ideal", to_json(e.ideal, ring)}, {"equal", eq}, {"candidates", e.candidates}});
  }
  json j = {{"window", rep.window_is_default ? json("default") : to_json(rep.window)},
            {"conclusive", false},
            {"entries", entries}};
  j["result"] = rep.any_candidate() ? "candidates found" : "none found";
  return j;
}

/// Rows i = 0..n, one column per degree j.
inline void print_table(std::ostream& os, const LCTable& t) {
  const auto& w = t.window();
  int width = 3;
  for (std::size_t i = 0; i <= t.n(); ++i)
    for (std::int64_t j = w.lo; j <= w.hi; ++j)
      width = std::max(width, static_cast<int>(std::to_string(t.at(i, j)).size()) + 1);
  for (std::int64_t j = w.lo; j <= w.hi; ++j)
    width = std::max(width, static_cast<int>(std::to_string(j).size()) + 1);
  os << "i\\j ";
  for (std::int64_t j = w.lo; j <= w.hi; ++j) os << std::setw(width) << j;
  os << '\n';
  for (std::size_t i = 0; i <= t.n(); ++i) {
    os << std::setw(3) << i << ' ';
    for (std::int64_t j = w.lo; j <= w.hi; ++j) os << std::setw(width) << t.at(i, j);
    os << '\n';
  }
}

inline std::string format_numerator(const IntPoly& p) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const auto c = p[k];
    if (c == 0) continue;
    const auto mag = c < 0 ? -c : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    if (mag != 1 || k == 0) os << mag;
    if (k >= 1) os << 't';
    if (k >= 2) os << '^' << k;
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

inline void print_report(std::ostream& os, const VerificationReport& r, const RingSpec& ring) {
  if (r.via_gin) os << "input         polynomial, analysed through gin\n";
  os << "ideal         " << format_ideal(r.ideal, ring) << '\n';
  os << "lex           " << format_ideal(r.lex, ring) << '\n';
  os << "(I^sat)^lex   " << format_ideal(r.saturations.left, ring) << '\n';
  os << "(I^lex)^sat   " << format_ideal(r.saturations.right, ring) << '\n';
  os << "condition (i) " << (r.condition_i ? "true" : "false") << '\n';
  os << "window        " << r.lc_window.lo << ':' << r.lc_window.hi
     << (r.default_window_covered ? "" : " (narrower than default)") << '\n';
  os << "h^i(R/I)_j\n";
  print_table(os, r.table);
  os << "h^i(R/I^lex)_j\n";
  print_table(os, r.lex_table);
  os << "condition (ii) " << (r.condition_ii_on_window ? "true" : "false") << " on window";
  if (r.first_mismatch) os << ", first mismatch at i=" << r.first_mismatch->first << " j=" << r.first_mismatch->second;
  os << '\n';
  if (r.gin) os << "gin           " << format_ideal(*r.gin, ring) << '\n';
  if (r.condition_iii) os << "condition (iii) " << (*r.condition_iii ? "true" : "false") << '\n';
  os << "verdict       " << to_string(r.verdict) << '\n';
}

}  // namespace lexlab
