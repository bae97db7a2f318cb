// lexlab: command-line front end for the engines.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lexlab/lexlab.hpp"

namespace {

using namespace lexlab;

constexpr int kOk = 0;
constexpr int kParse = 2;
constexpr int kEngine = 3;
constexpr int kViolation = 4;

struct Common {
  std::string ring;
  std::string window;
  std::size_t trials = 3;
  std::uint64_t seed = 0;
  std::string format = "table";
  std::int64_t max_degree = -1;
  unsigned threads = 0;
};

bool json_out(const Common& c) { return c.format == "json"; }

std::optional<DegreeWindow> window_flag(const Common& c) {
  if (c.window.empty()) return std::nullopt;
  auto [lo, hi] = parse_window(c.window);
  return DegreeWindow(lo, hi);
}

GinOptions gin_options(const Common& c) {
  GinOptions o;
  o.trials = c.trials;
  o.seed = c.seed;
  return o;
}

MonomialIdeal require_monomial(const ParsedIdeal& p, const char* command) {
  if (!p.is_monomial)
    throw ParseError(std::string(command) + " needs monomial generators; run `lexlab gin` first", 0);
  return p.ideal;
}

// Hilbert function data does not see the coordinates, so polynomial input is replaced by
// its degrevlex initial ideal.
MonomialIdeal hilbert_model(const ParsedIdeal& p, std::size_t n) {
  if (p.is_monomial) return p.ideal;
  if (p.polynomials.empty()) return MonomialIdeal::zero(n);
  return initial_ideal(buchberger(p.polynomials, TermOrder::degrevlex));
}

std::vector<std::int64_t> parse_values(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  std::size_t pos = 0;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError("Hilbert function values must be integers", pos);
    }
    pos += item.size() + 1;
  }
  if (out.empty()) throw ParseError("empty Hilbert function", 0);
  return out;
}

int cmd_hf(const Common& c, const RingSpec& ring, const std::string& text) {
  const auto I = hilbert_model(parse_ideal(text, ring), ring.n());
  if (I.is_unit()) throw InvalidArgument("the unit ideal has Hilbert function 0");
  std::int64_t D = I.max_generator_degree() + static_cast<std::int64_t>(ring.n());
  if (c.max_degree >= 0) D = std::max(D, c.max_degree);
  auto hd = hilbert_series(I, D);
  if (c.max_degree >= 0) hd.values.resize(static_cast<std::size_t>(c.max_degree) + 1);
  const auto dm = dimension_and_multiplicity(hd.numerator, ring.n());
  std::optional<GotzmannData> g;
  if (hd.polynomial.degree() <= static_cast<std::int64_t>(ring.n()) - 2) g = gotzmann_representation(hd.polynomial, ring.n());
  if (json_out(c)) {
    json j = {{"ideal", to_json(I, ring)}, {"hilbert", to_json(hd)}, {"dimension", dm.dimension},
              {"multiplicity", dm.multiplicity}};
    j["gotzmann"] = g ? to_json(*g) : json();
    std::cout << j.dump(2) << '\n';
    return kOk;
  }
  std::cout << "ideal        " << format_ideal(I, ring) << '\n' << "H(d)        ";
  for (auto v : hd.values) std::cout << ' ' << v;
  std::cout << '\n'
            << "numerator    " << format_numerator(hd.numerator) << '\n'
            << "polynomial   " << hd.polynomial.to_string() << "  (from d = " << hd.d0 << ")\n"
            << "dimension    " << dm.dimension << '\n'
            << "multiplicity " << dm.multiplicity << '\n';
  if (g) {
    std::cout << "gotzmann     l = " << g->l << ", v =";
    for (auto v : g->v) std::cout << ' ' << v;
    std::cout << '\n';
  }
  return kOk;
}

int cmd_lex(const Common& c, const RingSpec& ring, const std::string& text) {
  const auto I = hilbert_model(parse_ideal(text, ring), ring.n());
  const auto L = lex_ideal(I);
  const auto ex = exchange_property(I);
  const auto hd = hilbert_series(I);
  std::optional<GotzmannData> g;
  if (hd.polynomial.degree() <= static_cast<std::int64_t>(ring.n()) - 2) g = gotzmann_representation(hd.polynomial, ring.n());
  if (json_out(c)) {
    json j = {{"ideal", to_json(I, ring)}, {"lex", to_json(L, ring)}, {"exchange", to_json(ex, ring)},
              {"gotzmann_ideal", is_gotzmann(I)}};
    j["gotzmann"] = g ? to_json(*g) : json();
    std::cout << j.dump(2) << '\n';
    return kOk;
  }
  std::cout << "lex          " << format_ideal(L, ring) << '\n'
            << "(I^sat)^lex  " << format_ideal(ex.left, ring) << '\n'
            << "(I^lex)^sat  " << format_ideal(ex.right, ring) << '\n'
            << "exchange     " << (ex.holds ? "holds" : "fails") << '\n'
            << "gotzmann     " << (is_gotzmann(I) ? "yes" : "no") << '\n';
  if (g) {
    std::cout << "v-vector    ";
    for (auto v : g->v) std::cout << ' ' << v;
    std::cout << '\n';
  }
  return kOk;
}

int cmd_sat(const Common& c, const RingSpec& ring, const std::string& text) {
  const auto I = require_monomial(parse_ideal(text, ring), "sat");
  const auto S = saturate(I);
  const bool sat = S == I;
  const auto dd = I.is_unit() ? DepthDim{} : depth_and_dim(I);
  if (json_out(c)) {
    json j = {{"ideal", to_json(I, ring)}, {"saturation", to_json(S, ring)}, {"saturated", sat}};
    if (!I.is_unit()) j["depth"] = dd.depth;
    std::cout << j.dump(2) << '\n';
    return kOk;
  }
  std::cout << "saturation  " << format_ideal(S, ring) << '\n' << "saturated   " << (sat ? "yes" : "no") << '\n';
  if (!I.is_unit()) std::cout << "depth       " << dd.depth << '\n';
  return kOk;
}

int cmd_gin(const Common& c, const RingSpec& ring, const std::string& text) {
  const auto p = parse_ideal(text, ring);
  const auto res = p.polynomials.empty() ? GinResult{MonomialIdeal::zero(ring.n()), {}}
                                         : gin_detailed(p.polynomials, gin_options(c));
  const bool ss = is_strongly_stable(res.ideal);
  if (json_out(c)) {
    std::cout << json{{"gin", to_json(res.ideal, ring)}, {"trials", c.trials}, {"seed", c.seed}, {"strongly_stable", ss}}.dump(2)
              << '\n';
    return kOk;
  }
  std::cout << "gin              " << format_ideal(res.ideal, ring) << '\n'
            << "trials           " << c.trials << " (seed " << c.seed << ")\n"
            << "strongly stable  " << (ss ? "yes" : "no") << '\n';
  return kOk;
}

int cmd_lc(const Common& c, const RingSpec& ring, const std::string& text) {
  const auto I = require_monomial(parse_ideal(text, ring), "lc");
  if (I.is_unit()) throw InvalidArgument("R/I is zero for the unit ideal");
  const auto w = window_flag(c).value_or(default_window(I));
  const auto t = local_cohomology_table(I, w);
  const auto dd = depth_and_dim(I);
  if (json_out(c)) {
    std::cout << json{{"ideal", to_json(I, ring)}, {"table", to_json(t)}, {"depth", dd.depth}, {"dim", dd.dim},
                      {"cohen_macaulay", dd.cohen_macaulay()}}
                     .dump(2)
              << '\n';
    return kOk;
  }
  std::cout << "h^i(R/I)_j for " << format_ideal(I, ring) << '\n';
  print_table(std::cout, t);
  std::cout << "depth " << dd.depth << ", dim " << dd.dim << (dd.cohen_macaulay() ? ", Cohen-Macaulay" : "") << '\n';
  return kOk;
}

int cmd_verify(const Common& c, const RingSpec& ring, const std::string& text) {
  const auto p = parse_ideal(text, ring);
  VerifyOptions o;
  o.window = window_flag(c);
  o.gin = gin_options(c);
  const auto r = p.is_monomial ? verify_main(p.ideal, o) : verify_main(p.polynomials, ring.n(), o);
  if (json_out(c))
    std::cout << to_json(r, ring).dump(2) << '\n';
  else
    print_report(std::cout, r, ring);
  if (r.verdict == Verdict::TheoremViolation) {
    std::cerr << "THEOREM VIOLATION: conditions (i) and (ii) disagree\n";
    return kViolation;
  }
  return kOk;
}

struct FamilyFlags {
  std::string source;
  std::string hf;
  bool all = false;
};

std::vector<MonomialIdeal> family(const Common& c, const RingSpec& ring, const FamilyFlags& f) {
  const int chosen = (!f.source.empty()) + (!f.hf.empty()) + f.all;
  if (chosen != 1) throw ParseError("give exactly one of an ideal, --hf or --all", 0);
  if (f.all) {
    if (c.max_degree < 1) throw ParseError("--all needs --max-degree >= 1", 0);
    return enumerate_all_strongly_stable(ring.n(), c.max_degree);
  }
  if (!f.hf.empty()) {
    auto values = parse_values(f.hf);
    const std::int64_t D = c.max_degree >= 0 ? c.max_degree : static_cast<std::int64_t>(values.size()) - 1;
    if (static_cast<std::int64_t>(values.size()) <= D) throw ParseError("--hf needs values for degrees 0..max-degree", 0);
    if (auto bad = first_macaulay_violation(values, ring.n()); bad >= 0)
      throw InvalidArgument("Hilbert function violates Macaulay's bound in degree " + std::to_string(bad));
    values.resize(static_cast<std::size_t>(D) + 1);
    return enumerate_strongly_stable(FamilySpec::from_values(ring.n(), std::move(values), D));
  }
  const auto I = hilbert_model(parse_ideal(f.source, ring), ring.n());
  const std::int64_t D = c.max_degree >= 0 ? c.max_degree : I.max_generator_degree();
  return enumerate_strongly_stable(FamilySpec::from_ideal(I, D));
}

int cmd_enumerate(const Common& c, const RingSpec& ring, const FamilyFlags& f, bool verify) {
  const auto fam = family(c, ring, f);
  std::vector<VerificationReport> reports;
  if (verify) {
    VerifyOptions o;
    o.window = window_flag(c);
    o.with_gin = false;
    reports = parallel_map(fam, [&](const MonomialIdeal& I) { return verify_main(I, o); }, c.threads);
  }
  std::size_t violations = 0;
  for (const auto& r : reports) violations += r.verdict == Verdict::TheoremViolation;
  if (json_out(c)) {
    json members = json::array();
    for (std::size_t k = 0; k < fam.size(); ++k) {
      json m = {{"ideal", to_json(fam[k], ring)}};
      if (verify)
        m["verify"] = {{"condition_i", reports[k].condition_i},
                       {"condition_ii_on_window", reports[k].condition_ii_on_window},
                       {"verdict", to_string(reports[k].verdict)}};
      members.push_back(m);
    }
    json j = {{"count", fam.size()}, {"members", members}};
    if (verify) j["violations"] = violations;
    std::cout << j.dump(2) << '\n';
  } else {
    for (std::size_t k = 0; k < fam.size(); ++k) {
      std::cout << format_ideal(fam[k], ring);
      if (verify)
        std::cout << "    (i) " << (reports[k].condition_i ? "T" : "F") << "  (ii) "
                  << (reports[k].condition_ii_on_window ? "T" : "F") << "  " << to_string(reports[k].verdict);
      std::cout << '\n';
    }
    std::cout << fam.size() << " strongly stable ideal(s)";
    if (verify) std::cout << ", " << violations << " violation(s)";
    std::cout << '\n';
  }
  if (violations) {
    std::cerr << "THEOREM VIOLATION in " << violations << " family member(s)\n";
    return kViolation;
  }
  return kOk;
}

int cmd_probe(const Common& c, const RingSpec& ring, const FamilyFlags& f) {
  const auto fam = family(c, ring, f);
  const auto rep = probe_rigidity(fam, window_flag(c), c.threads);
  if (json_out(c)) {
    std::cout << to_json(rep, ring).dump(2) << '\n';
    return kOk;
  }
  std::cout << "windowed search, not conclusive\n";
  for (const auto& e : rep.entries) {
    std::cout << format_ideal(e.ideal, ring) << "    equal:";
    for (bool b : e.equal) std::cout << ' ' << (b ? '=' : 'x');
    if (!e.candidates.empty()) {
      std::cout << "    candidate i:";
      for (auto i : e.candidates) std::cout << ' ' << i;
    }
    std::cout << '\n';
  }
  std::cout << (rep.any_candidate() ? "candidates found" : "none found") << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lex ideals, saturation and local cohomology of monomial ideals"};
  app.require_subcommand(1);
  Common c;
  std::string text;
  FamilyFlags fam;
  bool verify = false;

  auto common = [&](CLI::App* sub, bool ideal_arg) {
    sub->add_option("--ring", c.ring, "variable names, e.g. x,y,z")->required();
    sub->add_option("--window", c.window, "degree window lo:hi");
    sub->add_option("--trials", c.trials, "gin trials")->check(CLI::PositiveNumber);
    sub->add_option("--seed", c.seed, "gin seed");
    sub->add_option("--format", c.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--max-degree", c.max_degree, "largest degree considered");
    if (ideal_arg) sub->add_option("ideal", text, "generators, e.g. \"x^2, x*y\"")->required();
  };
  auto family_flags = [&](CLI::App* sub) {
    sub->add_option("ideal", fam.source, "source ideal fixing the Hilbert function");
    sub->add_option("--hf", fam.hf, "Hilbert function values for degrees 0, 1, ...");
    sub->add_flag("--all", fam.all, "every strongly stable ideal up to --max-degree");
    sub->add_option("--threads", c.threads, "worker threads (0 = all cores)");
  };

  auto* hf = app.add_subcommand("hf", "Hilbert function, series and polynomial");
  common(hf, true);
  auto* lex = app.add_subcommand("lex", "lex ideal and the exchange property");
  common(lex, true);
  auto* sat = app.add_subcommand("sat", "saturation");
  common(sat, true);
  auto* gin_cmd = app.add_subcommand("gin", "generic initial ideal (degrevlex)");
  common(gin_cmd, true);
  auto* lc = app.add_subcommand("lc", "local cohomology table of R/I");
  common(lc, true);
  auto* vm = app.add_subcommand("verify-main", "compare conditions (i), (ii) and (iii)");
  common(vm, true);
  auto* en = app.add_subcommand("enumerate", "strongly stable ideals with a given Hilbert function");
  common(en, false);
  family_flags(en);
  en->add_flag("--verify", verify, "run verify-main on every member");
  auto* pr = app.add_subcommand("probe-rigidity", "search for partial agreement with the lex ideal");
  common(pr, false);
  family_flags(pr);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    const RingSpec ring = parse_ring(c.ring);
    if (hf->parsed()) return cmd_hf(c, ring, text);
    if (lex->parsed()) return cmd_lex(c, ring, text);
    if (sat->parsed()) return cmd_sat(c, ring, text);
    if (gin_cmd->parsed()) return cmd_gin(c, ring, text);
    if (lc->parsed()) return cmd_lc(c, ring, text);
    if (vm->parsed()) return cmd_verify(c, ring, text);
    if (en->parsed()) return cmd_enumerate(c, ring, fam, verify);
    if (pr->parsed()) return cmd_probe(c, ring, fam);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kEngine;
  } catch (const EngineError& e) {
    std::cerr << "engine error: " << e.what() << '\n';
    return kEngine;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kEngine;
  }
  return kOk;
}
