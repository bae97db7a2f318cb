#pragma once

// Family enumeration, the main-theorem verifier and the rigidity probe.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "lexlab/cohomology.hpp"
#include "lexlab/error.hpp"
#include "lexlab/groebner.hpp"
#include "lexlab/hilbert.hpp"
#include "lexlab/ideal.hpp"
#include "lexlab/lex.hpp"
#include "lexlab/ring.hpp"

namespace lexlab {

enum class Verdict { Consistent, WindowInconclusive, TheoremViolation };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Consistent: return "consistent";
    case Verdict::WindowInconclusive: return "window-inconclusive";
    case Verdict::TheoremViolation: return "THEOREM VIOLATION";
  }
  return "?";
}

struct VerificationReport {
  MonomialIdeal ideal;  // the monomial ideal analysed (gin of a polynomial input)
  bool via_gin = false;
  MonomialIdeal lex;
  ExchangeReport saturations;
  bool condition_i = false;
  DegreeWindow lc_window;
  bool default_window_covered = true;
  LCTable table;      // R/I
  LCTable lex_table;  // R/I^lex
  bool condition_ii_on_window = false;
  std::optional<std::pair<std::size_t, std::int64_t>> first_mismatch;
  std::optional<MonomialIdeal> gin;
  std::optional<bool> condition_iii;
  Verdict verdict = Verdict::Consistent;

  bool operator==(const VerificationReport&) const = default;
};

struct VerifyOptions {
  std::optional<DegreeWindow> window;
  bool with_gin = true;
  GinOptions gin;
};

/// Union of the default windows of I and I^lex.
inline DegreeWindow verification_window(const MonomialIdeal& I, const MonomialIdeal& lex) {
  const auto a = default_window(I);
  const auto b = default_window(lex);
  return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

inline VerificationReport verify_main(const MonomialIdeal& I, const VerifyOptions& opt = {}) {
  if (I.is_unit()) throw InvalidArgument("verify_main needs a proper ideal");
  VerificationReport r;
  r.ideal = I;
  r.lex = lex_ideal(I);
  r.saturations = exchange_property(I);
  r.condition_i = r.saturations.holds;
  const DegreeWindow full = verification_window(I, r.lex);
  r.lc_window = opt.window.value_or(full);
  r.default_window_covered = r.lc_window.lo <= full.lo && r.lc_window.hi >= full.hi;
  r.table = local_cohomology_table(I, r.lc_window);
  r.lex_table = local_cohomology_table(r.lex, r.lc_window);
  r.first_mismatch = lexlab::first_mismatch(r.table, r.lex_table);
  r.condition_ii_on_window = !r.first_mismatch.has_value();

  if (opt.with_gin) {
    auto seq = sequentially_cm_verdict(I, r.lc_window, opt.gin);
    r.condition_iii = seq.verdict == SeqCMVerdict::ConsistentWithSequentiallyCM && seq.gin == r.lex;
    r.gin = std::move(seq.gin);
  }

  const bool ii_refuted_exactly = !r.condition_ii_on_window;
  if (r.condition_i && ii_refuted_exactly)
    r.verdict = Verdict::TheoremViolation;
  else if (!r.condition_i && r.condition_ii_on_window)
    r.verdict = r.default_window_covered ? Verdict::TheoremViolation : Verdict::WindowInconclusive;
  else if (r.condition_iii.value_or(false) && !r.condition_ii_on_window)
    r.verdict = Verdict::TheoremViolation;
  else
    r.verdict = Verdict::Consistent;
  return r;
}

/// Polynomial input: the monomial engines run on gin(I), which has the Hilbert function
/// and local cohomology bounds of I.
inline VerificationReport verify_main(const std::vector<Polynomial>& gens, std::size_t n, const VerifyOptions& opt = {}) {
  MonomialIdeal g = gens.empty() ? MonomialIdeal::zero(n) : gin(gens, opt.gin);
  VerifyOptions inner = opt;
  inner.with_gin = false;
  auto r = verify_main(g, inner);
  r.via_gin = true;
  r.gin = g;
  return r;
}

/// Strongly stable ideals with a prescribed Hilbert function, generated in degrees <= max_degree.
struct FamilySpec {
  std::size_t n = 0;
  std::vector<std::int64_t> values;     // dim (R/I)_d for d = 0..max_degree
  std::optional<MonomialIdeal> source;  // if set, the whole Hilbert series must match
  std::int64_t max_degree = 0;

  static FamilySpec from_values(std::size_t n, std::vector<std::int64_t> values, std::int64_t max_degree) {
    FamilySpec s;
    s.n = n;
    s.values = std::move(values);
    s.max_degree = max_degree;
    return s;
  }

  static FamilySpec from_ideal(const MonomialIdeal& I, std::int64_t max_degree) {
    FamilySpec s;
    s.n = I.n();
    s.max_degree = max_degree;
    const auto N = hilbert_numerator(I);
    for (std::int64_t d = 0; d <= max_degree; ++d) s.values.push_back(hilbert_value(N, I.n(), d));
    s.source = I;
    return s;
  }
};

namespace detail {

inline bool immediate_predecessors_in(const Monomial& u, const std::set<Monomial>& chosen) {
  for (std::size_t j = 1; j < u.size(); ++j)
    if (u[j] > 0 && !chosen.count(borel_move(u, j - 1, j))) return false;
  return true;
}

// Every Borel-closed set of degree-d monomials containing `forced`, of size `size`
// (any size when size < 0). Monomials are decided in lex-decreasing order, so every
// Borel predecessor is decided first.
inline void borel_supersets(const std::vector<Monomial>& mons, const std::set<Monomial>& forced, std::int64_t size,
                            const std::function<void(const std::set<Monomial>&)>& emit) {
  std::set<Monomial> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    const auto have = static_cast<std::int64_t>(chosen.size());
    if (size >= 0) {
      if (have > size) return;
      if (have + static_cast<std::int64_t>(mons.size() - k) < size) return;
    }
    if (k == mons.size()) {
      if (size < 0 || have == size) emit(chosen);
      return;
    }
    const Monomial& u = mons[k];
    const bool ok = immediate_predecessors_in(u, chosen);
    if (forced.count(u)) {
      if (!ok) throw InternalError("shadow of a strongly stable set is not Borel-closed");
      chosen.insert(u);
      rec(k + 1);
      chosen.erase(u);
      return;
    }
    if (ok) {
      chosen.insert(u);
      rec(k + 1);
      chosen.erase(u);
    }
    rec(k + 1);
  };
  rec(0);
}

inline std::set<Monomial> shadow(const std::set<Monomial>& prev, std::size_t n) {
  std::set<Monomial> out;
  for (const auto& u : prev)
    for (std::size_t i = 0; i < n; ++i) out.insert(u * Monomial::variable(n, i));
  return out;
}

inline void enumerate_degreewise(std::size_t n, std::int64_t max_degree,
                                 const std::function<std::int64_t(std::int64_t)>& size_in_degree,
                                 const std::function<void(const MonomialIdeal&)>& emit) {
  if (n == 0) throw InvalidArgument("need at least one variable");
  std::vector<Monomial> gens;
  std::function<void(std::int64_t, const std::set<Monomial>&)> rec = [&](std::int64_t d, const std::set<Monomial>& prev) {
    if (d > max_degree) {
      emit(MonomialIdeal(n, gens));
      return;
    }
    const auto mons = enumerate_monomials(n, d, TermOrder::lex);
    const auto forced = shadow(prev, n);
    borel_supersets(mons, forced, size_in_degree(d), [&](const std::set<Monomial>& s) {
      const std::size_t mark = gens.size();
      for (const auto& u : s)
        if (!forced.count(u)) gens.push_back(u);
      rec(d + 1, s);
      gens.resize(mark);
    });
  };
  rec(1, {});
}

}  // namespace detail

/// Every strongly stable ideal matching the spec, each once, ordered by the lex-decreasing
/// choices made degree by degree.
inline std::vector<MonomialIdeal> enumerate_strongly_stable(const FamilySpec& spec) {
  const std::size_t n = spec.n;
  if (spec.max_degree < 0) throw InvalidArgument("max_degree must be >= 0");
  if (spec.values.size() < static_cast<std::size_t>(spec.max_degree) + 1)
    throw InvalidArgument("target needs Hilbert function values for degrees 0..max_degree");
  if (auto bad = first_macaulay_violation(spec.values, n); bad >= 0)
    throw InvalidArgument("Hilbert function violates Macaulay's bound in degree " + std::to_string(bad));
  std::vector<MonomialIdeal> out;
  if (spec.values[0] != 1) {
    if (spec.values[0] != 0) throw InvalidArgument("Hilbert function must start with 1 (or 0 for the unit ideal)");
    return out;
  }
  const std::optional<IntPoly> want = spec.source ? std::optional(hilbert_numerator(*spec.source)) : std::nullopt;
  detail::enumerate_degreewise(
      n, spec.max_degree,
      [&](std::int64_t d) { return monomial_count(n, d) - spec.values[static_cast<std::size_t>(d)]; },
      [&](const MonomialIdeal& I) {
        if (want && hilbert_numerator(I) != *want) return;
        out.push_back(I);
      });
  return out;
}

/// All proper strongly stable ideals generated in degrees 1..max_degree, the zero ideal included.
inline std::vector<MonomialIdeal> enumerate_all_strongly_stable(std::size_t n, std::int64_t max_degree) {
  std::vector<MonomialIdeal> out;
  detail::enumerate_degreewise(n, max_degree, [](std::int64_t) { return std::int64_t{-1}; },
                               [&](const MonomialIdeal& I) { out.push_back(I); });
  return out;
}

/// Apply f to each item on a pool of threads; results keep the input order. The first
/// exception (by index) is rethrown.
template <class T, class F>
auto parallel_map(const std::vector<T>& items, F f, unsigned threads = 0) -> std::vector<decltype(f(items[0]))> {
  using R = decltype(f(items[0]));
  std::vector<std::optional<R>> slots(items.size());
  std::vector<std::exception_ptr> errors(items.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, items.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < items.size();) {
      try {
        slots[k].emplace(f(items[k]));
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  std::vector<R> out;
  out.reserve(items.size());
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (errors[k]) std::rethrow_exception(errors[k]);
    out.push_back(std::move(*slots[k]));
  }
  return out;
}

struct RigidityEntry {
  MonomialIdeal ideal;
  std::vector<bool> equal;       // equal[i]: h^i rows of R/I and R/I^lex agree on the window
  std::vector<std::size_t> candidates;  // i with equal[i] but !equal[j] for some j > i

  bool operator==(const RigidityEntry&) const = default;
};

struct RigidityReport {
  DegreeWindow window;
  bool window_is_default = true;
  std::vector<RigidityEntry> entries;

  bool any_candidate() const {
    return std::any_of(entries.begin(), entries.end(), [](const RigidityEntry& e) { return !e.candidates.empty(); });
  }
};

inline RigidityEntry rigidity_pattern(const MonomialIdeal& I, const DegreeWindow& w) {
  RigidityEntry e;
  e.ideal = I;
  const auto L = lex_ideal(I);
  const auto a = local_cohomology_table(I, w);
  const auto b = local_cohomology_table(L, w);
  const std::size_t n = I.n();
  e.equal.assign(n + 1, true);
  for (std::size_t i = 0; i <= n; ++i)
    for (std::int64_t j = w.lo; j <= w.hi; ++j)
      if (a.at(i, j) != b.at(i, j)) e.equal[i] = false;
  for (std::size_t i = 0; i <= n; ++i) {
    if (!e.equal[i]) continue;
    for (std::size_t j = i + 1; j <= n; ++j)
      if (!e.equal[j]) {
        e.candidates.push_back(i);
        break;
      }
  }
  return e;
}

/// Windowed search for ideals where h^i agrees with the lex ideal but some h^j, j > i,
/// does not. Every hit is a candidate only; the window is finite.
inline RigidityReport probe_rigidity(const std::vector<MonomialIdeal>& family, std::optional<DegreeWindow> window = {},
                                     unsigned threads = 0) {
  RigidityReport rep;
  rep.window_is_default = !window.has_value();
  rep.entries = parallel_map(
      family,
      [&](const MonomialIdeal& I) {
        const DegreeWindow w = window ? *window : verification_window(I, lex_ideal(I));
        return rigidity_pattern(I, w);
      },
      threads);
  if (window) rep.window = *window;
  return rep;
}

}  // namespace lexlab
