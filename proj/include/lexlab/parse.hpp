#pragma once

// Text syntax for rings, monomials, polynomials and ideals.
//
//   ideal      := ε | polynomial (',' polynomial)*
//   polynomial := ['+'|'-'] term (('+'|'-') term)*
//   term       := coeff | [coeff '*'] power ('*' power)*
//   power      := variable ['^' integer] | '1'
//   coeff      := integer ['/' integer]
//
// Whitespace is ignored between tokens. Variables are the ring's names; identifiers
// are [A-Za-z_][A-Za-z0-9_']*.

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "lexlab/error.hpp"
#include "lexlab/ideal.hpp"
#include "lexlab/ring.hpp"

namespace lexlab {

/// Parsed ideal input: monomial generators go to the monomial engines, anything else is
/// kept as polynomials for Gröbner/gin preprocessing.
struct ParsedIdeal {
  bool is_monomial = true;
  std::vector<Polynomial> polynomials;  // nonzero generators as written
  MonomialIdeal ideal;                  // meaningful when is_monomial

  explicit ParsedIdeal(std::size_t n) : ideal(n) {}
};

namespace detail {

class Parser {
 public:
  Parser(std::string_view text, const RingSpec& ring) : s_(text), ring_(ring) {}

  std::vector<Polynomial> ideal() {
    std::vector<Polynomial> out;
    skip();
    if (pos_ == s_.size()) return out;
    while (true) {
      out.push_back(polynomial());
      skip();
      if (pos_ == s_.size()) break;
      expect(',');
    }
    return out;
  }

  Polynomial polynomial() {
    Polynomial p(ring_.n());
    skip();
    int sign = 1;
    if (peek('+') || peek('-')) sign = s_[pos_++] == '-' ? -1 : 1;
    term(p, sign);
    while (true) {
      skip();
      if (peek('+') || peek('-')) {
        sign = s_[pos_++] == '-' ? -1 : 1;
        term(p, sign);
      } else {
        break;
      }
    }
    return p;
  }

  Monomial monomial_only() {
    skip();
    const std::size_t at = pos_;
    Polynomial p(ring_.n());
    term(p, 1);
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    if (p.size() != 1 || p.terms().begin()->second != 1) throw ParseError("expected a monomial", at);
    return p.terms().begin()->first;
  }

  void finish() {
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
  void expect(char c) {
    skip();
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool at_digit() const { return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])); }
  bool at_ident() const {
    return pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_');
  }

  mpz_class integer() {
    skip();
    if (!at_digit()) fail("expected an integer");
    const std::size_t b = pos_;
    while (at_digit()) ++pos_;
    return mpz_class(std::string(s_.substr(b, pos_ - b)));
  }

  std::string ident() {
    const std::size_t b = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '\''))
      ++pos_;
    return std::string(s_.substr(b, pos_ - b));
  }

  // One `var^e` factor, accumulated into exps.
  void power(std::vector<Exponent>& exps) {
    skip();
    if (!at_ident()) fail("expected a variable");
    const std::size_t at = pos_;
    const std::string name = ident();
    std::size_t idx = ring_.n();
    for (std::size_t i = 0; i < ring_.n(); ++i)
      if (ring_.name(i) == name) idx = i;
    if (idx == ring_.n()) throw ParseError("unknown variable '" + name + "'", at);
    skip();
    Exponent e = 1;
    if (peek('^')) {
      ++pos_;
      const std::size_t eat = pos_;
      mpz_class v = integer();
      if (!v.fits_sint_p() || v > 1'000'000) throw ParseError("exponent out of range", eat);
      e = static_cast<Exponent>(v.get_si());
    }
    exps[idx] = detail::checked_add(exps[idx], e);
  }

  void term(Polynomial& p, int sign) {
    skip();
    mpq_class coeff = sign;
    std::vector<Exponent> exps(ring_.n(), 0);
    bool need_factor = true;
    if (at_digit()) {
      mpz_class num = integer();
      mpz_class den = 1;
      skip();
      if (peek('/')) {
        ++pos_;
        const std::size_t at = pos_;
        den = integer();
        if (den == 0) throw ParseError("zero denominator", at);
      }
      coeff *= mpq_class(num, den);
      coeff.canonicalize();
      skip();
      if (!peek('*')) need_factor = false;
      else ++pos_;
    }
    if (need_factor) {
      power(exps);
      while (true) {
        skip();
        if (!peek('*')) break;
        ++pos_;
        skip();
        if (at_digit()) {
          // allow a literal 1 factor, e.g. `2*1`
          const std::size_t at = pos_;
          if (integer() != 1) throw ParseError("coefficients must come first in a term", at);
          continue;
        }
        power(exps);
      }
    }
    p.add_term(Monomial(std::move(exps)), coeff);
  }

  std::string_view s_;
  const RingSpec& ring_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Comma-separated variable names, e.g. `x,y,z`.
inline RingSpec parse_ring(std::string_view text) {
  std::vector<std::string> names;
  std::string cur;
  std::size_t start = 0;
  auto flush = [&](std::size_t at) {
    std::size_t b = 0, e = cur.size();
    while (b < e && std::isspace(static_cast<unsigned char>(cur[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(cur[e - 1]))) --e;
    std::string name = cur.substr(b, e - b);
    if (name.empty()) throw ParseError("empty variable name", start);
    if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_'))
      throw ParseError("variable names must start with a letter", start);
    for (char c : name)
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''))
        throw ParseError("invalid character in variable name '" + name + "'", start);
    names.push_back(std::move(name));
    cur.clear();
    start = at + 1;
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == ',')
      flush(i);
    else
      cur += text[i];
  }
  flush(text.size());
  try {
    return RingSpec(std::move(names));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what(), 0);
  }
}

inline Monomial parse_monomial(std::string_view text, const RingSpec& ring) {
  return detail::Parser(text, ring).monomial_only();
}

inline Polynomial parse_polynomial(std::string_view text, const RingSpec& ring) {
  detail::Parser p(text, ring);
  auto poly = p.polynomial();
  p.finish();
  return poly;
}

/// Parse a generator list. Zero generators are dropped; an empty list is the zero ideal.
inline ParsedIdeal parse_ideal(std::string_view text, const RingSpec& ring) {
  ParsedIdeal out(ring.n());
  std::vector<Monomial> mons;
  for (auto& p : detail::Parser(text, ring).ideal()) {
    if (p.is_zero()) continue;
    if (p.is_monomial())
      mons.push_back(p.terms().begin()->first);
    else
      out.is_monomial = false;
    out.polynomials.push_back(std::move(p));
  }
  if (out.is_monomial) out.ideal = MonomialIdeal(ring.n(), std::move(mons));
  return out;
}

/// Monomial-only convenience: rejects polynomial generators.
inline MonomialIdeal parse_monomial_ideal(std::string_view text, const RingSpec& ring) {
  auto p = parse_ideal(text, ring);
  if (!p.is_monomial) throw ParseError("expected monomial generators", 0);
  return p.ideal;
}

/// `lo:hi`.
inline std::pair<std::int64_t, std::int64_t> parse_window(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("window must look like lo:hi", 0);
  auto num = [&](std::string_view t, std::size_t offset) {
    std::size_t b = 0;
    while (b < t.size() && std::isspace(static_cast<unsigned char>(t[b]))) ++b;
    std::size_t e = t.size();
    while (e > b && std::isspace(static_cast<unsigned char>(t[e - 1]))) --e;
    t = t.substr(b, e - b);
    if (t.empty()) throw ParseError("missing window bound", offset);
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) throw ParseError("missing window bound", offset);
    for (std::size_t k = i; k < t.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(t[k]))) throw ParseError("window bound is not an integer", offset + b + k);
    return std::stoll(std::string(t));
  };
  auto lo = num(text.substr(0, colon), 0);
  auto hi = num(text.substr(colon + 1), colon + 1);
  if (lo > hi) throw ParseError("window needs lo <= hi", 0);
  return {lo, hi};
}

}  // namespace lexlab
