#pragma once

// Canonical text form: terms in descending graded-lex order joined by " + "
// (or " - " for negative rational coefficients), e.g.
//   2*x0^3*x1 + x1*x2^2 + 1
// Extension-field coefficients that are not plain residues are parenthesized:
//   (1+1*t)*x0 + x1

#include <cctype>
#include <string>
#include <string_view>

#include "schurforge/mpoly.hpp"

namespace schurforge {

namespace detail {

inline std::string monomial_text(const ExponentVector& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i);
    if (e[i] > 1) out += '^' + std::to_string(e[i]);
  }
  return out;
}

inline bool is_plain_number(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) || ch == '/'; });
}

}  // namespace detail

template <class F>
std::string to_string(const MPoly<F>& p) {
  if (p.is_zero()) return "0";
  const F& f = p.field();
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    bool negative = false;
    std::string coeff;
    if constexpr (std::is_same_v<F, Rationals>) {
      negative = c < 0;
      coeff = f.to_string(negative ? Rationals::Element(-c) : c);
    } else {
      coeff = f.to_string(c);
    }
    if (!detail::is_plain_number(coeff)) coeff = "(" + coeff + ")";
    const std::string mono = detail::monomial_text(e);
    std::string term;
    if (mono.empty()) term = coeff;
    else if (coeff == "1") term = mono;
    else term = coeff + "*" + mono;
    if (first) out += negative ? "-" + term : term;
    else out += negative ? " - " + term : " + " + term;
    first = false;
  }
  return out;
}

/// Parses the canonical grammar (whitespace-insensitive; '-' allowed between terms).
template <class F>
MPoly<F> parse_mpoly(std::string_view text, const F& field, std::size_t nvars) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  MPoly<F> out(field, nvars);
  if (s.empty()) throw ParseError("empty polynomial text");
  auto fail = [&](const std::string& why) -> void {
    throw ParseError("cannot parse polynomial '" + std::string(text) + "': " + why);
  };
  auto parse_uint = [&](std::string_view digits) {
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
      fail("expected a non-negative integer");
    return static_cast<std::uint32_t>(std::stoul(std::string(digits)));
  };

  std::size_t i = 0;
  while (i < s.size()) {
    bool negative = false;
    while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') negative = !negative;
      ++i;
    }
    std::size_t end = i;
    int depth = 0;
    while (end < s.size()) {
      const char ch = s[end];
      if (ch == '(') ++depth;
      else if (ch == ')') --depth;
      else if ((ch == '+' || ch == '-') && depth == 0) break;
      ++end;
    }
    const std::string_view term = std::string_view(s).substr(i, end - i);
    if (term.empty()) fail("empty term");
    auto coeff = field.one();
    ExponentVector exps(nvars);
    std::size_t pos = 0;
    while (pos <= term.size()) {
      std::size_t stop = pos;
      int d = 0;
      while (stop < term.size() && !(term[stop] == '*' && d == 0)) {
        if (term[stop] == '(') ++d;
        else if (term[stop] == ')') --d;
        ++stop;
      }
      const std::string_view factor = term.substr(pos, stop - pos);
      if (factor.empty()) fail("empty factor");
      if (factor.front() == 'x') {
        const std::size_t caret = factor.find('^');
        const std::uint32_t var = parse_uint(factor.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1));
        const std::uint32_t power = caret == std::string_view::npos ? 1 : parse_uint(factor.substr(caret + 1));
        if (var >= nvars) fail("variable index out of range");
        exps[var] += power;
      } else if (factor.front() == '(') {
        if (factor.back() != ')') fail("unbalanced parenthesis");
        coeff = field.mul(coeff, field.parse(factor.substr(1, factor.size() - 2)));
      } else {
        coeff = field.mul(coeff, field.parse(factor));
      }
      if (stop >= term.size()) break;
      pos = stop + 1;
    }
    out.add_term(exps, negative ? field.neg(coeff) : coeff);
    i = end;
  }
  return out;
}

}  // namespace schurforge
