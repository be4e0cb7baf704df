#pragma once

// Sparse multivariate polynomials over a field F (GaloisField or Rationals).
//
// Terms live in an ordered map keyed by exponent vector, sorted descending in
// the graded lexicographic order with x0 > x1 > ... > x_{n-1}; the first
// entry is the leading term. The zero polynomial is the empty map.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "schurforge/errors.hpp"
#include "schurforge/field.hpp"

namespace schurforge {

inline constexpr std::size_t kMaxVars = 8;
inline constexpr std::uint32_t kMaxExponent = 1u << 31;

class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t n) : n_(static_cast<std::uint8_t>(n)) {
    if (n > kMaxVars) throw SizeError("at most " + std::to_string(kMaxVars) + " variables are supported");
  }
  ExponentVector(std::initializer_list<std::uint32_t> exps) : ExponentVector(exps.size()) {
    std::copy(exps.begin(), exps.end(), e_.begin());
  }
  explicit ExponentVector(std::span<const std::uint32_t> exps) : ExponentVector(exps.size()) {
    std::copy(exps.begin(), exps.end(), e_.begin());
  }

  std::size_t size() const { return n_; }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  std::uint32_t& operator[](std::size_t i) { return e_[i]; }
  std::uint64_t total() const { return std::accumulate(e_.begin(), e_.begin() + n_, std::uint64_t{0}); }

  bool divides(const ExponentVector& other) const {
    for (std::size_t i = 0; i < n_; ++i)
      if (e_[i] > other.e_[i]) return false;
    return true;
  }

  friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) {
    for (std::size_t i = 0; i < a.n_; ++i) {
      a.e_[i] += b.e_[i];
      if (a.e_[i] > kMaxExponent) throw SizeError("exponent overflow");
    }
    return a;
  }
  /// Requires b to divide a.
  friend ExponentVector operator-(ExponentVector a, const ExponentVector& b) {
    for (std::size_t i = 0; i < a.n_; ++i) a.e_[i] -= b.e_[i];
    return a;
  }

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::array<std::uint32_t, kMaxVars> e_{};
  std::uint8_t n_ = 0;
};

/// Strict "a comes before b" in descending graded-lex order.
struct GrlexDescending {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const {
    const auto ta = a.total(), tb = b.total();
    if (ta != tb) return ta > tb;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] > b[i];
    return false;
  }
};

template <class F>
class MPoly {
 public:
  using Field = F;
  using Element = typename F::Element;
  using TermMap = std::map<ExponentVector, Element, GrlexDescending>;

  MPoly(F field, std::size_t nvars) : field_(std::move(field)), n_(nvars) {
    if (nvars > kMaxVars) throw SizeError("at most " + std::to_string(kMaxVars) + " variables are supported");
  }

  static MPoly constant(const F& field, std::size_t nvars, const Element& c) {
    MPoly p(field, nvars);
    p.add_term(ExponentVector(nvars), c);
    return p;
  }
  static MPoly one(const F& field, std::size_t nvars) { return constant(field, nvars, field.one()); }
  static MPoly monomial(const F& field, const ExponentVector& e, const Element& c) {
    MPoly p(field, e.size());
    p.add_term(e, c);
    return p;
  }
  static MPoly variable(const F& field, std::size_t nvars, std::size_t i, std::uint32_t power = 1) {
    ExponentVector e(nvars);
    e[i] = power;
    return monomial(field, e, field.one());
  }

  const F& field() const { return field_; }
  std::size_t nvars() const { return n_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total() == 0); }
  bool is_monomial() const { return terms_.size() == 1; }

  const ExponentVector& lead_exponent() const {
    require_nonzero();
    return terms_.begin()->first;
  }
  const Element& lead_coefficient() const {
    require_nonzero();
    return terms_.begin()->second;
  }

  Element coefficient(const ExponentVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? field_.zero() : it->second;
  }

  /// Adds c * x^e in place.
  void add_term(const ExponentVector& e, const Element& c) {
    if (e.size() != n_) throw ContextError("exponent vector length does not match variable count");
    if (field_.is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second = field_.add(it->second, c);
    if (field_.is_zero(it->second)) terms_.erase(it);
  }

  std::uint64_t total_degree() const {
    require_nonzero();
    return terms_.begin()->first.total();
  }

  MPoly operator-() const {
    MPoly out(field_, n_);
    for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, field_.neg(c));
    return out;
  }

  MPoly& operator+=(const MPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, field_.neg(c));
    return *this;
  }
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    a.check_compatible(b);
    MPoly out(a.field_, a.n_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, a.field_.mul(ca, cb));
    return out;
  }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

  MPoly scale(const Element& s) const {
    MPoly out(field_, n_);
    if (field_.is_zero(s)) return out;
    for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, field_.mul(c, s));
    return out;
  }

  /// Multiplies by x^e.
  MPoly shift(const ExponentVector& e) const {
    if (e.size() != n_) throw ContextError("exponent vector length does not match variable count");
    MPoly out(field_, n_);
    for (const auto& [t, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), t + e, c);
    return out;
  }

  /// Scales so that the leading coefficient is 1.
  MPoly monic() const { return is_zero() ? *this : scale(field_.inv(lead_coefficient())); }

  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.field_ == b.field_ && a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  void check_compatible(const MPoly& o) const {
    if (!(field_ == o.field_)) throw ContextError("polynomials over different fields");
    if (n_ != o.n_) throw ContextError("polynomials with different variable counts");
  }

  void require_nonzero() const {
    if (terms_.empty()) throw ZeroPolynomial("operation undefined on the zero polynomial");
  }

 private:
  F field_;
  std::size_t n_;
  TermMap terms_;
};

template <class F>
struct DivisionResult {
  MPoly<F> quotient;
  MPoly<F> remainder;
};

/// Single-divisor division in graded-lex order. The remainder is the unique
/// normal form modulo the principal ideal (a), so it is zero iff a | p and
/// depends linearly on p.
template <class F>
DivisionResult<F> divide_with_remainder(const MPoly<F>& p, const MPoly<F>& a) {
  p.check_compatible(a);
  if (a.is_zero()) throw DivisionByZero("division by the zero polynomial");
  const F& f = p.field();
  const ExponentVector& lead = a.lead_exponent();
  const auto inv_lead = f.inv(a.lead_coefficient());
  MPoly<F> r = p, q(f, p.nvars()), rem(f, p.nvars());
  while (!r.is_zero()) {
    const ExponentVector e = r.lead_exponent();
    const auto c = r.lead_coefficient();
    if (!lead.divides(e)) {
      rem.add_term(e, c);
      r.add_term(e, f.neg(c));
      continue;
    }
    const ExponentVector t = e - lead;
    const auto s = f.mul(c, inv_lead);
    q.add_term(t, s);
    for (const auto& [ae, ac] : a.terms()) r.add_term(ae + t, f.neg(f.mul(s, ac)));
  }
  return {std::move(q), std::move(rem)};
}

/// Returns q with p = a * q, or nullopt when a does not divide p.
template <class F>
std::optional<MPoly<F>> exact_divide(const MPoly<F>& p, const MPoly<F>& a) {
  p.check_compatible(a);
  if (a.is_zero()) throw DivisionByZero("division by the zero polynomial");
  const F& f = p.field();
  const ExponentVector& lead = a.lead_exponent();
  const auto inv_lead = f.inv(a.lead_coefficient());
  MPoly<F> r = p, q(f, p.nvars());
  while (!r.is_zero()) {
    const ExponentVector e = r.lead_exponent();
    // A leading term that the divisor's lead cannot absorb stays in the remainder for good.
    if (!lead.divides(e)) return std::nullopt;
    const ExponentVector t = e - lead;
    const auto s = f.mul(r.lead_coefficient(), inv_lead);
    q.add_term(t, s);
    for (const auto& [ae, ac] : a.terms()) r.add_term(ae + t, f.neg(f.mul(s, ac)));
  }
  return q;
}

template <class F>
std::uint32_t deg(const MPoly<F>& p, std::size_t i) {
  p.require_nonzero();
  std::uint32_t d = 0;
  for (const auto& [e, c] : p.terms()) d = std::max(d, e[i]);
  return d;
}

template <class F>
std::uint32_t mindeg(const MPoly<F>& p, std::size_t i) {
  p.require_nonzero();
  std::uint32_t d = UINT32_MAX;
  for (const auto& [e, c] : p.terms()) d = std::min(d, e[i]);
  return d;
}

template <class F>
std::uint32_t width(const MPoly<F>& p, std::size_t i) {
  return deg(p, i) - mindeg(p, i);
}

namespace detail {
template <class F>
MPoly<F> terms_with_degree(const MPoly<F>& p, std::size_t i, std::uint32_t d) {
  MPoly<F> out(p.field(), p.nvars());
  for (const auto& [e, c] : p.terms())
    if (e[i] == d) out.add_term(e, c);
  return out;
}
}  // namespace detail

/// Sum of the terms of minimal x_i-degree.
template <class F>
MPoly<F> min_part(const MPoly<F>& p, std::size_t i) {
  return detail::terms_with_degree(p, i, mindeg(p, i));
}

/// Sum of the terms of maximal x_i-degree.
template <class F>
MPoly<F> max_part(const MPoly<F>& p, std::size_t i) {
  return detail::terms_with_degree(p, i, deg(p, i));
}

/// Image of p under x_src -> alpha * x_dst.
template <class F>
MPoly<F> substitute_var(const MPoly<F>& p, std::size_t src, const typename F::Element& alpha, std::size_t dst) {
  if (src == dst) throw BadSubstitution("source and destination variable coincide");
  if (src >= p.nvars() || dst >= p.nvars()) throw BadSubstitution("variable index out of range");
  const F& f = p.field();
  MPoly<F> out(f, p.nvars());
  for (const auto& [e, c] : p.terms()) {
    ExponentVector t = e;
    t[dst] += t[src];
    t[src] = 0;
    out.add_term(t, f.mul(c, f.pow(alpha, e[src])));
  }
  return out;
}

template <class F>
typename F::Element evaluate(const MPoly<F>& p, std::span<const typename F::Element> point) {
  if (point.size() != p.nvars()) throw ContextError("evaluation point has the wrong length");
  const F& f = p.field();
  auto acc = f.zero();
  for (const auto& [e, c] : p.terms()) {
    auto t = c;
    for (std::size_t i = 0; i < p.nvars(); ++i)
      if (e[i] != 0) t = f.mul(t, f.pow(point[i], e[i]));
    acc = f.add(acc, t);
  }
  return acc;
}

/// Applies x_i -> x_{sigma(i)} to every term.
template <class F>
MPoly<F> permute_vars(const MPoly<F>& p, std::span<const std::size_t> sigma) {
  const std::size_t n = p.nvars();
  if (sigma.size() != n) throw BadPermutation("permutation has the wrong length");
  std::vector<bool> seen(n, false);
  for (std::size_t s : sigma) {
    if (s >= n || seen[s]) throw BadPermutation("not a permutation of the variables");
    seen[s] = true;
  }
  MPoly<F> out(p.field(), n);
  for (const auto& [e, c] : p.terms()) {
    ExponentVector t(n);
    for (std::size_t i = 0; i < n; ++i) t[sigma[i]] = e[i];
    out.add_term(t, c);
  }
  return out;
}

/// Witness of F = scalar * x^shift * G; shift entries may be negative.
template <class F>
struct MonomialAssociate {
  typename F::Element scalar;
  std::vector<std::int64_t> shift;
};

/// Decides F ~ G by aligning leading terms and checking every term.
template <class F>
std::optional<MonomialAssociate<F>> monomial_associate(const MPoly<F>& a, const MPoly<F>& b) {
  a.check_compatible(b);
  a.require_nonzero();
  b.require_nonzero();
  if (a.size() != b.size()) return std::nullopt;
  const F& f = a.field();
  const std::size_t n = a.nvars();
  std::vector<std::int64_t> shift(n);
  for (std::size_t i = 0; i < n; ++i)
    shift[i] = static_cast<std::int64_t>(a.lead_exponent()[i]) - static_cast<std::int64_t>(b.lead_exponent()[i]);
  const auto scalar = f.mul(a.lead_coefficient(), f.inv(b.lead_coefficient()));
  // Multiplying by a monomial preserves graded-lex order, so terms pair up in sequence.
  auto ia = a.terms().begin();
  for (auto ib = b.terms().begin(); ib != b.terms().end(); ++ib, ++ia) {
    for (std::size_t i = 0; i < n; ++i)
      if (static_cast<std::int64_t>(ia->first[i]) - static_cast<std::int64_t>(ib->first[i]) != shift[i])
        return std::nullopt;
    if (!f.eq(ia->second, f.mul(scalar, ib->second))) return std::nullopt;
  }
  return MonomialAssociate<F>{scalar, std::move(shift)};
}

template <class F>
std::map<std::uint64_t, MPoly<F>> homogeneous_components(const MPoly<F>& p) {
  std::map<std::uint64_t, MPoly<F>> out;
  for (const auto& [e, c] : p.terms()) {
    auto it = out.try_emplace(e.total(), p.field(), p.nvars()).first;
    it->second.add_term(e, c);
  }
  return out;
}

template <class F>
bool is_homogeneous(const MPoly<F>& p) {
  if (p.is_zero()) return true;
  const auto d = p.terms().begin()->first.total();
  return std::all_of(p.terms().begin(), p.terms().end(), [d](const auto& t) { return t.first.total() == d; });
}

/// Maps each term x^e to x^(bounds - e); multiplication by x^bounds followed
/// by inverting every variable.
template <class F>
MPoly<F> exponent_reverse(const MPoly<F>& p, std::span<const std::uint32_t> bounds) {
  if (bounds.size() != p.nvars()) throw BadBounds("bounds vector has the wrong length");
  MPoly<F> out(p.field(), p.nvars());
  for (const auto& [e, c] : p.terms()) {
    ExponentVector t(p.nvars());
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      if (e[i] > bounds[i]) throw BadBounds("bound below the degree in x" + std::to_string(i));
      t[i] = bounds[i] - e[i];
    }
    out.add_term(t, c);
  }
  return out;
}

/// Re-homes p into an n-variable ring: variable t of p becomes variable
/// targets[t].
template <class F>
MPoly<F> embed_vars(const MPoly<F>& p, std::size_t n, std::span<const std::size_t> targets) {
  if (targets.size() != p.nvars()) throw ContextError("embedding map has the wrong length");
  MPoly<F> out(p.field(), n);
  for (const auto& [e, c] : p.terms()) {
    ExponentVector t(n);
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      if (targets[i] >= n) throw ContextError("embedding target out of range");
      t[targets[i]] += e[i];
    }
    out.add_term(t, c);
  }
  return out;
}

}  // namespace schurforge
