#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "schurforge/errors.hpp"

namespace schurforge {

/// Dense univariate polynomial over a field, coefficients stored low to high.
/// The zero polynomial has an empty coefficient vector.
template <class F>
class UPoly {
 public:
  using Element = typename F::Element;

  explicit UPoly(F field) : field_(std::move(field)) {}
  UPoly(F field, std::vector<Element> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) { trim(); }

  static UPoly monomial(const F& field, std::size_t k, Element coeff) {
    std::vector<Element> c(k + 1, field.zero());
    c[k] = std::move(coeff);
    return UPoly(field, std::move(c));
  }

  const F& field() const { return field_; }
  const std::vector<Element>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const Element& lead() const { return c_.back(); }

  Element coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }

  Element operator()(const Element& x) const {
    Element acc = field_.zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = field_.add(field_.mul(acc, x), *it);
    return acc;
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) { return combine(a, b, false); }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return combine(a, b, true); }

  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    const F& f = a.field_;
    if (a.is_zero() || b.is_zero()) return UPoly(f);
    std::vector<Element> out(a.c_.size() + b.c_.size() - 1, f.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (f.is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(a.c_[i], b.c_[j]));
    }
    return UPoly(f, std::move(out));
  }

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  /// Quotient and remainder; throws DivisionByZero for a zero divisor.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
    if (d.is_zero()) throw DivisionByZero("univariate division by zero");
    const F& f = field_;
    std::vector<Element> r = c_;
    if (r.size() < d.c_.size()) return {UPoly(f), *this};
    std::vector<Element> q(r.size() - d.c_.size() + 1, f.zero());
    const Element inv_lead = f.inv(d.lead());
    for (std::size_t k = q.size(); k-- > 0;) {
      const Element t = f.mul(r[k + d.c_.size() - 1], inv_lead);
      q[k] = t;
      if (f.is_zero(t)) continue;
      for (std::size_t j = 0; j < d.c_.size(); ++j) r[k + j] = f.sub(r[k + j], f.mul(t, d.c_[j]));
    }
    return {UPoly(f, std::move(q)), UPoly(f, std::move(r))};
  }

  UPoly monic() const {
    if (is_zero()) return *this;
    const Element inv_lead = field_.inv(lead());
    std::vector<Element> c = c_;
    for (auto& e : c) e = field_.mul(e, inv_lead);
    return UPoly(field_, std::move(c));
  }

  UPoly derivative() const {
    std::vector<Element> c;
    for (std::size_t i = 1; i < c_.size(); ++i)
      c.push_back(field_.mul(field_.from_integer(static_cast<long long>(i)), c_[i]));
    return UPoly(field_, std::move(c));
  }

 private:
  static UPoly combine(const UPoly& a, const UPoly& b, bool subtract) {
    const F& f = a.field_;
    std::vector<Element> out(std::max(a.c_.size(), b.c_.size()), f.zero());
    for (std::size_t i = 0; i < out.size(); ++i) {
      const Element x = a.coeff(i), y = b.coeff(i);
      out[i] = subtract ? f.sub(x, y) : f.add(x, y);
    }
    return UPoly(f, std::move(out));
  }

  void trim() {
    while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
  }

  F field_;
  std::vector<Element> c_;
};

/// Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0.
template <class F>
UPoly<F> gcd(UPoly<F> a, UPoly<F> b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace schurforge
