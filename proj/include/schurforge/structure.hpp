#pragma once

// Machine checks of the structural identities of three-variable Schur
// polynomials: coefficient expansions in one variable, the closed form of
// those coefficients, the exponent-reversal relation, roots of C_k, and the
// min/max-part identities in n variables.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "schurforge/mpoly_io.hpp"
#include "schurforge/schur.hpp"
#include "schurforge/upoly.hpp"

namespace schurforge {

/// S = sum_i coeffs[i] * x_var^(offset + i); coefficients live in the same
/// ring as S with x_var-degree 0.
template <class F>
struct ExpansionTable {
  std::size_t var = 0;
  std::uint32_t offset = 0;
  std::vector<MPoly<F>> coeffs;

  MPoly<F> reconstruct() const {
    MPoly<F> out(coeffs.front().field(), coeffs.front().nvars());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      ExponentVector e(out.nvars());
      e[var] = offset + static_cast<std::uint32_t>(i);
      out += coeffs[i].shift(e);
    }
    return out;
  }
};

template <class F>
ExpansionTable<F> expand_in_var(const MPoly<F>& s, std::size_t var) {
  s.require_nonzero();
  if (var >= s.nvars()) throw BadParameter("expansion variable out of range");
  ExpansionTable<F> t;
  t.var = var;
  t.offset = mindeg(s, var);
  t.coeffs.assign(deg(s, var) - t.offset + 1, MPoly<F>(s.field(), s.nvars()));
  for (const auto& [e, c] : s.terms()) {
    ExponentVector rest = e;
    rest[var] = 0;
    t.coeffs[e[var] - t.offset].add_term(rest, c);
  }
  return t;
}

/// P_d = C_l(y,z) * C_gap(y,z) * y^i0 * z^z_exp for S_(0,a,b) expanded in x.
struct ClosedFormTerm {
  std::uint32_t d = 0;
  std::int64_t l = 0;
  std::int64_t l_second = 0;  // length of the j-sum; must equal l
  std::int64_t gap = 0;
  std::int64_t i0 = 0;
  std::int64_t j0 = 0;
  std::int64_t D = 0;
  std::int64_t z_exp = 0;
};

inline std::vector<ClosedFormTerm> closed_form_terms(std::uint32_t a, std::uint32_t b) {
  if (a <= 1 || a + 1 >= b) throw BadParameter("closed form needs 1 < a < b - 1");
  if (a > b - a) throw CaseError("closed form needs a <= b - a; use the reversal relation");
  const std::int64_t A = a, B = b, D = A + B - 2;
  std::vector<ClosedFormTerm> out;
  for (std::int64_t d = 0; d <= B - 2; ++d) {
    const std::int64_t s = D - d;
    ClosedFormTerm t;
    t.d = static_cast<std::uint32_t>(d);
    t.D = D;
    t.i0 = std::max<std::int64_t>(0, s - B + 1);
    t.j0 = std::max<std::int64_t>(A, s - A + 1);
    t.l = std::min<std::int64_t>(A - 1, s - A) - t.i0 + 1;
    t.l_second = std::min<std::int64_t>(B - 1, s) - t.j0 + 1;
    t.gap = t.j0 - t.i0;
    t.z_exp = D - d - t.j0 - t.l + 1;
    out.push_back(t);
  }
  return out;
}

/// Run length and gap from the three-case tables (overlapping boundaries agree).
inline std::pair<std::int64_t, std::int64_t> closed_form_table(std::uint32_t a, std::uint32_t b, std::uint32_t d) {
  const std::int64_t A = a, B = b, dd = d;
  if (dd <= A - 1) return {dd + 1, B - A};
  if (dd <= B - A - 1) return {A, B - 1 - dd};
  return {B - 1 - dd, A};
}

struct FactReport {
  std::string fact;
  nlohmann::ordered_json params;
  bool passed = true;
  std::string witness;
};

inline nlohmann::ordered_json to_json(const FactReport& r) {
  nlohmann::ordered_json j;
  j["fact"] = r.fact;
  j["params"] = r.params;
  j["status"] = r.passed ? "pass" : "fail";
  if (!r.passed) j["witness"] = r.witness;
  return j;
}

namespace detail {

// Records the first failed check.
class Checker {
 public:
  explicit Checker(FactReport& report) : report_(report) {}

  bool expect(bool ok, const std::string& what) {
    if (!ok && report_.passed) {
      report_.passed = false;
      report_.witness = what;
    }
    return ok;
  }

  template <class F>
  bool expect_equal(const MPoly<F>& got, const MPoly<F>& want, const std::string& what) {
    return expect(got == want, what + ": got " + to_string(got) + ", expected " + to_string(want));
  }

 private:
  FactReport& report_;
};

// Flips one coefficient so a harness can confirm that checks actually fire.
template <class F>
MPoly<F> mutate(const MPoly<F>& s) {
  MPoly<F> out = s;
  out.add_term(s.lead_exponent(), s.field().one());
  return out;
}

template <class F>
MPoly<F> schur_or_one(const ExponentSequence& c, const F& field) {
  if (c.size() == 0) return MPoly<F>::one(field, 0);
  return schur_poly(c, field);
}

template <class F>
MPoly<F> power_of_vars(const F& field, std::size_t n, const std::vector<std::size_t>& vars, std::uint32_t k) {
  ExponentVector e(n);
  for (auto v : vars) e[v] = k;
  return MPoly<F>::monomial(field, e, field.one());
}

inline std::vector<std::size_t> other_vars(std::size_t n, std::vector<std::size_t> skip) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < n; ++v)
    if (std::find(skip.begin(), skip.end(), v) == skip.end()) out.push_back(v);
  return out;
}

}  // namespace detail

struct FactOptions {
  bool inject_mutation = false;
};

/// Expansion of S_(0,a,b) in each of the three variables: end coefficients
/// are associates of C_(b-a) and C_a, the divisibility ranges hold, and the
/// coefficients match the closed form (a <= b-a) or the reversal relation
/// against the reflected sequence (a > b-a).
template <class F>
FactReport verify_expansion_fact(std::uint32_t a, std::uint32_t b, const F& field, FactOptions opt = {}) {
  if (a <= 1 || a + 1 >= b) throw BadParameter("expansion check needs 1 < a < b - 1");
  FactReport report{"expansion_structure", {{"c", {0, a, b}}, {"field", field.name()}}, true, {}};
  detail::Checker check(report);
  const ExponentSequence c{0, a, b};
  MPoly<F> s = schur_poly(c, field);
  if (opt.inject_mutation) s = detail::mutate(s);
  if (!check.expect(!s.is_zero(), "S_c is zero")) return report;
  const bool closed_path = a <= b - a;
  report.params["path"] = closed_path ? "closed_form" : "reversal";
  std::vector<ClosedFormTerm> terms;
  MPoly<F> s_reflected(field, 3);
  if (closed_path) terms = closed_form_terms(a, b);
  else s_reflected = schur_poly(reflect(c), field);

  for (std::size_t x = 0; x < 3 && report.passed; ++x) {
    const auto yz = detail::other_vars(3, {x});
    const std::size_t y = yz[0], z = yz[1];
    const std::string where = "x = x" + std::to_string(x);
    const auto table = expand_in_var(s, x);
    check.expect_equal(table.reconstruct(), s, where + ", reconstruction");
    if (!check.expect(table.offset == 0 && table.coeffs.size() == b - 1,
                      where + ": expansion does not span degrees 0.." + std::to_string(b - 2)))
      break;
    const auto& P = table.coeffs;
    const auto c_gap = ck_biv(b - a, field, 3, y, z), c_a = ck_biv(a, field, 3, y, z);
    check.expect(!P[0].is_zero() && monomial_associate(P[0], c_gap).has_value(),
                 where + ": P_0 = " + to_string(P[0]) + " is not an associate of " + to_string(c_gap));
    check.expect(!P[b - 2].is_zero() && monomial_associate(P[b - 2], c_a).has_value(),
                 where + ": P_" + std::to_string(b - 2) + " = " + to_string(P[b - 2]) + " is not an associate of " +
                     to_string(c_a));
    for (std::uint32_t i = 0; i <= a - 1; ++i)
      check.expect(exact_divide(P[i], c_gap).has_value(),
                   where + ": " + to_string(c_gap) + " does not divide P_" + std::to_string(i) + " = " + to_string(P[i]));
    for (std::uint32_t i = a - 1; i <= b - 2; ++i)
      check.expect(exact_divide(P[i], c_a).has_value(),
                   where + ": " + to_string(c_a) + " does not divide P_" + std::to_string(i) + " = " + to_string(P[i]));

    if (closed_path) {
      for (const auto& t : terms) {
        const auto [l_table, gap_table] = closed_form_table(a, b, t.d);
        const std::string at = where + ", d = " + std::to_string(t.d);
        check.expect(t.l == t.l_second && t.l == l_table && t.gap == gap_table && t.l >= 1 && t.z_exp >= 0,
                     at + ": run lengths (" + std::to_string(t.l) + ", " + std::to_string(t.l_second) + ") and gap " +
                         std::to_string(t.gap) + " disagree with the case table (" + std::to_string(l_table) + ", " +
                         std::to_string(gap_table) + ")");
        if (!report.passed) break;
        ExponentVector e(3);
        e[y] = static_cast<std::uint32_t>(t.i0);
        e[z] = static_cast<std::uint32_t>(t.z_exp);
        const auto want = (ck_biv(static_cast<std::uint32_t>(t.l), field, 3, y, z) *
                           ck_biv(static_cast<std::uint32_t>(t.gap), field, 3, y, z))
                              .shift(e);
        check.expect_equal(P[t.d], want, at + ", closed form");
      }
    } else {
      const auto mirrored = expand_in_var(s_reflected, x);
      if (!check.expect(mirrored.offset == 0 && mirrored.coeffs.size() == b - 1, where + ": reflected expansion has the wrong span"))
        break;
      std::vector<std::uint32_t> bounds(3, b - 2);
      bounds[x] = 0;
      for (std::uint32_t i = 0; i <= b - 2; ++i)
        check.expect_equal(P[i], exponent_reverse<F>(mirrored.coeffs[b - 2 - i], bounds),
                           where + ", reversal of P_" + std::to_string(i));
    }
  }
  return report;
}

/// True iff x^k - 1 is coprime to its derivative over GF(p).
inline bool ck_squarefree(std::uint32_t k, std::uint32_t p) {
  if (k < 1) throw BadParameter("k must be at least 1");
  if (!is_prime(p)) throw BadParameter("p must be prime");
  const auto f = make_prime_field(p);
  const auto xk_minus_1 = UPoly<GaloisField>::monomial(f, k, f.one()) - UPoly<GaloisField>::monomial(f, 0, f.one());
  return gcd(xk_minus_1, xk_minus_1.derivative()).degree() == 0;
}

/// Smallest m >= 1 with p^m = 1 mod k (m = 1 when k = 1).
inline std::uint32_t multiplicative_order(std::uint32_t p, std::uint32_t k) {
  if (k <= 1) return 1;
  std::uint64_t v = p % k;
  std::uint32_t m = 1;
  while (v != 1) {
    v = v * p % k;
    if (++m > k) throw BadParameter("p is not invertible modulo k");
  }
  return m;
}

/// Whether GF(p^m), m the order of p mod k, is within the field-size bound.
inline bool ck_splitting_field_fits(std::uint32_t k, std::uint32_t p) {
  if (k % p == 0) return false;
  std::uint64_t q = 1;
  for (std::uint32_t i = 0, m = multiplicative_order(p, k); i < m; ++i)
    if ((q *= p) > kMaxFieldOrder) return false;
  return true;
}

struct CkRoots {
  GaloisField field;
  std::vector<GfElement> roots;
};

/// Every root of C_k in the splitting field GF(p^m), m the order of p mod k,
/// found by evaluating at each element.
inline CkRoots roots_of_ck(std::uint32_t k, std::uint32_t p) {
  if (k < 1) throw BadParameter("k must be at least 1");
  if (!is_prime(p)) throw BadParameter("p must be prime");
  if (k % p == 0) throw BadParameter("roots of C_k are only tabulated for p not dividing k");
  const std::uint32_t m = multiplicative_order(p, k);
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) throw SizeError("splitting field of C_k exceeds 2^20 elements");
  }
  CkRoots out{make_extension_field(p, m), {}};
  const auto& f = out.field;
  for (const auto& alpha : enumerate_elements(f)) {
    auto value = f.zero();
    for (std::uint32_t i = 0; i < k; ++i) value = f.add(f.mul(value, alpha), f.one());
    if (f.is_zero(value)) out.roots.push_back(alpha);
  }
  return out;
}

/// C_k has exactly k-1 distinct roots, all k-th roots of unity other than 1,
/// and x^k - 1 is squarefree.
inline FactReport verify_ck_roots(std::uint32_t k, std::uint32_t p) {
  FactReport report{"ck_roots", {{"k", k}, {"p", p}}, true, {}};
  detail::Checker check(report);
  const auto r = roots_of_ck(k, p);
  const auto& f = r.field;
  report.params["field"] = f.name();
  std::string listed;
  for (const auto& x : r.roots) listed += (listed.empty() ? "" : ", ") + f.to_string(x);
  check.expect(r.roots.size() == k - 1, "found " + std::to_string(r.roots.size()) + " roots: [" + listed + "]");
  for (std::size_t i = 0; i < r.roots.size(); ++i) {
    check.expect(!f.eq(r.roots[i], f.one()), "1 is a root");
    check.expect(f.eq(f.pow(r.roots[i], k), f.one()), f.to_string(r.roots[i]) + " is not a k-th root of unity");
    for (std::size_t j = 0; j < i; ++j) check.expect(!f.eq(r.roots[i], r.roots[j]), "duplicate root");
  }
  check.expect(ck_squarefree(k, p), "x^k - 1 has a repeated factor");
  return report;
}

/// Extreme parts of S_c in each variable are (monomial multiples of) Schur
/// polynomials in the remaining variables:
///   min_{x_i} S_c = xhat_i^(c1-1) * S_(chat_0 - c1)(xhat_i)
///   max_{x_i} S_c = x_i^(c_{n-1}-n+1) * S_(chat_{n-1})(xhat_i)
/// and for i != j the two mixed extreme parts agree, with the matching degrees.
template <class F>
FactReport verify_minmax_fact(const ExponentSequence& c, const F& field, FactOptions opt = {}) {
  const std::size_t n = c.size();
  if (n < 2) throw BadParameter("min/max identities need n >= 2");
  if (c[0] != 0) throw BadParameter("min/max identities need c_0 = 0");
  FactReport report{"minmax_parts", {{"c", c.values()}, {"field", field.name()}}, true, {}};
  detail::Checker check(report);
  MPoly<F> s = schur_poly(c, field);
  if (opt.inject_mutation) s = detail::mutate(s);
  if (!check.expect(!s.is_zero(), "S_c is zero")) return report;
  const std::uint32_t c1 = c[1], top = c.back() - static_cast<std::uint32_t>(n - 1);

  std::vector<std::uint32_t> low_values, mid_values;
  for (std::size_t k = 1; k < n; ++k) low_values.push_back(c[k] - c1);
  for (std::size_t k = 1; k + 1 < n; ++k) mid_values.push_back(c[k] - c1);
  const auto s_low = detail::schur_or_one(ExponentSequence(low_values), field);
  const auto s_high = detail::schur_or_one(remove(c, {n - 1}), field);
  const auto s_mid = detail::schur_or_one(ExponentSequence(mid_values), field);

  for (std::size_t i = 0; i < n && report.passed; ++i) {
    const auto rest = detail::other_vars(n, {i});
    const std::string at = "i = " + std::to_string(i);
    check.expect(mindeg(s, i) == 0, at + ": S has a monomial factor");
    check.expect(deg(s, i) == top, at + ": deg_{x_i} S = " + std::to_string(deg(s, i)));
    const auto min_want = detail::power_of_vars(field, n, rest, c1 - 1) * embed_vars<F>(s_low, n, rest);
    check.expect_equal(min_part(s, i), min_want, at + ", minimal part");
    const auto max_want = detail::power_of_vars(field, n, {i}, top) * embed_vars<F>(s_high, n, rest);
    check.expect_equal(max_part(s, i), max_want, at + ", maximal part");

    for (std::size_t j = 0; j < n && report.passed; ++j) {
      if (j == i) continue;
      const auto rest2 = detail::other_vars(n, {i, j});
      const std::string at2 = "i = " + std::to_string(i) + ", j = " + std::to_string(j);
      const auto min_of_max = min_part(max_part(s, j), i);
      const auto max_of_min = max_part(min_part(s, i), j);
      const auto want = detail::power_of_vars(field, n, {j}, top) * detail::power_of_vars(field, n, rest2, c1 - 1) *
                        embed_vars<F>(s_mid, n, rest2);
      check.expect_equal(min_of_max, max_of_min, at2 + ", order of extreme parts");
      check.expect_equal(min_of_max, want, at2 + ", mixed extreme part");
      check.expect(mindeg(max_part(s, j), i) == mindeg(s, i), at2 + ": mindeg_{x_i} max_{x_j} S differs");
      check.expect(deg(min_part(s, j), i) == deg(s, i), at2 + ": deg_{x_i} min_{x_j} S differs");
    }
  }
  return report;
}

/// C_k(x, y) = (xy)^(k-1) C_k(1/x, 1/y) as an exponent reversal, and the
/// coefficientwise reversal between S_(0,a,b) and S_(0,b-a,b).
template <class F>
FactReport verify_mirror_fact(std::uint32_t a, std::uint32_t b, const F& field) {
  if (a <= 1 || a + 1 >= b) throw BadParameter("reversal check needs 1 < a < b - 1");
  FactReport report{"mirror_reversal", {{"c", {0, a, b}}, {"field", field.name()}}, true, {}};
  detail::Checker check(report);
  for (std::uint32_t k : {a, b - a}) {
    const auto ck = ck_biv(k, field, 2, 0, 1);
    const std::vector<std::uint32_t> bounds{k - 1, k - 1};
    check.expect_equal(exponent_reverse<F>(ck, bounds), ck, "C_" + std::to_string(k) + " reversal");
  }
  const ExponentSequence c{0, a, b};
  const auto s = schur_poly(c, field), s_bar = schur_poly(reflect(c), field);
  for (std::size_t x = 0; x < 3 && report.passed; ++x) {
    const auto p = expand_in_var(s, x), p_bar = expand_in_var(s_bar, x);
    if (!check.expect(p.coeffs.size() == b - 1 && p_bar.coeffs.size() == b - 1, "expansion span")) break;
    std::vector<std::uint32_t> bounds(3, b - 2);
    bounds[x] = 0;
    for (std::uint32_t i = 0; i <= b - 2; ++i)
      check.expect_equal(p.coeffs[i], exponent_reverse<F>(p_bar.coeffs[b - 2 - i], bounds),
                         "x = x" + std::to_string(x) + ", P_" + std::to_string(i));
  }
  return report;
}

}  // namespace schurforge
