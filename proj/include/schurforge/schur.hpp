#pragma once

// Exponent sequences, generalized Vandermonde determinants, Schur polynomials
// as Vandermonde quotients, the tableau-sum oracle, and the truncated
// geometric polynomials C_k.

#include <algorithm>
#include <bit>
#include <charconv>
#include <map>
#include <optional>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "schurforge/mpoly.hpp"

namespace schurforge {

inline constexpr std::size_t kMaxDeterminantSize = 6;
inline constexpr std::size_t kMaxTableauVars = 5;
inline constexpr std::uint32_t kMaxTableauRow = 12;

/// Strictly increasing sequence of non-negative exponents c_0 < ... < c_{n-1}.
class ExponentSequence {
 public:
  ExponentSequence() = default;
  explicit ExponentSequence(std::vector<std::uint32_t> c) : c_(std::move(c)) {
    for (std::size_t i = 0; i + 1 < c_.size(); ++i)
      if (c_[i] >= c_[i + 1]) throw BadSequence("exponent sequence must be strictly increasing: " + to_string());
  }
  ExponentSequence(std::initializer_list<std::uint32_t> c) : ExponentSequence(std::vector<std::uint32_t>(c)) {}

  static ExponentSequence from_signed(const std::vector<std::int64_t>& c) {
    std::vector<std::uint32_t> out;
    for (auto v : c) {
      if (v < 0) throw BadSequence("exponent sequence entries must be non-negative");
      out.push_back(static_cast<std::uint32_t>(v));
    }
    return ExponentSequence(std::move(out));
  }

  /// (0, 1, ..., n-1).
  static ExponentSequence standard(std::size_t n) {
    std::vector<std::uint32_t> c(n);
    std::iota(c.begin(), c.end(), 0u);
    return ExponentSequence(std::move(c));
  }

  /// Parses "0,2,5".
  static ExponentSequence parse(std::string_view text) {
    std::vector<std::uint32_t> c;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t comma = text.find(',', pos);
      if (comma == std::string_view::npos) comma = text.size();
      std::string_view item = text.substr(pos, comma - pos);
      while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
      while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
      std::uint32_t v = 0;
      auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
      if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
        throw ParseError("bad exponent sequence '" + std::string(text) + "'");
      c.push_back(v);
      pos = comma + 1;
    }
    return ExponentSequence(std::move(c));
  }

  std::size_t size() const { return c_.size(); }
  std::uint32_t operator[](std::size_t i) const { return c_[i]; }
  const std::vector<std::uint32_t>& values() const { return c_; }
  std::uint32_t back() const { return c_.back(); }

  std::vector<std::uint32_t> gaps() const {
    std::vector<std::uint32_t> d;
    for (std::size_t i = 0; i + 1 < c_.size(); ++i) d.push_back(c_[i + 1] - c_[i]);
    return d;
  }

  /// lambda_j = c_{n-1-j} - (n-1-j), weakly decreasing.
  std::vector<std::uint32_t> partition() const {
    const std::size_t n = c_.size();
    std::vector<std::uint32_t> lambda(n);
    for (std::size_t j = 0; j < n; ++j) lambda[j] = c_[n - 1 - j] - static_cast<std::uint32_t>(n - 1 - j);
    return lambda;
  }

  std::uint32_t gcd() const {
    std::uint32_t g = 0;
    for (auto v : c_) g = std::gcd(g, v);
    return g;
  }

  /// Total degree of the Schur polynomial: sum(c) - n(n-1)/2.
  std::uint64_t schur_degree() const {
    const std::uint64_t n = c_.size();
    return std::accumulate(c_.begin(), c_.end(), std::uint64_t{0}) - n * (n - 1) / 2;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) out += (i ? "," : "") + std::to_string(c_[i]);
    return out;
  }

  friend bool operator==(const ExponentSequence&, const ExponentSequence&) = default;

 private:
  std::vector<std::uint32_t> c_;
};

/// c with the listed positions removed.
inline ExponentSequence remove(const ExponentSequence& c, const std::vector<std::size_t>& indices) {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (std::find(indices.begin(), indices.end(), i) != indices.end()) continue;
    out.push_back(c[i]);
  }
  for (auto i : indices)
    if (i >= c.size()) throw BadSequence("removal index out of range");
  return ExponentSequence(std::move(out));
}

/// (c_0 - b, ..., c_{n-1} - b); entries may be negative.
inline std::vector<std::int64_t> shift(const ExponentSequence& c, std::int64_t b) {
  std::vector<std::int64_t> out;
  for (auto v : c.values()) out.push_back(static_cast<std::int64_t>(v) - b);
  return out;
}

/// (0, c_{n-1} - c_{n-2}, ..., c_{n-1} - c_0). An involution on sequences with c_0 = 0.
inline ExponentSequence reflect(const ExponentSequence& c) {
  std::vector<std::uint32_t> out;
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i) out.push_back(c.back() - c[n - 1 - i]);
  return ExponentSequence(std::move(out));
}

/// det[x_i^{c_j}] by Laplace expansion, memoized over column subsets.
template <class F>
MPoly<F> vandermonde(const ExponentSequence& c, const F& field) {
  const std::size_t n = c.size();
  if (n > kMaxDeterminantSize) throw SizeError("determinant size above " + std::to_string(kMaxDeterminantSize));
  std::vector<std::optional<MPoly<F>>> memo(std::size_t{1} << n);
  // Determinant of rows [n - |mask|, n) restricted to the columns in mask.
  auto det = [&](auto&& self, unsigned mask) -> const MPoly<F>& {
    auto& slot = memo[mask];
    if (slot) return *slot;
    const std::size_t row = n - static_cast<std::size_t>(std::popcount(mask));
    if (mask == 0) {
      slot = MPoly<F>::one(field, n);
      return *slot;
    }
    MPoly<F> acc(field, n);
    bool negative = false;
    for (std::size_t col = 0; col < n; ++col) {
      if (!(mask & (1u << col))) continue;
      const MPoly<F>& minor = self(self, mask & ~(1u << col));
      ExponentVector e(n);
      e[row] = c[col];
      const MPoly<F> term = minor.shift(e);
      if (negative) acc -= term;
      else acc += term;
      negative = !negative;
    }
    slot = std::move(acc);
    return *slot;
  };
  return det(det, static_cast<unsigned>((std::size_t{1} << n) - 1));
}

/// S_c = V_c / V_(0..n-1). The quotient exists over the integers, so a failed
/// division is an internal error rather than a result.
template <class F>
MPoly<F> schur_poly(const ExponentSequence& c, const F& field) {
  if (c.size() > kMaxDeterminantSize) throw SizeError("determinant size above " + std::to_string(kMaxDeterminantSize));
  auto q = exact_divide(vandermonde(c, field), vandermonde(ExponentSequence::standard(c.size()), field));
  if (!q) throw std::logic_error("Vandermonde quotient is not exact for c = " + c.to_string());
  return std::move(*q);
}

/// Sum over semistandard tableaux of shape lambda(c) with entries 1..n of the
/// content monomials, computed over the integers and then mapped into the field.
template <class F>
MPoly<F> schur_ssyt(const ExponentSequence& c, const F& field) {
  const std::size_t n = c.size();
  const auto lambda = c.partition();
  if (n > kMaxTableauVars || (n > 0 && lambda[0] > kMaxTableauRow))
    throw SizeError("tableau enumeration bound exceeded (n <= 5, lambda_0 <= 12)");
  std::vector<std::uint32_t> column_length(n > 0 ? lambda[0] : 0, 0);
  for (std::size_t r = 0; r < n; ++r)
    for (std::uint32_t col = 0; col < lambda[r]; ++col) ++column_length[col];

  std::vector<std::vector<std::uint32_t>> tableau(n);
  for (std::size_t r = 0; r < n; ++r) tableau[r].assign(lambda[r], 0);
  std::map<ExponentVector, long long, GrlexDescending> counts;
  ExponentVector content(n);

  // Row-major fill; rows weakly increase, columns strictly increase.
  auto fill = [&](auto&& self, std::size_t r, std::uint32_t col) -> void {
    if (r == n || lambda[r] == 0) {
      ++counts[content];
      return;
    }
    if (col == lambda[r]) {
      self(self, r + 1, 0);
      return;
    }
    std::uint32_t lo = static_cast<std::uint32_t>(r) + 1;
    if (col > 0) lo = std::max(lo, tableau[r][col - 1]);
    if (r > 0) lo = std::max(lo, tableau[r - 1][col] + 1);
    const std::uint32_t cells_below = column_length[col] - 1 - static_cast<std::uint32_t>(r);
    const std::uint32_t hi = static_cast<std::uint32_t>(n) - cells_below;
    for (std::uint32_t v = lo; v <= hi; ++v) {
      tableau[r][col] = v;
      ++content[v - 1];
      self(self, r, col + 1);
      --content[v - 1];
    }
  };
  fill(fill, 0, 0);

  MPoly<F> out(field, n);
  for (const auto& [e, k] : counts) out.add_term(e, field.from_integer(k));
  return out;
}

/// 1 + x + ... + x^{k-1} in one variable.
template <class F>
MPoly<F> ck_uni(std::uint32_t k, const F& field) {
  if (k < 1) throw BadParameter("C_k requires k >= 1");
  MPoly<F> out(field, 1);
  for (std::uint32_t i = 0; i < k; ++i) out.add_term(ExponentVector{i}, field.one());
  return out;
}

/// sum_{t<k} x_i^t x_j^{k-1-t} in an n-variable ring.
template <class F>
MPoly<F> ck_biv(std::uint32_t k, const F& field, std::size_t nvars, std::size_t i, std::size_t j) {
  if (k < 1) throw BadParameter("C_k requires k >= 1");
  if (i == j || i >= nvars || j >= nvars) throw BadParameter("C_k needs two distinct variables");
  MPoly<F> out(field, nvars);
  for (std::uint32_t t = 0; t < k; ++t) {
    ExponentVector e(nvars);
    e[i] = t;
    e[j] = k - 1 - t;
    out.add_term(e, field.one());
  }
  return out;
}

}  // namespace schurforge
