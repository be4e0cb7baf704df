#pragma once

// Exact coefficient fields: GF(p), GF(p^m) and the rationals.
//
// Finite-field elements are packed as integers in [0, q): the base-p digits
// of the packed value are the power-basis coordinates c0 + c1*t + ... with
// respect to the field's modulus. Every element carries the id of its field
// so that mixing contexts is detected instead of silently coerced.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "schurforge/errors.hpp"
#include "schurforge/upoly.hpp"

namespace schurforge {

enum class FieldKind { prime, extension, rational };

inline const char* to_string(FieldKind k) {
  switch (k) {
    case FieldKind::prime: return "prime";
    case FieldKind::extension: return "extension";
    case FieldKind::rational: return "rational";
  }
  return "?";
}

inline constexpr std::uint32_t kMaxPrime = 1u << 16;
inline constexpr std::uint64_t kMaxFieldOrder = 1u << 20;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

struct GfElement {
  std::uint32_t value = 0;
  std::uint32_t field_id = 0;
  friend bool operator==(const GfElement&, const GfElement&) = default;
};

class GaloisField;
GaloisField make_prime_field(std::uint32_t p);
GaloisField make_extension_field(std::uint32_t p, std::uint32_t m);

/// GF(p^m) for p < 2^16 and p^m <= 2^20. Cheap to copy.
class GaloisField {
 public:
  using Element = GfElement;

  FieldKind kind() const { return impl_->m == 1 ? FieldKind::prime : FieldKind::extension; }
  std::uint32_t characteristic() const { return impl_->p; }
  std::uint32_t degree() const { return impl_->m; }
  std::uint32_t order() const { return impl_->q; }
  std::uint32_t id() const { return impl_->id; }
  /// Monic modulus coefficients, low to high (length m + 1). For prime
  /// fields this is the polynomial t.
  const std::vector<std::uint32_t>& modulus() const { return impl_->modulus; }

  Element zero() const { return {0, impl_->id}; }
  Element one() const { return {1, impl_->id}; }
  Element from_integer(long long n) const {
    const long long p = impl_->p;
    long long r = n % p;
    if (r < 0) r += p;
    return {static_cast<std::uint32_t>(r), impl_->id};
  }
  /// Element with packed value `index`; the deterministic enumeration order.
  Element from_index(std::uint32_t index) const {
    if (index >= impl_->q) throw BadParameter("element index out of range");
    return {index, impl_->id};
  }
  std::uint32_t index_of(const Element& a) const {
    check(a);
    return a.value;
  }
  /// The generator t of the power basis (equals 0 in a prime field).
  Element generator() const { return impl_->m == 1 ? zero() : Element{impl_->p, impl_->id}; }

  bool is_zero(const Element& a) const {
    check(a);
    return a.value == 0;
  }
  bool eq(const Element& a, const Element& b) const {
    check(a);
    check(b);
    return a.value == b.value;
  }

  Element add(const Element& a, const Element& b) const {
    check(a);
    check(b);
    const std::uint32_t p = impl_->p;
    if (impl_->m == 1) {
      const std::uint32_t s = a.value + b.value;
      return {s >= p ? s - p : s, impl_->id};
    }
    if (p == 2) return {a.value ^ b.value, impl_->id};
    std::uint32_t x = a.value, y = b.value, out = 0, place = 1;
    for (std::uint32_t i = 0; i < impl_->m; ++i) {
      out += ((x % p + y % p) % p) * place;
      x /= p;
      y /= p;
      place *= p;
    }
    return {out, impl_->id};
  }

  Element neg(const Element& a) const {
    check(a);
    const std::uint32_t p = impl_->p;
    if (impl_->m == 1) return {a.value == 0 ? 0 : p - a.value, impl_->id};
    if (p == 2) return a;
    std::uint32_t x = a.value, out = 0, place = 1;
    for (std::uint32_t i = 0; i < impl_->m; ++i) {
      out += ((p - x % p) % p) * place;
      x /= p;
      place *= p;
    }
    return {out, impl_->id};
  }

  Element sub(const Element& a, const Element& b) const { return add(a, neg(b)); }

  Element mul(const Element& a, const Element& b) const {
    check(a);
    check(b);
    const std::uint32_t p = impl_->p;
    if (impl_->m == 1)
      return {static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.value) * b.value % p), impl_->id};
    const std::uint32_t m = impl_->m;
    std::uint32_t da[32] = {}, db[32] = {}, prod[64] = {};
    unpack(a.value, da);
    unpack(b.value, db);
    for (std::uint32_t i = 0; i < m; ++i) {
      if (da[i] == 0) continue;
      for (std::uint32_t j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    }
    // Reduce with t^m = -(modulus_0 + ... + modulus_{m-1} t^{m-1}).
    const auto& mod = impl_->modulus;
    for (std::uint32_t k = 2 * m - 1; k-- > m;) {
      const std::uint32_t c = prod[k];
      if (c == 0) continue;
      prod[k] = 0;
      for (std::uint32_t j = 0; j < m; ++j) prod[k - m + j] = (prod[k - m + j] + (p - mod[j]) * c) % p;
    }
    std::uint32_t out = 0;
    for (std::uint32_t i = m; i-- > 0;) out = out * p + prod[i];
    return {out, impl_->id};
  }

  Element pow(Element a, std::uint64_t e) const {
    Element result = one();
    while (e > 0) {
      if (e & 1u) result = mul(result, a);
      a = mul(a, a);
      e >>= 1;
    }
    return result;
  }

  Element inv(const Element& a) const {
    if (is_zero(a)) throw DivisionByZero("inverse of zero in " + name());
    return pow(a, impl_->q - 2);
  }

  /// Power-basis coordinates c0..c_{m-1}.
  std::vector<std::uint32_t> coordinates(const Element& a) const {
    check(a);
    std::vector<std::uint32_t> d(impl_->m);
    std::uint32_t x = a.value;
    for (auto& c : d) {
      c = x % impl_->p;
      x /= impl_->p;
    }
    return d;
  }

  std::string to_string(const Element& a) const {
    if (impl_->m == 1) {
      check(a);
      return std::to_string(a.value);
    }
    const auto d = coordinates(a);
    std::string out;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i] == 0) continue;
      if (!out.empty()) out += '+';
      out += std::to_string(d[i]);
      if (i >= 1) out += "*t";
      if (i >= 2) out += '^' + std::to_string(i);
    }
    return out.empty() ? "0" : out;
  }

  Element parse(std::string_view text) const;

  std::string name() const {
    return impl_->m == 1 ? "GF(" + std::to_string(impl_->p) + ")"
                         : "GF(" + std::to_string(impl_->p) + "^" + std::to_string(impl_->m) + ")";
  }

  friend bool operator==(const GaloisField& a, const GaloisField& b) { return a.impl_->id == b.impl_->id; }

 private:
  struct Impl {
    std::uint32_t p = 0, m = 0, q = 0, id = 0;
    std::vector<std::uint32_t> modulus;
  };

  explicit GaloisField(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  void check(const Element& a) const {
    if (a.field_id != impl_->id) throw ContextError("element does not belong to " + name());
  }

  void unpack(std::uint32_t x, std::uint32_t* digits) const {
    for (std::uint32_t i = 0; i < impl_->m; ++i) {
      digits[i] = x % impl_->p;
      x /= impl_->p;
    }
  }

  static std::shared_ptr<const Impl> build(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus) {
    auto impl = std::make_shared<Impl>();
    impl->p = p;
    impl->m = m;
    impl->q = 1;
    for (std::uint32_t i = 0; i < m; ++i) impl->q *= p;
    impl->id = p | (m << 16);
    impl->modulus = std::move(modulus);
    return impl;
  }

  friend GaloisField make_prime_field(std::uint32_t p);
  friend GaloisField make_extension_field(std::uint32_t p, std::uint32_t m);

  std::shared_ptr<const Impl> impl_;
};

inline GaloisField make_prime_field(std::uint32_t p) {
  if (p >= kMaxPrime || !is_prime(p))
    throw ConstructionError("characteristic must be a prime below 2^16, got " + std::to_string(p));
  return GaloisField(GaloisField::build(p, 1, {0, 1}));
}

namespace detail {

// True if the monic polynomial has no monic divisor of degree 1..deg/2.
inline bool passes_trial_division(const UPoly<GaloisField>& f) {
  const GaloisField& fp = f.field();
  const std::uint32_t p = fp.characteristic();
  const long m = f.degree();
  for (long d = 1; 2 * d <= m; ++d) {
    std::uint64_t count = 1;
    for (long i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<GfElement> c(static_cast<std::size_t>(d) + 1);
      std::uint64_t x = code;
      for (long i = 0; i < d; ++i) {
        c[static_cast<std::size_t>(i)] = fp.from_integer(static_cast<long long>(x % p));
        x /= p;
      }
      c[static_cast<std::size_t>(d)] = fp.one();
      if (f.divmod(UPoly<GaloisField>(fp, std::move(c))).second.is_zero()) return false;
    }
  }
  return true;
}

}  // namespace detail

/// GF(p^m) over the least monic irreducible modulus of degree m, where
/// candidates t^m + c_{m-1} t^{m-1} + ... + c_0 are ordered by the integer
/// sum c_i p^i.
inline GaloisField make_extension_field(std::uint32_t p, std::uint32_t m) {
  const GaloisField fp = make_prime_field(p);
  if (m == 0) throw ConstructionError("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) throw ConstructionError("field order p^m exceeds 2^20");
  }
  if (m == 1) return fp;
  const std::uint64_t count = q;
  for (std::uint64_t code = 0; code < count; ++code) {
    std::vector<GfElement> c(m + 1);
    std::vector<std::uint32_t> raw(m + 1);
    std::uint64_t x = code;
    for (std::uint32_t i = 0; i < m; ++i) {
      raw[i] = static_cast<std::uint32_t>(x % p);
      c[i] = fp.from_integer(raw[i]);
      x /= p;
    }
    raw[m] = 1;
    c[m] = fp.one();
    UPoly<GaloisField> f(fp, std::move(c));
    if (f(fp.zero()) == fp.zero()) continue;
    if (detail::passes_trial_division(f)) return GaloisField(GaloisField::build(p, m, std::move(raw)));
  }
  throw ConstructionError("no irreducible modulus found");  // unreachable for valid p, m
}

inline GfElement GaloisField::parse(std::string_view text) const {
  auto parse_uint = [&](std::string_view s) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
      throw ParseError("bad field element '" + std::string(text) + "'");
    return v;
  };
  if (impl_->m == 1) {
    const std::uint64_t v = parse_uint(text);
    return from_integer(static_cast<long long>(v % impl_->p));
  }
  Element acc = zero();
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t plus = text.find('+', pos);
    std::string_view term = text.substr(pos, plus == std::string_view::npos ? std::string_view::npos : plus - pos);
    std::uint64_t coeff = 0, power = 0;
    const std::size_t star = term.find("*t");
    if (star == std::string_view::npos) {
      coeff = parse_uint(term);
    } else {
      coeff = parse_uint(term.substr(0, star));
      std::string_view rest = term.substr(star + 2);
      if (rest.empty()) power = 1;
      else if (rest.front() == '^') power = parse_uint(rest.substr(1));
      else throw ParseError("bad field element '" + std::string(text) + "'");
    }
    acc = add(acc, mul(from_integer(static_cast<long long>(coeff % impl_->p)), pow(generator(), power)));
    if (plus == std::string_view::npos) break;
    pos = plus + 1;
  }
  return acc;
}

/// The field of rational numbers, backed by arbitrary-precision fractions.
class Rationals {
 public:
  using Element = boost::multiprecision::cpp_rational;

  FieldKind kind() const { return FieldKind::rational; }
  std::uint32_t characteristic() const { return 0; }
  std::uint32_t degree() const { return 1; }

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_integer(long long n) const { return Element(n); }
  Element from_integer(const boost::multiprecision::cpp_int& n) const { return Element(n); }

  bool is_zero(const Element& a) const { return a == 0; }
  bool eq(const Element& a, const Element& b) const { return a == b; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const {
    if (a == 0) throw DivisionByZero("inverse of zero in Q");
    return Element(1) / a;
  }
  Element pow(Element a, std::uint64_t e) const {
    Element result = one();
    while (e > 0) {
      if (e & 1u) result *= a;
      a *= a;
      e >>= 1;
    }
    return result;
  }

  std::string to_string(const Element& a) const {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(a) == 1) return numerator(a).str();
    return numerator(a).str() + "/" + denominator(a).str();
  }

  Element parse(std::string_view text) const {
    try {
      const std::size_t slash = text.find('/');
      if (slash == std::string_view::npos) return Element(boost::multiprecision::cpp_int(std::string(text)));
      const boost::multiprecision::cpp_int num(std::string(text.substr(0, slash)));
      const boost::multiprecision::cpp_int den(std::string(text.substr(slash + 1)));
      if (den == 0) throw DivisionByZero("zero denominator");
      return Element(num, den);
    } catch (const std::runtime_error& e) {
      if (dynamic_cast<const Error*>(&e) != nullptr) throw;
      throw ParseError("bad rational '" + std::string(text) + "'");
    }
  }

  std::string name() const { return "Q"; }

  friend bool operator==(const Rationals&, const Rationals&) { return true; }
};

/// A runtime-selected coefficient field.
using FieldCtx = std::variant<GaloisField, Rationals>;

/// Parses "p", "p:m" or "Q".
inline FieldCtx parse_field_spec(std::string_view spec) {
  if (spec == "Q" || spec == "q") return Rationals{};
  auto parse_uint = [&](std::string_view s) {
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
      throw ParseError("bad field spec '" + std::string(spec) + "'");
    return v;
  };
  const std::size_t colon = spec.find(':');
  if (colon == std::string_view::npos) return make_prime_field(parse_uint(spec));
  return make_extension_field(parse_uint(spec.substr(0, colon)), parse_uint(spec.substr(colon + 1)));
}

inline std::vector<GfElement> enumerate_elements(const GaloisField& f) {
  std::vector<GfElement> out;
  out.reserve(f.order());
  for (std::uint32_t i = 0; i < f.order(); ++i) out.push_back(f.from_index(i));
  return out;
}

inline std::vector<GfElement> enumerate_elements(const FieldCtx& ctx) {
  if (const auto* gf = std::get_if<GaloisField>(&ctx)) return enumerate_elements(*gf);
  throw NotFinite("the rationals cannot be enumerated");
}

inline std::string field_name(const FieldCtx& ctx) {
  return std::visit([](const auto& f) { return f.name(); }, ctx);
}

}  // namespace schurforge
