#include "schurforge/mpoly.hpp"

#include <random>

#include "gtest/gtest.h"
#include "random_poly.hpp"
#include "schurforge/mpoly_io.hpp"

namespace schurforge {
namespace {

using testing::random_poly;

MPoly<Rationals> q_poly(std::string_view text, std::size_t n) { return parse_mpoly(text, Rationals{}, n); }
MPoly<GaloisField> gf_poly(std::string_view text, std::uint32_t p, std::size_t n) {
  return parse_mpoly(text, make_prime_field(p), n);
}

TEST(MPolyArith, DifferenceOfSquares) {
  const auto x = q_poly("x0", 2), y = q_poly("x1", 2);
  EXPECT_EQ(to_string((x + y) * (x - y)), "x0^2 - x1^2");
}

TEST(MPolyArith, FreshmansDreamInCharTwo) {
  const auto s = gf_poly("x0 + x1", 2, 2);
  EXPECT_EQ(to_string(s * s), "x0^2 + x1^2");
}

TEST(MPolyArith, AddNegatedScaleIsZero) {
  const Rationals q;
  const auto p = q_poly("3*x0^2*x1 - 1/2*x2 + 4", 3);
  EXPECT_TRUE((p + p.scale(q.from_integer(-1))).is_zero());
}

TEST(MPolyArith, MismatchedContextsThrow) {
  EXPECT_THROW(gf_poly("x0", 3, 2) + gf_poly("x0", 5, 2), ContextError);
  EXPECT_THROW(gf_poly("x0", 3, 2) * gf_poly("x0", 3, 3), ContextError);
}

TEST(ExactDivide, Examples) {
  EXPECT_EQ(exact_divide(q_poly("x0^2 - x1^2", 2), q_poly("x0 - x1", 2)), q_poly("x0 + x1", 2));
  EXPECT_FALSE(exact_divide(q_poly("x0^2 + x1^2", 2), q_poly("x0 + x1", 2)).has_value());
  EXPECT_THROW(exact_divide(q_poly("x0", 2), MPoly<Rationals>(Rationals{}, 2)), DivisionByZero);
}

TEST(ExactDivide, RemainderIsNormalForm) {
  const auto r = divide_with_remainder(q_poly("x0^2 + x1^2", 2), q_poly("x0 + x1", 2));
  EXPECT_EQ(to_string(r.remainder), "2*x1^2");
  EXPECT_EQ(r.quotient * q_poly("x0 + x1", 2) + r.remainder, q_poly("x0^2 + x1^2", 2));
}

TEST(MinMaxParts, Examples) {
  const auto p = q_poly("x0^2*x1 + x0^2*x2 + x0*x1^2", 3);
  EXPECT_EQ(min_part(p, 0), q_poly("x0*x1^2", 3));
  EXPECT_EQ(max_part(p, 0), q_poly("x0^2*x1 + x0^2*x2", 3));
  EXPECT_EQ(min_part(q_poly("5", 3), 1), q_poly("5", 3));
  EXPECT_THROW(min_part(MPoly<Rationals>(Rationals{}, 3), 0), ZeroPolynomial);
}

TEST(Degrees, Width) {
  EXPECT_EQ(width(q_poly("x0^2*x1 + x0*x1^2", 2), 0), 1u);
  EXPECT_EQ(width(q_poly("x1 + x2", 3), 0), 0u);
  EXPECT_EQ(mindeg(q_poly("x0^2*x1 + x0*x1^2", 2), 0), 1u);
  EXPECT_THROW(deg(MPoly<Rationals>(Rationals{}, 2), 0), ZeroPolynomial);
}

TEST(Substitute, RootOfC2InGF3) {
  const auto f = make_prime_field(3);
  EXPECT_TRUE(substitute_var(gf_poly("x1 + x2", 3, 3), 1, f.from_integer(2), 2).is_zero());
  const Rationals q;
  EXPECT_EQ(substitute_var(q_poly("x1^2", 3), 1, q.from_integer(3), 2), q_poly("9*x2^2", 3));
  EXPECT_EQ(substitute_var(q_poly("x0*x1 + x0*x2", 3), 1, q.one(), 2), q_poly("2*x0*x2", 3));
  EXPECT_THROW(substitute_var(q_poly("x1", 3), 1, q.one(), 1), BadSubstitution);
}

TEST(Evaluate, Examples) {
  const auto f = make_prime_field(7);
  const std::vector<GfElement> pt{f.from_integer(2), f.from_integer(3)};
  EXPECT_EQ(evaluate<GaloisField>(gf_poly("x0 + x1", 7, 2), pt), f.from_integer(5));
  EXPECT_EQ(evaluate<GaloisField>(MPoly<GaloisField>(f, 2), pt), f.zero());
  EXPECT_THROW(evaluate<GaloisField>(gf_poly("x0", 7, 3), pt), ContextError);
}

TEST(Permute, Examples) {
  const std::vector<std::size_t> swap{1, 0}, id{0, 1}, bad{0, 0};
  EXPECT_EQ(permute_vars<Rationals>(q_poly("x0*x1^2", 2), swap), q_poly("x0^2*x1", 2));
  EXPECT_EQ(permute_vars<Rationals>(q_poly("x0*x1^2 + 3", 2), id), q_poly("x0*x1^2 + 3", 2));
  EXPECT_THROW(permute_vars<Rationals>(q_poly("x0", 2), bad), BadPermutation);
}

TEST(Associate, Examples) {
  const auto w = monomial_associate(q_poly("2*x0*x1^3", 2), q_poly("x1^2", 2));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->scalar, 2);
  EXPECT_EQ(w->shift, (std::vector<std::int64_t>{1, 1}));
  EXPECT_FALSE(monomial_associate(q_poly("x0 + x1", 2), q_poly("x0 + 2*x1", 2)));
  EXPECT_THROW(monomial_associate(q_poly("x0", 2), MPoly<Rationals>(Rationals{}, 2)), ZeroPolynomial);
  const auto neg = monomial_associate(q_poly("x1", 2), q_poly("x0^2*x1^3", 2));
  ASSERT_TRUE(neg);
  EXPECT_EQ(neg->shift, (std::vector<std::int64_t>{-2, -2}));
}

TEST(Homogeneous, Components) {
  const auto comps = homogeneous_components(q_poly("x0^2 + x0*x1 + x1", 2));
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps.at(2), q_poly("x0^2 + x0*x1", 2));
  EXPECT_EQ(comps.at(1), q_poly("x1", 2));
  EXPECT_TRUE(homogeneous_components(MPoly<Rationals>(Rationals{}, 2)).empty());
  EXPECT_FALSE(is_homogeneous(q_poly("x0^2 + x1", 2)));
  EXPECT_TRUE(is_homogeneous(q_poly("x0^2 + x0*x1", 2)));
}

TEST(ExponentReverse, Examples) {
  const std::vector<std::uint32_t> b11{1, 1}, b22{2, 2}, b20{2, 0}, b00{0, 0};
  EXPECT_EQ(exponent_reverse<Rationals>(q_poly("x0 + x1", 2), b11), q_poly("x0 + x1", 2));
  EXPECT_EQ(exponent_reverse<Rationals>(q_poly("x0^2 + x0*x1 + x1^2", 2), b22), q_poly("x0^2 + x0*x1 + x1^2", 2));
  EXPECT_EQ(exponent_reverse<Rationals>(q_poly("x0^2", 2), b20), q_poly("1", 2));
  EXPECT_THROW(exponent_reverse<Rationals>(q_poly("x0", 2), b00), BadBounds);
}

TEST(TextForm, GoldenAndRoundTrip) {
  const auto p = q_poly("1 + x1*x2^2 + 2*x0^3*x1", 3);
  EXPECT_EQ(to_string(p), "2*x0^3*x1 + x1*x2^2 + 1");
  EXPECT_EQ(to_string(MPoly<Rationals>(Rationals{}, 2)), "0");
  EXPECT_EQ(to_string(q_poly("-x0 - 3/2*x1", 2)), "-x0 - 3/2*x1");
  const auto f4 = make_extension_field(2, 2);
  const auto e = parse_mpoly("(1+1*t)*x0 + x1", f4, 2);
  EXPECT_EQ(to_string(e), "(1+1*t)*x0 + x1");
  EXPECT_THROW(q_poly("x9", 2), ParseError);
  EXPECT_THROW(q_poly("x0 + ", 2), ParseError);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto r = random_poly(Rationals{}, 3, rng);
    ASSERT_EQ(parse_mpoly(to_string(r), Rationals{}, 3), r);
    const auto g = random_poly(make_extension_field(3, 2), 3, rng);
    ASSERT_EQ(parse_mpoly(to_string(g), g.field(), 3), g);
  }
}

// Products: leading-part multiplicativity and degree additivity.
template <class F>
void check_product_properties(const F& f, int trials) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < trials; ++t) {
    const auto p = random_poly(f, 3, rng), q = random_poly(f, 3, rng);
    const auto pq = p * q;
    for (std::size_t i = 0; i < 3; ++i) {
      ASSERT_EQ(min_part(pq, i), min_part(p, i) * min_part(q, i));
      ASSERT_EQ(max_part(pq, i), max_part(p, i) * max_part(q, i));
      ASSERT_EQ(deg(pq, i), deg(p, i) + deg(q, i));
      ASSERT_EQ(mindeg(pq, i), mindeg(p, i) + mindeg(q, i));
      ASSERT_EQ(width(pq, i), width(p, i) + width(q, i));
    }
    ASSERT_EQ(exact_divide(pq, q), p);
  }
}

TEST(MPolyProperties, ProductsOverEachFieldKind) {
  check_product_properties(make_prime_field(5), 200);
  check_product_properties(make_extension_field(2, 3), 200);
  check_product_properties(Rationals{}, 200);
}

TEST(MPolyProperties, SubstitutionIsRingHomomorphism) {
  const auto f = make_prime_field(7);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const auto p = random_poly(f, 3, rng), q = random_poly(f, 3, rng);
    const auto a = testing::random_element(f, rng);
    ASSERT_EQ(substitute_var(p + q, 0, a, 2), substitute_var(p, 0, a, 2) + substitute_var(q, 0, a, 2));
    ASSERT_EQ(substitute_var(p * q, 0, a, 2), substitute_var(p, 0, a, 2) * substitute_var(q, 0, a, 2));
  }
}

TEST(MPolyProperties, AssociationIsEquivalence) {
  const auto f = make_prime_field(5);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const auto p = random_poly(f, 3, rng);
    auto scalar = testing::random_element(f, rng);
    if (f.is_zero(scalar)) scalar = f.one();
    const ExponentVector s1{static_cast<std::uint32_t>(rng() % 3), 0, static_cast<std::uint32_t>(rng() % 3)};
    const ExponentVector s2{0, static_cast<std::uint32_t>(rng() % 3), 1};
    const auto q = p.shift(s1).scale(scalar), r = q.shift(s2);
    const auto refl = monomial_associate(p, p);
    ASSERT_TRUE(refl);
    ASSERT_EQ(refl->scalar, f.one());
    ASSERT_EQ(refl->shift, (std::vector<std::int64_t>{0, 0, 0}));
    const auto pq = monomial_associate(q, p), qp = monomial_associate(p, q);
    ASSERT_TRUE(pq && qp);
    ASSERT_EQ(qp->scalar, f.inv(pq->scalar));
    for (std::size_t i = 0; i < 3; ++i) ASSERT_EQ(qp->shift[i], -pq->shift[i]);
    const auto rq = monomial_associate(r, q), rp = monomial_associate(r, p);
    ASSERT_TRUE(rq && rp);
    ASSERT_EQ(rp->scalar, f.mul(rq->scalar, pq->scalar));
    for (std::size_t i = 0; i < 3; ++i) ASSERT_EQ(rp->shift[i], rq->shift[i] + pq->shift[i]);
  }
}

TEST(MPolyProperties, ReverseIsInvolutionForTightBounds) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const auto p = random_poly(Rationals{}, 3, rng);
    std::vector<std::uint32_t> bounds{deg(p, 0), deg(p, 1), deg(p, 2)};
    ASSERT_EQ(exponent_reverse<Rationals>(exponent_reverse<Rationals>(p, bounds), bounds), p);
  }
}

}  // namespace
}  // namespace schurforge
