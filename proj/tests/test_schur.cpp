#include "schurforge/schur.hpp"

#include "gtest/gtest.h"
#include "schurforge/mpoly_io.hpp"

namespace schurforge {
namespace {

MPoly<Rationals> q_poly(std::string_view text, std::size_t n) { return parse_mpoly(text, Rationals{}, n); }

TEST(Sequence, ValidationAndDerivedData) {
  EXPECT_THROW(ExponentSequence({0, 2, 2}), BadSequence);
  EXPECT_THROW(ExponentSequence::parse("0,x"), ParseError);
  const auto c = ExponentSequence::parse("0, 2,5");
  EXPECT_EQ(c, (ExponentSequence{0, 2, 5}));
  EXPECT_EQ(c.gaps(), (std::vector<std::uint32_t>{2, 3}));
  EXPECT_EQ(c.partition(), (std::vector<std::uint32_t>{3, 1, 0}));
  EXPECT_EQ(c.schur_degree(), 4u);
  EXPECT_EQ(reflect(c), (ExponentSequence{0, 3, 5}));
  EXPECT_EQ(reflect(reflect(c)), c);
  EXPECT_EQ(remove(c, {1}), (ExponentSequence{0, 5}));
  EXPECT_EQ(shift(c, 2), (std::vector<std::int64_t>{-2, 0, 3}));
}

TEST(Vandermonde, QuotientExample) {
  const Rationals q;
  const auto v = exact_divide(vandermonde(ExponentSequence{0, 2, 3}, q), vandermonde(ExponentSequence{0, 1, 2}, q));
  ASSERT_TRUE(v);
  EXPECT_EQ(*v, q_poly("x0*x1 + x0*x2 + x1*x2", 3));
  EXPECT_EQ(vandermonde(ExponentSequence{0, 1}, q), q_poly("x1 - x0", 2));
  EXPECT_THROW(vandermonde(ExponentSequence::standard(7), q), SizeError);
}

TEST(Vandermonde, DoubledExponentsSquareTheVariables) {
  const Rationals q;
  const auto doubled = vandermonde(ExponentSequence{0, 2, 4}, q);
  const auto base = vandermonde(ExponentSequence{0, 1, 2}, q);
  MPoly<Rationals> squared(q, 3);
  for (const auto& [e, c] : base.terms()) {
    ExponentVector twice(3);
    for (std::size_t i = 0; i < 3; ++i) twice[i] = 2 * e[i];
    squared.add_term(twice, c);
  }
  EXPECT_EQ(doubled, squared);
}

TEST(Tableaux, ColumnShape) {
  // c = (0,2,3) has shape (1,1): two boxes in a column, entries strictly increasing.
  EXPECT_EQ(schur_ssyt(ExponentSequence{0, 2, 3}, Rationals{}), q_poly("x0*x1 + x0*x2 + x1*x2", 3));
}

TEST(Schur, Examples) {
  const Rationals q;
  EXPECT_EQ(schur_poly(ExponentSequence{0, 1, 3}, q), q_poly("x0 + x1 + x2", 3));
  EXPECT_EQ(schur_poly(ExponentSequence{0, 1, 2}, q), q_poly("1", 3));
  EXPECT_EQ(width(schur_poly(ExponentSequence{0, 2, 5}, q), 0), 3u);
  const auto f = make_prime_field(3);
  const auto s = schur_poly(ExponentSequence{0, 2, 4}, f);
  const auto factored = parse_mpoly("x0 + x1", f, 3) * parse_mpoly("x0 + x2", f, 3) * parse_mpoly("x1 + x2", f, 3);
  EXPECT_EQ(s, factored);
}

TEST(Schur, TwoVariablesIsCk) {
  const Rationals q;
  for (std::uint32_t k = 1; k <= 8; ++k)
    EXPECT_EQ(schur_poly(ExponentSequence{0, k}, q), ck_biv(k, q, 2, 0, 1));
}

TEST(Schur, TableauSumAgreesAndIsSymmetric) {
  const Rationals q;
  const auto f = make_prime_field(5);
  for (std::uint32_t a = 1; a < 5; ++a)
    for (std::uint32_t b = a + 1; b <= 7; ++b)
      for (std::uint32_t c = b + 1; c <= 8; ++c) {
        const ExponentSequence seq{0, a, b, c};
        const auto s = schur_poly(seq, q);
        ASSERT_EQ(s, schur_ssyt(seq, q)) << seq.to_string();
        ASSERT_EQ(schur_poly(seq, f), schur_ssyt(seq, f)) << seq.to_string();
        ASSERT_TRUE(is_homogeneous(s));
        ASSERT_EQ(s.total_degree(), seq.schur_degree());
        ASSERT_EQ(mindeg(s, 0), 0u);
        const std::vector<std::size_t> perm{2, 0, 3, 1};
        ASSERT_EQ(permute_vars<Rationals>(s, perm), s);
      }
}

TEST(Schur, MirrorIdentity) {
  // x^top-exponent-reversal of S_c is S of the reflected sequence.
  const Rationals q;
  for (std::uint32_t a = 1; a < 6; ++a)
    for (std::uint32_t b = a + 1; b <= 8; ++b) {
      const ExponentSequence c{0, a, b};
      const auto s = schur_poly(c, q);
      const std::uint32_t bound = b - 2;
      const std::vector<std::uint32_t> bounds{bound, bound, bound};
      ASSERT_EQ(exponent_reverse<Rationals>(s, bounds), schur_poly(reflect(c), q)) << c.to_string();
    }
}

TEST(Ck, Identities) {
  const Rationals q;
  const auto x = q_poly("x0", 2), y = q_poly("x1", 2);
  for (std::uint32_t k = 1; k <= 10; ++k) {
    const auto lhs = (x - y) * ck_biv(k, q, 2, 0, 1);
    ExponentVector ex(2), ey(2);
    ex[0] = k;
    ey[1] = k;
    ASSERT_EQ(lhs, MPoly<Rationals>::monomial(q, ex, q.one()) - MPoly<Rationals>::monomial(q, ey, q.one()));
    ASSERT_EQ(ck_uni(k, q).size(), k);
  }
  EXPECT_THROW(ck_uni(0, q), BadParameter);
  EXPECT_THROW(ck_biv(2, q, 3, 1, 1), BadParameter);
}

TEST(Tableaux, Bounds) {
  const Rationals q;
  EXPECT_THROW(schur_ssyt(ExponentSequence::standard(6), q), SizeError);
  EXPECT_THROW(schur_ssyt(ExponentSequence{0, 14}, q), SizeError);
}

}  // namespace
}  // namespace schurforge
