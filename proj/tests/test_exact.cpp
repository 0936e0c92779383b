#include <gtest/gtest.h>

#include "l2b/errors.hpp"
#include "l2b/exact.hpp"
#include "l2b/random.hpp"
#include "oracle.hpp"

using namespace l2b;

TEST(Rational, CanonicalText) {
  EXPECT_EQ(to_string(Rational(6, 4)), "3/2");
  EXPECT_EQ(to_string(Rational(-6, 4)), "-3/2");
  EXPECT_EQ(to_string(Rational(4, -2)), "-2");
  EXPECT_EQ(to_string(Rational(0, 5)), "0");
}

TEST(Rational, ParseAcceptsAndRejects) {
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(parse_rational("-2/6"), Rational(-1, 3));
  EXPECT_EQ(parse_rational("10/5"), Rational(2));
  EXPECT_THROW(parse_rational("1/0"), InvalidInput);
  EXPECT_THROW(parse_rational("abc"), InvalidInput);
  EXPECT_THROW(parse_rational(""), InvalidInput);
  EXPECT_THROW(parse_rational("1/2x"), InvalidInput);
}

TEST(Rational, TextRoundTrip) {
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    Rational q(rng.range(-50, 50), rng.range(1, 40));
    q.canonicalize();
    EXPECT_EQ(parse_rational(to_string(q)), q);
  }
}

TEST(Solve, IdentityReturnsRightHandSide) {
  auto res = solve_linear(Mat::identity(2), Vec{1, 2});
  ASSERT_EQ(res.status, SolveStatus::unique);
  EXPECT_EQ(res.x, (Vec{1, 2}));
}

TEST(Solve, ZeroSystemIsInconsistent) {
  EXPECT_EQ(solve_linear(Mat(1, 1), Vec{1}).status, SolveStatus::inconsistent);
}

TEST(Solve, UnderdeterminedGivesParticularSolution) {
  Mat a = Mat::from_rows({{1, 1}}, 2);
  auto res = solve_linear(a, Vec{3});
  ASSERT_EQ(res.status, SolveStatus::underdetermined);
  EXPECT_EQ(a * res.x, Vec{3});
}

TEST(Solve, RandomSystemsReproduceRightHandSide) {
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    const std::size_t r = 1 + rng.below(5), c = 1 + rng.below(5);
    Mat a = random_matrix(rng, r, c, -3, 3);
    Vec x0(c);
    for (auto& v : x0) v = rng.range(-4, 4);
    Vec b = a * x0;
    auto res = solve_linear(a, b);
    ASSERT_NE(res.status, SolveStatus::inconsistent);
    EXPECT_EQ(a * res.x, b);
    EXPECT_EQ(res.status == SolveStatus::unique, oracle::rank(a) == c);
  }
}

TEST(Solve, InvertibleThreeByThree) {
  Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    Mat a = random_invertible(rng, 3);
    Vec b{rng.range(-5, 5), rng.range(-5, 5), Rational(1, 3)};
    auto res = solve_linear(a, b);
    ASSERT_EQ(res.status, SolveStatus::unique);
    EXPECT_EQ(a * res.x, b);
  }
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(Mat::identity(4)), 4u);
  EXPECT_EQ(rank(Mat(3, 2)), 0u);
  EXPECT_EQ(rank(Mat::from_rows({{1, 2}, {2, 4}}, 2)), 1u);
}

TEST(Rank, MatchesOracleAndTranspose) {
  Rng rng(17);
  for (int i = 0; i < 200; ++i) {
    const std::size_t r = 1 + rng.below(6), c = 1 + rng.below(6);
    Mat a = random_matrix(rng, r, c, -2, 2);
    if (rng.coin() && r > 1)
      for (std::size_t j = 0; j < c; ++j) a(r - 1, j) = a(0, j) * 2;
    EXPECT_EQ(rank(a), oracle::rank(a));
    EXPECT_EQ(rank(a), rank(a.transpose()));
  }
}

TEST(Kernel, VectorsAreAnnihilatedAndIndependent) {
  Rng rng(23);
  for (int i = 0; i < 100; ++i) {
    const std::size_t r = 1 + rng.below(4), c = 1 + rng.below(5);
    Mat a = random_matrix(rng, r, c, -2, 2);
    auto ker = kernel(a);
    EXPECT_EQ(ker.size(), c - oracle::rank(a));
    for (const auto& v : ker) EXPECT_TRUE(is_zero(a * v));
    if (!ker.empty()) {
      EXPECT_EQ(oracle::rank(Mat::from_columns(ker, c)), ker.size());
    }
  }
}

TEST(Inverse, ProductIsIdentity) {
  Rng rng(29);
  for (int i = 0; i < 50; ++i) {
    Mat a = random_invertible(rng, 1 + rng.below(4));
    auto inv = inverse(a);
    ASSERT_TRUE(inv.has_value());
    EXPECT_EQ(a * *inv, Mat::identity(a.rows()));
  }
  EXPECT_FALSE(inverse(Mat::from_rows({{1, 2}, {2, 4}}, 2)).has_value());
  EXPECT_FALSE(inverse(Mat(2, 3)).has_value());
}

TEST(Tensor3, ApplyMatchesEntrySum) {
  Rng rng(31);
  Tensor3 t(2, 3, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 2; ++k) t(i, j, k) = rng.range(-2, 2);
  Vec u{1, -2}, w{3, 0, Rational(1, 2)};
  Vec expect(2, Rational(0));
  for (const auto& e : t.entries()) expect[e.k] += u[e.i] * w[e.j] * e.v;
  EXPECT_EQ(t.apply(u, w), expect);
  EXPECT_EQ(t.left_mult(u) * w, expect);
  EXPECT_EQ(t.right_mult(w) * u, expect);
  EXPECT_EQ(Tensor3::from_entries(2, 3, 2, t.entries()), t);
}

TEST(Kron, IndexLayout) {
  Mat a = Mat::from_rows({{1, 2}, {3, 4}}, 2);
  Mat b = Mat::from_rows({{0, 1}, {1, 0}}, 2);
  Mat k = kron(a, b);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t p = 0; p < 2; ++p)
        for (std::size_t q = 0; q < 2; ++q) EXPECT_EQ(k(i * 2 + p, j * 2 + q), a(i, j) * b(p, q));
}
