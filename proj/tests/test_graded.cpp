#include <gtest/gtest.h>

#include "l2b/errors.hpp"
#include "l2b/graded.hpp"
#include "l2b/random.hpp"

using namespace l2b;

namespace {

// Koszul differential written per basis vector of C (x) D.
ThreeTermComplex koszul_oracle(const TwoTermComplex& c, const TwoTermComplex& d) {
  ThreeTermComplex t;
  t.m2 = c.n1 * d.n1;
  t.m1 = c.n0 * d.n1 + c.n1 * d.n0;
  t.m0 = c.n0 * d.n0;
  t.d2 = Mat(t.m1, t.m2);
  t.d1 = Mat(t.m0, t.m1);
  const std::size_t off = c.n0 * d.n1;
  for (std::size_t a = 0; a < c.n1; ++a)
    for (std::size_t b = 0; b < d.n1; ++b) {
      // f_a (x) f_b -> d f_a (x) f_b + f_a (x) d f_b (the sign (-1)^{-1+1} is +).
      for (std::size_t i = 0; i < c.n0; ++i) t.d2(i * d.n1 + b, a * d.n1 + b) += c.d(i, a);
      for (std::size_t j = 0; j < d.n0; ++j) t.d2(off + a * d.n0 + j, a * d.n1 + b) += d.d(j, b);
    }
  for (std::size_t x = 0; x < c.n0; ++x)
    for (std::size_t b = 0; b < d.n1; ++b)
      // e_x (x) f_b -> (-1)^{0+1} e_x (x) d f_b
      for (std::size_t j = 0; j < d.n0; ++j) t.d1(x * d.n0 + j, x * d.n1 + b) -= d.d(j, b);
  for (std::size_t a = 0; a < c.n1; ++a)
    for (std::size_t y = 0; y < d.n0; ++y)
      for (std::size_t i = 0; i < c.n0; ++i) t.d1(i * d.n0 + y, off + a * d.n0 + y) += c.d(i, a);
  return t;
}

}  // namespace

TEST(Complex, RejectsWrongShape) {
  EXPECT_THROW(TwoTermComplex(2, 1, Mat(1, 2)), ShapeError);
}

TEST(DualComplex, Examples) {
  auto one = dual_complex(TwoTermComplex(1, 1, Mat::identity(1)));
  EXPECT_EQ(one, TwoTermComplex(1, 1, Mat::identity(1)));
  auto two = dual_complex(TwoTermComplex(2, 1, Mat::from_rows({{1}, {0}}, 1)));
  EXPECT_EQ(two, TwoTermComplex(1, 2, Mat::from_rows({{1, 0}}, 2)));
}

TEST(DualComplex, Involution) {
  Rng rng(1);
  for (int i = 0; i < 50; ++i) {
    auto c = random_complex(rng, rng.below(4), rng.below(4));
    EXPECT_EQ(dual_complex(dual_complex(c)), c);
  }
}

TEST(TensorComplex, ZeroDifferentials) {
  TwoTermComplex c(2, 1);
  auto t = tensor_complex(c, c);
  EXPECT_TRUE(t.d1.is_zero());
  EXPECT_TRUE(t.d2.is_zero());
}

TEST(TensorComplex, MixedBasisSigns) {
  TwoTermComplex c(1, 1, Mat::identity(1));
  auto t = tensor_complex(c, c);
  // e(x)f -> -e(x)e, f(x)e -> e(x)e
  EXPECT_EQ(t.d1, Mat::from_rows({{-1, 1}}, 2));
  EXPECT_EQ(t.d2, Mat::from_rows({{1}, {1}}, 1));
  auto f = tensor_complex(c, c, true);
  EXPECT_EQ(f.d1, Mat::from_rows({{1, 1}}, 2));
}

TEST(TensorComplex, SquareZeroAndMatchesOracle) {
  Rng rng(2);
  for (int i = 0; i < 100; ++i) {
    auto c = random_complex(rng, rng.below(4), rng.below(4));
    auto d = random_complex(rng, rng.below(4), rng.below(4));
    auto t = tensor_complex(c, d);
    auto o = koszul_oracle(c, d);
    EXPECT_EQ(t.d1, o.d1);
    EXPECT_EQ(t.d2, o.d2);
    EXPECT_TRUE((t.d1 * t.d2).is_zero());
    EXPECT_TRUE((tensor_complex(c, d, true).d1 * tensor_complex(c, d, true).d2).is_zero());
  }
}

TEST(ChainMap, IdentityPasses) {
  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    auto c = random_complex(rng, rng.below(4), rng.below(4));
    EXPECT_TRUE(is_chain_map(c, c, {Mat::identity(c.n0), Mat::identity(c.n1)}));
  }
}

TEST(ChainMap, ZeroThenIdentityFailsWithMinusD) {
  TwoTermComplex c(2, 1, Mat::from_rows({{1}, {2}}, 1));
  Report r = check_chain_map(c, c, {Mat(2, 2), Mat::identity(1)});
  ASSERT_FALSE(r.pass());
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].law, "chain");
  EXPECT_EQ(r.violations[0].residual, (Vec{-1, -2}));
}

TEST(ChainMap, RandomPairsAgreeWithDirectEvaluation) {
  Rng rng(4);
  for (int i = 0; i < 100; ++i) {
    auto c = random_complex(rng, 1 + rng.below(3), 1 + rng.below(3));
    auto cp = random_complex(rng, 1 + rng.below(3), 1 + rng.below(3));
    ChainMapPair f = rng.coin() ? random_chain_map(rng, c, cp)
                                : ChainMapPair{random_matrix(rng, cp.n0, c.n0, -1, 1),
                                               random_matrix(rng, cp.n1, c.n1, -1, 1)};
    bool direct = true;
    for (std::size_t i0 = 0; i0 < cp.n0; ++i0)
      for (std::size_t j = 0; j < c.n1; ++j) {
        Rational lhs = 0, rhs = 0;
        for (std::size_t k = 0; k < c.n0; ++k) lhs += f.f0(i0, k) * c.d(k, j);
        for (std::size_t k = 0; k < cp.n1; ++k) rhs += cp.d(i0, k) * f.f1(k, j);
        if (lhs != rhs) direct = false;
      }
    EXPECT_EQ(is_chain_map(c, cp, f), direct);
  }
}
