#include <gtest/gtest.h>

#include <random>

#include "latmono/exact.hpp"

using namespace latmono;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int bound) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<long>(rng() % (2 * bound + 1)) - bound;
  return m;
}

}  // namespace

TEST(Smith, D4Gram) {
  const IntMatrix g{{-2, 0, 1, 0}, {0, -2, 1, 0}, {1, 1, -2, 1}, {0, 0, 1, -2}};
  const SmithForm s = smith_normal_form(g);
  EXPECT_EQ(s.invariant_factors(), (IntVector{1, 1, 2, 2}));
  EXPECT_EQ(s.U * g * s.V, s.D);
  EXPECT_TRUE(is_unimodular(s.U));
  EXPECT_TRUE(is_unimodular(s.V));
}

TEST(Smith, RankDeficient) {
  const IntMatrix m{{2, 4}, {4, 8}};
  const SmithForm s = smith_normal_form(m);
  EXPECT_EQ(s.rank(), 1u);
  EXPECT_EQ(s.invariant_factors(), (IntVector{2, 0}));
}

TEST(Smith, RandomMatricesDivisibilityChain) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + rng() % 5;
    const std::size_t c = 1 + rng() % 5;
    const IntMatrix m = random_matrix(rng, r, c, 9);
    const SmithForm s = smith_normal_form(m);
    ASSERT_EQ(s.U * m * s.V, s.D);
    const IntVector f = s.invariant_factors();
    for (std::size_t i = 0; i + 1 < f.size(); ++i)
      if (f[i] != 0) EXPECT_EQ(f[i + 1] % f[i], 0);
    if (r == c) {
      Integer prod = 1;
      for (const auto& x : f) prod *= x;
      EXPECT_EQ(prod, Integer(abs(determinant(m))));
    }
  }
}

TEST(Determinant, SmallCases) {
  EXPECT_EQ(determinant(IntMatrix{{1, 2}, {3, 4}}), -2);
  EXPECT_EQ(determinant(IntMatrix::identity(6)), 1);
  EXPECT_EQ(determinant(IntMatrix{{0, 1}, {1, 0}}), -1);
}

TEST(Determinant, Multiplicative) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const IntMatrix a = random_matrix(rng, 4, 4, 5);
    const IntMatrix b = random_matrix(rng, 4, 4, 5);
    EXPECT_EQ(determinant(a * b), determinant(a) * determinant(b));
  }
}

TEST(Signature, Diagonal) {
  IntMatrix d(4, 4);
  d(0, 0) = 3;
  d(1, 1) = -1;
  d(2, 2) = -5;
  EXPECT_EQ(signature(d), (Signature{1, 2, 1}));
}

TEST(Signature, CongruenceInvariant) {
  std::mt19937 rng(3);
  const IntMatrix g{{2, 1, 0}, {1, -2, 1}, {0, 1, -4}};
  const Signature base = signature(g);
  for (int trial = 0; trial < 20; ++trial) {
    const IntMatrix p = random_matrix(rng, 3, 3, 3);
    if (determinant(p) == 0) continue;
    EXPECT_EQ(signature(p.transpose() * g * p), base);
  }
}

TEST(Inverse, RoundTrip) {
  const IntMatrix m{{2, 1}, {1, 1}};
  EXPECT_EQ(inverse(m) * to_rational(m), RatMatrix::identity(2));
  EXPECT_THROW(inverse(IntMatrix{{1, 2}, {2, 4}}), std::domain_error);
}

TEST(Kernel, SpansSolutions) {
  const IntMatrix a{{1, 2, 3}, {2, 4, 6}};
  const IntMatrix k = integer_kernel(a);
  EXPECT_EQ(k.cols(), 2u);
  EXPECT_TRUE((a * k).is_zero());
}

TEST(Solve, Rational) {
  const RatMatrix a = to_rational(IntMatrix{{2, 0}, {0, 4}});
  const RatMatrix b = to_rational(IntMatrix{{1}, {1}});
  const auto x = solve_rational(a, b);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)(0, 0), Rational(1, 2));
  EXPECT_EQ((*x)(1, 0), Rational(1, 4));
  EXPECT_FALSE(solve_rational(to_rational(IntMatrix{{1}, {1}}), to_rational(IntMatrix{{1}, {2}})).has_value());
  EXPECT_THROW(solve_rational(to_rational(IntMatrix{{1, 1}, {1, 1}}), b), std::invalid_argument);
}
