#include <gtest/gtest.h>

#include <so3zi/cyc8.hpp>

#include "sampling.hpp"

#include <cmath>

using namespace so3zi;
using so3zi::testing::Rng;

TEST(Cyc8, Normalization) {
  EXPECT_EQ(Cyc8(GaussInt{1, 1}, 0, 1), Cyc8(1));
  EXPECT_EQ(Cyc8(2, GaussInt{0, 2}, 3), Cyc8(GaussInt{0, -1}, 1, 1));  // 2 = -i(1+i)^2
  Cyc8 x(3, 1, 4);
  EXPECT_EQ(x.k(), 4);
  EXPECT_EQ(Cyc8(0, 0, 7).k(), 0);
  EXPECT_TRUE(Cyc8(GaussInt{1, 1}, 0, 1).is_gauss_int());
  EXPECT_FALSE(Cyc8(1, 0, 1).is_gauss_int());
  EXPECT_FALSE(Cyc8::omega().is_gauss_int());
}

TEST(Cyc8, Constants) {
  const Cyc8 w = Cyc8::omega();
  EXPECT_EQ(w * w, Cyc8(GaussInt{0, 1}));
  EXPECT_EQ(Cyc8::omega_pow(8), Cyc8(1));
  EXPECT_EQ(Cyc8::omega_pow(-1) * w, Cyc8(1));
  EXPECT_EQ(Cyc8::omega_pow(-1), Cyc8(0, GaussInt{0, -1}));
  EXPECT_EQ(Cyc8::sqrt2() * Cyc8::sqrt2(), Cyc8(2));
  const Cyc8 inv_sqrt2(0, 1, 1);
  EXPECT_EQ(inv_sqrt2 * Cyc8::sqrt2(), Cyc8(1));
  EXPECT_EQ(inv_sqrt2 * inv_sqrt2 * Cyc8(2), Cyc8(1));
  EXPECT_NEAR(Cyc8::sqrt2().to_complex().real(), std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(Cyc8::sqrt2().to_complex().imag(), 0.0, 1e-15);
  EXPECT_EQ(Cyc8::one_plus_i_pow(-2) * Cyc8::one_plus_i_pow(2), Cyc8(1));
}

TEST(Cyc8, MatchesFloatingPoint) {
  Rng rng(11);
  for (int k = 0; k < 2000; ++k) {
    Cyc8 x = so3zi::testing::random_cyc8(rng, 20, 4), y = so3zi::testing::random_cyc8(rng, 20, 4);
    auto xn = x.to_complex(), yn = y.to_complex();
    auto check = [](std::complex<double> got, std::complex<double> want) {
      EXPECT_LE(std::abs(got - want), 1e-12 * std::max(1.0, std::abs(want)));
    };
    check((x * y).to_complex(), xn * yn);
    check((x + y).to_complex(), xn + yn);
    check((x - y).to_complex(), xn - yn);
  }
}

TEST(Cyc8, RingLaws) {
  Rng rng(12);
  for (int k = 0; k < 500; ++k) {
    Cyc8 x = so3zi::testing::random_cyc8(rng, 9, 3), y = so3zi::testing::random_cyc8(rng, 9, 3),
         z = so3zi::testing::random_cyc8(rng, 9, 3);
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * y, y * x);
    EXPECT_TRUE((x - x).is_zero());
  }
}
