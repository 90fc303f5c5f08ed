#include <gtest/gtest.h>

#include <so3zi/lattice.hpp>
#include <so3zi/spin_map.hpp>

#include "sampling.hpp"

using namespace so3zi;
using so3zi::testing::Rng;

namespace {

Mat3<Cyc8> diag3(long long a, long long b, long long c) {
  Mat3<Cyc8> m;
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  return m;
}

bool all_gauss_int(const Mat3<Cyc8>& m) {
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      if (!m(r, c).is_gauss_int()) return false;
  return true;
}

const Cyc8 kInvSqrt2(0, 1, 1);

}  // namespace

TEST(SpinMap, Examples) {
  EXPECT_EQ(conj3(CMat::identity()), Mat3<Cyc8>::identity());
  const GaussInt i{0, 1};
  EXPECT_EQ(conj3(to_cyc8(GMat{i, 0, 0, -i})), diag3(-1, -1, 1));
  EXPECT_EQ(conj3(-CMat::identity()), Mat3<Cyc8>::identity());
  EXPECT_EQ(tilde_conj(CMat{0, 0, 0, 0}), Mat3<Cyc8>{});
}

TEST(SpinMap, ExampleElementIsIntegral) {
  // (1/(1+i)) [[i,1],[i,3]]
  const Cyc8 s(1, 0, 1);
  CMat g = s * to_cyc8(GMat{GaussInt{0, 1}, 1, GaussInt{0, 1}, 3});
  Mat3<Cyc8> t = tilde_conj(g);
  EXPECT_TRUE(all_gauss_int(t));
  // a^2 = c^2 = ac = i/2, b^2 = -i/2, d^2 = -9i/2, ab = bc = 1/2, cd = ad = 3/2, bd = -3i/2
  Mat3<Cyc8> want;
  want.m = {{{Cyc8(GaussInt{0, -2}), Cyc8(-2), Cyc8(1)},
             {Cyc8(3), Cyc8(GaussInt{0, -2}), Cyc8(GaussInt{0, 2})},
             {Cyc8(GaussInt{0, -2}), Cyc8(-1), Cyc8(2)}}};
  EXPECT_EQ(t, want);
  EXPECT_EQ(t.transpose() * t, Mat3<Cyc8>::identity());
}

TEST(SpinMap, HomomorphismExact) {
  Rng rng(21);
  for (int k = 0; k < 300; ++k) {
    CMat a = so3zi::testing::random_cmat(rng, 4, 2), b = so3zi::testing::random_cmat(rng, 4, 2);
    // tilde_conj is multiplicative on all of Mat2, not only on SL2
    EXPECT_EQ(tilde_conj(a * b), tilde_conj(a) * tilde_conj(b));
    EXPECT_EQ(tilde_conj(-a), tilde_conj(a));
  }
}

TEST(SpinMap, HomomorphismNumeric) {
  Rng rng(22);
  std::uniform_real_distribution<double> u(-2, 2);
  auto rnd = [&] {
    NMat m{{u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}};
    return m;
  };
  for (int k = 0; k < 500; ++k) {
    NMat a = rnd(), b = rnd();
    auto lhs = conj3(a * b), rhs = conj3(a) * conj3(b);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) EXPECT_LE(std::abs(lhs(r, c) - rhs(r, c)), 1e-10 * (1 + std::abs(rhs(r, c))));
  }
}

TEST(SpinMap, OrthogonalOnMembers) {
  Rng rng(23);
  for (int k = 0; k < 200; ++k) {
    CMat g = so3zi::testing::random_word(rng, 6);
    Mat3<Cyc8> m = conj3(g);
    EXPECT_EQ(m.transpose() * m, Mat3<Cyc8>::identity());
    EXPECT_EQ(m.det(), Cyc8(1));
    EXPECT_TRUE(all_gauss_int(m));
  }
  // also for determinant-one matrices that are not lattice members
  for (int k = 0; k < 100; ++k) {
    Cyc8 t = so3zi::testing::random_cyc8(rng, 5, 3);
    CMat g = CMat{1, t, 0, 1} * CMat{1, 0, so3zi::testing::random_cyc8(rng, 5, 3), 1};
    Mat3<Cyc8> m = conj3(g);
    EXPECT_EQ(m.transpose() * m, Mat3<Cyc8>::identity());
    EXPECT_EQ(m.det(), Cyc8(1));
  }
}

TEST(SpinMap, Homogeneity) {
  // tilde_conj(l a) = l^2 tilde_conj(a)
  Rng rng(24);
  for (int k = 0; k < 200; ++k) {
    CMat a = so3zi::testing::random_cmat(rng, 5, 2);
    Cyc8 l = so3zi::testing::random_cyc8(rng, 3, 2);
    Mat3<Cyc8> lhs = tilde_conj(l * a), base = tilde_conj(a);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) EXPECT_EQ(lhs(r, c), l * l * base(r, c));
    // l = w has l^2 = i, a unit: integrality is preserved both ways
    Mat3<Cyc8> tw = tilde_conj(Cyc8::omega() * a);
    EXPECT_EQ(all_gauss_int(tw), all_gauss_int(base));
  }
}

TEST(SpinMap, EtaBasis) {
  EXPECT_EQ(conj_eta(CMat::identity()), Mat3<Cyc8>::identity());
  Mat3<double> id = conj_eta(RMat::identity());
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) EXPECT_DOUBLE_EQ(id(r, c), r == c ? 1.0 : 0.0);

  // (1/sqrt2) [[1,-1],[1,1]] maps to an integer matrix
  CMat g = kInvSqrt2 * to_cyc8(GMat{1, -1, 1, 1});
  Mat3<Cyc8> m = conj_eta(g);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      auto v = m(r, c).to_gauss_int();
      ASSERT_TRUE(v.has_value());
      EXPECT_EQ(v->im, 0);
    }
}

TEST(SpinMap, EtaPreservesForm) {
  // J is the Gram matrix of the trace form on the eta basis
  const Mat3<double> J = eta_gram();
  Rng rng(25);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int k = 0; k < 500; ++k) {
    double a = u(rng), b = u(rng), c = u(rng);
    if (std::abs(a) < 0.1) continue;
    RMat g{a, b, c, (1 + b * c) / a};
    Mat3<double> M = conj_eta(g);
    Mat3<double> lhs = M.transpose() * J * M;
    for (int r = 0; r < 3; ++r)
      for (int s = 0; s < 3; ++s) EXPECT_NEAR(lhs(r, s), J(r, s), 1e-9 * (1 + std::abs(M(r, s)) * std::abs(M(r, s))));
  }
}
