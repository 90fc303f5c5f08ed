#include <gtest/gtest.h>

#include <so3zi/number_theory.hpp>
#include <so3zi/residues.hpp>

#include "sampling.hpp"

#include <set>

using namespace so3zi;
using so3zi::testing::Rng;

namespace {

// congruence mod (1+i)^n by exact division, independent of reduce_mod
bool congruent_by_division(const GaussInt& x, const GaussInt& y, int n) {
  return (x - y).divisible_by(pow(GaussInt{1, 1}, static_cast<unsigned>(n)));
}

std::set<GaussInt, GaussIntLess> as_set(const std::vector<GaussInt>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(Residues, SmallSystems) {
  EXPECT_EQ(residue_reps(1).reps, (std::vector<GaussInt>{0, 1}));
  EXPECT_EQ(residue_reps(2).reps, (std::vector<GaussInt>{0, 1, GaussInt{0, 1}, GaussInt{1, 1}}));
  EXPECT_EQ(residue_reps(3).reps.size(), 8u);
  EXPECT_THROW(residue_reps(0), std::invalid_argument);
}

TEST(Residues, CompleteAndPairwiseDistinct) {
  for (int n = 1; n <= 8; ++n) {
    auto reps = residue_reps(n).reps;
    ASSERT_EQ(reps.size(), size_t(1) << n);
    for (size_t a = 0; a < reps.size(); ++a)
      for (size_t b = a + 1; b < reps.size(); ++b)
        ASSERT_FALSE(congruent_by_division(reps[a], reps[b], n)) << n;
  }
}

TEST(Residues, ReduceMod) {
  EXPECT_EQ(reduce_mod(5, 2), GaussInt(1));
  EXPECT_EQ(reduce_mod(0, 5), GaussInt(0));
  EXPECT_EQ(reduce_mod(GaussInt{0, 1}, 1), GaussInt(1));
  Rng rng(7);
  for (int n = 1; n <= 10; ++n) {
    auto reps = as_set(residue_reps(n).reps);
    for (int k = 0; k < 300; ++k) {
      GaussInt x = so3zi::testing::random_gauss(rng, 5000);
      GaussInt r = reduce_mod(x, n);
      EXPECT_TRUE(reps.count(r)) << r.to_string();
      EXPECT_TRUE(congruent_by_division(x, r, n));
    }
  }
}

TEST(Residues, GeneralModulus) {
  Rng rng(8);
  for (int k = 0; k < 500; ++k) {
    GaussInt y = so3zi::testing::random_nonzero_gauss(rng, 9);
    GaussInt x = so3zi::testing::random_gauss(rng, 200);
    GaussInt r = reduce_mod_general(x, y);
    EXPECT_TRUE((x - r).divisible_by(y));
    EXPECT_EQ(reduce_mod_general(r, y), r);
    EXPECT_EQ(reduce_mod_general(x + GaussInt{3, -2} * y, y), r);
    if (one_plus_i_power(y) < 0) {
      // minimal norm in the class
      for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b) EXPECT_LE(r.norm(), (r + GaussInt{a, b} * y).norm());
    }
  }
  EXPECT_EQ(reduce_mod_general(5, 2), GaussInt(1));
  EXPECT_EQ(reduce_mod_general(7, 1), GaussInt(0));
  EXPECT_EQ(one_plus_i_power(GaussInt{0, 2}), 2);
  EXPECT_EQ(one_plus_i_power(3), -1);
}

TEST(UnitGroup, Sizes) {
  EXPECT_EQ(unit_group(1), (std::vector<GaussInt>{1}));
  EXPECT_EQ(unit_group(2), (std::vector<GaussInt>{1, GaussInt{0, 1}}));
  for (int n = 1; n <= 10; ++n) {
    auto u = unit_group(n);
    EXPECT_EQ(u.size(), size_t(1) << (n - 1));
    for (auto& x : u) EXPECT_EQ(ord({1, 1}, x), 0);
  }
}

TEST(SquareKernel, Tables) {
  EXPECT_EQ(sq_kernel(2), (std::vector<GaussInt>{1, GaussInt{0, 1}}));
  EXPECT_EQ(sq_kernel(3), (std::vector<GaussInt>{1, 3}));
  EXPECT_EQ(sq_kernel(4), (std::vector<GaussInt>{1, 3, GaussInt{1, 2}, GaussInt{3, 2}}));
  EXPECT_THROW(sq_kernel(1), std::invalid_argument);
}

TEST(SquareKernel, BruteForce) {
  for (int n = 2; n <= 10; ++n) {
    std::vector<GaussInt> brute;
    for (auto& u : residue_reps(n).reps)
      if (u.norm() % 2 == 1 && congruent_by_division(u * u, 1, n)) brute.push_back(u);
    EXPECT_EQ(sq_kernel(n), brute) << n;
  }
}

TEST(RootSection, Values) {
  const GaussInt i{0, 1};
  EXPECT_EQ(rt(2, 1), GaussInt(1));
  EXPECT_EQ(rt(3, 1), GaussInt(1));
  EXPECT_EQ(rt(3, 3), i);
  EXPECT_EQ(rt(4, 1), GaussInt(1));
  EXPECT_EQ(rt(4, 3), i);
  EXPECT_THROW(rt(3, i), std::invalid_argument);
  EXPECT_THROW(rt(5, 1), std::invalid_argument);
  for (int n = 2; n <= 4; ++n) {
    // every square unit has a root, and rt is a section of squaring
    for (auto& u : unit_group(n)) {
      GaussInt q = reduce_mod(u * u, n);
      GaussInt r = rt(n, q);
      EXPECT_TRUE(congruent_by_division(r * r, q, n));
    }
  }
}
