#include "padicpow/powerclasses.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "fixtures.hpp"

namespace padicpow {
namespace {

using testing::q2;
using testing::q2_sqrt2;
using testing::q3;
using testing::q5;
using testing::q9;

TEST(Threshold, Values) {
  EXPECT_EQ(threshold_k0(q2()), 3);
  EXPECT_EQ(threshold_k0(q3()), 2);
  EXPECT_EQ(threshold_k0(q2_sqrt2()), 5);
  EXPECT_EQ(threshold_k0(q5()), 2);
}

TEST(IsPthPower, Examples) {
  const LocalField f2 = q2(), f3 = q3();
  EXPECT_FALSE(is_pth_power(f2.from_int(2), f2));
  // Odd squares modulo 8 are all 1; 17 ≡ 1.
  std::set<int> odd_squares;
  for (int c : {1, 3, 5, 7}) odd_squares.insert(c * c % 8);
  ASSERT_EQ(odd_squares, std::set<int>{1});
  EXPECT_TRUE(is_pth_power(f2.from_int(17), f2));
  // Cubes of units modulo 9.
  std::set<int> cubes;
  for (int c = 1; c < 9; ++c)
    if (c % 3) cubes.insert(c * c * c % 9);
  ASSERT_EQ(cubes, (std::set<int>{1, 8}));
  EXPECT_TRUE(is_pth_power(f3.from_int(10), f3));
  EXPECT_FALSE(is_pth_power(f3.from_int(2), f3));
  EXPECT_TRUE(is_pth_power(f3.zero(), f3));
  EXPECT_TRUE(is_pth_power(f3.from_int(-27), f3));
  EXPECT_FALSE(is_pth_power(f2.from_int(-1), f2));
  const LocalField e = q2_sqrt2();
  EXPECT_TRUE(is_pth_power(e.from_int(2), e));
  EXPECT_FALSE(is_pth_power(e.generator(), e));
}

TEST(SameClass, Examples) {
  const LocalField f3 = q3();
  EXPECT_TRUE(same_class(f3.from_int(2), f3.from_int(54), f3));
  // 2·4² = 32 ≡ 5 (mod 9), not a unit cube.
  ASSERT_EQ(32 % 9, 5);
  EXPECT_FALSE(same_class(f3.from_int(2), f3.from_int(4), f3));
  EXPECT_TRUE(same_class(f3.from_int(7), f3.from_int(7), f3));
  EXPECT_THROW(same_class(f3.zero(), f3.one(), f3), Error);
}

TEST(EnumerateClasses, ArtinCounts) {
  EXPECT_EQ(enumerate_classes(q2()).size(), 8u);
  EXPECT_EQ(enumerate_classes(q3()).size(), 9u);
  EXPECT_EQ(enumerate_classes(q5()).size(), 25u);
  EXPECT_EQ(enumerate_classes(q2_sqrt2()).size(), 16u);
  EXPECT_EQ(enumerate_classes(q9()).size(), 27u);
}

TEST(EnumerateClasses, Q3RepresentativesMatchFan) {
  const LocalField f = q3();
  std::vector<Int> reps;
  for (const auto& c : enumerate_classes(f)) reps.push_back(c.rep.coords[0]);
  EXPECT_EQ(reps, (std::vector<Int>{1, 2, 4, 3, 6, 12, 9, 18, 36}));
  EXPECT_EQ(enumerate_classes(f).front().rep, f.one());
}

TEST(EnumerateClasses, FanLabelsPairwiseDistinct) {
  const LocalField f = q3();
  const PowerClassSystem sys(f);
  const std::vector<int> labels{1, 2, 3, 4, 6, 9, 12, 18, 36};
  std::set<std::size_t> hit;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      EXPECT_FALSE(same_class(f.from_int(labels[i]), f.from_int(labels[j]), f));
    hit.insert(sys.class_index(f.from_int(labels[i])));
  }
  EXPECT_EQ(hit.size(), 9u);
}

TEST(Properties, EquivalenceRelation) {
  std::mt19937_64 rng(3);
  for (const LocalField& f : {q2(), q3(), q2_sqrt2(), q9()}) {
    const PthPowerTest t(f);
    const PowerClassSystem sys(f);
    for (int trial = 0; trial < 150; ++trial) {
      OKElem x = testing::random_elem(f, rng, 30), y = testing::random_elem(f, rng, 30),
             z = testing::random_elem(f, rng, 30);
      if (x.is_zero() || y.is_zero() || z.is_zero()) continue;
      EXPECT_TRUE(t.same_class(x, x));
      EXPECT_EQ(t.same_class(x, y), t.same_class(y, x));
      if (t.same_class(x, y) && t.same_class(y, z)) EXPECT_TRUE(t.same_class(x, z));
      EXPECT_EQ(t.same_class(x, y), sys.class_index(x) == sys.class_index(y));
      EXPECT_EQ(t(x), t.same_class(x, f.one()));
      const OKElem tp = f.pow(z, f.p());
      EXPECT_TRUE(t.same_class(x, f.mul(x, tp)));
      EXPECT_TRUE(t.same_class(x, sys.class_of(x).rep));
    }
  }
}

TEST(Properties, OnePlusHighPowerIsPthPower) {
  for (const LocalField& f : {q2(), q3(), q5(), q2_sqrt2(), q9()}) {
    const std::int64_t k0 = threshold_k0(f);
    const PthPowerTest t(f);
    for (const auto& u : f.residues(k0 + 2)) {
      if (!f.congruent(u, f.one(), k0)) continue;
      EXPECT_TRUE(t(u)) << u.str();
    }
  }
}

}  // namespace
}  // namespace padicpow
