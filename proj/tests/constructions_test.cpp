#include "padicpow/constructions.hpp"

#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"

namespace padicpow {
namespace {

using testing::q2;
using testing::q2_sqrt2;
using testing::q3;
using testing::q5;

IntPoly P(const LocalField& f, std::initializer_list<long long> c) { return poly::from_ints(f, c); }

TEST(MakeCzNotCk, Examples) {
  EXPECT_EQ(make_cz_not_ck(q2()), P(q2(), {1, 8}));
  EXPECT_EQ(make_cz_not_ck(q3()), P(q3(), {1, 81}));
  const LocalField e = q2_sqrt2();
  // θ^5 = 4θ
  const IntPoly g = make_cz_not_ck(e);
  ASSERT_EQ(g.degree(), 1);
  EXPECT_EQ(g.coeffs[1], e.from_coords({Int(0), Int(4)}));
  EXPECT_EQ(e.ord(g.coeffs[1]), 5);
}

TEST(MakeCzNotCk, Soundness) {
  for (const LocalField& f : {q2(), q3(), q5(), q2_sqrt2()}) {
    const IntPoly g = make_cz_not_ck(f);
    EXPECT_TRUE(decide_CZ(g, f).verdict) << f.description();
    EXPECT_FALSE(decide_CK(g, f).verdict) << f.description();
  }
}

TEST(MakeCkNotPower, Examples) {
  EXPECT_EQ(make_ck_not_power(q2(), 3), P(q2(), {9, 0, 4, 0, 4}));
  EXPECT_EQ(make_ck_not_power(q3(), 2), P(q3(), {10, 0, 0, 9, 0, 0, 27, 0, 0, 27}));
  try {
    make_ck_not_power(q2(), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MTooSmall);
  }
}

TEST(MakeCkNotPower, Soundness) {
  for (const LocalField& f : {q2(), q3(), q2_sqrt2()}) {
    const std::int64_t lo = threshold_k0(f);
    for (std::int64_t m = lo; m <= lo + 2; ++m) {
      const IntPoly g = make_ck_not_power(f, m);
      EXPECT_TRUE(decide_CK(g, f).verdict) << f.description() << " m=" << m;
      EXPECT_FALSE(is_perfect_pth_power_poly(g, f)) << f.description() << " m=" << m;
      EXPECT_FALSE(resultant(g, poly::derivative(g), f).is_zero());
    }
  }
}

TEST(StabilityRadius, MotivatingExample) {
  const LocalField f = q2();
  const IntPoly g = P(f, {9, 0, 4, 0, 4});
  const Rational u = krasner_upper_bound(g, f);
  EXPECT_EQ(u, Rational(14));
  const std::int64_t M = stability_radius(g, f);
  EXPECT_EQ(M, 4 * 14 + 2 + 2);
  IntPoly h = g;
  h.coeffs[1] = h.coeffs[1] + f.pi_pow(M + 1);
  EXPECT_TRUE(decide_CK(h, f).verdict);
}

TEST(StabilityRadius, Errors) {
  const LocalField f = q2();
  try {
    stability_radius(P(f, {-3, 0, 1}), f);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PreconditionNotMember);
  }
  try {
    stability_radius(P(f, {-17, 0, 1}), f);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PreconditionRootInField);
  }
}

TEST(StabilityRadius, RandomPerturbations) {
  std::mt19937_64 rng(3);
  for (const LocalField& f : {q2(), q3()}) {
    const IntPoly g = make_ck_not_power(f, threshold_k0(f));
    const std::int64_t M = stability_radius(g, f);
    for (int i = 0; i < 5; ++i) {
      IntPoly h = g;
      for (auto& c : h.coeffs) c = c + f.mul(f.pi_pow(M + 1), testing::random_elem(f, rng, 5));
      EXPECT_TRUE(decide_CK(h, f).verdict);
    }
  }
}

TEST(StabilityRadius, RootedMemberIsFragile) {
  // x^2 is in C(Q_2) but x^2 − 2^{2k}·5 has no root and 5·4^k is not a square
  const LocalField f = q2();
  EXPECT_TRUE(decide_CK(P(f, {0, 0, 1}), f).verdict);
  EXPECT_FALSE(decide_CK(P(f, {-5 * 16, 0, 1}), f).verdict);
}

void expect_approximates(const IntPoly& f, const IntPoly& g, const LocalField& field, std::int64_t n) {
  for (const auto& a : field.residues(n + threshold_k0(field))) {
    const OKElem d = poly::eval(f, a, field) - field.pow(poly::eval(g, a, field), field.p());
    EXPECT_GE(field.ord(d), n) << poly::to_string(g) << " at " << a.str();
  }
}

TEST(Approximate, Examples) {
  const LocalField f2 = q2();
  const IntPoly a = P(f2, {9, 0, 4, 0, 4});
  expect_approximates(a, approximate_on_integers(a, f2, 3), f2, 3);
  const IntPoly b = P(f2, {1, 8});
  expect_approximates(b, approximate_on_integers(b, f2, 2), f2, 2);
  const LocalField f3 = q3();
  const IntPoly c = P(f3, {1, 27});
  expect_approximates(c, approximate_on_integers(c, f3, 3), f3, 3);
}

TEST(Approximate, HigherOrders) {
  const LocalField f2 = q2();
  const IntPoly a = P(f2, {9, 0, 4, 0, 4});
  for (std::int64_t n = 1; n <= 7; ++n) expect_approximates(a, approximate_on_integers(a, f2, n), f2, n);
  const LocalField f3 = q3();
  const IntPoly c = make_ck_not_power(f3, 2);
  for (std::int64_t n = 1; n <= 4; ++n) expect_approximates(c, approximate_on_integers(c, f3, n), f3, n);
}

TEST(Approximate, Errors) {
  const LocalField f2 = q2();
  try {
    approximate_on_integers(P(f2, {3, 0, 1}), f2, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PreconditionNotMember);
  }
  try {
    approximate_on_integers(P(q2_sqrt2(), {1}), q2_sqrt2(), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidField);
  }
}

}  // namespace
}  // namespace padicpow
