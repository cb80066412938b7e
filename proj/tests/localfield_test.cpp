#include "padicpow/localfield.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "fixtures.hpp"

namespace padicpow {
namespace {

using testing::q2;
using testing::q2_sqrt2;
using testing::q3;
using testing::q9;

TEST(MakeField, BaseField) {
  const LocalField f = q2();
  EXPECT_EQ(f.p(), 2);
  EXPECT_EQ(f.e(), 1);
  EXPECT_EQ(f.f(), 1);
  EXPECT_EQ(f.uniformizer(), f.from_int(2));
}

TEST(MakeField, EisensteinSqrt2) {
  const LocalField f = q2_sqrt2();
  EXPECT_EQ(f.e(), 2);
  EXPECT_EQ(f.f(), 1);
  EXPECT_EQ(f.uniformizer(), f.generator());
}

TEST(MakeField, UnramifiedQ9) {
  // x^2+1 has no root among the 3 residues mod 3, so a quadratic is irreducible.
  int roots = 0;
  for (int x = 0; x < 3; ++x) roots += (x * x + 1) % 3 == 0;
  ASSERT_EQ(roots, 0);
  const LocalField f = q9();
  EXPECT_EQ(f.e(), 1);
  EXPECT_EQ(f.f(), 2);
  EXPECT_EQ(f.uniformizer(), f.from_int(3));
}

TEST(MakeField, Errors) {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  EXPECT_EQ(code_of([] { make_field(4, FieldKind::Base); }), ErrorCode::NotPrime);
  EXPECT_EQ(code_of([] { make_field(2, FieldKind::Eisenstein, {Int(-4), Int(0), Int(1)}); }),
            ErrorCode::NotEisenstein);
  EXPECT_EQ(code_of([] { make_field(3, FieldKind::Eisenstein, {Int(3), Int(1), Int(1)}); }),
            ErrorCode::NotEisenstein);
  EXPECT_EQ(code_of([] { make_field(2, FieldKind::Unramified, {Int(1), Int(0), Int(1)}); }),
            ErrorCode::NotIrreducibleModP);
  EXPECT_EQ(code_of([] {
              make_tower(3, std::vector<Int>{Int(1), Int(0), Int(1)}, std::vector<Int>{Int(-3), Int(0), Int(1)});
            }),
            ErrorCode::MixedTowerUnsupported);
  EXPECT_EQ(code_of([] { make_field(3, FieldKind::Unramified, {Int(1), Int(0), Int(2)}); }), ErrorCode::InvalidField);
}

TEST(Ord, Examples) {
  EXPECT_EQ(q2().ord(q2().from_int(12)), 2);
  const LocalField f = q2_sqrt2();
  const OKElem x = Int(5) * f.pow(f.generator(), 3);
  EXPECT_EQ(f.ord(x), 3);
  EXPECT_EQ(f.ord(f.zero()), kInfiniteOrd);
  EXPECT_EQ(q9().ord(q9().zero()), kInfiniteOrd);
}

TEST(Ord, UniformizerAndP) {
  for (const LocalField& f : {q2(), q3(), q2_sqrt2(), q9()}) {
    EXPECT_EQ(f.ord(f.uniformizer()), 1);
    EXPECT_EQ(f.ord(f.from_int(f.p())), f.e());
  }
}

TEST(Ord, MultiplicativeAndUltrametric) {
  std::mt19937_64 rng(7);
  for (const LocalField& f : {q2(), q3(), q2_sqrt2(), q9()}) {
    for (int trial = 0; trial < 300; ++trial) {
      OKElem x = testing::random_elem(f, rng, 40);
      OKElem y = testing::random_elem(f, rng, 40);
      if (trial % 3 == 0) x = f.mul(x, f.pi_pow(trial % 5));
      if (x.is_zero() || y.is_zero()) continue;
      EXPECT_EQ(f.ord(f.mul(x, y)), f.ord(x) + f.ord(y));
      const OKElem s = x + y;
      const auto m = std::min(f.ord(x), f.ord(y));
      if (!s.is_zero()) EXPECT_GE(f.ord(s), m);
      if (f.ord(x) != f.ord(y)) EXPECT_EQ(f.ord(s), m);
    }
  }
}

TEST(Residues, BaseField) {
  const auto r = q2().residues(3);
  ASSERT_EQ(r.size(), 8u);
  for (int i = 0; i < 8; ++i) EXPECT_EQ(r[i], q2().from_int(i));
}

TEST(Residues, EisensteinPairwiseIncongruent) {
  const LocalField f = q2_sqrt2();
  const auto r = f.residues(5);
  ASSERT_EQ(r.size(), 32u);
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = i + 1; j < r.size(); ++j) EXPECT_LT(f.ord(r[i] - r[j]), 5);
}

TEST(Residues, UnramifiedResidueField) {
  const LocalField f = q9();
  const auto r = f.residues(1);
  ASSERT_EQ(r.size(), 9u);
  std::set<std::pair<int, int>> seen;
  for (const auto& x : r) seen.insert({static_cast<int>(x.coords[0]), static_cast<int>(x.coords[1])});
  EXPECT_EQ(seen.size(), 9u);
  EXPECT_EQ(r[4], f.from_coords({Int(1), Int(1)}));
}

TEST(Residues, CardinalityAndSeparation) {
  for (const LocalField& f : {q3(), q9(), q2_sqrt2()}) {
    for (int k = 1; k <= 2; ++k) {
      const auto r = f.residues(k);
      std::uint64_t expected = 1;
      for (int i = 0; i < f.f() * k; ++i) expected *= f.p();
      ASSERT_EQ(r.size(), expected);
      for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = i + 1; j < r.size(); ++j) EXPECT_LT(f.ord(r[i] - r[j]), k);
    }
  }
}

TEST(Residues, CapIsEnforced) {
  try {
    q2().residues(40);
    FAIL() << "expected KTooLargeForMemory";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::KTooLargeForMemory);
  }
}

TEST(Reduce, CanonicalAndCongruent) {
  std::mt19937_64 rng(11);
  for (const LocalField& f : {q2(), q3(), q2_sqrt2(), q9()}) {
    for (int k = 1; k <= 4; ++k) {
      const auto r = f.residues(k);
      std::set<std::vector<Int>> all;
      for (const auto& x : r) all.insert(x.coords);
      for (int trial = 0; trial < 60; ++trial) {
        const OKElem x = testing::random_elem(f, rng, 1000);
        const OKElem red = f.reduce(x, k);
        EXPECT_TRUE(all.contains(red.coords));
        EXPECT_GE(f.ord(x - red), k);
      }
      for (const auto& x : r) EXPECT_EQ(f.reduce(x, k), x);
    }
  }
}

TEST(Reduce, SplitValuation) {
  std::mt19937_64 rng(5);
  for (const LocalField& f : {q2(), q3(), q2_sqrt2(), q9()}) {
    for (int trial = 0; trial < 100; ++trial) {
      OKElem x = f.mul(testing::random_elem(f, rng, 300), f.pi_pow(trial % 7));
      if (x.is_zero()) continue;
      const int k = 1 + trial % 5;
      auto [v, u] = f.split_valuation(x, k);
      EXPECT_EQ(v, f.ord(x));
      EXPECT_EQ(f.ord(u), 0);
      EXPECT_GE(f.ord(x - f.mul(f.pi_pow(v), u)), v + k);
    }
  }
}

}  // namespace
}  // namespace padicpow
