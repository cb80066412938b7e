#include "padicpow/oracle.hpp"

#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "padicpow/decide.hpp"

namespace padicpow {
namespace {

using testing::q2;
using testing::q2_sqrt2;
using testing::q3;
using testing::q9;

std::vector<OKElem> C(const LocalField& f, std::initializer_list<long long> c) {
  std::vector<OKElem> out;
  for (long long v : c) out.push_back(f.from_int(v));
  return out;
}

TEST(OracleIsPthPower, Examples) {
  const LocalField f = q2();
  ASSERT_EQ(49 % 32, 17);
  EXPECT_TRUE(oracle_is_pth_power(f.from_int(17), f, 5));
  EXPECT_FALSE(oracle_is_pth_power(f.from_int(5), f, 5));
  for (const LocalField& g : {q2(), q3(), q2_sqrt2(), q9()})
    EXPECT_TRUE(oracle_is_pth_power(g.one(), g, threshold_k0(g)));
}

TEST(OracleIsPthPower, AgreesWithLookupAcrossDepths) {
  std::mt19937_64 rng(11);
  for (const LocalField& f : {q2(), q3(), q2_sqrt2(), q9()}) {
    const std::int64_t k0 = threshold_k0(f);
    const PthPowerTest fast(f);
    for (std::int64_t depth = k0; depth <= k0 + 2; ++depth) {
      const OracleTable table(f, depth);
      for (int i = 0; i < 150; ++i) {
        const OKElem x = testing::random_elem(f, rng, 60);
        if (x.is_zero()) continue;
        EXPECT_EQ(table.is_pth_power(x), fast(x)) << x.str() << " depth " << depth;
      }
    }
  }
}

TEST(OracleDecide, Examples) {
  const LocalField f = q2();
  EXPECT_TRUE(oracle_decide(C(f, {1, 8}), f, 5));
  EXPECT_FALSE(oracle_decide(C(f, {2}), f, 3));
  EXPECT_TRUE(oracle_decide(C(f, {36, 0, 16, 0, 16}), f, 6));
}

TEST(OracleDecide, DepthStability) {
  const LocalField f = q3();
  const std::vector<OKElem> g = C(f, {40, 0, 0, 54, 0, 0, 54, 0, 0, 27});
  const auto rep = decide_CZ(IntPoly{g}, f);
  for (std::int64_t d = rep.final_m + rep.M; d <= rep.final_m + rep.M + 2; ++d)
    EXPECT_EQ(oracle_decide(g, f, d), rep.verdict) << d;
}

}  // namespace
}  // namespace padicpow
