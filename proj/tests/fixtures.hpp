#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "padicpow/localfield.hpp"

namespace padicpow::testing {

inline LocalField q2() { return make_field(2, FieldKind::Base); }
inline LocalField q3() { return make_field(3, FieldKind::Base); }
inline LocalField q5() { return make_field(5, FieldKind::Base); }
/// Q_2(√2): θ² = 2.
inline LocalField q2_sqrt2() { return make_field(2, FieldKind::Eisenstein, {Int(-2), Int(0), Int(1)}); }
/// Q_9: θ² = -1 over Q_3.
inline LocalField q9() { return make_field(3, FieldKind::Unramified, {Int(1), Int(0), Int(1)}); }

inline OKElem random_elem(const LocalField& field, std::mt19937_64& rng, std::int64_t bound) {
  std::uniform_int_distribution<std::int64_t> dist(-bound, bound);
  OKElem x = field.zero();
  for (auto& c : x.coords) c = dist(rng);
  return x;
}

}  // namespace padicpow::testing
