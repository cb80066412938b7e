#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "padicpow/localfield.hpp"

namespace padicpow {

/// ⌊e·p/(p−1)⌋ + 1: the smallest k with 1 + 𝔭^k inside the p-th powers.
inline std::int64_t threshold_k0(const LocalField& field) {
  return (field.e() * field.p()) / (field.p() - 1) + 1;
}

/// Canonical representative π^j·u of a coset x·K^{×p}.
struct PowerClassId {
  OKElem rep;
  std::size_t index = 0;

  friend bool operator==(const PowerClassId& a, const PowerClassId& b) { return a.rep == b.rep; }
};

/// Table of unit p-th powers modulo 𝔭^{k0}. Two units congruent modulo 𝔭^{k0}
/// lie in the same coset, so membership is a lookup on the reduced unit part.
class PthPowerTest {
 public:
  explicit PthPowerTest(const LocalField& field) : field_(field), k0_(threshold_k0(field)) {
    const std::int64_t p = field.p();
    for (const auto& c : field.residues(k0_)) {
      if (field.ord(c) != 0) continue;
      powers_.insert(field.reduce(field.pow(c, p), k0_));
    }
  }

  const LocalField& field() const { return field_; }
  std::int64_t k0() const { return k0_; }

  bool operator()(const OKElem& x) const {
    if (x.is_zero()) return true;
    auto [v, u] = field_.split_valuation(x, k0_);
    if (v % field_.p() != 0) return false;
    return powers_.contains(u);
  }

  bool same_class(const OKElem& x, const OKElem& y) const {
    if (x.is_zero() || y.is_zero()) throw Error(ErrorCode::ZeroArgument, "same_class needs nonzero arguments");
    return (*this)(field_.mul(x, field_.pow(y, field_.p() - 1)));
  }

 private:
  LocalField field_;
  std::int64_t k0_;
  std::unordered_set<OKElem, OKElemHash> powers_;
};

inline bool is_pth_power(const OKElem& x, const LocalField& field) { return PthPowerTest(field)(x); }

inline bool same_class(const OKElem& x, const OKElem& y, const LocalField& field) {
  return PthPowerTest(field).same_class(x, y);
}

/// The finite group K^×/(K^×)^p with a constant-time class lookup.
class PowerClassSystem {
 public:
  explicit PowerClassSystem(const LocalField& field) : test_(field) {
    const std::int64_t k0 = test_.k0();
    std::vector<OKElem> unit_reps;
    for (const auto& u : field.residues(k0)) {
      if (field.ord(u) != 0) continue;
      std::size_t cls = unit_reps.size();
      for (std::size_t i = 0; i < unit_reps.size(); ++i) {
        if (test_.same_class(u, unit_reps[i])) {
          cls = i;
          break;
        }
      }
      if (cls == unit_reps.size()) unit_reps.push_back(u);
      unit_class_.emplace(u, cls);
    }
    unit_classes_ = unit_reps.size();
    const std::int64_t p = field.p();
    for (std::int64_t j = 0; j < p; ++j) {
      const OKElem pij = field.pi_pow(j);
      for (const auto& u : unit_reps) classes_.push_back({field.mul(pij, u), classes_.size()});
    }
    std::uint64_t ef1 = 1;
    for (int i = 0; i < field.e() * field.f() + 1; ++i) ef1 *= static_cast<std::uint64_t>(p);
    if (classes_.size() != ef1 && classes_.size() != ef1 * static_cast<std::uint64_t>(p))
      throw Error(ErrorCode::ArtinCountViolation,
                  "found " + std::to_string(classes_.size()) + " classes, expected p^(ef+1) or p^(ef+2)");
  }

  const LocalField& field() const { return test_.field(); }
  const PthPowerTest& pth_power_test() const { return test_; }
  const std::vector<PowerClassId>& classes() const { return classes_; }
  std::size_t unit_class_count() const { return unit_classes_; }

  /// Index of the class of x ≠ 0 in classes().
  std::size_t class_index(const OKElem& x) const {
    auto [v, u] = field().split_valuation(x, test_.k0());
    const std::size_t j = static_cast<std::size_t>(v % field().p());
    return j * unit_classes_ + unit_class_.at(u);
  }

  const PowerClassId& class_of(const OKElem& x) const { return classes_[class_index(x)]; }

 private:
  PthPowerTest test_;
  std::vector<PowerClassId> classes_;
  std::unordered_map<OKElem, std::size_t, OKElemHash> unit_class_;
  std::size_t unit_classes_ = 0;
};

inline std::vector<PowerClassId> enumerate_classes(const LocalField& field) {
  return PowerClassSystem(field).classes();
}

}  // namespace padicpow
