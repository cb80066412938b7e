#pragma once

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "padicpow/localfield.hpp"

// Brute-force references. Nothing here depends on the power-class, root or
// decision code; only LocalField arithmetic is shared.
namespace padicpow {

/// Every unit p-th power modulo 𝔭^depth, found by raising all residues.
class OracleTable {
 public:
  OracleTable(const LocalField& field, std::int64_t depth) : field_(field), depth_(depth) {
    for (const auto& c : field.residues(depth)) {
      if (field.ord(c) != 0) continue;
      powers_.insert(field.reduce(field.pow(c, field.p()), depth));
    }
  }

  std::int64_t depth() const { return depth_; }

  bool is_pth_power(const OKElem& x) const {
    if (x.is_zero()) return true;
    auto [v, u] = field_.split_valuation(x, depth_);
    if (v % field_.p() != 0) return false;
    return powers_.contains(u);
  }

 private:
  LocalField field_;
  std::int64_t depth_;
  std::unordered_set<OKElem, OKElemHash> powers_;
};

/// Exhaustive p-th power test at precision 𝔭^depth; depth must be at least
/// ⌊ep/(p−1)⌋ + 1 for the answer to be exact.
inline bool oracle_is_pth_power(const OKElem& x, const LocalField& field, std::int64_t depth) {
  return OracleTable(field, depth).is_pth_power(x);
}

namespace detail {

inline OKElem oracle_eval(const std::vector<OKElem>& coeffs, const OKElem& a, const LocalField& field) {
  OKElem r = field.zero();
  for (std::size_t i = coeffs.size(); i-- > 0;) r = field.mul(r, a) + coeffs[i];
  return r;
}

}  // namespace detail

/// True when F(a) is zero or a p-th power for every residue a modulo 𝔭^depth.
/// Coefficients are listed low degree first.
inline bool oracle_decide(const std::vector<OKElem>& coeffs, const LocalField& field, std::int64_t depth) {
  const OracleTable table(field, depth);
  for (const auto& a : field.residues(depth))
    if (!table.is_pth_power(detail::oracle_eval(coeffs, a, field))) return false;
  return true;
}

}  // namespace padicpow
