#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "padicpow/polyring.hpp"

namespace padicpow {

struct RootApprox {
  OKElem truncation;
  std::int64_t precision = 0;
  bool certified_by_hensel = false;
};

struct PadicRootReport {
  bool exists = false;
  std::vector<RootApprox> roots;
  std::int64_t search_depth_used = 0;
};

/// Depth past which every surviving node of the root search is Hensel
/// certified: 2·ord Res(G, G') + 1.
inline std::int64_t hensel_depth(const IntPoly& g, const LocalField& field) {
  const OKElem res = resultant(g, poly::derivative(g), field);
  if (res.is_zero()) throw Error(ErrorCode::NotSquareFree, "polynomial is not square-free");
  return 2 * field.ord(res) + 1;
}

/// Exhaustive search for roots of a square-free G in O_𝔭, refining residue
/// classes modulo 𝔭, 𝔭², ... A node a at level k survives iff ord G(a) ≥ k;
/// it is reported once ord G(a) > 2·ord G'(a) and k > ord G'(a), so the
/// node's class holds exactly one root.
inline PadicRootReport roots_in_valuation_ring(const IntPoly& g, const LocalField& field) {
  if (g.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "root search on the zero polynomial");
  PadicRootReport report;
  if (g.is_constant()) return report;
  const std::int64_t depth_max = hensel_depth(g, field);
  const IntPoly dg = poly::derivative(g);
  const std::vector<OKElem> digits = field.residues(1);

  std::vector<OKElem> level = digits;
  for (std::int64_t k = 1; !level.empty(); ++k) {
    report.search_depth_used = k;
    std::vector<OKElem> next;
    const OKElem step = field.pi_pow(k);
    for (const auto& a : level) {
      const std::int64_t v = field.ord(poly::eval(g, a, field));
      if (v < k) continue;
      const std::int64_t w = field.ord(poly::eval(dg, a, field));
      if (v > 2 * w && k > w) {
        report.roots.push_back({a, k, true});
        continue;
      }
      if (k >= depth_max)
        throw std::logic_error("root search exhausted its Hensel depth without certifying a surviving node");
      for (const auto& r : digits) next.push_back(a + field.mul(step, r));
    }
    level = std::move(next);
  }
  report.exists = !report.roots.empty();
  return report;
}

/// Refines a certified root truncation a (valid at `level`) to precision
/// `target` by descending into the child with the largest ord G.
inline OKElem refine_root(const IntPoly& g, OKElem a, std::int64_t level, std::int64_t target,
                          const LocalField& field) {
  const std::vector<OKElem> digits = field.residues(1);
  for (std::int64_t k = level; k < target; ++k) {
    const OKElem step = field.pi_pow(k);
    OKElem best = a;
    std::int64_t best_ord = -1;
    for (const auto& r : digits) {
      OKElem c = a + field.mul(step, r);
      const std::int64_t v = field.ord(poly::eval(g, c, field));
      if (v > best_ord) {
        best_ord = v;
        best = std::move(c);
      }
    }
    a = std::move(best);
  }
  return a;
}

/// A root ξ of F in K_𝔭. For inverted roots the truncation approximates
/// 1/ξ, a root in 𝔭 of the reciprocal of the factor.
struct FieldRoot {
  OKElem truncation;
  std::int64_t precision = 0;
  bool inverted = false;
  int multiplicity = 1;
  std::size_t factor_index = 0;
};

/// All K_𝔭-roots of the square-free factors of F, with multiplicities.
/// Truncations refer to the primitive part of the factor.
inline std::vector<FieldRoot> field_roots(const IntPoly& f, const LocalField& field) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "root search on the zero polynomial");
  std::vector<FieldRoot> out;
  if (f.is_constant()) return out;
  const auto dec = squarefree_decompose(f, field);
  for (std::size_t i = 0; i < dec.factors.size(); ++i) {
    const auto& fac = dec.factors[i];
    const IntPoly g = poly::primitive(fac.poly);
    for (const auto& r : roots_in_valuation_ring(g, field).roots)
      out.push_back({r.truncation, r.precision, false, fac.multiplicity, i});
    const IntPoly rev = reciprocal(g);
    for (const auto& r : roots_in_valuation_ring(rev, field).roots) {
      if (field.ord(r.truncation) < 1) continue;  // unit roots were found above
      out.push_back({r.truncation, r.precision, true, fac.multiplicity, i});
    }
  }
  return out;
}

inline bool has_root_in_field(const IntPoly& f, const LocalField& field) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "root search on the zero polynomial");
  if (f.is_constant()) return false;
  for (const auto& fac : squarefree_decompose(f, field).factors) {
    const IntPoly g = poly::primitive(fac.poly);
    if (roots_in_valuation_ring(g, field).exists) return true;
    if (roots_in_valuation_ring(reciprocal(g), field).exists) return true;
  }
  return false;
}

inline bool has_root_in_ring(const IntPoly& f, const LocalField& field) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "root search on the zero polynomial");
  if (f.is_constant()) return false;
  for (const auto& fac : squarefree_decompose(f, field).factors)
    if (roots_in_valuation_ring(poly::primitive(fac.poly), field).exists) return true;
  return false;
}

struct RootMultiplicityReport {
  bool violates = false;
  std::vector<FieldRoot> roots;
};

/// A member of C(K_𝔭) has every root multiplicity divisible by p.
inline RootMultiplicityReport root_multiplicity_report(const IntPoly& f, const LocalField& field) {
  RootMultiplicityReport rep;
  if (f.is_zero()) return rep;
  rep.roots = field_roots(f, field);
  for (const auto& r : rep.roots)
    if (r.multiplicity % field.p() != 0) rep.violates = true;
  return rep;
}

}  // namespace padicpow
