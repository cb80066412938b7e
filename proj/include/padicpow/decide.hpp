#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <set>
#include <string>
#include <vector>

#include "padicpow/powerclasses.hpp"
#include "padicpow/roots.hpp"
#include "padicpow/scan.hpp"

namespace padicpow {

enum class ClassTested { C_ZK, C_K };

inline std::string to_string(ClassTested c) { return c == ClassTested::C_ZK ? "C_ZK" : "C_K"; }

enum class ScanStrategy { Frontier, Naive };

struct ScanOptions {
  unsigned threads = 1;
  std::uint64_t budget = 10'000'000;  // cap on polynomial evaluations per scan
  ScanStrategy strategy = ScanStrategy::Frontier;
};

struct BoundsReport {
  Rational kras_upper = 0;
  Rational max_ord_bound = 0;
  Rational cardA_log_p = 0;
  std::optional<double> pejkovic_log_p;
};

/// A point where F takes a value outside the p-th powers. When `inverted`
/// is set the point is 1/point.
struct Counterexample {
  OKElem point;
  bool inverted = false;
  OKElem value;
  PowerClassId value_class;
};

struct DecisionReport {
  bool verdict = true;
  ClassTested class_tested = ClassTested::C_ZK;
  std::int64_t M = 0;
  std::int64_t final_m = 0;
  Int witness_count = 0;
  std::optional<Counterexample> counterexample;
  std::vector<std::int64_t> m_history;
  BoundsReport bounds;
  std::uint64_t evaluations = 0;
  std::string reason;                  // which stage settled the verdict
  std::vector<DecisionReport> parts;   // C_K: scans of F_* and rev F_*
};

struct SpectrumReport {
  std::vector<PowerClassId> classes;  // sorted by index
  bool attains_zero = false;
  std::uint64_t evaluations = 0;
};

namespace detail {

// Upper bound for max ord(ξ_i − ξ_j) from the discriminant; see
// krasner_upper_bound. Valuations are normalised so that ord(π) = 1.
inline Rational kras_upper_unchecked(const IntPoly& f, const LocalField& field) {
  const std::int64_t d = f.degree();
  const OKElem res = resultant(f, poly::derivative(f), field);
  if (res.is_zero()) throw Error(ErrorCode::NotSquareFree, "polynomial is not square-free");
  const std::int64_t lc_ord = field.ord(f.lc());
  Rational u = Rational(field.ord(res) - lc_ord - (2 * d - 2) * lc_ord, 2);
  if (lc_ord > 0) u += Rational(d * (d - 1) / 2 - 1) * lc_ord;
  return std::max(u, Rational(0));
}

inline BoundsReport bounds_unchecked(const IntPoly& f, const LocalField& field) {
  BoundsReport b;
  const std::int64_t d = std::max(f.degree(), 0);
  const std::int64_t p = field.p(), e = field.e(), ff = field.f();
  b.kras_upper = d >= 2 ? kras_upper_unchecked(f, field) : Rational(0);
  const std::int64_t lc_ord = field.ord(f.lc());
  b.max_ord_bound = Rational(d) * b.kras_upper + lc_ord;
  b.cardA_log_p = Rational(e * ff * p, p - 1) + Rational(ff * d) * b.kras_upper + Rational(ff * lc_ord);
  if (field.kind() == FieldKind::Base && d >= 1) {
    const double H = static_cast<double>(f.height());
    const double lp = std::log(static_cast<double>(p));
    const double dd = static_cast<double>(d);
    b.pejkovic_log_p = static_cast<double>(p) / static_cast<double>(p - 1) +
                       1.5 * dd * dd * (std::log(dd) / lp) * std::pow(H, 1.0 - dd) +
                       static_cast<double>(ord_p(f.lc().coords[0], p));
  }
  return b;
}

inline Int witness_count(const LocalField& field, std::int64_t level) { return ipow(Int(field.p()), field.f() * level); }

struct Evaluated {
  OKElem value;
  std::int64_t ord = 0;
  bool is_power = true;
};

inline Evaluated evaluate(const IntPoly& f, const OKElem& a, const LocalField& field, const PthPowerTest& test) {
  Evaluated r;
  r.value = poly::eval(f, a, field);
  r.ord = field.ord(r.value);
  r.is_power = test(r.value);
  return r;
}

inline void charge(std::uint64_t& used, std::uint64_t n, const ScanOptions& opts) {
  used += n;
  if (used > opts.budget)
    throw Error(ErrorCode::ScanBudgetExceeded,
                "scan needs more than " + std::to_string(opts.budget) + " evaluations");
}

// Residue system modulo 𝔭^k, reported against the scan budget.
inline std::vector<OKElem> budgeted_residues(const LocalField& field, std::int64_t k, std::uint64_t used,
                                             const ScanOptions& opts) {
  const std::uint64_t room = opts.budget > used ? opts.budget - used : 0;
  try {
    return field.residues(k, std::min<std::uint64_t>(room, kDefaultResidueCap * 4));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::KTooLargeForMemory) throw;
    throw Error(ErrorCode::ScanBudgetExceeded,
                "scan needs more than " + std::to_string(opts.budget) + " evaluations");
  }
}

struct ScanOutcome {
  bool all_powers = true;
  std::optional<OKElem> failing_point;
  std::int64_t final_m = 0;
  std::vector<std::int64_t> m_history{0};
  std::uint64_t evaluations = 0;
  std::set<std::size_t> class_indices;  // filled when collecting
};

// Refinement scan over O. A node a at level n stands for a + 𝔭^n; once
// n ≥ ord F(a) + M every value on the class lies in F(a)·(1 + 𝔭^{M}) and the
// node is closed, otherwise it is split into classes modulo 𝔭^{ord F(a) + M}.
// With `collect` set the scan records every class met instead of stopping at
// the first non-power.
inline ScanOutcome frontier_scan(const IntPoly& f, const LocalField& field, const PowerClassSystem& sys,
                                 const ScanOptions& opts, bool collect) {
  const PthPowerTest& test = sys.pth_power_test();
  const std::int64_t M = test.k0();
  ScanOutcome out;
  struct Node {
    OKElem a;
    std::int64_t level;
  };
  std::map<std::int64_t, std::vector<OKElem>> digit_cache;
  std::vector<Node> frontier;
  for (auto& a : budgeted_residues(field, M, 0, opts)) frontier.push_back({std::move(a), M});
  while (!frontier.empty()) {
    const auto results = parallel_map(frontier, opts.threads,
                                      [&](const Node& n) { return evaluate(f, n.a, field, test); });
    std::vector<Node> next;
    std::uint64_t pending = 0;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      charge(out.evaluations, 1, opts);
      const auto& r = results[i];
      if (r.ord == kInfiniteOrd) throw Error(ErrorCode::PreconditionRootInRing, "F has a root in the valuation ring");
      if (r.ord > out.final_m) {
        out.final_m = r.ord;
        out.m_history.push_back(r.ord);
      }
      if (collect) {
        out.class_indices.insert(sys.class_index(r.value));
      } else if (!r.is_power) {
        out.all_powers = false;
        out.failing_point = frontier[i].a;
        return out;
      }
      const std::int64_t n = frontier[i].level;
      const std::int64_t target = r.ord + M;
      if (target <= n) continue;
      auto it = digit_cache.find(target - n);
      if (it == digit_cache.end())
        it = digit_cache.emplace(target - n, budgeted_residues(field, target - n, out.evaluations + pending, opts)).first;
      pending += it->second.size();
      if (out.evaluations + pending > opts.budget)
        throw Error(ErrorCode::ScanBudgetExceeded,
                    "scan needs more than " + std::to_string(opts.budget) + " evaluations");
      const OKElem step = field.pi_pow(n);
      for (const auto& r2 : it->second) next.push_back({frontier[i].a + field.mul(step, r2), target});
    }
    frontier = std::move(next);
  }
  return out;
}

// The unrefined loop: scan all residues modulo 𝔭^{m+M}, restart whenever a
// larger valuation shows up.
inline ScanOutcome naive_scan(const IntPoly& f, const LocalField& field, const PowerClassSystem& sys,
                              const ScanOptions& opts) {
  const PthPowerTest& test = sys.pth_power_test();
  const std::int64_t M = test.k0();
  ScanOutcome out;
  while (true) {
    const auto points = budgeted_residues(field, out.final_m + M, out.evaluations, opts);
    const auto results =
        parallel_map(points, opts.threads, [&](const OKElem& a) { return evaluate(f, a, field, test); });
    bool restarted = false;
    for (std::size_t i = 0; i < points.size(); ++i) {
      charge(out.evaluations, 1, opts);
      const auto& r = results[i];
      if (r.ord == kInfiniteOrd) throw Error(ErrorCode::PreconditionRootInRing, "F has a root in the valuation ring");
      if (r.ord > out.final_m) {
        out.final_m = r.ord;
        out.m_history.push_back(r.ord);
        restarted = true;
      }
      if (!r.is_power) {
        out.all_powers = false;
        out.failing_point = points[i];
        return out;
      }
      if (restarted) break;
    }
    if (!restarted) return out;
  }
}

inline DecisionReport decide_cz_with(const IntPoly& f, const LocalField& field, const PowerClassSystem& sys,
                                     const ScanOptions& opts, bool preconditions_known = false) {
  DecisionReport rep;
  rep.class_tested = ClassTested::C_ZK;
  rep.M = threshold_k0(field);
  if (f.is_zero()) {
    rep.reason = "zero polynomial";
    return rep;
  }
  if (f.is_constant()) {
    rep.witness_count = 1;
    rep.m_history = {0};
    rep.evaluations = 1;
    rep.bounds = bounds_unchecked(f, field);
    rep.reason = "constant";
    if (!sys.pth_power_test()(f.constant())) {
      rep.verdict = false;
      rep.counterexample = Counterexample{field.zero(), false, f.constant(), sys.class_of(f.constant())};
    }
    return rep;
  }
  if (!preconditions_known) {
    if (!is_power_free(f, field))
      throw Error(ErrorCode::PreconditionNotPowerFree, "F has a square-free factor of multiplicity >= p");
    if (has_root_in_ring(f, field))
      throw Error(ErrorCode::PreconditionRootInRing, "F has a root in the valuation ring");
  }
  rep.bounds = bounds_unchecked(f, field);
  const ScanOutcome s =
      opts.strategy == ScanStrategy::Naive ? naive_scan(f, field, sys, opts) : frontier_scan(f, field, sys, opts, false);
  rep.verdict = s.all_powers;
  rep.final_m = s.final_m;
  rep.m_history = s.m_history;
  rep.evaluations = s.evaluations;
  rep.witness_count = witness_count(field, s.final_m + rep.M);
  rep.reason = s.all_powers ? "scan" : "scan found a non-power value";
  if (!s.all_powers) {
    const OKElem v = poly::eval(f, *s.failing_point, field);
    rep.counterexample = Counterexample{*s.failing_point, false, v, sys.class_of(v)};
  }
  return rep;
}

// Class of F at the point described by (b, inverted), or nullopt when the
// value is zero or a p-th power.
inline std::optional<Counterexample> check_point(const IntPoly& f, const OKElem& b, bool inverted,
                                                 const LocalField& field, const PowerClassSystem& sys) {
  OKElem value;
  if (!inverted) {
    value = poly::eval(f, b, field);
  } else {
    if (b.is_zero()) return std::nullopt;
    // F(1/b) = b^{-d}·revF(b) lies in the class of revF(b)·b^{d(p−1)}
    const std::int64_t d = f.degree();
    IntPoly rev{std::vector<OKElem>(f.coeffs.rbegin(), f.coeffs.rend())};
    value = field.mul(poly::eval(rev, b, field), field.pow(b, d * (field.p() - 1)));
  }
  if (value.is_zero() || sys.pth_power_test()(value)) return std::nullopt;
  return Counterexample{b, inverted, value, sys.class_of(value)};
}

inline std::int64_t perturbation_span(const LocalField& field) { return threshold_k0(field) + 4 * field.p() + 8; }

// Searches for a genuine counterexample to F ∈ C(K) near a hint point.
// F is known not to be in C(K); the candidates cover perturbations of the
// hint and the points π^{±s} used in the degree argument.
inline Counterexample materialize(const IntPoly& f, const OKElem& hint, bool inverted, std::int64_t depth,
                                  const LocalField& field, const PowerClassSystem& sys) {
  if (auto c = check_point(f, hint, inverted, field, sys)) return *c;
  const std::int64_t M = threshold_k0(field);
  const std::int64_t base = std::max<std::int64_t>(depth, 1);
  for (std::int64_t w = base; w <= base + perturbation_span(field); ++w)
    if (auto c = check_point(f, hint + field.pi_pow(w), inverted, field, sys)) return *c;
  for (std::int64_t w = 1; w < base; ++w)
    if (auto c = check_point(f, hint + field.pi_pow(w), inverted, field, sys)) return *c;
  std::int64_t spread = 0;
  for (const auto& c : f.coeffs)
    if (!c.is_zero()) spread = std::max(spread, field.ord(c));
  const std::int64_t S = spread + M + 4 * field.p() + 8;
  for (std::int64_t s = 0; s <= S; ++s) {
    if (auto c = check_point(f, field.pi_pow(s), false, field, sys)) return *c;
    if (s > 0)
      if (auto c = check_point(f, field.pi_pow(s), true, field, sys)) return *c;
  }
  throw std::logic_error("no counterexample found near a certified non-member");
}

}  // namespace detail

/// Algorithm for F ∈ C(O): F(O) ⊆ K^{×p} ∪ {0}, for power-free F without
/// roots in O.
inline DecisionReport decide_CZ(const IntPoly& f, const LocalField& field, const ScanOptions& opts = {}) {
  const PowerClassSystem sys(field);
  return detail::decide_cz_with(f, field, sys, opts);
}

/// F ∈ C(K): F(K) ⊆ K^{×p} ∪ {0}.
inline DecisionReport decide_CK(const IntPoly& f, const LocalField& field, const ScanOptions& opts = {}) {
  DecisionReport rep;
  rep.class_tested = ClassTested::C_K;
  rep.M = threshold_k0(field);
  if (f.is_zero()) {
    rep.reason = "zero polynomial";
    return rep;
  }
  const PowerClassSystem sys(field);
  const IntPoly fs = reduce_power_free_normalized(f, field);
  if (fs.is_constant()) {
    rep.witness_count = 1;
    rep.m_history = {0};
    rep.bounds = detail::bounds_unchecked(fs, field);
    rep.reason = "power-free part is constant";
    if (!sys.pth_power_test()(fs.constant())) {
      rep.verdict = false;
      rep.counterexample = detail::materialize(f, field.zero(), false, 1, field, sys);
    }
    return rep;
  }
  rep.bounds = detail::bounds_unchecked(fs, field);

  const auto roots = field_roots(fs, field);
  if (!roots.empty()) {
    rep.verdict = false;
    rep.reason = "power-free part has a root in the field";
    const auto dec = squarefree_decompose(fs, field);
    const FieldRoot& r = roots.front();
    const IntPoly g = poly::primitive(dec.factors[r.factor_index].poly);
    const IntPoly gg = r.inverted ? reciprocal(g) : g;
    const std::int64_t depth = std::max<std::int64_t>(r.precision, hensel_depth(gg, field)) + 1;
    const std::int64_t target = depth + detail::perturbation_span(field) + 1;
    const OKElem xi = refine_root(gg, r.truncation, r.precision, target, field);
    rep.counterexample = detail::materialize(f, xi, r.inverted, depth, field, sys);
    return rep;
  }

  rep.parts.push_back(detail::decide_cz_with(fs, field, sys, opts, true));
  const DecisionReport& ring = rep.parts.back();
  if (!ring.verdict) {
    rep.verdict = false;
    rep.reason = "ring scan found a non-power value";
    const OKElem& a = ring.counterexample->point;
    const std::int64_t depth = field.ord(poly::eval(fs, a, field)) + rep.M + 1;
    rep.counterexample = detail::materialize(f, a, false, depth, field, sys);
  } else {
    rep.parts.push_back(detail::decide_cz_with(reciprocal(fs), field, sys, opts, true));
    const DecisionReport& inv = rep.parts.back();
    if (!inv.verdict) {
      rep.verdict = false;
      rep.reason = "reciprocal scan found a non-power value";
      const OKElem& b = inv.counterexample->point;
      const std::int64_t depth = field.ord(poly::eval(reciprocal(fs), b, field)) + rep.M + 1;
      rep.counterexample = detail::materialize(f, b, true, depth, field, sys);
    } else {
      rep.reason = "both scans passed";
    }
  }
  const DecisionReport* top = &rep.parts.front();
  for (const auto& part : rep.parts) {
    rep.evaluations += part.evaluations;
    rep.witness_count += part.witness_count;
    if (part.final_m > top->final_m) top = &part;
  }
  rep.final_m = top->final_m;
  rep.m_history = top->m_history;
  return rep;
}

/// The set of cosets x·K^{×p} met by F on K, and whether F vanishes somewhere.
inline SpectrumReport class_spectrum(const IntPoly& f, const LocalField& field, const ScanOptions& opts = {}) {
  SpectrumReport rep;
  if (f.is_zero()) {
    rep.attains_zero = true;
    return rep;
  }
  const PowerClassSystem sys(field);
  const IntPoly fs = reduce_power_free_normalized(f, field);
  if (fs.is_constant()) {
    rep.classes = {sys.class_of(fs.constant())};
    rep.attains_zero = has_root_in_field(f, field);
    return rep;
  }
  if (has_root_in_field(fs, field))
    throw Error(ErrorCode::PreconditionRootInField, "power-free part has a root in the field");
  rep.attains_zero = has_root_in_field(f, field);
  if (fs.degree() % field.p() != 0) {
    // lc·x^d with p ∤ d runs through every class as ord x → −∞
    rep.classes = sys.classes();
    return rep;
  }
  std::set<std::size_t> seen;
  for (const IntPoly& g : {fs, reciprocal(fs)}) {
    auto s = detail::frontier_scan(g, field, sys, opts, true);
    rep.evaluations += s.evaluations;
    seen.insert(s.class_indices.begin(), s.class_indices.end());
  }
  for (std::size_t i : seen) rep.classes.push_back(sys.classes()[i]);
  return rep;
}

/// Upper bound for max ord(ξ_i − ξ_j) over distinct roots, from the
/// discriminant. With ord lc > 0 the roots may be non-integral and the bound
/// is widened by (d(d−1)/2 − 1)·ord lc; negative values are clamped to 0.
inline Rational krasner_upper_bound(const IntPoly& f, const LocalField& field) {
  if (f.is_zero() || f.degree() < 2) throw Error(ErrorCode::DegreeTooSmall, "Krasner bound needs degree >= 2");
  return detail::kras_upper_unchecked(f, field);
}

inline BoundsReport witness_bounds(const IntPoly& f, const LocalField& field) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "bounds for the zero polynomial");
  if (has_root_in_field(f, field)) throw Error(ErrorCode::PreconditionRootInField, "F has a root in the field");
  return detail::bounds_unchecked(f, field);
}

}  // namespace padicpow
