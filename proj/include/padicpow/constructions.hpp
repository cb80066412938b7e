#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "padicpow/decide.hpp"

namespace padicpow {

/// 1 + π^m·x with the smallest m ≡ 1 (mod p) and m > ep/(p−1). It lies in
/// C(O) but not in C(K).
inline IntPoly make_cz_not_ck(const LocalField& field) {
  const std::int64_t p = field.p();
  std::int64_t m = threshold_k0(field);
  while (m % p != 1 % p) ++m;
  return IntPoly{{field.one(), field.pi_pow(m)}};
}

/// (1 + π·x^p)^p + π^m for m > ep/(p−1): a member of C(K) that is not a
/// p-th power of a polynomial.
inline IntPoly make_ck_not_power(const LocalField& field, std::int64_t m) {
  const std::int64_t p = field.p();
  if (m * (p - 1) <= field.e() * p)
    throw Error(ErrorCode::MTooSmall, "m = " + std::to_string(m) + " must exceed ep/(p-1)");
  std::vector<OKElem> inner(static_cast<std::size_t>(p) + 1, field.zero());
  inner[0] = field.one();
  inner[static_cast<std::size_t>(p)] = field.uniformizer();
  IntPoly f = poly::pow(IntPoly{inner}, static_cast<int>(p), field);
  f.coeffs[0] = f.coeffs[0] + field.pi_pow(m);
  return poly::trimmed(std::move(f));
}

/// ⌈d·kras_upper + ord(F_0·F_d) + ep/(p−1)⌉: perturbing every coefficient by
/// elements of ord > M keeps the polynomial in C(K).
inline std::int64_t stability_radius(const IntPoly& f, const LocalField& field, const ScanOptions& opts = {}) {
  if (f.is_zero() || f.degree() < 2) throw Error(ErrorCode::DegreeTooSmall, "stability radius needs degree >= 2");
  if (has_root_in_field(f, field)) throw Error(ErrorCode::PreconditionRootInField, "F has a root in the field");
  if (!decide_CK(f, field, opts).verdict) throw Error(ErrorCode::PreconditionNotMember, "F is not in C(K)");
  const Rational u = krasner_upper_bound(f, field);
  const std::int64_t p = field.p();
  const Rational bound = Rational(f.degree()) * u + Rational(field.ord(field.mul(f.constant(), f.lc()))) +
                         Rational(field.e() * p, p - 1);
  return ceil_rational(bound);
}

namespace detail {

// Smallest k with ord_p(k!) ≥ n; every function Z/p^n → Z/p^n given by an
// integer polynomial is given by one of degree < k.
inline int polynomial_function_degree(std::int64_t p, std::int64_t n) {
  std::int64_t acc = 0;
  int k = 0;
  while (acc < n) {
    ++k;
    acc += ord_p(Int(k), p);
  }
  return k;
}

struct Coset {
  Int rep;
  std::int64_t s = 0;  // the set is rep + p^s·Z
};

// The set {b mod p^n : ord(y − b^p) ≥ n} when it is a single coset; for p = 2
// the branch whose unit part is ≡ branch (mod 4) is kept when the full set
// is not a coset.
inline std::optional<Coset> root_coset(const Int& y, std::int64_t p, std::int64_t n, int branch) {
  const Int pn = ipow(Int(p), n);
  const Int target = mod_floor(y, pn);
  std::vector<Int> all;
  for (Int b = 0; b < pn; ++b)
    if (mod_floor(ipow(b, p) - target, pn) == 0) all.push_back(b);
  auto as_coset = [&](const std::vector<Int>& s) -> std::optional<Coset> {
    if (s.empty()) return std::nullopt;
    Int step = pn;
    if (s.size() > 1) step = s[1] - s[0];
    for (std::size_t i = 1; i < s.size(); ++i)
      if (s[i] - s[i - 1] != step) return std::nullopt;
    if (Int(s.size()) * step != pn) return std::nullopt;
    const std::int64_t e = ord_p(step, p);
    if (ipow(Int(p), e) != step) return std::nullopt;
    return Coset{s[0], e};
  };
  if (all.empty()) return std::nullopt;
  if (auto c = as_coset(all)) return c;
  if (p != 2) return std::nullopt;
  std::vector<Int> kept;
  for (const auto& b : all) {
    if (b == 0) continue;
    Int u = b;
    while (u % 2 == 0) u /= 2;
    if (mod_floor(u, Int(4)) == branch) kept.push_back(b);
  }
  return as_coset(kept);
}

// Solves A·x ≡ c (mod p^n) by full-pivoting elimination on valuations; free
// variables are set to 0.
inline std::optional<std::vector<Int>> solve_mod_pn(std::vector<std::vector<Int>> a, std::vector<Int> c,
                                                     std::int64_t p, std::int64_t n) {
  const Int pn = ipow(Int(p), n);
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (auto& row : a)
    for (auto& v : row) v = mod_floor(v, pn);
  for (auto& v : c) v = mod_floor(v, pn);
  std::vector<std::size_t> col_of_pivot;
  std::vector<std::size_t> perm(cols);
  for (std::size_t j = 0; j < cols; ++j) perm[j] = j;
  std::size_t r = 0;
  for (; r < std::min(rows, cols); ++r) {
    std::int64_t best = n;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = r; i < rows; ++i)
      for (std::size_t j = r; j < cols; ++j) {
        if (a[i][perm[j]] == 0) continue;
        const std::int64_t v = ord_p(a[i][perm[j]], p);
        if (v < best) {
          best = v;
          bi = i;
          bj = j;
        }
      }
    if (best >= n) break;
    std::swap(a[r], a[bi]);
    std::swap(c[r], c[bi]);
    std::swap(perm[r], perm[bj]);
    const std::size_t pc = perm[r];
    const Int pv = ipow(Int(p), best);
    const Int unit = a[r][pc] / pv;
    const Int inv = mod_inverse(unit, pn);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][pc] == 0) continue;
      const Int factor = mod_floor((a[i][pc] / pv) * inv, pn);
      for (std::size_t j = r; j < cols; ++j) a[i][perm[j]] = mod_floor(a[i][perm[j]] - factor * a[r][perm[j]], pn);
      c[i] = mod_floor(c[i] - factor * c[r], pn);
    }
  }
  for (std::size_t i = r; i < rows; ++i)
    if (c[i] != 0) return std::nullopt;
  std::vector<Int> x(cols, Int(0));
  for (std::size_t i = r; i-- > 0;) {
    const std::size_t pc = perm[i];
    Int rhs = c[i];
    for (std::size_t j = i + 1; j < cols; ++j) rhs -= a[i][perm[j]] * x[perm[j]];
    rhs = mod_floor(rhs, pn);
    const std::int64_t v = ord_p(a[i][pc], p);
    const Int pv = ipow(Int(p), v);
    if (rhs % pv != 0) return std::nullopt;
    const Int modulus = ipow(Int(p), n - v);
    x[pc] = mod_floor((rhs / pv) * mod_inverse(a[i][pc] / pv, modulus), modulus);
  }
  return x;
}

}  // namespace detail

/// G ∈ Z[x] with ord_p(F(a) − G(a)^p) ≥ n for every a ∈ Z_p. Base field only.
inline IntPoly approximate_on_integers(const IntPoly& f, const LocalField& field, std::int64_t n,
                                       const ScanOptions& opts = {}) {
  if (field.kind() != FieldKind::Base) throw Error(ErrorCode::InvalidField, "approximation is implemented over Q_p only");
  if (n < 1) throw Error(ErrorCode::InvalidField, "approximation order must be >= 1");
  if (f.is_zero()) return IntPoly{};
  const std::int64_t p = field.p();
  if (field.residue_count(n) > (std::uint64_t{1} << 12))
    throw Error(ErrorCode::KTooLargeForMemory, "approximation table modulo p^" + std::to_string(n) + " is too large");
  if (!f.is_constant() && is_power_free(f, field) && !has_root_in_ring(f, field) &&
      !decide_CZ(f, field, opts).verdict)
    throw Error(ErrorCode::PreconditionNotMember, "F is not in C(Z_p)");

  const Int pn = ipow(Int(p), n);
  const int deg = detail::polynomial_function_degree(p, n);
  std::string last_failure;
  for (int branch : (p == 2 ? std::vector<int>{1, 3} : std::vector<int>{1})) {
    std::vector<std::vector<Int>> rows;
    std::vector<Int> rhs;
    bool ok = true;
    for (Int a = 0; a < pn; ++a) {
      const Int y = poly::eval(f, field.from_int(a), field).coords[0];
      const auto coset = detail::root_coset(y, p, n, branch);
      if (!coset) {
        bool any = false;
        for (Int b = 0; b < pn && !any; ++b) any = mod_floor(ipow(b, p) - y, pn) == 0;
        if (!any) throw Error(ErrorCode::PreconditionNotMember, "F(" + a.str() + ") has no p-th root modulo p^n");
        ok = false;
        last_failure = "root set of F(" + a.str() + ") is not a coset";
        break;
      }
      // p^{n−s}·(Σ a^j G_j − rep) ≡ 0 (mod p^n)
      const Int scale = ipow(Int(p), n - coset->s);
      std::vector<Int> row;
      Int power = 1;
      for (int j = 0; j < deg; ++j) {
        row.push_back(scale * power);
        power = mod_floor(power * a, pn);
      }
      rows.push_back(std::move(row));
      rhs.push_back(scale * coset->rep);
    }
    if (!ok) continue;
    const auto g = detail::solve_mod_pn(rows, rhs, p, n);
    if (!g) {
      last_failure = "interpolation system is infeasible for branch " + std::to_string(branch) + " mod 4";
      continue;
    }
    IntPoly out;
    for (const auto& c : *g) out.coeffs.push_back(field.from_int(c));
    out = poly::trimmed(std::move(out));
    const std::int64_t check = n + threshold_k0(field);
    bool verified = true;
    for (const auto& a : field.residues(check)) {
      const OKElem diff = poly::eval(f, a, field) - field.pow(poly::eval(out, a, field), p);
      if (field.ord(diff) < n) {
        verified = false;
        break;
      }
    }
    if (verified) return out;
    last_failure = "solution failed the exhaustive check";
  }
  throw Error(ErrorCode::LiftObstruction, last_failure);
}

}  // namespace padicpow
