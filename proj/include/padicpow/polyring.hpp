#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "padicpow/localfield.hpp"
#include "padicpow/numberfield.hpp"
#include "padicpow/powerclasses.hpp"

namespace padicpow {

/// Polynomial with coefficients in the valuation-ring model, low degree
/// first. Trailing zeros are stripped, so the zero polynomial is empty.
struct IntPoly {
  std::vector<OKElem> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  const OKElem& lc() const { return coeffs.back(); }
  const OKElem& constant() const { return coeffs.front(); }
  bool is_constant() const { return coeffs.size() <= 1; }

  /// Maximum absolute value over all integer coordinates.
  Int height() const {
    Int h = 0;
    for (const auto& c : coeffs)
      for (const auto& x : c.coords) h = std::max(h, Int(abs(x)));
    return h;
  }

  friend bool operator==(const IntPoly&, const IntPoly&) = default;
};

namespace poly {

inline IntPoly trimmed(IntPoly f) {
  while (!f.coeffs.empty() && f.coeffs.back().is_zero()) f.coeffs.pop_back();
  return f;
}

inline IntPoly from_ints(const LocalField& field, const std::vector<Int>& coeffs) {
  IntPoly f;
  for (const auto& c : coeffs) f.coeffs.push_back(field.from_int(c));
  return trimmed(std::move(f));
}

inline IntPoly from_ints(const LocalField& field, std::initializer_list<long long> coeffs) {
  std::vector<Int> v;
  for (long long c : coeffs) v.emplace_back(c);
  return from_ints(field, v);
}

inline IntPoly constant(const OKElem& c) { return trimmed(IntPoly{{c}}); }

inline OKElem eval(const IntPoly& f, const OKElem& a, const LocalField& field) {
  OKElem acc = field.zero();
  for (std::size_t i = f.coeffs.size(); i-- > 0;) acc = field.mul(acc, a) + f.coeffs[i];
  return acc;
}

inline IntPoly derivative(const IntPoly& f) {
  IntPoly d;
  for (std::size_t i = 1; i < f.coeffs.size(); ++i) d.coeffs.push_back(Int(i) * f.coeffs[i]);
  return trimmed(std::move(d));
}

inline IntPoly add(const IntPoly& a, const IntPoly& b, const LocalField& field) {
  IntPoly r;
  const std::size_t n = std::max(a.coeffs.size(), b.coeffs.size());
  for (std::size_t i = 0; i < n; ++i) {
    OKElem c = field.zero();
    if (i < a.coeffs.size()) c += a.coeffs[i];
    if (i < b.coeffs.size()) c += b.coeffs[i];
    r.coeffs.push_back(std::move(c));
  }
  return trimmed(std::move(r));
}

inline IntPoly sub(const IntPoly& a, const IntPoly& b, const LocalField& field) {
  IntPoly nb = b;
  for (auto& c : nb.coeffs) c = -c;
  return add(a, nb, field);
}

inline IntPoly scale(IntPoly a, const OKElem& s, const LocalField& field) {
  for (auto& c : a.coeffs) c = field.mul(c, s);
  return trimmed(std::move(a));
}

inline IntPoly mul(const IntPoly& a, const IntPoly& b, const LocalField& field) {
  if (a.is_zero() || b.is_zero()) return {};
  IntPoly r;
  r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, field.zero());
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) r.coeffs[i + j] += field.mul(a.coeffs[i], b.coeffs[j]);
  }
  return trimmed(std::move(r));
}

inline IntPoly pow(const IntPoly& a, int k, const LocalField& field) {
  IntPoly r = constant(field.one());
  for (int i = 0; i < k; ++i) r = mul(r, a, field);
  return r;
}

inline NfPoly to_nf(const NumberField& K, const IntPoly& f) {
  NfPoly r;
  for (const auto& c : f.coeffs) r.push_back(K.from_ok(c));
  return r;
}

/// Requires integral coordinates.
inline IntPoly from_nf(const NumberField& K, const NfPoly& f) {
  IntPoly r;
  for (const auto& c : f) r.coeffs.push_back(K.to_ok(c));
  return trimmed(std::move(r));
}

inline std::string to_string(const IntPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = f.coeffs.size(); i-- > 0;) {
    const OKElem& c = f.coeffs[i];
    if (c.is_zero()) continue;
    std::string cs = c.str();
    const bool compound = c.coords.size() > 1 && std::count_if(c.coords.begin(), c.coords.end(),
                                                               [](const Int& x) { return x != 0; }) > 1;
    if (compound) cs = "(" + cs + ")";
    std::string term;
    if (i == 0) {
      term = cs;
    } else {
      if (cs == "1") cs = "";
      else if (cs == "-1") cs = "-";
      else cs += "*";
      term = cs + (i == 1 ? std::string("x") : "x^" + std::to_string(i));
    }
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out;
}

/// gcd of every integer coordinate of every coefficient.
inline Int content(const IntPoly& f) {
  Int g = 0;
  for (const auto& c : f.coeffs)
    for (const auto& v : c.coords) g = boost::multiprecision::gcd(g, v);
  return g;
}

/// f divided by its integer content; same roots.
inline IntPoly primitive(IntPoly f) {
  const Int g = content(f);
  if (g <= 1) return f;
  for (auto& c : f.coeffs)
    for (auto& v : c.coords) v /= g;
  return f;
}

}  // namespace poly

/// x^d·F(1/x): the coefficient list reversed, trailing zeros stripped.
inline IntPoly reciprocal(const IntPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "reciprocal of the zero polynomial");
  IntPoly r{std::vector<OKElem>(f.coeffs.rbegin(), f.coeffs.rend())};
  return poly::trimmed(std::move(r));
}

struct SquareFreeFactor {
  IntPoly poly;
  int multiplicity = 1;
};

/// c^p·F = lc·∏ G̃_i^i with each G̃_i square-free, integral and pairwise coprime.
struct SquareFreeDecomposition {
  OKElem lc;
  std::vector<SquareFreeFactor> factors;
  Int c = 1;
};

namespace detail {

// Positive integer whose p-th power is divisible by d: the smallest one when
// d has no prime factor above 2^16 besides a single cofactor, which is taken
// whole.
inline Int pth_power_clearing(Int d, std::int64_t p) {
  Int c = 1;
  for (Int q = 2; q * q <= d && q < 65536; ++q) {
    std::int64_t a = 0;
    while (d % q == 0) {
      d /= q;
      ++a;
    }
    if (a > 0) c *= ipow(q, ceil_div(a, p));
  }
  if (d > 1) c *= d;
  return c;
}

// Yun's algorithm over Q(θ); returns monic square-free factors with their
// multiplicities, in increasing multiplicity.
inline std::vector<std::pair<NfPoly, int>> yun(const NumberField& K, const NfPoly& f) {
  using namespace nfpoly;
  std::vector<std::pair<NfPoly, int>> out;
  NfPoly fm = monic(K, f);
  if (degree(fm) <= 0) return out;
  NfPoly df = derivative(K, fm);
  NfPoly a = gcd(K, fm, df);
  NfPoly b = exact_div(K, fm, a);
  NfPoly c = exact_div(K, df, a);
  NfPoly d = sub(K, c, derivative(K, b));
  for (int i = 1; degree(b) > 0; ++i) {
    NfPoly ai = gcd(K, b, d);
    b = exact_div(K, b, ai);
    c = exact_div(K, d, ai);
    d = sub(K, c, derivative(K, b));
    if (degree(ai) > 0) out.emplace_back(std::move(ai), i);
  }
  return out;
}

}  // namespace detail

inline SquareFreeDecomposition squarefree_decompose(const IntPoly& f, const LocalField& field) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "square-free decomposition of zero");
  const NumberField K(field);
  SquareFreeDecomposition out;
  out.lc = f.lc();
  for (auto& [g, mult] : detail::yun(K, poly::to_nf(K, f))) {
    Int den = 1;
    for (const auto& coeff : g) {
      Int d = K.denominator(coeff);
      den = den / boost::multiprecision::gcd(den, d) * d;
    }
    const Int ci = detail::pth_power_clearing(den, field.p());
    const Rational scale(ipow(ci, field.p()));
    NfPoly scaled;
    for (const auto& coeff : g) scaled.push_back(K.scale(coeff, scale));
    out.factors.push_back({poly::from_nf(K, scaled), mult});
    out.c *= ipow(ci, mult);
  }
  return out;
}

namespace detail {

inline IntPoly power_free_part(const SquareFreeDecomposition& dec, const LocalField& field) {
  IntPoly r = poly::constant(dec.lc);
  for (const auto& fac : dec.factors)
    r = poly::mul(r, poly::pow(fac.poly, fac.multiplicity % static_cast<int>(field.p()), field), field);
  return r;
}

}  // namespace detail

/// F_* = lc·∏ G̃_i^{i mod p}; differs from F by a p-th power in K[x].
inline IntPoly reduce_power_free(const IntPoly& f, const LocalField& field) {
  return detail::power_free_part(squarefree_decompose(f, field), field);
}

/// F_* divided by q^p for a divisor q of the clearing factor c with q^p
/// dividing the content; same power classes, smaller coefficients.
inline IntPoly reduce_power_free_normalized(const IntPoly& f, const LocalField& field) {
  const auto dec = squarefree_decompose(f, field);
  IntPoly r = detail::power_free_part(dec, field);
  const Int kappa = poly::content(r);
  Int q = dec.c;
  while (q > 1) {
    const Int qp = ipow(q, field.p());
    const Int g = boost::multiprecision::gcd(qp, kappa);
    if (g == qp) break;
    q /= boost::multiprecision::gcd(q, qp / g);
  }
  if (q > 1) {
    const Int qp = ipow(q, field.p());
    for (auto& c : r.coeffs)
      for (auto& v : c.coords) v /= qp;
  }
  return r;
}

/// True when no square-free factor has multiplicity ≥ p.
inline bool is_power_free(const IntPoly& f, const LocalField& field) {
  if (f.is_constant()) return true;
  for (const auto& fac : squarefree_decompose(f, field).factors)
    if (fac.multiplicity >= field.p()) return false;
  return true;
}

struct NecessaryConditions {
  bool deg_ok = true;
  bool lc_ord_ok = true;
  bool const_is_power = true;
  bool lc_is_power = true;

  bool all() const { return deg_ok && lc_ord_ok && const_is_power && lc_is_power; }
};

/// Cheap screens: any false flag certifies F is not in C(K).
inline NecessaryConditions necessary_conditions(const IntPoly& f, const LocalField& field) {
  if (f.is_zero()) return {};
  const PthPowerTest is_power(field);
  NecessaryConditions nc;
  nc.deg_ok = f.degree() % field.p() == 0;
  nc.lc_ord_ok = field.ord(f.lc()) % field.p() == 0;
  nc.const_is_power = is_power(f.constant());
  nc.lc_is_power = is_power(f.lc());
  return nc;
}

namespace detail {

// Exact p-th root in Z[θ] by bounded coordinate search (integer root for the
// base field).
inline std::optional<OKElem> exact_pth_root(const OKElem& x, const LocalField& field) {
  const std::int64_t p = field.p();
  if (field.dim() == 1) {
    const Int v = x.coords[0];
    if (v < 0 && p % 2 == 0) return std::nullopt;
    Int lo = 0, hi = abs(v) + 1;
    while (lo < hi) {
      Int mid = (lo + hi) / 2;
      if (ipow(mid, p) < abs(v)) lo = mid + 1;
      else hi = mid;
    }
    if (ipow(lo, p) != abs(v)) return std::nullopt;
    return field.from_int(v < 0 ? Int(-lo) : lo);
  }
  Int bound = 1;
  for (const auto& c : x.coords) bound = std::max(bound, Int(abs(c)));
  const std::int64_t B = static_cast<std::int64_t>(std::min(bound, Int(64)));
  const int n = field.dim();
  std::vector<std::int64_t> cur(n, -B);
  while (true) {
    std::vector<Int> coords(cur.begin(), cur.end());
    OKElem c = field.from_coords(coords);
    if (field.pow(c, p) == x) return c;
    int i = 0;
    while (i < n && cur[i] == B) cur[i++] = -B;
    if (i == n) break;
    ++cur[i];
  }
  return std::nullopt;
}

}  // namespace detail

/// G with G^p = F over the number field when one exists: every square-free
/// multiplicity divisible by p and lc(F) an exact p-th power.
inline std::optional<NfPoly> is_perfect_pth_power_poly(const IntPoly& f, const LocalField& field) {
  if (f.is_zero()) return std::nullopt;
  const NumberField K(field);
  const std::int64_t p = field.p();
  const auto c = detail::exact_pth_root(f.lc(), field);
  if (!c) return std::nullopt;
  NfPoly root{K.from_ok(*c)};
  for (auto& [g, mult] : detail::yun(K, poly::to_nf(K, f))) {
    if (mult % p != 0) return std::nullopt;
    for (int i = 0; i < mult / p; ++i) root = nfpoly::mul(K, root, g);
  }
  return root;
}

/// Exact Sylvester-matrix resultant, computed by fraction-free (Bareiss)
/// elimination; exact divisions are carried out in Q(θ).
inline OKElem resultant(const IntPoly& f, const IntPoly& g, const LocalField& field) {
  if (f.is_zero() || g.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "resultant with the zero polynomial");
  const int m = f.degree(), n = g.degree();
  const int size = m + n;
  if (size == 0) return field.one();
  std::vector<std::vector<OKElem>> mat(size, std::vector<OKElem>(size, field.zero()));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) mat[r][r + i] = f.coeffs[m - i];
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) mat[n + r][r + i] = g.coeffs[n - i];
  const NumberField K(field);
  auto exact_div = [&](const OKElem& a, const OKElem& b) {
    if (field.dim() == 1) return field.from_int(a.coords[0] / b.coords[0]);
    return K.to_ok(K.div(K.from_ok(a), K.from_ok(b)));
  };
  bool negate = false;
  OKElem prev = field.one();
  for (int k = 0; k < size - 1; ++k) {
    if (mat[k][k].is_zero()) {
      int piv = k + 1;
      while (piv < size && mat[piv][k].is_zero()) ++piv;
      if (piv == size) return field.zero();
      std::swap(mat[piv], mat[k]);
      negate = !negate;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j) {
        OKElem num = field.mul(mat[i][j], mat[k][k]) - field.mul(mat[i][k], mat[k][j]);
        mat[i][j] = exact_div(num, prev);
      }
      mat[i][k] = field.zero();
    }
    prev = mat[k][k];
  }
  OKElem det = mat[size - 1][size - 1];
  return negate ? -det : det;
}

}  // namespace padicpow
