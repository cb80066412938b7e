#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "padicpow/localfield.hpp"

namespace padicpow {

/// Element of the number field Q(θ) with rational coordinates.
struct NfElem {
  std::vector<Rational> coords;

  bool is_zero() const {
    for (const auto& c : coords)
      if (c != 0) return false;
    return true;
  }
  friend bool operator==(const NfElem&, const NfElem&) = default;
};

/// Arithmetic in Q(θ) = Q[x]/(g) for the defining polynomial of a LocalField.
class NumberField {
 public:
  explicit NumberField(const LocalField& field) : g_(field.defining_poly()), n_(field.dim()) {}

  int dim() const { return n_; }

  NfElem zero() const { return NfElem{std::vector<Rational>(n_, Rational(0))}; }
  NfElem from_rational(const Rational& r) const {
    NfElem x = zero();
    x.coords[0] = r;
    return x;
  }
  NfElem one() const { return from_rational(1); }
  NfElem from_ok(const OKElem& x) const {
    NfElem r = zero();
    for (int i = 0; i < n_; ++i) r.coords[i] = Rational(x.coords[i]);
    return r;
  }

  bool is_integral(const NfElem& x) const {
    for (const auto& c : x.coords)
      if (boost::multiprecision::denominator(c) != 1) return false;
    return true;
  }

  /// Requires integral coordinates.
  OKElem to_ok(const NfElem& x) const {
    OKElem r{std::vector<Int>(n_, Int(0))};
    for (int i = 0; i < n_; ++i) r.coords[i] = boost::multiprecision::numerator(x.coords[i]);
    return r;
  }

  NfElem add(NfElem a, const NfElem& b) const {
    for (int i = 0; i < n_; ++i) a.coords[i] += b.coords[i];
    return a;
  }
  NfElem sub(NfElem a, const NfElem& b) const {
    for (int i = 0; i < n_; ++i) a.coords[i] -= b.coords[i];
    return a;
  }
  NfElem neg(NfElem a) const {
    for (auto& c : a.coords) c = -c;
    return a;
  }
  NfElem scale(NfElem a, const Rational& s) const {
    for (auto& c : a.coords) c *= s;
    return a;
  }

  NfElem mul(const NfElem& a, const NfElem& b) const {
    if (n_ == 1) return NfElem{{a.coords[0] * b.coords[0]}};
    std::vector<Rational> prod(2 * n_ - 1, Rational(0));
    for (int i = 0; i < n_; ++i) {
      if (a.coords[i] == 0) continue;
      for (int j = 0; j < n_; ++j) prod[i + j] += a.coords[i] * b.coords[j];
    }
    for (int i = 2 * n_ - 2; i >= n_; --i) {
      if (prod[i] == 0) continue;
      Rational c = prod[i];
      prod[i] = 0;
      for (int j = 0; j < n_; ++j) prod[i - n_ + j] -= c * Rational(g_[j]);
    }
    prod.resize(n_);
    return NfElem{std::move(prod)};
  }

  /// Inverse of a nonzero element: solves (multiplication-by-a matrix)·x = 1.
  NfElem inv(const NfElem& a) const {
    if (a.is_zero()) throw Error(ErrorCode::ZeroArgument, "inverse of zero");
    if (n_ == 1) return NfElem{{Rational(1) / a.coords[0]}};
    // column j of the matrix is a·θ^j
    std::vector<std::vector<Rational>> m(n_, std::vector<Rational>(n_ + 1, Rational(0)));
    NfElem col = a;
    NfElem theta = zero();
    theta.coords[1] = 1;
    for (int j = 0; j < n_; ++j) {
      for (int i = 0; i < n_; ++i) m[i][j] = col.coords[i];
      col = mul(col, theta);
    }
    m[0][n_] = 1;
    for (int c = 0; c < n_; ++c) {
      int piv = c;
      while (piv < n_ && m[piv][c] == 0) ++piv;
      if (piv == n_) throw Error(ErrorCode::ZeroArgument, "singular multiplication matrix");
      std::swap(m[piv], m[c]);
      for (int r = 0; r < n_; ++r) {
        if (r == c || m[r][c] == 0) continue;
        Rational factor = m[r][c] / m[c][c];
        for (int k = c; k <= n_; ++k) m[r][k] -= factor * m[c][k];
      }
    }
    NfElem x = zero();
    for (int i = 0; i < n_; ++i) x.coords[i] = m[i][n_] / m[i][i];
    return x;
  }

  NfElem div(const NfElem& a, const NfElem& b) const { return mul(a, inv(b)); }

  /// lcm of the denominators of the coordinates.
  Int denominator(const NfElem& x) const {
    Int l = 1;
    for (const auto& c : x.coords) {
      Int d = boost::multiprecision::denominator(c);
      l = l / boost::multiprecision::gcd(l, d) * d;
    }
    return l;
  }

 private:
  std::vector<Int> g_;
  int n_;
};

/// Polynomial with Q(θ) coefficients, low degree first, no trailing zeros.
using NfPoly = std::vector<NfElem>;

namespace nfpoly {

inline void trim(NfPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

inline int degree(const NfPoly& a) { return static_cast<int>(a.size()) - 1; }

inline NfPoly derivative(const NumberField& K, const NfPoly& a) {
  NfPoly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(K.scale(a[i], Rational(static_cast<long long>(i))));
  trim(d);
  return d;
}

inline NfPoly sub(const NumberField& K, NfPoly a, const NfPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), K.zero());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = K.sub(a[i], b[i]);
  trim(a);
  return a;
}

inline NfPoly mul(const NumberField& K, const NfPoly& a, const NfPoly& b) {
  if (a.empty() || b.empty()) return {};
  NfPoly r(a.size() + b.size() - 1, K.zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = K.add(r[i + j], K.mul(a[i], b[j]));
  trim(r);
  return r;
}

/// (quotient, remainder) of a by nonzero b.
inline std::pair<NfPoly, NfPoly> divmod(const NumberField& K, NfPoly a, const NfPoly& b) {
  trim(a);
  const int db = degree(b);
  if (degree(a) < db) return {{}, a};
  NfPoly q(a.size() - b.size() + 1, K.zero());
  const NfElem lead_inv = K.inv(b.back());
  while (!a.empty() && degree(a) >= db) {
    const int shift = degree(a) - db;
    NfElem c = K.mul(a.back(), lead_inv);
    q[shift] = c;
    for (int i = 0; i <= db; ++i) a[shift + i] = K.sub(a[shift + i], K.mul(c, b[i]));
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

inline NfPoly monic(const NumberField& K, NfPoly a) {
  if (a.empty()) return a;
  const NfElem inv = K.inv(a.back());
  for (auto& c : a) c = K.mul(c, inv);
  return a;
}

inline NfPoly gcd(const NumberField& K, NfPoly a, NfPoly b) {
  trim(a);
  trim(b);
  b = monic(K, std::move(b));
  while (!b.empty()) {
    NfPoly r = monic(K, divmod(K, a, b).second);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(K, a);
}

inline NfPoly exact_div(const NumberField& K, const NfPoly& a, const NfPoly& b) { return divmod(K, a, b).first; }

}  // namespace nfpoly

}  // namespace padicpow
