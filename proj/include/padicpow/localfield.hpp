#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "padicpow/bigint.hpp"
#include "padicpow/error.hpp"

namespace padicpow {

/// Element of the valuation-ring model Z[θ]: integer coordinates in the power
/// basis 1, θ, ..., θ^{n-1}. All elements of one field share the same length.
struct OKElem {
  std::vector<Int> coords;

  bool is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](const Int& c) { return c == 0; });
  }

  friend bool operator==(const OKElem&, const OKElem&) = default;

  OKElem& operator+=(const OKElem& o) {
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
    return *this;
  }
  OKElem& operator-=(const OKElem& o) {
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
    return *this;
  }
  friend OKElem operator+(OKElem a, const OKElem& b) { return a += b; }
  friend OKElem operator-(OKElem a, const OKElem& b) { return a -= b; }
  friend OKElem operator-(OKElem a) {
    for (auto& c : a.coords) c = -c;
    return a;
  }
  friend OKElem operator*(const Int& s, OKElem a) {
    for (auto& c : a.coords) c *= s;
    return a;
  }

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (coords[i] == 0 && coords.size() > 1) continue;
      std::string c = coords[i].str();
      if (!out.empty()) out += (coords[i] < 0) ? "" : "+";
      if (i == 0) {
        out += c;
      } else {
        if (coords[i] == 1) c = "";
        else if (coords[i] == -1) c = "-";
        else c += "*";
        out += c + (i == 1 ? std::string("t") : "t^" + std::to_string(i));
      }
    }
    return out.empty() ? "0" : out;
  }
};

struct OKElemHash {
  std::size_t operator()(const OKElem& x) const {
    std::size_t h = 1469598103934665603ull;
    for (const auto& c : x.coords) {
      h ^= std::hash<std::string>{}(c.str());
      h *= 1099511628211ull;
    }
    return h;
  }
};

enum class FieldKind { Base, Unramified, Eisenstein };

inline std::string to_string(FieldKind k) {
  switch (k) {
    case FieldKind::Base: return "base";
    case FieldKind::Unramified: return "unramified";
    case FieldKind::Eisenstein: return "eisenstein";
  }
  return "?";
}

/// Residue enumeration refuses to materialize more elements than this.
inline constexpr std::uint64_t kDefaultResidueCap = std::uint64_t{1} << 22;

/// One of three concrete local-field models: Q_p, an unramified extension
/// Q_p[θ]/(g) with g irreducible mod p, or a totally ramified extension cut
/// out by an Eisenstein polynomial. Immutable once built by make_field.
class LocalField {
 public:
  std::int64_t p() const { return p_; }
  FieldKind kind() const { return kind_; }
  int e() const { return e_; }
  int f() const { return f_; }
  /// Dimension of the power basis, max(e, f).
  int dim() const { return static_cast<int>(std::max(e_, f_)); }
  /// Monic defining polynomial, low degree first; {0, 1} for the base field.
  const std::vector<Int>& defining_poly() const { return defining_poly_; }
  const OKElem& uniformizer() const { return uniformizer_; }

  OKElem zero() const { return OKElem{std::vector<Int>(dim(), Int(0))}; }
  OKElem from_int(const Int& v) const {
    OKElem x = zero();
    x.coords[0] = v;
    return x;
  }
  OKElem one() const { return from_int(1); }
  /// The generator θ (equals p in the base field).
  OKElem generator() const {
    if (dim() == 1) return from_int(p_);
    OKElem x = zero();
    x.coords[1] = 1;
    return x;
  }
  OKElem from_coords(std::vector<Int> coords) const {
    if (coords.size() > static_cast<std::size_t>(dim())) return reduce_poly(std::move(coords));
    coords.resize(dim(), Int(0));
    return OKElem{std::move(coords)};
  }

  OKElem mul(const OKElem& a, const OKElem& b) const {
    const int n = dim();
    if (n == 1) return OKElem{{a.coords[0] * b.coords[0]}};
    std::vector<Int> prod(2 * n - 1, Int(0));
    for (int i = 0; i < n; ++i) {
      if (a.coords[i] == 0) continue;
      for (int j = 0; j < n; ++j) prod[i + j] += a.coords[i] * b.coords[j];
    }
    return reduce_poly(std::move(prod));
  }

  OKElem pow(OKElem base, std::int64_t exp) const {
    OKElem result = one();
    while (exp > 0) {
      if (exp & 1) result = mul(result, base);
      exp >>= 1;
      if (exp > 0) base = mul(base, base);
    }
    return result;
  }

  OKElem pi_pow(std::int64_t k) const {
    if (kind_ != FieldKind::Eisenstein) return from_int(ipow(Int(p_), k));
    return pow(uniformizer_, k);
  }

  /// Normalized valuation; kInfiniteOrd for zero.
  std::int64_t ord(const OKElem& x) const {
    std::int64_t best = kInfiniteOrd;
    for (int i = 0; i < dim(); ++i) {
      const Int& c = x.coords[i];
      if (c == 0) continue;
      std::int64_t v = ord_p(c, p_);
      std::int64_t w = (kind_ == FieldKind::Eisenstein) ? e_ * v + i : v;
      best = std::min(best, w);
    }
    return best;
  }

  std::int64_t ord(const Int& x) const { return x == 0 ? kInfiniteOrd : e_ * ord_p(x, p_); }

  bool congruent(const OKElem& a, const OKElem& b, std::int64_t k) const { return ord(a - b) >= k; }

  /// Canonical representative of x modulo 𝔭^k, drawn from residues(k).
  OKElem reduce(const OKElem& x, std::int64_t k) const {
    if (k <= 0) return zero();
    if (kind_ != FieldKind::Eisenstein) {
      Int m = ipow(Int(p_), k);
      OKElem r = x;
      for (auto& c : r.coords) c = mod_floor(c, m);
      return r;
    }
    return theta_digits(x, 0, k);
  }

  /// For x ≠ 0 returns (ord x, canonical residue of x/π^{ord x} modulo 𝔭^k).
  std::pair<std::int64_t, OKElem> split_valuation(const OKElem& x, std::int64_t k) const {
    std::int64_t v = ord(x);
    if (v == kInfiniteOrd) throw Error(ErrorCode::ZeroArgument, "split_valuation of zero");
    if (kind_ != FieldKind::Eisenstein) {
      Int pv = ipow(Int(p_), v);
      OKElem u = x;
      for (auto& c : u.coords) c /= pv;
      return {v, reduce(u, k)};
    }
    return {v, theta_digits(x, v, k)};
  }

  std::uint64_t residue_count(std::int64_t k, std::uint64_t cap = kDefaultResidueCap) const {
    std::uint64_t count = 1;
    const std::uint64_t base = static_cast<std::uint64_t>(p_);
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(f_) * k; ++i) {
      count *= base;
      if (count > cap)
        throw Error(ErrorCode::KTooLargeForMemory,
                    "residue system modulo p^" + std::to_string(k) + " exceeds cap " + std::to_string(cap));
    }
    return count;
  }

  /// The residue with the given index in the deterministic ordering: the
  /// base-p digits of the index are the digits of the element.
  OKElem residue_at(std::uint64_t index, std::int64_t k) const {
    OKElem x = zero();
    const Int pi(p_);
    if (kind_ == FieldKind::Eisenstein) {
      std::vector<Int> digits;
      for (std::int64_t i = 0; i < k; ++i) {
        digits.push_back(Int(index % static_cast<std::uint64_t>(p_)));
        index /= static_cast<std::uint64_t>(p_);
      }
      return from_theta_digits(digits);
    }
    const std::uint64_t pk = static_cast<std::uint64_t>(ipow(pi, k));
    for (int j = 0; j < dim(); ++j) {
      x.coords[j] = Int(index % pk);
      index /= pk;
    }
    return x;
  }

  /// Complete residue system of O/𝔭^k: exactly p^{f k} elements.
  std::vector<OKElem> residues(std::int64_t k, std::uint64_t cap = kDefaultResidueCap) const {
    if (k < 1) throw Error(ErrorCode::InvalidField, "residues requires k >= 1");
    const std::uint64_t n = residue_count(k, cap);
    std::vector<OKElem> out;
    out.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) out.push_back(residue_at(i, k));
    return out;
  }

  std::string description() const {
    std::string d = "Q_" + std::to_string(p_);
    if (kind_ == FieldKind::Base) return d;
    d += "(t), ";
    std::string poly;
    for (std::size_t i = defining_poly_.size(); i-- > 0;) {
      if (defining_poly_[i] == 0) continue;
      if (!poly.empty()) poly += defining_poly_[i] < 0 ? "-" : "+";
      else if (defining_poly_[i] < 0) poly += "-";
      Int a = abs(defining_poly_[i]);
      if (i == 0 || a != 1) poly += a.str();
      if (i > 0) poly += i == 1 ? std::string("t") : "t^" + std::to_string(i);
    }
    return d + poly + "=0 (" + to_string(kind_) + ", e=" + std::to_string(e_) + ", f=" + std::to_string(f_) + ")";
  }

  friend bool operator==(const LocalField& a, const LocalField& b) {
    return a.p_ == b.p_ && a.kind_ == b.kind_ && a.defining_poly_ == b.defining_poly_;
  }

 private:
  friend LocalField make_field(std::int64_t, FieldKind, const std::vector<Int>&);

  OKElem reduce_poly(std::vector<Int> prod) const {
    const int n = dim();
    for (int i = static_cast<int>(prod.size()) - 1; i >= n; --i) {
      if (prod[i] == 0) continue;
      Int c = prod[i];
      prod[i] = 0;
      for (int j = 0; j < n; ++j) prod[i - n + j] -= c * defining_poly_[j];
    }
    prod.resize(n);
    return OKElem{std::move(prod)};
  }

  OKElem from_theta_digits(const std::vector<Int>& digits) const {
    OKElem r = zero();
    const OKElem theta = generator();
    for (std::size_t i = digits.size(); i-- > 0;) {
      r = mul(r, theta);
      r.coords[0] += digits[i];
    }
    return r;
  }

  // Eisenstein only: divide by θ^skip (x must have ord ≥ skip), then read k
  // θ-adic digits in {0..p-1}. Arithmetic is carried modulo p^N with N large
  // enough that every step keeps at least k - i digits of precision.
  // Division uses θ(θ^{e-1} + ... + a_1) = -a_0 = -p·u0, i.e.
  // p/θ = -(a_1 + ... + θ^{e-1}) / u0 with u0 a p-adic unit.
  OKElem theta_digits(const OKElem& x, std::int64_t skip, std::int64_t k) const {
    const std::int64_t n = e_;
    const std::int64_t N = ceil_div(skip + k, n) + 1;
    const Int P = ipow(Int(p_), N);
    const Int inv = mod_inverse(defining_poly_[0] / p_, P);
    std::vector<Int> p_over_theta(n);
    for (std::int64_t i = 0; i < n; ++i) p_over_theta[i] = mod_floor(-defining_poly_[i + 1] * inv, P);
    std::vector<Int> w(x.coords);
    for (auto& c : w) c = mod_floor(c, P);
    auto div_theta = [&]() {
      Int q = w[0] / p_;
      for (std::int64_t i = 0; i + 1 < n; ++i) w[i] = w[i + 1];
      w[n - 1] = 0;
      for (std::int64_t i = 0; i < n; ++i) w[i] = mod_floor(w[i] + q * p_over_theta[i], P);
    };
    for (std::int64_t s = 0; s < skip; ++s) {
      w[0] = mod_floor(w[0], P);
      div_theta();
    }
    std::vector<Int> digits;
    digits.reserve(k);
    for (std::int64_t i = 0; i < k; ++i) {
      Int d = mod_floor(w[0], Int(p_));
      digits.push_back(d);
      w[0] -= d;
      if (i + 1 < k) div_theta();
    }
    return from_theta_digits(digits);
  }

  std::int64_t p_ = 2;
  FieldKind kind_ = FieldKind::Base;
  int e_ = 1;
  int f_ = 1;
  std::vector<Int> defining_poly_{Int(0), Int(1)};
  OKElem uniformizer_;
};

namespace detail {

// Irreducibility of a monic polynomial over F_p by trial division with every
// monic polynomial of degree ≤ deg/2.
inline bool irreducible_mod_p(std::vector<Int> g, std::int64_t p) {
  for (auto& c : g) c = mod_floor(c, Int(p));
  const int deg = static_cast<int>(g.size()) - 1;
  for (int d = 1; d <= deg / 2; ++d) {
    std::uint64_t total = 1;
    for (int i = 0; i < d; ++i) total *= static_cast<std::uint64_t>(p);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::vector<std::int64_t> h(d + 1, 0);
      std::uint64_t t = idx;
      for (int i = 0; i < d; ++i) {
        h[i] = static_cast<std::int64_t>(t % p);
        t /= p;
      }
      h[d] = 1;
      std::vector<std::int64_t> r(deg + 1);
      for (int i = 0; i <= deg; ++i) r[i] = static_cast<std::int64_t>(g[i]);
      for (int i = deg; i >= d; --i) {
        std::int64_t c = ((r[i] % p) + p) % p;
        if (c == 0) continue;
        for (int j = 0; j <= d; ++j) r[i - d + j] = ((r[i - d + j] - c * h[j]) % p + p) % p;
      }
      bool divides = true;
      for (int i = 0; i < d; ++i)
        if (r[i] % p != 0) divides = false;
      if (divides) return false;
    }
  }
  return true;
}

}  // namespace detail

/// Validates and builds a field. For Base the polynomial is ignored;
/// otherwise it is monic, low degree first, of degree ≥ 2.
inline LocalField make_field(std::int64_t p, FieldKind kind, const std::vector<Int>& defining_poly = {}) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  LocalField F;
  F.p_ = p;
  F.kind_ = kind;
  if (kind == FieldKind::Base) {
    F.uniformizer_ = F.from_int(p);
    return F;
  }
  std::vector<Int> g = defining_poly;
  while (!g.empty() && g.back() == 0) g.pop_back();
  if (g.size() < 3) throw Error(ErrorCode::InvalidField, "defining polynomial must have degree >= 2");
  if (g.back() != 1) throw Error(ErrorCode::InvalidField, "defining polynomial must be monic");
  const int n = static_cast<int>(g.size()) - 1;
  if (kind == FieldKind::Unramified) {
    if (!detail::irreducible_mod_p(g, p))
      throw Error(ErrorCode::NotIrreducibleModP, "defining polynomial is reducible modulo " + std::to_string(p));
    F.f_ = n;
    F.defining_poly_ = g;
    F.uniformizer_ = F.from_int(p);
    return F;
  }
  for (int i = 0; i < n; ++i)
    if (g[i] % p != 0) throw Error(ErrorCode::NotEisenstein, "non-leading coefficient not divisible by p");
  if (ord_p(g[0], p) != 1) throw Error(ErrorCode::NotEisenstein, "constant term must have p-adic valuation exactly 1");
  F.e_ = n;
  F.defining_poly_ = g;
  F.uniformizer_ = F.generator();
  return F;
}

/// Builds a field from an optional unramified and optional Eisenstein
/// polynomial; supplying both (a two-step tower) is rejected.
inline LocalField make_tower(std::int64_t p, const std::optional<std::vector<Int>>& unramified,
                             const std::optional<std::vector<Int>>& eisenstein) {
  if (unramified && eisenstein)
    throw Error(ErrorCode::MixedTowerUnsupported, "fields with both e > 1 and f > 1 are not supported");
  if (unramified) return make_field(p, FieldKind::Unramified, *unramified);
  if (eisenstein) return make_field(p, FieldKind::Eisenstein, *eisenstein);
  return make_field(p, FieldKind::Base);
}

}  // namespace padicpow
