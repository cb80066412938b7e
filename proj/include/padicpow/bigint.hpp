#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace padicpow {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Sentinel valuation of zero.
inline constexpr std::int64_t kInfiniteOrd = INT64_MAX;

/// p-adic valuation of a rational integer; kInfiniteOrd for zero.
inline std::int64_t ord_p(const Int& x, std::int64_t p) {
  if (x == 0) return kInfiniteOrd;
  Int y = x;
  std::int64_t v = 0;
  while (y % p == 0) {
    y /= p;
    ++v;
  }
  return v;
}

inline Int ipow(const Int& base, std::int64_t exp) {
  Int result = 1;
  Int b = base;
  while (exp > 0) {
    if (exp & 1) result *= b;
    b *= b;
    exp >>= 1;
  }
  return result;
}

/// Least non-negative residue.
inline Int mod_floor(const Int& x, const Int& m) {
  Int r = x % m;
  if (r < 0) r += m;
  return r;
}

/// Inverse of a unit modulo m (m > 1, gcd(a, m) = 1).
inline Int mod_inverse(const Int& a, const Int& m) {
  Int old_r = mod_floor(a, m), r = m;
  Int old_s = 1, s = 0;
  while (r != 0) {
    Int q = old_r / r;
    Int t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  return mod_floor(old_s, m);
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

/// ceil of a non-negative-denominator rational as an integer.
inline std::int64_t ceil_rational(const Rational& r) {
  Int n = boost::multiprecision::numerator(r);
  Int d = boost::multiprecision::denominator(r);
  Int q = n / d;
  if (q * d != n && n > 0) q += 1;
  return static_cast<std::int64_t>(q);
}

inline std::string to_string(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1) return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

inline Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(Int(s));
  return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

}  // namespace padicpow
