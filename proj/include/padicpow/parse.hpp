#pragma once

#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "padicpow/polyring.hpp"

namespace padicpow {

namespace detail {

// Recursive-descent reader for expressions in x and t over Z:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := power (['*'] power)*
//   power  := atom ['^' integer]
//   atom   := integer | 'x' | 't' | '(' expr ')'
class ExprParser {
 public:
  ExprParser(const std::string& text, const LocalField& field) : field_(field) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
  }

  IntPoly parse() {
    if (s_.empty()) fail("empty expression");
    IntPoly r = expr();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, what + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
  }
  bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
  bool eat(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  IntPoly expr() {
    IntPoly r;
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    r = term();
    if (neg) r = poly::scale(r, field_.from_int(-1), field_);
    while (pos_ < s_.size()) {
      if (eat('+')) r = poly::add(r, term(), field_);
      else if (eat('-')) r = poly::sub(r, term(), field_);
      else break;
    }
    return r;
  }

  bool starts_atom() const {
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 't' || c == '(';
  }

  IntPoly term() {
    IntPoly r = power();
    while (true) {
      if (eat('*')) r = poly::mul(r, power(), field_);
      else if (starts_atom()) r = poly::mul(r, power(), field_);
      else break;
    }
    return r;
  }

  IntPoly power() {
    IntPoly base = atom();
    if (!eat('^')) return base;
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    const std::string digits = s_.substr(start, pos_ - start);
    if (digits.size() > 4) fail("exponent too large");
    return poly::pow(base, std::stoi(digits), field_);
  }

  IntPoly atom() {
    if (pos_ >= s_.size()) fail("unexpected end");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return poly::constant(field_.from_int(Int(s_.substr(start, pos_ - start))));
    }
    if (eat('x')) return IntPoly{{field_.zero(), field_.one()}};
    if (eat('t')) {
      if (field_.dim() == 1) fail("'t' needs an extension field");
      return poly::constant(field_.generator());
    }
    if (eat('(')) {
      IntPoly r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string s_;
  std::size_t pos_ = 0;
  const LocalField& field_;
};

inline std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace detail

/// Polynomial in x from an ASCII expression; `t` denotes the field generator.
inline IntPoly parse_polynomial(const std::string& text, const LocalField& field) {
  return detail::ExprParser(text, field).parse();
}

/// Field element from an expression in t (no x allowed).
inline OKElem parse_element(const std::string& text, const LocalField& field) {
  const IntPoly p = parse_polynomial(text, field);
  if (p.degree() > 0) throw Error(ErrorCode::ParseError, "element '" + text + "' must not contain x");
  return p.is_zero() ? field.zero() : p.constant();
}

/// Comma-separated coefficients, constant term first; each entry may use t.
inline IntPoly parse_coefficients(const std::string& text, const LocalField& field) {
  IntPoly out;
  for (const auto& item : detail::split_commas(text)) out.coeffs.push_back(parse_element(item, field));
  return poly::trimmed(std::move(out));
}

inline std::vector<Int> parse_integer_list(const std::string& text) {
  std::vector<Int> out;
  for (auto item : detail::split_commas(text)) {
    std::string t;
    for (char c : item)
      if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    const std::size_t start = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (t.size() == start) throw Error(ErrorCode::ParseError, "empty entry in '" + text + "'");
    for (std::size_t i = start; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i])))
        throw Error(ErrorCode::ParseError, "'" + item + "' is not an integer");
    out.push_back(Int(t[0] == '+' ? t.substr(1) : t));
  }
  return out;
}

/// Field from --p and zero or more --ext specs ("eis:<coeffs>" or
/// "unram:<coeffs>", defining polynomial constant term first).
inline LocalField parse_field(std::int64_t p, const std::vector<std::string>& exts) {
  std::optional<std::vector<Int>> unram, eis;
  for (const auto& e : exts) {
    const auto colon = e.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::ParseError, "extension '" + e + "' needs kind:coeffs");
    const std::string kind = e.substr(0, colon);
    auto coeffs = parse_integer_list(e.substr(colon + 1));
    if (kind == "eis") {
      if (eis) throw Error(ErrorCode::MixedTowerUnsupported, "only one Eisenstein extension is supported");
      eis = std::move(coeffs);
    } else if (kind == "unram") {
      if (unram) throw Error(ErrorCode::MixedTowerUnsupported, "only one unramified extension is supported");
      unram = std::move(coeffs);
    } else {
      throw Error(ErrorCode::ParseError, "unknown extension kind '" + kind + "'");
    }
  }
  return make_tower(p, unram, eis);
}

}  // namespace padicpow
