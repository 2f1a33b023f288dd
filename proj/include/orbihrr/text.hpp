#pragma once

#include <cctype>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include "orbihrr/cyclotomic.hpp"
#include "orbihrr/errors.hpp"
#include "orbihrr/rings.hpp"
#include "orbihrr/series.hpp"

// Parsers for the exact text forms printed by to_string():
//   cyclotomic   1/3*z12^5 - 2
//   K-class      x^3 + (z3 + 1)*x^-1 - 1
//   sector class 1 + 1/2*h - 1/8*h^2
// The accepted grammar is a little wider than what is printed:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-' factor | atom ['^' ['-'] int]
//   atom   := int | 'z' int | var | '(' expr ')'
namespace orbihrr {

namespace detail {

class ExprParser {
 public:
  using Value = std::map<long, Cyclotomic>;  // exponent of the variable -> coefficient

  ExprParser(std::string_view text, char var, bool allow_negative_powers)
      : text_(text), var_(var), allow_negative_(allow_negative_powers) {}

  Value parse() {
    Value v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("cannot parse '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  static void add_into(Value& acc, const Value& v, bool negate) {
    for (const auto& [e, c] : v) {
      auto [it, inserted] = acc.try_emplace(e, negate ? -c : c);
      if (!inserted) it->second += negate ? -c : c;
      if (it->second.is_zero()) acc.erase(it);
    }
  }

  static Value multiply(const Value& a, const Value& b) {
    Value r;
    for (const auto& [ea, ca] : a)
      for (const auto& [eb, cb] : b) add_into(r, Value{{ea + eb, ca * cb}}, false);
    return r;
  }

  Value expr() {
    Value acc;
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    add_into(acc, term(), negate);
    for (;;) {
      if (accept('+')) add_into(acc, term(), false);
      else if (accept('-')) add_into(acc, term(), true);
      else break;
    }
    return acc;
  }

  Value term() {
    Value acc = factor();
    for (;;) {
      if (accept('*')) {
        acc = multiply(acc, factor());
      } else if (accept('/')) {
        Value d = factor();
        if (d.empty()) throw DivisionByZero("division by zero in '" + std::string(text_) + "'");
        if (d.size() != 1 || d.begin()->first != 0) fail("can only divide by a constant");
        Cyclotomic inv = d.begin()->second.inverse();
        for (auto& [e, c] : acc) c *= inv;
      } else {
        break;
      }
    }
    return acc;
  }

  Value factor() {
    if (accept('-')) {
      Value v = factor();
      for (auto& [e, c] : v) c = -c;
      return v;
    }
    Value base;
    bool is_root = false;
    int root_order = 1;
    bool is_var = false;
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      base = expr();
      if (!accept(')')) fail("expected ')'");
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational r = Rational::parse(digits());
      if (!r.is_zero()) base.emplace(0, Cyclotomic(r));
    } else if (c == 'z') {
      ++pos_;
      root_order = std::stoi(digits());
      if (root_order < 1) fail("root of unity order must be positive");
      is_root = true;
      base.emplace(0, Cyclotomic::root_of_unity(root_order, 1));
    } else if (var_ != '\0' && c == var_) {
      ++pos_;
      is_var = true;
      base.emplace(1, Cyclotomic(1));
    } else {
      fail("unexpected '" + std::string(1, c) + "'");
    }
    if (!accept('^')) return base;
    bool neg = accept('-');
    long k = std::stol(digits());
    if (neg) k = -k;
    if (is_root) return Value{{0, Cyclotomic::root_of_unity(root_order, k)}};
    if (is_var) {
      if (k < 0 && !allow_negative_) fail("negative power of " + std::string(1, var_));
      return Value{{k, Cyclotomic(1)}};
    }
    if (base.size() == 1) {
      const auto& [e, coef] = *base.begin();
      if (k < 0 && e != 0 && !allow_negative_) fail("negative power of a non-constant");
      return Value{{e * k, coef.pow(k)}};
    }
    if (k < 0) fail("negative power of a sum");
    Value r{{0, Cyclotomic(1)}};
    for (long i = 0; i < k; ++i) r = multiply(r, base);
    return r;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  char var_;
  bool allow_negative_;
};

}  // namespace detail

inline Cyclotomic parse_cyclotomic(std::string_view text) {
  auto v = detail::ExprParser(text, '\0', false).parse();
  if (v.empty()) return Cyclotomic(0);
  return v.begin()->second;
}

inline LaurentPoly parse_laurent(std::string_view text, char var = 'x') {
  auto v = detail::ExprParser(text, var, true).parse();
  return LaurentPoly(LaurentPoly::Terms(v.begin(), v.end()));
}

inline KClass parse_kclass(const KRing& ring, std::string_view text) { return KClass(ring, parse_laurent(text)); }

/// Terms beyond h^dim are truncated.
inline SectorClass parse_sector_class(std::size_t dim, std::string_view text) {
  auto v = detail::ExprParser(text, 'h', false).parse();
  std::vector<Cyclotomic> coeffs(dim + 1, Cyclotomic(0));
  for (const auto& [e, c] : v)
    if (e >= 0 && static_cast<std::size_t>(e) <= dim) coeffs[static_cast<std::size_t>(e)] = c;
  return SectorClass(dim, std::move(coeffs));
}

}  // namespace orbihrr
