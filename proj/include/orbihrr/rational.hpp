#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "orbihrr/errors.hpp"

namespace orbihrr {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class; every constructor and arithmetic
/// result is canonicalized, so structural equality is value equality.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) : q_(static_cast<long>(value)) {}  // NOLINT: implicit, integers are rationals

  Rational(long num, long den) {
    if (den == 0) throw DivisionByZero();
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }

  explicit Rational(mpz_class integer) : q_(std::move(integer)) {}

  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Accepts "a", "-a", "a/b" with decimal integers.
  static Rational parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw ParseError("empty rational literal");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    bool seen_slash = false;
    bool digit_before = false;
    bool digit_after = false;
    for (std::size_t i = start; i < s.size(); ++i) {
      char c = s[i];
      if (c == '/' && !seen_slash) {
        seen_slash = true;
      } else if (c >= '0' && c <= '9') {
        (seen_slash ? digit_after : digit_before) = true;
      } else {
        throw ParseError("malformed rational literal '" + s + "'");
      }
    }
    if (!digit_before || (seen_slash && !digit_after)) {
      throw ParseError("malformed rational literal '" + s + "'");
    }
    if (s[0] == '+') s.erase(0, 1);
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw ParseError("malformed rational literal '" + s + "'");
    if (q.get_den() == 0) throw DivisionByZero("zero denominator in '" + s + "'");
    q.canonicalize();
    return Rational(std::move(q));
  }

  const mpq_class& value() const noexcept { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_zero() const noexcept { return sgn(q_) == 0; }
  bool is_one() const noexcept { return q_ == 1; }
  bool is_integer() const noexcept { return q_.get_den() == 1; }
  int sign() const noexcept { return sgn(q_); }

  Rational inverse() const {
    if (is_zero()) throw DivisionByZero();
    return Rational(mpq_class(1 / q_));
  }

  Rational operator-() const { return Rational(mpq_class(-q_)); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "p" or "p/q".
  std::string to_string() const { return q_.get_str(); }
  double to_double() const { return q_.get_d(); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  mpq_class q_{0};
};

}  // namespace orbihrr
