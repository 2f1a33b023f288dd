#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "orbihrr/errors.hpp"
#include "orbihrr/linalg.hpp"
#include "orbihrr/poly.hpp"
#include "orbihrr/rational.hpp"

namespace orbihrr {

namespace detail {

inline std::vector<long> compute_cyclotomic_polynomial(int n);

// Φ_n is cached per order; entries are never mutated after insertion.
inline const std::vector<long>& cyclotomic_polynomial_cached(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const std::vector<long>>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;
  }
  auto computed = std::make_unique<const std::vector<long>>(compute_cyclotomic_polynomial(n));
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.try_emplace(n, std::move(computed));
  return *it->second;
}

// x^n - 1 divided exactly by Φ_d for every proper divisor d of n.
inline std::vector<long> compute_cyclotomic_polynomial(int n) {
  std::vector<long> num(static_cast<std::size_t>(n) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const std::vector<long>& div = cyclotomic_polynomial_cached(d);
    // Exact division by a monic integer polynomial.
    std::size_t db = div.size() - 1;
    std::vector<long> q(num.size() - db, 0);
    for (std::size_t i = num.size(); i-- > db;) {
      long c = num[i];
      q[i - db] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j <= db; ++j) num[i - db + j] -= c * div[j];
    }
    for (std::size_t i = 0; i < db; ++i)
      if (num[i] != 0) throw ConsistencyError("cyclotomic polynomial division left a remainder");
    num = std::move(q);
  }
  return num;
}

}  // namespace detail

/// Coefficients of Φ_n, low degree first; Φ_n is monic of degree φ(n).
inline const std::vector<long>& cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
  return detail::cyclotomic_polynomial_cached(n);
}

inline int euler_totient(int n) { return static_cast<int>(cyclotomic_polynomial(n).size()) - 1; }

inline long mod_floor(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

/// Exact element of the cyclotomic field Q(ζ_N).
///
/// Stored as the residue of a rational polynomial in ζ_N modulo Φ_N, so the
/// coefficient vector always has length φ(N) and is unique per value at a
/// given order. Binary operations lift both operands to the lcm of their
/// orders; the result keeps that order.
class Cyclotomic {
 public:
  Cyclotomic() : coeffs_{Rational(0)} {}

  Cyclotomic(Rational value) : coeffs_{std::move(value)} {}  // NOLINT: implicit embedding Q -> Q(ζ)

  template <std::integral I>
  Cyclotomic(I value) : coeffs_{Rational(value)} {}  // NOLINT

  /// Residue of Σ poly[j] ζ_N^j; poly may have any length.
  static Cyclotomic from_poly(int order, std::vector<Rational> poly) {
    Cyclotomic c;
    c.order_ = order;
    c.coeffs_ = reduce(order, std::move(poly));
    return c;
  }

  /// ζ_N^k in canonical form of order N.
  static Cyclotomic root_of_unity(int order, long k) {
    if (order < 1) throw std::invalid_argument("root of unity order must be positive");
    std::vector<Rational> poly(static_cast<std::size_t>(mod_floor(k, order)) + 1, Rational(0));
    poly.back() = Rational(1);
    return from_poly(order, std::move(poly));
  }

  int order() const noexcept { return order_; }
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }

  bool is_zero() const noexcept {
    for (const auto& c : coeffs_)
      if (!c.is_zero()) return false;
    return true;
  }

  /// True when the value lies in Q (only the constant coefficient is nonzero).
  bool is_rational() const noexcept {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (!coeffs_[i].is_zero()) return false;
    return true;
  }

  Rational to_rational() const {
    if (!is_rational()) throw ConsistencyError("cyclotomic value " + to_string() + " is not rational");
    return coeffs_[0];
  }

  /// Image under Q(ζ_N) -> Q(ζ_M), ζ_N = ζ_M^{M/N}; requires N | M.
  Cyclotomic embed(int target) const {
    if (target == order_) return *this;
    if (target < 1 || target % order_ != 0)
      throw Mismatch("cannot embed order " + std::to_string(order_) + " into order " + std::to_string(target));
    std::size_t step = static_cast<std::size_t>(target / order_);
    std::vector<Rational> poly((coeffs_.size() - 1) * step + 1, Rational(0));
    for (std::size_t j = 0; j < coeffs_.size(); ++j) poly[j * step] = coeffs_[j];
    return from_poly(target, std::move(poly));
  }

  /// Same value at the smallest order d | N whose field contains it.
  Cyclotomic reduce_order() const {
    if (is_rational()) return Cyclotomic(coeffs_[0]);
    for (int d = 2; d < order_; ++d) {
      if (order_ % d != 0) continue;
      // Express this value in the basis ζ_d^j = ζ_N^{(N/d) j}, j < φ(d).
      int phi_d = euler_totient(d);
      std::size_t rows = coeffs_.size();
      Matrix<Rational> basis(rows, static_cast<std::size_t>(phi_d));
      for (int j = 0; j < phi_d; ++j) {
        Cyclotomic e = root_of_unity(d, j).embed(order_);
        for (std::size_t r = 0; r < rows; ++r) basis(r, static_cast<std::size_t>(j)) = e.coeffs_[r];
      }
      std::vector<Rational> x;
      if (basis.solve(coeffs_, x)) return from_poly(d, std::move(x));
    }
    return *this;
  }

  /// Field automorphism ζ_N ↦ ζ_N^{-1}, i.e. complex conjugation.
  Cyclotomic conjugate() const {
    if (order_ <= 2) return *this;
    std::vector<Rational> poly(static_cast<std::size_t>(order_), Rational(0));
    poly[0] = coeffs_[0];
    for (std::size_t j = 1; j < coeffs_.size(); ++j) poly[static_cast<std::size_t>(order_) - j] = coeffs_[j];
    return from_poly(order_, std::move(poly));
  }

  /// Multiplicative inverse via extended Euclid against Φ_N.
  Cyclotomic inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic");
    std::vector<Rational> a(coeffs_.begin(), coeffs_.end());
    std::vector<Rational> m;
    for (long c : cyclotomic_polynomial(order_)) m.emplace_back(c);
    // Φ_N is irreducible, so every nonzero residue is a unit.
    return from_poly(order_, poly::inverse_mod(a, m));
  }

  Cyclotomic pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclotomic result = Cyclotomic(1).embed(order_);
    Cyclotomic base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      e >>= 1;
      if (e > 0) base *= base;
    }
    return result;
  }

  Cyclotomic operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  Cyclotomic& operator+=(const Cyclotomic& o) {
    if (o.order_ == order_) {
      for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
      return *this;
    }
    int m = std::lcm(order_, o.order_);
    Cyclotomic a = embed(m);
    Cyclotomic b = o.embed(m);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
    return *this = std::move(a);
  }

  Cyclotomic& operator-=(const Cyclotomic& o) { return *this += -o; }

  Cyclotomic& operator*=(const Cyclotomic& o) {
    if (o.is_rational() && o.order_ == 1) {
      for (auto& c : coeffs_) c *= o.coeffs_[0];
      return *this;
    }
    int m = std::lcm(order_, o.order_);
    Cyclotomic a = embed(m);
    Cyclotomic b = o.embed(m);
    std::vector<Rational> prod(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (b.coeffs_[j].is_zero()) continue;
        prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return *this = from_poly(m, std::move(prod));
  }

  Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

  /// Value equality, comparing at the lcm of the two orders.
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
    int m = std::lcm(a.order_, b.order_);
    return a.embed(m).coeffs_ == b.embed(m).coeffs_;
  }

  /// Polynomial in z<N>, highest power first, e.g. "1/3*z12^5 - 2".
  std::string to_string() const {
    std::string out;
    const std::string var = "z" + std::to_string(order_);
    for (std::size_t j = coeffs_.size(); j-- > 0;) {
      const Rational& c = coeffs_[j];
      if (c.is_zero()) continue;
      bool negative = c.sign() < 0;
      Rational mag = negative ? -c : c;
      std::string term;
      if (j == 0) {
        term = mag.to_string();
      } else {
        std::string power = j == 1 ? var : var + "^" + std::to_string(j);
        term = mag.is_one() ? power : mag.to_string() + "*" + power;
      }
      if (out.empty()) {
        out = negative ? "-" + term : term;
      } else {
        out += negative ? " - " : " + ";
        out += term;
      }
    }
    return out.empty() ? "0" : out;
  }

  /// Diagnostic only: value under ζ_N = exp(2πi/N).
  std::complex<double> to_complex() const {
    std::complex<double> z = std::polar(1.0, 2.0 * std::numbers::pi / order_);
    std::complex<double> acc = 0.0;
    for (std::size_t j = coeffs_.size(); j-- > 0;) acc = acc * z + coeffs_[j].to_double();
    return acc;
  }

  friend std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.to_string(); }

 private:
  static std::vector<Rational> reduce(int order, std::vector<Rational> poly) {
    const std::vector<long>& phi = cyclotomic_polynomial(order);
    const std::size_t deg = phi.size() - 1;
    for (std::size_t i = poly.size(); i-- > deg;) {
      if (poly[i].is_zero()) continue;
      Rational c = poly[i];
      for (std::size_t j = 0; j < deg; ++j)
        if (phi[j] != 0) poly[i - deg + j] -= c * Rational(phi[j]);
      poly[i] = Rational(0);
    }
    poly.resize(deg, Rational(0));
    return poly;
  }

  int order_ = 1;
  std::vector<Rational> coeffs_;
};

}  // namespace orbihrr
