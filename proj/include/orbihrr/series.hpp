#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "orbihrr/cyclotomic.hpp"
#include "orbihrr/errors.hpp"
#include "orbihrr/rational.hpp"

namespace orbihrr {

/// Truncated power series Σ_{j≤D} c_j h^j over Q(ζ), arithmetic mod h^{D+1}.
///
/// Models a class in the Chow ring of one inertia sector of dimension D,
/// where h is the hyperplane class and h^{D+1} = 0.
class SectorClass {
 public:
  SectorClass() : SectorClass(0) {}
  explicit SectorClass(std::size_t dim) : coeffs_(dim + 1, Cyclotomic(0)) {}

  /// Coefficients beyond h^dim are dropped; missing ones are zero.
  SectorClass(std::size_t dim, std::vector<Cyclotomic> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(dim + 1, Cyclotomic(0));
  }

  static SectorClass constant(std::size_t dim, Cyclotomic c) {
    SectorClass s(dim);
    s.coeffs_[0] = std::move(c);
    return s;
  }
  static SectorClass one(std::size_t dim) { return constant(dim, Cyclotomic(1)); }

  /// c·h, truncated.
  static SectorClass h(std::size_t dim, Cyclotomic c = Cyclotomic(1)) {
    SectorClass s(dim);
    if (dim >= 1) s.coeffs_[1] = std::move(c);
    return s;
  }

  std::size_t dim() const noexcept { return coeffs_.size() - 1; }
  const Cyclotomic& coeff(std::size_t j) const { return coeffs_.at(j); }
  const std::vector<Cyclotomic>& coeffs() const noexcept { return coeffs_; }
  const Cyclotomic& top() const noexcept { return coeffs_.back(); }

  bool is_zero() const noexcept {
    for (const auto& c : coeffs_)
      if (!c.is_zero()) return false;
    return true;
  }

  SectorClass operator-() const {
    SectorClass r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  SectorClass& operator+=(const SectorClass& o) {
    check_dim(o);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
    return *this;
  }
  SectorClass& operator-=(const SectorClass& o) {
    check_dim(o);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
    return *this;
  }
  SectorClass& operator*=(const Cyclotomic& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  SectorClass& operator*=(const SectorClass& o) {
    check_dim(o);
    std::vector<Cyclotomic> r(coeffs_.size(), Cyclotomic(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; i + j < coeffs_.size(); ++j) {
        if (o.coeffs_[j].is_zero()) continue;
        r[i + j] += coeffs_[i] * o.coeffs_[j];
      }
    }
    coeffs_ = std::move(r);
    return *this;
  }

  friend SectorClass operator+(SectorClass a, const SectorClass& b) { return a += b; }
  friend SectorClass operator-(SectorClass a, const SectorClass& b) { return a -= b; }
  friend SectorClass operator*(SectorClass a, const SectorClass& b) { return a *= b; }
  friend SectorClass operator*(SectorClass a, const Cyclotomic& s) { return a *= s; }
  friend SectorClass operator*(const Cyclotomic& s, SectorClass a) { return a *= s; }

  friend bool operator==(const SectorClass& a, const SectorClass& b) { return a.coeffs_ == b.coeffs_; }

  /// Multiplicative inverse; requires a nonzero constant term.
  SectorClass inverse() const {
    if (coeffs_[0].is_zero()) throw NotInvertible("series with zero constant term is not a unit");
    Cyclotomic c0_inv = coeffs_[0].inverse();
    std::vector<Cyclotomic> r(coeffs_.size(), Cyclotomic(0));
    r[0] = c0_inv;
    for (std::size_t n = 1; n < coeffs_.size(); ++n) {
      Cyclotomic acc(0);
      for (std::size_t k = 1; k <= n; ++k)
        if (!coeffs_[k].is_zero()) acc += coeffs_[k] * r[n - k];
      r[n] = -(acc * c0_inv);
    }
    return SectorClass(dim(), std::move(r));
  }

  /// Principal square root Σ binom(1/2, k) v^k of 1 + v.
  SectorClass sqrt() const {
    if (!(coeffs_[0] == Cyclotomic(1)))
      throw std::domain_error("series square root requires constant term 1, got " + coeffs_[0].to_string());
    SectorClass v = *this - one(dim());
    SectorClass result = one(dim());
    SectorClass power = one(dim());
    Rational binom(1);
    for (std::size_t k = 1; k <= dim(); ++k) {
      binom *= (Rational(1, 2) - Rational(static_cast<long>(k) - 1)) / Rational(static_cast<long>(k));
      power *= v;
      result += power * Cyclotomic(binom);
    }
    return result;
  }

  /// Σ (-1)^j conj(c_j) h^j.
  SectorClass involution() const {
    SectorClass r = *this;
    for (std::size_t j = 0; j < r.coeffs_.size(); ++j) {
      r.coeffs_[j] = r.coeffs_[j].conjugate();
      if (j % 2 == 1) r.coeffs_[j] = -r.coeffs_[j];
    }
    return r;
  }

  /// Ascending in h, e.g. "1 + 1/2*h - 1/8*h^2"; non-rational coefficients
  /// are parenthesized.
  std::string to_string() const {
    std::string out;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
      const Cyclotomic& c = coeffs_[j];
      if (c.is_zero()) continue;
      bool negative = false;
      std::string coef;
      if (c.is_rational()) {
        Rational q = c.to_rational();
        negative = q.sign() < 0;
        Rational mag = negative ? -q : q;
        coef = (j > 0 && mag.is_one()) ? "" : mag.to_string();
      } else {
        coef = "(" + c.to_string() + ")";
      }
      std::string power = j == 0 ? "" : (j == 1 ? "h" : "h^" + std::to_string(j));
      std::string term = coef.empty() ? power : (power.empty() ? coef : coef + "*" + power);
      if (out.empty()) {
        out = negative ? "-" + term : term;
      } else {
        out += negative ? " - " : " + ";
        out += term;
      }
    }
    return out.empty() ? "0" : out;
  }

  friend std::ostream& operator<<(std::ostream& os, const SectorClass& s) { return os << s.to_string(); }

 private:
  void check_dim(const SectorClass& o) const {
    if (o.dim() != dim())
      throw Mismatch("sector classes truncated at different degrees (" + std::to_string(dim()) + " vs " +
                     std::to_string(o.dim()) + ")");
  }

  std::vector<Cyclotomic> coeffs_;
};

namespace detail {

// Σ coeffs[k] c^k for a nilpotent c (zero constant term).
inline SectorClass compose_nilpotent(const std::vector<Rational>& coeffs, const SectorClass& c) {
  if (!c.coeff(0).is_zero())
    throw std::domain_error("line series argument must have zero constant term, got " + c.to_string());
  SectorClass result = SectorClass::constant(c.dim(), Cyclotomic(coeffs[0]));
  SectorClass power = SectorClass::one(c.dim());
  for (std::size_t k = 1; k <= c.dim() && k < coeffs.size(); ++k) {
    power *= c;
    result += power * Cyclotomic(coeffs[k]);
  }
  return result;
}

inline std::vector<Rational> exp_coefficients(std::size_t n) {
  std::vector<Rational> e(n + 1, Rational(1));
  for (std::size_t k = 1; k <= n; ++k) e[k] = e[k - 1] / Rational(static_cast<long>(k));
  return e;
}

// Coefficients of t / (1 - e^{-t}) = 1 / Σ_k (-1)^k t^k / (k+1)!.
inline std::vector<Rational> todd_coefficients(std::size_t n) {
  std::vector<Rational> denom(n + 1);
  Rational fact(1);
  for (std::size_t k = 0; k <= n; ++k) {
    fact *= Rational(static_cast<long>(k) + 1);
    denom[k] = (k % 2 == 0 ? Rational(1) : Rational(-1)) / fact;
  }
  std::vector<Rational> inv(n + 1);
  inv[0] = Rational(1);
  for (std::size_t m = 1; m <= n; ++m) {
    Rational acc(0);
    for (std::size_t k = 1; k <= m; ++k) acc += denom[k] * inv[m - k];
    inv[m] = -acc;
  }
  return inv;
}

}  // namespace detail

/// e^c for a class c with zero constant term.
inline SectorClass exp_line(const SectorClass& c) {
  return detail::compose_nilpotent(detail::exp_coefficients(c.dim()), c);
}

/// Todd series c / (1 - e^{-c}) = 1 + c/2 + c²/12 - ... for c with zero constant term.
inline SectorClass todd_line(const SectorClass& c) {
  return detail::compose_nilpotent(detail::todd_coefficients(c.dim()), c);
}

}  // namespace orbihrr
