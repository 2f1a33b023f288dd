#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "orbihrr/cyclotomic.hpp"
#include "orbihrr/errors.hpp"
#include "orbihrr/poly.hpp"

namespace orbihrr {

/// Finitely supported Σ c_e x^e, e ∈ Z, with no stored zero coefficients.
class LaurentPoly {
 public:
  using Terms = std::map<long, Cyclotomic>;

  LaurentPoly() = default;
  explicit LaurentPoly(Terms terms) {
    for (auto& [e, c] : terms) add_term(e, std::move(c));
  }

  static LaurentPoly monomial(long exponent, Cyclotomic c = Cyclotomic(1)) {
    LaurentPoly p;
    p.add_term(exponent, std::move(c));
    return p;
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  long min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  long max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  Cyclotomic coeff(long e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Cyclotomic(0) : it->second;
  }

  void add_term(long e, const Cyclotomic& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  LaurentPoly& operator*=(const Cyclotomic& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const Cyclotomic& s) { return a *= s; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// x^e ↦ conj(c) x^{-e}.
  LaurentPoly dual() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.add_term(-e, c.conjugate());
    return r;
  }

  /// Highest power first in the variable `var`, e.g. "x^3 + x^2 - 1".
  std::string to_string(const std::string& var = "x") const {
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      bool negative = false;
      std::string coef;
      if (c.is_rational()) {
        Rational q = c.to_rational();
        negative = q.sign() < 0;
        Rational mag = negative ? -q : q;
        coef = (e != 0 && mag.is_one()) ? "" : mag.to_string();
      } else {
        coef = "(" + c.to_string() + ")";
      }
      std::string power = e == 0 ? "" : (e == 1 ? var : var + "^" + std::to_string(e));
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

 private:
  Terms terms_;
};

/// Grothendieck ring Z[x, x^{-1}] / ⟨∏ (x^{a_i} - 1)⟩ of the weighted projective
/// stack P(a_0, ..., a_n), or the free Laurent ring when built with `free()`.
///
/// Handles are cheap to copy and share one immutable description.
class KRing {
 public:
  /// Throws std::invalid_argument for an empty list or a weight below 1.
  static KRing weighted(std::vector<long> weights) {
    if (weights.empty()) throw std::invalid_argument("K-ring needs at least one weight");
    std::vector<long> relation{1};
    for (long a : weights) {
      if (a < 1) throw std::invalid_argument("K-ring weights must be positive, got " + std::to_string(a));
      // relation *= (x^a - 1)
      std::vector<long> next(relation.size() + static_cast<std::size_t>(a), 0);
      for (std::size_t i = 0; i < relation.size(); ++i) {
        next[i + static_cast<std::size_t>(a)] += relation[i];
        next[i] -= relation[i];
      }
      relation = std::move(next);
    }
    auto data = std::make_shared<Data>();
    data->weights = std::move(weights);
    data->relation = std::move(relation);
    // x^{-1} = -r_0 (r_1 + r_2 x + ... + r_D x^{D-1}) since r_0 = ±1.
    long r0 = data->relation.front();
    for (std::size_t j = 1; j < data->relation.size(); ++j) data->x_inverse.push_back(-r0 * data->relation[j]);
    return KRing(std::move(data));
  }

  /// Z[x, x^{-1}] with no relation.
  static KRing free() { return KRing(std::make_shared<Data>()); }

  bool is_free() const noexcept { return data_->relation.empty(); }
  std::span<const long> weights() const noexcept { return data_->weights; }
  /// Coefficients of ∏ (x^{a_i} - 1), low degree first; empty for the free ring.
  std::span<const long> relation() const noexcept { return data_->relation; }
  std::size_t degree() const noexcept { return is_free() ? 0 : data_->relation.size() - 1; }

  /// Human-readable presentation, e.g. "Z[x]/<(x^2 - 1)*(x^3 - 1)>".
  std::string presentation() const {
    if (is_free()) return "Z[x, x^-1]";
    std::string out = "Z[x]/<";
    for (std::size_t i = 0; i < data_->weights.size(); ++i) {
      if (i) out += "*";
      long a = data_->weights[i];
      out += a == 1 ? "(x - 1)" : "(x^" + std::to_string(a) + " - 1)";
    }
    return out + ">";
  }

  LaurentPoly relation_poly() const {
    LaurentPoly p;
    for (std::size_t i = 0; i < data_->relation.size(); ++i)
      p.add_term(static_cast<long>(i), Cyclotomic(data_->relation[i]));
    return p;
  }

  /// Canonical representative: the remainder modulo the relation with
  /// exponents in [0, degree); identity on the free ring.
  LaurentPoly reduce(const LaurentPoly& p) const {
    if (is_free()) return p;
    const std::size_t deg = degree();
    std::vector<Cyclotomic> acc(deg, Cyclotomic(0));
    // Negative exponents: Horner in x^{-1}.
    long lo = p.min_exponent();
    if (!p.is_zero() && lo < 0) {
      for (long e = lo; e < 0; ++e) {
        acc[0] += p.coeff(e);
        acc = times_x_inverse(std::move(acc));
      }
    }
    // Nonnegative exponents: schoolbook remainder by the monic relation.
    if (!p.is_zero() && p.max_exponent() >= 0) {
      std::vector<Cyclotomic> pos(static_cast<std::size_t>(p.max_exponent()) + 1, Cyclotomic(0));
      for (const auto& [e, c] : p.terms())
        if (e >= 0) pos[static_cast<std::size_t>(e)] = c;
      for (std::size_t i = pos.size(); i-- > deg;) {
        if (pos[i].is_zero()) continue;
        Cyclotomic c = pos[i];
        for (std::size_t j = 0; j < deg; ++j)
          if (data_->relation[j] != 0) pos[i - deg + j] -= c * Cyclotomic(data_->relation[j]);
        pos[i] = Cyclotomic(0);
      }
      for (std::size_t i = 0; i < deg && i < pos.size(); ++i) acc[i] += pos[i];
    }
    LaurentPoly r;
    for (std::size_t i = 0; i < deg; ++i) r.add_term(static_cast<long>(i), acc[i]);
    return r;
  }

  friend bool operator==(const KRing& a, const KRing& b) {
    return a.data_ == b.data_ || (a.data_->weights == b.data_->weights && a.is_free() == b.is_free());
  }

 private:
  struct Data {
    std::vector<long> weights;
    std::vector<long> relation;
    std::vector<long> x_inverse;
  };

  explicit KRing(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  // r = r_0 + x r'  ↦  r_0 x^{-1} + r'.
  std::vector<Cyclotomic> times_x_inverse(std::vector<Cyclotomic> r) const {
    Cyclotomic r0 = r[0];
    for (std::size_t i = 0; i + 1 < r.size(); ++i) r[i] = r[i + 1];
    r.back() = Cyclotomic(0);
    if (!r0.is_zero())
      for (std::size_t j = 0; j < r.size(); ++j)
        if (data_->x_inverse[j] != 0) r[j] += r0 * Cyclotomic(data_->x_inverse[j]);
    return r;
  }

  std::shared_ptr<const Data> data_;
};

/// Element of a KRing in canonical reduced form.
class KClass {
 public:
  KClass(KRing ring, const LaurentPoly& rep) : ring_(std::move(ring)), rep_(ring_.reduce(rep)) {}
  explicit KClass(KRing ring) : ring_(std::move(ring)) {}

  static KClass one(const KRing& ring) { return KClass(ring, LaurentPoly::monomial(0)); }
  /// Class of the line bundle O(d), i.e. x^d.
  static KClass line(const KRing& ring, long d) { return KClass(ring, LaurentPoly::monomial(d)); }

  const KRing& ring() const noexcept { return ring_; }
  const LaurentPoly& rep() const noexcept { return rep_; }
  bool is_zero() const noexcept { return rep_.is_zero(); }

  /// All coefficients are integers (an honest element of K, not K_C).
  bool is_integral() const {
    for (const auto& [e, c] : rep_.terms())
      if (!c.is_rational() || !c.to_rational().is_integer()) return false;
    return true;
  }

  KClass operator-() const { return KClass(ring_, LaurentPoly() - rep_); }
  KClass& operator+=(const KClass& o) {
    check_ring(o);
    rep_ = ring_.reduce(rep_ + o.rep_);
    return *this;
  }
  KClass& operator-=(const KClass& o) {
    check_ring(o);
    rep_ = ring_.reduce(rep_ - o.rep_);
    return *this;
  }
  KClass& operator*=(const KClass& o) {
    check_ring(o);
    rep_ = ring_.reduce(rep_ * o.rep_);
    return *this;
  }
  KClass& operator*=(const Cyclotomic& s) {
    rep_ *= s;
    return *this;
  }

  friend KClass operator+(KClass a, const KClass& b) { return a += b; }
  friend KClass operator-(KClass a, const KClass& b) { return a -= b; }
  friend KClass operator*(KClass a, const KClass& b) { return a *= b; }
  friend KClass operator*(KClass a, const Cyclotomic& s) { return a *= s; }
  friend KClass operator*(const Cyclotomic& s, KClass a) { return a *= s; }

  friend bool operator==(const KClass& a, const KClass& b) { return a.ring_ == b.ring_ && a.rep_ == b.rep_; }

  /// Dual bundle involution x^d ↦ x^{-d}; conjugates scalar coefficients, so
  /// it is an antilinear ring automorphism of K ⊗ C and the identity on 1.
  KClass dual() const { return KClass(ring_, rep_.dual()); }

  /// Inverse in the quotient ring; throws NotInvertible for zero divisors.
  KClass inverse() const {
    if (ring_.is_free()) {
      if (rep_.terms().size() != 1) throw NotInvertible("only monomials are units in the Laurent ring");
      const auto& [e, c] = *rep_.terms().begin();
      return KClass(ring_, LaurentPoly::monomial(-e, c.inverse()));
    }
    poly::Poly<Cyclotomic> a, m;
    for (const auto& [e, c] : rep_.terms()) {
      if (a.size() <= static_cast<std::size_t>(e)) a.resize(static_cast<std::size_t>(e) + 1, Cyclotomic(0));
      a[static_cast<std::size_t>(e)] = c;
    }
    for (long r : ring_.relation()) m.emplace_back(r);
    poly::Poly<Cyclotomic> inv = poly::inverse_mod(a, m);
    LaurentPoly p;
    for (std::size_t i = 0; i < inv.size(); ++i) p.add_term(static_cast<long>(i), inv[i]);
    return KClass(ring_, p);
  }

  std::string to_string() const { return rep_.to_string("x"); }
  friend std::ostream& operator<<(std::ostream& os, const KClass& k) { return os << k.to_string(); }

 private:
  void check_ring(const KClass& o) const {
    if (!(ring_ == o.ring_)) throw Mismatch("K-classes from different rings");
  }

  KRing ring_;
  LaurentPoly rep_;
};

/// One signed line class ±x^b in a formal sum fed to the K-theoretic Euler class.
struct SignedMonomial {
  int sign = 1;
  long exponent = 0;
};

/// Raised when a negative term's factor (1 - x^{-b}) has no inverse.
class EulerClassUndefined : public NotInvertible {
 public:
  explicit EulerClassUndefined(long exponent)
      : NotInvertible("K-theoretic Euler class undefined: factor (1 - x^" + std::to_string(-exponent) +
                      ") of term -x^" + std::to_string(exponent) + " is not invertible"),
        exponent_(exponent) {}
  long exponent() const noexcept { return exponent_; }

 private:
  long exponent_;
};

/// e^K(Σ ε_i x^{b_i}) = ∏ (1 - x^{-b_i})^{ε_i}. Terms are first collected into
/// net multiplicities, so cancelling pairs are harmless.
inline KClass k_euler_class(const KRing& ring, std::span<const SignedMonomial> terms) {
  std::map<long, long> multiplicity;
  for (const auto& t : terms) {
    if (t.sign != 1 && t.sign != -1) throw std::invalid_argument("signed monomial sign must be +1 or -1");
    multiplicity[t.exponent] += t.sign;
  }
  KClass result = KClass::one(ring);
  for (const auto& [b, m] : multiplicity) {
    if (m == 0) continue;
    KClass factor = KClass::one(ring) - KClass::line(ring, -b);
    if (m < 0) {
      try {
        factor = factor.inverse();
      } catch (const NotInvertible&) {
        throw EulerClassUndefined(b);
      }
    }
    for (long k = 0; k < (m < 0 ? -m : m); ++k) result *= factor;
  }
  return result;
}

}  // namespace orbihrr
