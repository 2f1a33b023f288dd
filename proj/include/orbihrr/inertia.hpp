#pragma once

#include <concepts>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "orbihrr/cyclotomic.hpp"
#include "orbihrr/errors.hpp"
#include "orbihrr/rational.hpp"
#include "orbihrr/series.hpp"

namespace orbihrr {

/// Element of A(IX)_C = ⊕_i A(X_i)_C: one truncated series per inertia sector.
class InertiaClass {
 public:
  InertiaClass() = default;
  explicit InertiaClass(std::vector<SectorClass> components) : components_(std::move(components)) {}

  std::size_t size() const noexcept { return components_.size(); }
  const SectorClass& component(std::size_t i) const { return components_.at(i); }
  const std::vector<SectorClass>& components() const noexcept { return components_; }
  /// Degree-zero coefficient of sector i; the whole class when the sector is a point.
  const Cyclotomic& scalar(std::size_t i) const { return components_.at(i).coeff(0); }

  InertiaClass& operator+=(const InertiaClass& o) { return zip(o, [](SectorClass& a, const SectorClass& b) { a += b; }); }
  InertiaClass& operator-=(const InertiaClass& o) { return zip(o, [](SectorClass& a, const SectorClass& b) { a -= b; }); }
  InertiaClass& operator*=(const InertiaClass& o) { return zip(o, [](SectorClass& a, const SectorClass& b) { a *= b; }); }
  InertiaClass& operator*=(const Cyclotomic& s) {
    for (auto& c : components_) c *= s;
    return *this;
  }

  friend InertiaClass operator+(InertiaClass a, const InertiaClass& b) { return a += b; }
  friend InertiaClass operator-(InertiaClass a, const InertiaClass& b) { return a -= b; }
  friend InertiaClass operator*(InertiaClass a, const InertiaClass& b) { return a *= b; }
  friend InertiaClass operator*(InertiaClass a, const Cyclotomic& s) { return a *= s; }
  friend InertiaClass operator*(const Cyclotomic& s, InertiaClass a) { return a *= s; }
  friend bool operator==(const InertiaClass&, const InertiaClass&) = default;

  InertiaClass involution() const { return map([](const SectorClass& c) { return c.involution(); }); }
  InertiaClass inverse() const { return map([](const SectorClass& c) { return c.inverse(); }); }
  InertiaClass sqrt() const { return map([](const SectorClass& c) { return c.sqrt(); }); }

 private:
  template <class Op>
  InertiaClass& zip(const InertiaClass& o, Op op) {
    if (o.size() != size()) throw Mismatch("inertia classes over different sector lists");
    for (std::size_t i = 0; i < components_.size(); ++i) op(components_[i], o.components_[i]);
    return *this;
  }
  template <class Fn>
  InertiaClass map(Fn fn) const {
    std::vector<SectorClass> r;
    r.reserve(components_.size());
    for (const auto& c : components_) r.push_back(fn(c));
    return InertiaClass(std::move(r));
  }

  std::vector<SectorClass> components_;
};

/// A stack whose inertia decomposition, sector Todd classes and twisted Euler
/// classes are computable, together with its K-side objects.
///
/// Sector 0 must be the distinguished (untwisted) sector, with e^ρ = 1.
template <class M>
concept InertiaModel = requires(const M& m, const typename M::KElement& x, std::size_t i) {
  { m.sector_count() } -> std::convertible_to<std::size_t>;
  { m.sector_dim(i) } -> std::convertible_to<std::size_t>;
  { m.integration_weight(i) } -> std::convertible_to<Rational>;
  { m.euler_rho(i) } -> std::convertible_to<SectorClass>;
  { m.todd(i) } -> std::convertible_to<SectorClass>;
  { m.orbch(x) } -> std::convertible_to<InertiaClass>;
  { m.dual(x) } -> std::convertible_to<typename M::KElement>;
  { m.product(x, x) } -> std::convertible_to<typename M::KElement>;
  { m.is_integral(x) } -> std::convertible_to<bool>;
};

template <InertiaModel M>
InertiaClass todd_class(const M& model) {
  std::vector<SectorClass> c;
  for (std::size_t i = 0; i < model.sector_count(); ++i) c.push_back(model.todd(i));
  return InertiaClass(std::move(c));
}

template <InertiaModel M>
InertiaClass euler_rho_class(const M& model) {
  std::vector<SectorClass> c;
  for (std::size_t i = 0; i < model.sector_count(); ++i) c.push_back(model.euler_rho(i));
  return InertiaClass(std::move(c));
}

/// orbtd = td_{IX} / e^ρ_{IX}.
template <InertiaModel M>
InertiaClass orbifold_todd(const M& model) {
  return todd_class(model) * euler_rho_class(model).inverse();
}

/// Per-sector terms w_i · [top-degree coefficient of v_i] of ∫_{IX} v.
template <InertiaModel M>
std::vector<Cyclotomic> sector_integrals(const M& model, const InertiaClass& v) {
  if (v.size() != model.sector_count()) throw Mismatch("class does not match the model's sectors");
  std::vector<Cyclotomic> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v.component(i).dim() != model.sector_dim(i)) throw Mismatch("sector class truncated at the wrong degree");
    out.push_back(v.component(i).top() * Cyclotomic(model.integration_weight(i)));
  }
  return out;
}

/// ∫_{IX} v = Σ_i ∫_{X_i} v_i.
template <InertiaModel M>
Cyclotomic integrate(const M& model, const InertiaClass& v) {
  Cyclotomic total(0);
  for (auto& term : sector_integrals(model, v)) total += term;
  return total;
}

/// ∫_{IX} orbch(x) orbtd, without the rationality check.
template <InertiaModel M>
Cyclotomic hrr_integral(const M& model, const typename M::KElement& x) {
  return integrate(model, model.orbch(x) * orbifold_todd(model));
}

namespace detail {

inline Rational require_rational(const Cyclotomic& value, bool require_integer, const char* what) {
  if (!value.is_rational())
    throw ConsistencyError(std::string(what) + " is not rational: " + value.to_string());
  Rational r = value.to_rational();
  if (require_integer && !r.is_integer())
    throw ConsistencyError(std::string(what) + " of an integral class is not an integer: " + r.to_string());
  return r;
}

}  // namespace detail

/// χ(X, x) by orbifold HRR. Throws ConsistencyError if the total is not
/// rational, or not an integer for an integral class.
template <InertiaModel M>
Rational euler_characteristic(const M& model, const typename M::KElement& x) {
  return detail::require_rational(hrr_integral(model, x), model.is_integral(x), "Euler characteristic");
}

}  // namespace orbihrr
