#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "orbihrr/cyclotomic.hpp"
#include "orbihrr/inertia.hpp"
#include "orbihrr/rational.hpp"

namespace orbihrr {

/// √td_{IX}, principal branch (constant term 1) on every sector.
template <InertiaModel M>
InertiaClass sqrt_todd(const M& model) {
  return todd_class(model).sqrt();
}

/// √(td / td^∨) on every sector.
template <InertiaModel M>
InertiaClass todd_twist(const M& model) {
  InertiaClass td = todd_class(model);
  return (td * td.involution().inverse()).sqrt();
}

/// ṽ(x) = orbch(x) · √td_{IX}.
template <InertiaModel M>
InertiaClass mukai_vector(const M& model, const typename M::KElement& x) {
  return model.orbch(x) * sqrt_todd(model);
}

/// ⟨v, w⟩ = ∫_{IX} v^∨ w / e^ρ · √(td / td^∨); conjugate-linear in v.
template <InertiaModel M>
Cyclotomic mukai_pairing(const M& model, const InertiaClass& v, const InertiaClass& w) {
  InertiaClass integrand = v.involution() * w * euler_rho_class(model).inverse() * todd_twist(model);
  return integrate(model, integrand);
}

/// χ(x, y) = χ(X, x^∨ y) via orbifold HRR.
template <InertiaModel M>
Rational euler_pairing(const M& model, const typename M::KElement& x, const typename M::KElement& y) {
  auto xy = model.product(model.dual(x), y);
  return detail::require_rational(hrr_integral(model, xy), model.is_integral(xy), "Euler pairing");
}

struct IsometryCheck {
  Rational lhs;    // χ(x, y): dual, multiply, then HRR
  Cyclotomic rhs;  // ⟨ṽ(x), ṽ(y)⟩
  bool pass = false;
};

/// Both sides of χ(x, y) = ⟨ṽ(x), ṽ(y)⟩_{IX}, computed along separate paths.
template <InertiaModel M>
IsometryCheck verify_isometry(const M& model, const typename M::KElement& x, const typename M::KElement& y) {
  IsometryCheck r;
  r.lhs = euler_pairing(model, x, y);
  r.rhs = mukai_pairing(model, mukai_vector(model, x), mukai_vector(model, y));
  r.pass = r.rhs == Cyclotomic(r.lhs);
  return r;
}

}  // namespace orbihrr
