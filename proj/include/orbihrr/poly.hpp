#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "orbihrr/errors.hpp"

// Dense univariate polynomials over an exact field, stored low degree first.
// The zero polynomial is the empty vector.
namespace orbihrr::poly {

template <class F>
using Poly = std::vector<F>;

template <class F>
void trim(Poly<F>& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

template <class F>
long degree(const Poly<F>& p) {
  return static_cast<long>(p.size()) - 1;
}

template <class F>
Poly<F> add(const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r(std::max(a.size(), b.size()), F(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

template <class F>
Poly<F> sub(const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r(std::max(a.size(), b.size()), F(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

template <class F>
Poly<F> mul(const Poly<F>& a, const Poly<F>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<F> r(a.size() + b.size() - 1, F(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

/// Euclidean division a = q*b + r with deg r < deg b.
template <class F>
std::pair<Poly<F>, Poly<F>> divmod(Poly<F> a, Poly<F> b) {
  trim(a);
  trim(b);
  if (b.empty()) throw DivisionByZero("polynomial division by zero");
  if (a.size() < b.size()) return {Poly<F>{}, a};
  Poly<F> q(a.size() - b.size() + 1, F(0));
  F lead_inv = b.back().inverse();
  for (std::size_t i = a.size(); i-- >= b.size();) {
    if (a[i].is_zero()) continue;
    F c = a[i] * lead_inv;
    std::size_t shift = i + 1 - b.size();
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
  }
  trim(q);
  trim(a);
  return {q, a};
}

/// Returns (g, s) with g = gcd(a, m) up to a unit and s*a ≡ g (mod m).
template <class F>
std::pair<Poly<F>, Poly<F>> ext_gcd_left(Poly<F> a, Poly<F> m) {
  trim(a);
  trim(m);
  Poly<F> r0 = m, r1 = a;
  Poly<F> s0{}, s1{F(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    Poly<F> s2 = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  return {r0, s0};
}

/// Inverse of a modulo m; throws NotInvertible if gcd(a, m) is not a unit.
template <class F>
Poly<F> inverse_mod(const Poly<F>& a, const Poly<F>& m) {
  auto [g, s] = ext_gcd_left(a, m);
  if (g.size() != 1) throw NotInvertible("element is not a unit modulo the relation");
  F scale = g[0].inverse();
  for (auto& c : s) c *= scale;
  return divmod(s, m).second;
}

}  // namespace orbihrr::poly
