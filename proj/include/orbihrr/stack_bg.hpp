#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "orbihrr/cyclotomic.hpp"
#include "orbihrr/errors.hpp"
#include "orbihrr/groups.hpp"
#include "orbihrr/inertia.hpp"
#include "orbihrr/series.hpp"

namespace orbihrr {

struct BGSector {
  std::size_t class_index = 0;
  Rational weight;  // 1 / |Z_{g_i}|
};

/// Inertia stack IBG = ∐ {g_i} × BZ_{g_i}, one point sector per conjugacy class.
///
/// Every sector is zero-dimensional with trivial normal bundle, so td = e^ρ = 1
/// and the orbifold Chern character is the character map.
class BGInertia {
 public:
  using KElement = Representation;

  explicit BGInertia(GroupHandle group) : group_(std::move(group)) {
    if (!group_) throw std::invalid_argument("BG model needs a group");
    for (std::size_t i = 0; i < group_->classes().size(); ++i)
      sectors_.push_back({i, Rational(1, static_cast<long>(group_->classes()[i].centralizer_order))});
  }

  const GroupHandle& group() const noexcept { return group_; }
  const std::vector<BGSector>& sectors() const noexcept { return sectors_; }

  std::size_t sector_count() const noexcept { return sectors_.size(); }
  std::size_t sector_dim(std::size_t) const noexcept { return 0; }
  Rational integration_weight(std::size_t i) const { return sectors_.at(i).weight; }
  SectorClass euler_rho(std::size_t) const { return SectorClass::one(0); }
  SectorClass todd(std::size_t) const { return SectorClass::one(0); }

  /// Component i is χ_φ(g_i).
  InertiaClass orbch(const Representation& rep) const {
    if (rep.group() != group_) throw Mismatch("representation is not over the model's group");
    std::vector<SectorClass> comps;
    for (const auto& v : character_of(rep).values) comps.push_back(SectorClass::constant(0, v));
    return InertiaClass(std::move(comps));
  }

  Representation dual(const Representation& rep) const { return rep_dual(rep); }
  Representation product(const Representation& a, const Representation& b) const { return rep_tensor(a, b); }
  bool is_integral(const Representation&) const noexcept { return true; }

 private:
  GroupHandle group_;
  std::vector<BGSector> sectors_;
};

inline InertiaClass bg_orbch(const BGInertia& model, const Representation& rep) { return model.orbch(rep); }

/// χ(BG, φ) = Σ_i χ_φ(g_i)/|Z_{g_i}| = dim V^G.
inline Rational bg_euler_char(const BGInertia& model, const Representation& rep) {
  InertiaClass ch = model.orbch(rep);
  Cyclotomic total(0);
  for (std::size_t i = 0; i < ch.size(); ++i) total += ch.scalar(i) * Cyclotomic(model.integration_weight(i));
  Rational r = detail::require_rational(total, true, "BG Euler characteristic");
  if (r.sign() < 0) throw ConsistencyError("BG Euler characteristic is negative: " + r.to_string());
  return r;
}

/// χ(φ, ψ) = Σ_i conj(χ_φ(g_i)) χ_ψ(g_i) / |Z_{g_i}| = dim Hom(V, W)^G.
inline Rational bg_euler_pairing(const BGInertia& model, const Representation& a, const Representation& b) {
  check_same_group(a, b);
  InertiaClass ca = model.orbch(a);
  InertiaClass cb = model.orbch(b);
  Cyclotomic total(0);
  for (std::size_t i = 0; i < ca.size(); ++i)
    total += ca.scalar(i).conjugate() * cb.scalar(i) * Cyclotomic(model.integration_weight(i));
  Rational r = detail::require_rational(total, true, "BG Euler pairing");
  if (r.sign() < 0) throw ConsistencyError("BG Euler pairing is negative: " + r.to_string());
  return r;
}

/// Inverse transform, the orbifold Chern character of Bμ_n:
/// f ↦ (Σ_j ω^{jk} f(j))_k with ω = ζ_n.
inline std::vector<Cyclotomic> idft(std::size_t n, std::span<const Cyclotomic> f) {
  if (n == 0) throw std::invalid_argument("transform length must be positive");
  if (f.size() != n) throw Mismatch("transform input has the wrong length");
  std::vector<Cyclotomic> out;
  for (std::size_t k = 0; k < n; ++k) {
    Cyclotomic acc(0);
    for (std::size_t j = 0; j < n; ++j)
      acc += Cyclotomic::root_of_unity(static_cast<int>(n), static_cast<long>(j * k)) * f[j];
    out.push_back(std::move(acc));
  }
  return out;
}

/// Forward transform f ↦ ((1/n) Σ_j ω^{-jk} f(j))_k; dft ∘ idft = id.
inline std::vector<Cyclotomic> dft(std::size_t n, std::span<const Cyclotomic> f) {
  if (n == 0) throw std::invalid_argument("transform length must be positive");
  if (f.size() != n) throw Mismatch("transform input has the wrong length");
  Cyclotomic scale(Rational(1, static_cast<long>(n)));
  std::vector<Cyclotomic> out;
  for (std::size_t k = 0; k < n; ++k) {
    Cyclotomic acc(0);
    for (std::size_t j = 0; j < n; ++j)
      acc += Cyclotomic::root_of_unity(static_cast<int>(n), -static_cast<long>(j * k)) * f[j];
    out.push_back(acc * scale);
  }
  return out;
}

/// ⟨a, b⟩_W = (1/n) Σ conj(a_i) b_i.
inline Cyclotomic weighted_inner_product(std::span<const Cyclotomic> a, std::span<const Cyclotomic> b) {
  if (a.size() != b.size() || a.empty()) throw Mismatch("inner product of vectors of different lengths");
  Cyclotomic acc(0);
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i].conjugate() * b[i];
  return acc * Cyclotomic(Rational(1, static_cast<long>(a.size())));
}

struct ParsevalResult {
  Rational lhs;  // Euler pairing Σ f(i) g(i) on K(Bμ_n)
  Rational rhs;  // ⟨idft f, idft g⟩_W
  bool equal = false;
};

inline ParsevalResult parseval_check(std::size_t n, std::span<const long> f, std::span<const long> g) {
  if (f.size() != n || g.size() != n) throw Mismatch("Parseval inputs must have length n");
  Rational lhs(0);
  for (std::size_t i = 0; i < n; ++i) lhs += Rational(f[i]) * Rational(g[i]);
  std::vector<Cyclotomic> fc(f.begin(), f.end()), gc(g.begin(), g.end());
  Cyclotomic rhs = weighted_inner_product(idft(n, fc), idft(n, gc));
  Rational rhs_q = detail::require_rational(rhs, false, "Parseval right-hand side");
  return {lhs, rhs_q, lhs == rhs_q};
}

}  // namespace orbihrr
