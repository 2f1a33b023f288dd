#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "orbihrr/cyclotomic.hpp"
#include "orbihrr/errors.hpp"
#include "orbihrr/inertia.hpp"
#include "orbihrr/rings.hpp"
#include "orbihrr/series.hpp"

namespace orbihrr {

/// One component {g} × P(a_i : i ∈ S) of the inertia stack of P(a_0, ..., a_n).
struct WpsSector {
  int g_order = 1;       // g = ζ_{g_order}^{g_exponent}, exponent coprime to the order
  long g_exponent = 0;
  Cyclotomic g;
  std::string label;     // "1", "-1", "z3", "z3^2", ...
  std::vector<std::size_t> fixed;    // S = { i : g^{a_i} = 1 }
  std::vector<long> normal_weights;  // a_j for j ∉ S
  std::size_t dim = 0;               // |S| - 1
  long volume_factor = 1;            // ∏_{i ∈ S} a_i
};

namespace detail {

inline std::string root_label(int order, long exponent) {
  if (order == 1) return "1";
  if (order == 2) return "-1";
  std::string z = "z" + std::to_string(order);
  return exponent == 1 ? z : z + "^" + std::to_string(exponent);
}

inline void validate_weights(std::span<const long> weights) {
  if (weights.empty()) throw std::invalid_argument("weighted projective stack needs at least one weight");
  for (long a : weights)
    if (a < 1) throw std::invalid_argument("weights must be positive, got " + std::to_string(a));
}

}  // namespace detail

/// Sectors for every g ∈ ∪_i μ_{a_i}, enumerated as ζ_L^k with L = lcm(a), and
/// sorted by the order of g, then by exponent (so sector 0 is g = 1).
inline std::vector<WpsSector> wps_sectors(std::span<const long> weights) {
  detail::validate_weights(weights);
  long lcm = 1;
  for (long a : weights) lcm = std::lcm(lcm, a);
  std::vector<WpsSector> sectors;
  for (long k = 0; k < lcm; ++k) {
    long common = std::gcd(k, lcm);
    WpsSector s;
    s.g_order = static_cast<int>(lcm / common);
    s.g_exponent = k / common;
    bool has_fixed = std::any_of(weights.begin(), weights.end(), [&](long a) { return a % s.g_order == 0; });
    if (!has_fixed) continue;
    s.g = Cyclotomic::root_of_unity(s.g_order, s.g_exponent);
    s.label = detail::root_label(s.g_order, s.g_exponent);
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (s.g.pow(weights[i]) == Cyclotomic(1)) {
        s.fixed.push_back(i);
        s.volume_factor *= weights[i];
      } else {
        s.normal_weights.push_back(weights[i]);
      }
    }
    if (s.fixed.empty()) throw ConsistencyError("sector without fixed coordinates");
    s.dim = s.fixed.size() - 1;
    sectors.push_back(std::move(s));
  }
  std::stable_sort(sectors.begin(), sectors.end(), [](const WpsSector& a, const WpsSector& b) {
    return a.g_order != b.g_order ? a.g_order < b.g_order : a.g_exponent < b.g_exponent;
  });
  return sectors;
}

/// Weighted projective stack P(a_0, ..., a_n) as an inertia model.
///
/// Sector Todd classes use the Euler-sequence form td = ∏_{i∈S} td(O(a_i)),
/// the twisted Euler class is ∏_{j∉S} (1 - g^{-a_j} e^{-a_j h}), and
/// ∫_{P(S)} h^{|S|-1} = 1 / ∏_{i∈S} a_i.
class WPS {
 public:
  using KElement = KClass;

  explicit WPS(std::vector<long> weights)
      : weights_(std::move(weights)), ring_(KRing::weighted(weights_)), sectors_(wps_sectors(weights_)) {
    for (const auto& s : sectors_) {
      SectorClass td = SectorClass::one(s.dim);
      for (std::size_t i : s.fixed) td *= todd_line(SectorClass::h(s.dim, Cyclotomic(weights_[i])));
      SectorClass e = SectorClass::one(s.dim);
      for (long a : s.normal_weights) {
        Cyclotomic lambda_inv = Cyclotomic::root_of_unity(s.g_order, -s.g_exponent * a);
        SectorClass factor = SectorClass::one(s.dim) - exp_line(SectorClass::h(s.dim, Cyclotomic(-a))) * lambda_inv;
        if (factor.coeff(0).is_zero()) throw ConsistencyError("twisted Euler factor is not a unit");
        e *= factor;
      }
      todd_.push_back(std::move(td));
      euler_rho_.push_back(std::move(e));
    }
    orbtd_ = orbifold_todd(*this);
  }

  std::span<const long> weights() const noexcept { return weights_; }
  std::size_t dim() const noexcept { return weights_.size() - 1; }
  const KRing& kring() const noexcept { return ring_; }
  const std::vector<WpsSector>& sectors() const noexcept { return sectors_; }
  const InertiaClass& orbtd() const noexcept { return orbtd_; }

  std::size_t sector_count() const noexcept { return sectors_.size(); }
  std::size_t sector_dim(std::size_t i) const { return sectors_.at(i).dim; }
  Rational integration_weight(std::size_t i) const { return Rational(1, sectors_.at(i).volume_factor); }
  const SectorClass& euler_rho(std::size_t i) const { return euler_rho_.at(i); }
  const SectorClass& todd(std::size_t i) const { return todd_.at(i); }

  /// Linear; c·x^d on sector (g, S) maps to c · g^d · e^{d h}.
  InertiaClass orbch(const KClass& x) const {
    if (!(x.ring() == ring_)) throw Mismatch("K-class does not belong to " + name());
    std::vector<SectorClass> comps;
    for (const auto& s : sectors_) {
      SectorClass acc(s.dim);
      for (const auto& [d, c] : x.rep().terms()) {
        Cyclotomic twist = Cyclotomic::root_of_unity(s.g_order, s.g_exponent * d) * c;
        acc += exp_line(SectorClass::h(s.dim, Cyclotomic(d))) * twist;
      }
      comps.push_back(std::move(acc));
    }
    return InertiaClass(std::move(comps));
  }

  KClass dual(const KClass& x) const { return x.dual(); }
  KClass product(const KClass& x, const KClass& y) const { return x * y; }
  bool is_integral(const KClass& x) const { return x.is_integral(); }

  KClass line(long d) const { return KClass::line(ring_, d); }

  /// "P(2,3)".
  std::string name() const {
    std::string s = "P(";
    for (std::size_t i = 0; i < weights_.size(); ++i) s += (i ? "," : "") + std::to_string(weights_[i]);
    return s + ")";
  }

 private:
  std::vector<long> weights_;
  KRing ring_;
  std::vector<WpsSector> sectors_;
  std::vector<SectorClass> todd_;
  std::vector<SectorClass> euler_rho_;
  InertiaClass orbtd_;
};

inline InertiaClass wps_orbch(const WPS& w, const KClass& x) { return w.orbch(x); }
inline const InertiaClass& wps_orbtd(const WPS& w) { return w.orbtd(); }
inline Cyclotomic wps_integrate(const WPS& w, const InertiaClass& v) { return integrate(w, v); }

/// Per-sector terms of ∫_{IX} orbch(x) orbtd, in sector order.
inline std::vector<Cyclotomic> wps_sector_contributions(const WPS& w, const KClass& x) {
  return sector_integrals(w, w.orbch(x) * w.orbtd());
}

/// χ(P(a), x) by orbifold HRR; ConsistencyError if the sum is not rational.
inline Rational wps_euler_char(const WPS& w, const KClass& x) { return euler_characteristic(w, x); }

/// #{ m ∈ Z_{≥0}^{n+1} : Σ a_i m_i = d } by dynamic programming; 0 for d < 0.
inline std::uint64_t monomial_count_oracle(std::span<const long> weights, long d) {
  detail::validate_weights(weights);
  if (d < 0) return 0;
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(d) + 1, 0);
  ways[0] = 1;
  for (long a : weights)
    for (long t = a; t <= d; ++t) ways[static_cast<std::size_t>(t)] += ways[static_cast<std::size_t>(t - a)];
  return ways[static_cast<std::size_t>(d)];
}

struct KRingPresentation {
  std::vector<long> relation;  // ∏ (x^{a_i} - 1), low degree first
  std::string relation_text;   // "x^5 - x^3 - x^2 + 1"
  std::string presentation;    // "Z[x]/<(x^2 - 1)*(x^3 - 1)>"
};

inline KRingPresentation wps_kring_relation(const WPS& w) {
  const KRing& r = w.kring();
  return {std::vector<long>(r.relation().begin(), r.relation().end()), r.relation_poly().to_string("x"),
          r.presentation()};
}

}  // namespace orbihrr
