#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "orbihrr/catalog.hpp"
#include "orbihrr/orbihrr.hpp"

// End-to-end verification suite. Every check is an exact equality; the only
// thresholds are the wall-clock budgets of criteria 1 and 5.
namespace orbihrr::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::size_t checks = 0;   // exact equalities evaluated
  std::size_t failures = 0;
  double seconds = 0.0;
  std::string detail;
};

inline constexpr double kSweepBudgetSeconds = 5.0;
inline constexpr double kBgBudgetSeconds = 1.0;

namespace detail {

class Tally {
 public:
  explicit Tally(CriterionResult& r) : r_(r) {}
  void check(bool ok, const std::string& what) {
    ++r_.checks;
    if (!ok) {
      ++r_.failures;
      if (r_.failures <= 5) r_.detail += (r_.detail.empty() ? "" : "; ") + what;
    }
  }

 private:
  CriterionResult& r_;
};

inline CriterionResult timed(int id, std::string name, const std::function<void(CriterionResult&)>& body) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  auto start = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    ++r.failures;
    r.detail += std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.pass = r.failures == 0 && r.checks > 0;
  return r;
}

inline Rational random_rational(std::mt19937_64& rng, long span = 5) {
  std::uniform_int_distribution<long> num(-span, span), den(1, span);
  return Rational(num(rng), den(rng));
}

inline Cyclotomic random_cyclotomic(std::mt19937_64& rng) {
  static const int orders[] = {1, 2, 3, 4, 5, 6, 8, 10, 12, 15};
  int n = orders[std::uniform_int_distribution<std::size_t>(0, std::size(orders) - 1)(rng)];
  std::vector<Rational> c;
  for (int i = 0; i < euler_totient(n); ++i) c.push_back(random_rational(rng));
  return Cyclotomic::from_poly(n, std::move(c));
}

inline SectorClass random_series(std::mt19937_64& rng, std::size_t dim, bool unit_constant) {
  std::vector<Cyclotomic> c;
  for (std::size_t j = 0; j <= dim; ++j) c.push_back(random_cyclotomic(rng));
  if (unit_constant) c[0] = Cyclotomic(1);
  return SectorClass(dim, std::move(c));
}

inline KClass random_kclass(std::mt19937_64& rng, const KRing& ring, long lo = -6, long hi = 6) {
  std::uniform_int_distribution<long> exp(lo, hi), coef(-3, 3), count(1, 4);
  LaurentPoly p;
  for (long t = count(rng); t > 0; --t) p.add_term(exp(rng), Cyclotomic(coef(rng)));
  return KClass(ring, p);
}

}  // namespace detail

inline const std::vector<std::vector<long>>& sweep_weights() {
  static const std::vector<std::vector<long>> w{{1, 1}, {2, 3}, {1, 2}, {2, 2}, {1, 1, 1}, {1, 2, 3}, {3, 4, 5}};
  return w;
}

/// 1. χ(P(a), O(d)) by HRR equals the weighted-monomial count, d = 0..40.
inline CriterionResult hrr_oracle_sweep() {
  return detail::timed(1, "HRR-vs-oracle sweep (7 weight vectors x d=0..40)", [](CriterionResult& r) {
    detail::Tally t(r);
    for (const auto& weights : sweep_weights()) {
      WPS w(weights);
      for (long d = 0; d <= 40; ++d) {
        Rational chi = wps_euler_char(w, w.line(d));
        auto oracle = monomial_count_oracle(w.weights(), d);
        t.check(chi == Rational(static_cast<long>(oracle)),
                w.name() + " d=" + std::to_string(d) + ": " + chi.to_string() + " != " + std::to_string(oracle));
      }
    }
    if (r.checks < 287) ++r.failures;
  });
}

/// 2. Per-sector contributions to χ(P(2,3), O).
inline CriterionResult p23_sector_ledger() {
  return detail::timed(2, "P(2,3) sector ledger 5/12 + 1/4 + 1/3 = 1", [](CriterionResult& r) {
    detail::Tally t(r);
    WPS w({2, 3});
    auto parts = wps_sector_contributions(w, w.line(0));
    t.check(parts.size() == 4, "expected 4 sectors");
    if (parts.size() != 4) return;
    t.check(parts[0] == Cyclotomic(Rational(5, 12)), "distinguished sector " + parts[0].to_string());
    t.check(parts[1] == Cyclotomic(Rational(1, 4)), "g=-1 sector " + parts[1].to_string());
    t.check(parts[2] + parts[3] == Cyclotomic(Rational(1, 3)), "mu_3 sectors " + (parts[2] + parts[3]).to_string());
    t.check(parts[0] + parts[1] + parts[2] + parts[3] == Cyclotomic(1), "total");
  });
}

/// 3. IP(2,3) = {1}×P(2,3) ⊔ {-1}×Bμ_2 ⊔ {(-1±√3 i)/2}×Bμ_3.
inline CriterionResult p23_inertia() {
  return detail::timed(3, "Inertia decomposition of P(2,3)", [](CriterionResult& r) {
    detail::Tally t(r);
    WPS w({2, 3});
    const auto& s = w.sectors();
    t.check(s.size() == 4, "sector count " + std::to_string(s.size()));
    if (s.size() != 4) return;
    const std::size_t dims[] = {1, 0, 0, 0};
    const char* labels[] = {"1", "-1", "z3", "z3^2"};
    for (std::size_t i = 0; i < 4; ++i) {
      t.check(s[i].dim == dims[i], "dim of sector " + std::to_string(i));
      t.check(s[i].label == labels[i], "label " + s[i].label);
    }
    t.check(s[0].g == Cyclotomic(1), "g0 = 1");
    t.check(s[1].g == Cyclotomic(-1), "g1 = -1");
    // g2, g3 are the roots of t^2 + t + 1, i.e. (-1 ± √3 i)/2.
    t.check(s[2].g + s[3].g == Cyclotomic(-1) && s[2].g * s[3].g == Cyclotomic(1), "g2, g3 roots of t^2+t+1");
    t.check(s[1].fixed == std::vector<std::size_t>{0} && s[2].fixed == std::vector<std::size_t>{1},
            "fixed loci");
  });
}

/// 4. K(P(2,3)) relation and K-theoretic Euler class laws.
inline CriterionResult kring_presentation(std::uint64_t seed) {
  return detail::timed(4, "K-ring presentation and e^K laws", [seed](CriterionResult& r) {
    detail::Tally t(r);
    WPS w({2, 3});
    auto rel = wps_kring_relation(w);
    t.check(rel.relation == std::vector<long>{1, 0, -1, -1, 0, 1}, "relation " + rel.relation_text);
    // ∏ (1 - x^{-a_i}) = ∏ (-x^{-a_i}) (x^{a_i} - 1) vanishes in K.
    std::vector<SignedMonomial> tangent{{1, 2}, {1, 3}};
    t.check(k_euler_class(w.kring(), tangent).is_zero(), "e^K(x^2 + x^3) = 0 in K(P(2,3))");
    KRing free = KRing::free();
    KClass prod = (KClass::one(free) - KClass::line(free, -2)) * (KClass::one(free) - KClass::line(free, -3));
    KClass rel_units = KClass(free, w.kring().relation_poly()) * KClass::line(free, -5);
    t.check(k_euler_class(free, tangent) == prod && prod == rel_units, "free-ring e^K equals relation after units");
    std::vector<SignedMonomial> one{{1, 0}};
    t.check(k_euler_class(w.kring(), one).is_zero(), "e^K(1) = 0");
    t.check(k_euler_class(w.kring(), {}) == KClass::one(w.kring()), "e^K(0) = 1");

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> exp(-6, 6);
    std::uniform_int_distribution<int> len(0, 4), coin(0, 3);
    for (int trial = 0; trial < 100; ++trial) {
      // Nonnegative net multiplicities, occasionally with a cancelling ± pair.
      auto make = [&] {
        std::vector<SignedMonomial> u;
        for (int k = len(rng); k > 0; --k) u.push_back({1, exp(rng)});
        if (coin(rng) == 0) {
          long b = exp(rng);
          u.push_back({1, b});
          u.push_back({-1, b});
        }
        return u;
      };
      auto u = make(), v = make();
      std::vector<SignedMonomial> uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      const KRing& ring = trial % 2 ? w.kring() : free;
      t.check(k_euler_class(ring, uv) == k_euler_class(ring, u) * k_euler_class(ring, v),
              "multiplicativity trial " + std::to_string(trial));
    }
  });
}

/// 5. BS_3 Euler pairing against the Hom-projector oracle.
inline CriterionResult bg_suite() {
  return detail::timed(5, "BS3 pairing = Hom oracle, Gram = identity", [](CriterionResult& r) {
    detail::Tally t(r);
    auto s3 = catalog::symmetric_group(3);
    BGInertia model(s3);
    std::vector<Representation> pool{Representation::trivial(s3), Representation::sign(s3), catalog::s3_standard(s3)};
    for (std::size_t i = 0; i < pool.size(); ++i)
      for (std::size_t j = 0; j < pool.size(); ++j) {
        Rational p = bg_euler_pairing(model, pool[i], pool[j]);
        auto oracle = hom_fixed_dim_oracle(pool[i], pool[j]);
        t.check(p == Rational(static_cast<long>(oracle)), "pair " + std::to_string(i) + "," + std::to_string(j));
        t.check(p == Rational(i == j ? 1 : 0), "Gram entry " + std::to_string(i) + "," + std::to_string(j));
      }
    t.check(bg_euler_char(model, pool[2]).is_zero(), "chi(std) = 0");
  });
}

/// 6. Transform round trip and discrete Parseval identity.
inline CriterionResult dft_parseval(std::uint64_t seed) {
  return detail::timed(6, "DFT round trip and Parseval", [seed](CriterionResult& r) {
    detail::Tally t(r);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> val(-9, 9);
    for (std::size_t n = 1; n <= 12; ++n)
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<Cyclotomic> f;
        for (std::size_t i = 0; i < n; ++i) f.emplace_back(val(rng));
        t.check(dft(n, idft(n, f)) == f, "dft(idft(f)) n=" + std::to_string(n));
      }
    for (std::size_t n : {2, 3, 4, 6, 8})
      for (int trial = 0; trial < 50; ++trial) {
        std::vector<long> f(n), g(n);
        for (auto& v : f) v = val(rng);
        for (auto& v : g) v = val(rng);
        auto p = parseval_check(n, f, g);
        t.check(p.equal, "Parseval n=" + std::to_string(n) + ": " + p.lhs.to_string() + " vs " + p.rhs.to_string());
      }
  });
}

/// 7. χ(x, y) = ⟨ṽ(x), ṽ(y)⟩ on P(2,3), BS_3 and P(1,2,3).
inline CriterionResult isometry(std::uint64_t seed) {
  return detail::timed(7, "Mukai isometry chi(x,y) = <v(x), v(y)>", [seed](CriterionResult& r) {
    detail::Tally t(r);
    auto record = [&](const IsometryCheck& c, const std::string& what) {
      t.check(c.pass, what + ": " + c.lhs.to_string() + " vs " + c.rhs.to_string());
    };
    WPS p23({2, 3});
    for (long i = 0; i <= 4; ++i)
      for (long j = 0; j <= 4; ++j)
        record(verify_isometry(p23, p23.line(i), p23.line(j)),
               "P(2,3) x^" + std::to_string(i) + ", x^" + std::to_string(j));

    auto s3 = catalog::symmetric_group(3);
    BGInertia bg(s3);
    std::vector<Representation> pool{Representation::trivial(s3), Representation::sign(s3), catalog::s3_standard(s3)};
    for (std::size_t i = 0; i < pool.size(); ++i)
      for (std::size_t j = 0; j < pool.size(); ++j)
        record(verify_isometry(bg, pool[i], pool[j]), "BS3 " + std::to_string(i) + "," + std::to_string(j));

    WPS p123({1, 2, 3});
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 50; ++trial) {
      KClass x = detail::random_kclass(rng, p123.kring());
      KClass y = detail::random_kclass(rng, p123.kring());
      record(verify_isometry(p123, x, y), "P(1,2,3) random pair " + std::to_string(trial));
    }
  });
}

inline std::size_t rank_of(const std::vector<InertiaClass>& images) {
  std::size_t cols = 0;
  for (const auto& c : images.front().components()) cols += c.dim() + 1;
  CMatrix m(images.size(), cols);
  for (std::size_t i = 0; i < images.size(); ++i) {
    std::size_t col = 0;
    for (const auto& comp : images[i].components())
      for (const auto& v : comp.coeffs()) m(i, col++) = v;
  }
  return m.rank();
}

/// 8. orbch of a K-basis has full rank on P(2,3) and BS_3.
inline CriterionResult rank_witness() {
  return detail::timed(8, "orbch rank witnesses (P(2,3): 5, BS3: 3)", [](CriterionResult& r) {
    detail::Tally t(r);
    WPS w({2, 3});
    std::vector<InertiaClass> images;
    for (long d = 0; d < 5; ++d) images.push_back(w.orbch(w.line(d)));
    std::size_t rw = rank_of(images);
    t.check(rw == 5, "P(2,3) rank " + std::to_string(rw));
    auto s3 = catalog::symmetric_group(3);
    BGInertia bg(s3);
    std::vector<InertiaClass> chars{bg.orbch(Representation::trivial(s3)), bg.orbch(Representation::sign(s3)),
                                    bg.orbch(catalog::s3_standard(s3))};
    std::size_t rb = rank_of(chars);
    t.check(rb == 3, "BS3 rank " + std::to_string(rb));
  });
}

/// 9. Randomized algebraic property suites, 100+ cases each.
inline CriterionResult property_suites(std::uint64_t seed) {
  return detail::timed(9, "Property suites (field axioms, roots, involution, sqrt, dual)", [seed](CriterionResult& r) {
    detail::Tally t(r);
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 100; ++i) {
      Cyclotomic a = detail::random_cyclotomic(rng), b = detail::random_cyclotomic(rng),
                 c = detail::random_cyclotomic(rng);
      t.check((a * b) * c == a * (b * c), "associativity");
      t.check(a * (b + c) == a * b + a * c, "distributivity");
      t.check(a * b == b * a && a + b == b + a, "commutativity");
      if (!a.is_zero()) t.check(a * a.inverse() == Cyclotomic(1), "a * inv(a) = 1");
      t.check(a.conjugate().conjugate() == a, "conjugation is an involution");
    }
    for (int n = 2; n <= 101; ++n) {
      Cyclotomic s(0);
      for (int k = 0; k < n; ++k) s += Cyclotomic::root_of_unity(n, k);
      t.check(s.is_zero(), "sum of N-th roots, N=" + std::to_string(n));
    }
    std::uniform_int_distribution<std::size_t> dim(0, 6);
    for (int i = 0; i < 100; ++i) {
      std::size_t d = dim(rng);
      SectorClass a = detail::random_series(rng, d, false), b = detail::random_series(rng, d, false);
      t.check(a.involution().involution() == a, "involution^2 = id");
      t.check((a * b).involution() == a.involution() * b.involution(), "involution multiplicative");
      SectorClass u = detail::random_series(rng, d, true);
      SectorClass root = u.sqrt();
      t.check(root * root == u, "sqrt(u)^2 = u");
    }
    WPS w({2, 3});
    for (int i = 0; i < 100; ++i) {
      KClass x = detail::random_kclass(rng, w.kring()), y = detail::random_kclass(rng, w.kring());
      t.check((x * y).dual() == x.dual() * y.dual(), "dual multiplicative");
      t.check((x + y).dual() == x.dual() + y.dual(), "dual additive");
      t.check(x.dual().dual() == x, "dual^2 = id");
    }
  });
}

inline std::vector<CriterionResult> run_all(std::uint64_t seed = 20240601) {
  std::vector<CriterionResult> out;
  out.push_back(hrr_oracle_sweep());
  if (out.back().seconds >= kSweepBudgetSeconds) {
    out.back().pass = false;
    out.back().detail += "runtime over budget";
  }
  out.push_back(p23_sector_ledger());
  out.push_back(p23_inertia());
  out.push_back(kring_presentation(seed));
  out.push_back(bg_suite());
  if (out.back().seconds >= kBgBudgetSeconds) {
    out.back().pass = false;
    out.back().detail += "runtime over budget";
  }
  out.push_back(dft_parseval(seed + 1));
  out.push_back(isometry(seed + 2));
  out.push_back(rank_witness());
  out.push_back(property_suites(seed + 3));
  return out;
}

inline std::string format_line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name << "  (" << r.checks << " checks, "
     << r.failures << " failures, " << r.seconds << " s)";
  if (!r.detail.empty()) os << "  " << r.detail;
  return os.str();
}

}  // namespace orbihrr::acceptance
