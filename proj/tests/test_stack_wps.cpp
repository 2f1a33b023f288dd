#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "orbihrr/stack_wps.hpp"
#include "orbihrr/text.hpp"

using namespace orbihrr;

namespace {

Cyclotomic q(long n, long d = 1) { return Cyclotomic(Rational(n, d)); }
Cyclotomic z(int n, long k) { return Cyclotomic::root_of_unity(n, k); }

// Distinct fractions k / a_i in [0, 1), which index the twisted sectors.
std::size_t fraction_count(const std::vector<long>& w) {
  std::set<std::pair<long, long>> fracs;
  for (long a : w)
    for (long k = 0; k < a; ++k) {
      long g = std::gcd(k, a);
      fracs.insert({k / g, a / g});
    }
  return fracs.size();
}

// Brute-force count of monomials of weighted degree d.
long enumerate_monomials(const std::vector<long>& w, long d, std::size_t i = 0) {
  if (d < 0) return 0;
  if (i == w.size()) return d == 0 ? 1 : 0;
  long total = 0;
  for (long m = 0; m * w[i] <= d; ++m) total += enumerate_monomials(w, d - m * w[i], i + 1);
  return total;
}

// χ(O(d)) = h^0 + (-1)^n h^n with h^n(O(d)) = h^0(O(-d - Σa)).
Rational chi_oracle(const std::vector<long>& w, long d) {
  long sum = std::accumulate(w.begin(), w.end(), 0L);
  long top = enumerate_monomials(w, -d - sum);
  long sign = (w.size() - 1) % 2 == 0 ? 1 : -1;
  return Rational(enumerate_monomials(w, d) + sign * top);
}

// Σ_d c_d g^d e^{d a h} on each sector, evaluated without reducing in K.
InertiaClass direct_orbch(const WPS& w, const LaurentPoly& p) {
  std::vector<SectorClass> comps;
  for (const auto& s : w.sectors()) {
    SectorClass acc(s.dim);
    for (const auto& [d, c] : p.terms()) acc += exp_line(SectorClass::h(s.dim, Cyclotomic(d))) * (c * s.g.pow(d));
    comps.push_back(acc);
  }
  return InertiaClass(comps);
}

const std::vector<std::vector<long>> kFamily{{1},       {3},       {1, 1},    {2, 3},    {1, 2},    {2, 2},
                                             {1, 1, 1}, {1, 1, 2}, {1, 2, 3}, {2, 4, 6}, {3, 4, 5}, {1, 1, 1, 1}};

}  // namespace

TEST(WpsSectors, P23) {
  auto s = wps_sectors(std::vector<long>{2, 3});
  ASSERT_EQ(s.size(), 4u);
  EXPECT_EQ(s[0].label, "1");
  EXPECT_EQ(s[1].label, "-1");
  EXPECT_EQ(s[2].label, "z3");
  EXPECT_EQ(s[3].label, "z3^2");
  EXPECT_EQ(s[0].dim, 1u);
  EXPECT_EQ(s[0].volume_factor, 6);
  EXPECT_EQ(s[1].fixed, (std::vector<std::size_t>{0}));
  EXPECT_EQ(s[1].normal_weights, (std::vector<long>{3}));
  EXPECT_EQ(s[2].fixed, (std::vector<std::size_t>{1}));
  EXPECT_EQ(s[3].g, z(3, 2));
  for (std::size_t i = 1; i < 4; ++i) EXPECT_EQ(s[i].dim, 0u);
}

TEST(WpsSectors, SmallCases) {
  auto p11 = wps_sectors(std::vector<long>{1, 1});
  ASSERT_EQ(p11.size(), 1u);
  EXPECT_EQ(p11[0].dim, 1u);
  auto p22 = wps_sectors(std::vector<long>{2, 2});
  ASSERT_EQ(p22.size(), 2u);
  EXPECT_EQ(p22[1].label, "-1");
  EXPECT_EQ(p22[1].dim, 1u);
  EXPECT_EQ(p22[1].volume_factor, 4);
  EXPECT_TRUE(p22[1].normal_weights.empty());
  EXPECT_THROW(wps_sectors(std::vector<long>{}), std::invalid_argument);
  EXPECT_THROW(wps_sectors(std::vector<long>{2, 0}), std::invalid_argument);
}

TEST(WpsSectors, CountMatchesFractionSet) {
  for (const auto& w : kFamily) EXPECT_EQ(wps_sectors(w).size(), fraction_count(w));
  for (const std::vector<long> w : {std::vector<long>{4, 6}, {5, 7}, {6, 10, 15}, {12}})
    EXPECT_EQ(wps_sectors(w).size(), fraction_count(w));
}

TEST(Wps, OrbchAndOrbtdP23) {
  WPS w({2, 3});
  EXPECT_EQ(w.name(), "P(2,3)");
  const InertiaClass& td = wps_orbtd(w);
  EXPECT_EQ(td.component(0), SectorClass(1, {q(1), q(5, 2)}));
  EXPECT_EQ(td.scalar(1), q(1, 2));
  EXPECT_EQ(td.scalar(2), (Cyclotomic(1) - z(3, 1)).inverse());
  EXPECT_EQ(td.scalar(3), (Cyclotomic(1) - z(3, 2)).inverse());
  InertiaClass ch = wps_orbch(w, w.line(1));
  EXPECT_EQ(ch.component(0), SectorClass(1, {q(1), q(1)}));
  EXPECT_EQ(ch.scalar(1), q(-1));
  EXPECT_EQ(ch.scalar(2), z(3, 1));
  EXPECT_EQ(ch.scalar(3), z(3, 2));
}

TEST(Wps, SectorContributionsP23) {
  WPS w({2, 3});
  auto c = wps_sector_contributions(w, w.line(0));
  ASSERT_EQ(c.size(), 4u);
  EXPECT_EQ(c[0], q(5, 12));
  EXPECT_EQ(c[1], q(1, 4));
  EXPECT_EQ(c[2], z(3, 1) * q(1, 9) + q(2, 9));
  EXPECT_EQ(c[3], z(3, 1) * q(-1, 9) + q(1, 9));
  EXPECT_EQ(c[2] + c[3], q(1, 3));
  EXPECT_EQ(wps_integrate(w, wps_orbch(w, w.line(0)) * wps_orbtd(w)), q(1));
}

TEST(Wps, EulerCharExamples) {
  WPS p23({2, 3});
  EXPECT_EQ(wps_euler_char(p23, p23.line(0)), Rational(1));
  EXPECT_EQ(wps_euler_char(p23, p23.line(1)), Rational(0));
  EXPECT_EQ(wps_euler_char(p23, p23.line(6)), Rational(2));
  EXPECT_EQ(wps_euler_char(p23, p23.line(-5)), Rational(-1));
  WPS p1({1, 1});
  EXPECT_EQ(wps_euler_char(p1, p1.line(3)), Rational(4));
  EXPECT_EQ(wps_euler_char(p1, p1.line(-2)), Rational(-1));
}

TEST(Wps, EulerCharMatchesOracle) {
  for (const auto& wts : kFamily) {
    WPS w(wts);
    long sum = std::accumulate(wts.begin(), wts.end(), 0L);
    for (long d = -sum - 6; d <= 12; ++d) EXPECT_EQ(wps_euler_char(w, w.line(d)), chi_oracle(wts, d)) << w.name() << " d=" << d;
  }
}

TEST(Wps, ClosedFormsForProjectiveSpace) {
  WPS p1({1, 1}), p2({1, 1, 1});
  for (long d = -20; d <= 20; ++d) {
    EXPECT_EQ(wps_euler_char(p1, p1.line(d)), Rational(d + 1));
    EXPECT_EQ(wps_euler_char(p2, p2.line(d)), Rational((d + 1) * (d + 2) / 2));
  }
}

TEST(Wps, MonomialCounting) {
  for (const auto& w : kFamily)
    for (long d = -3; d <= 25; ++d)
      EXPECT_EQ(monomial_count_oracle(w, d), static_cast<std::uint64_t>(enumerate_monomials(w, d)));
}

TEST(Wps, KRingRelations) {
  auto p1 = wps_kring_relation(WPS({1}));
  EXPECT_EQ(p1.relation, (std::vector<long>{-1, 1}));
  EXPECT_EQ(p1.relation_text, "x - 1");
  auto p22 = wps_kring_relation(WPS({2, 2}));
  EXPECT_EQ(p22.relation, (std::vector<long>{1, 0, -2, 0, 1}));
  EXPECT_EQ(p22.relation_text, "x^4 - 2*x^2 + 1");
  EXPECT_EQ(p22.presentation, "Z[x]/<(x^2 - 1)*(x^2 - 1)>");
  auto p23 = wps_kring_relation(WPS({2, 3}));
  EXPECT_EQ(p23.relation_text, "x^5 - x^3 - x^2 + 1");
}

TEST(Wps, OrbchKillsRelation) {
  for (const auto& wts : kFamily) {
    WPS w(wts);
    LaurentPoly rel = w.kring().relation_poly();
    InertiaClass zero = direct_orbch(w, rel);
    for (std::size_t i = 0; i < zero.size(); ++i) EXPECT_EQ(zero.component(i), SectorClass(w.sector_dim(i))) << w.name();
    LaurentPoly shifted = rel * LaurentPoly::monomial(-7) + LaurentPoly::monomial(3, Cyclotomic(2));
    EXPECT_EQ(direct_orbch(w, shifted), w.orbch(KClass(w.kring(), shifted)));
  }
}

TEST(Wps, SerreDuality) {
  for (const auto& wts : kFamily) {
    WPS w(wts);
    long sum = std::accumulate(wts.begin(), wts.end(), 0L);
    Rational sign((wts.size() - 1) % 2 == 0 ? 1 : -1);
    for (long d = -10; d <= 10; ++d)
      EXPECT_EQ(wps_euler_char(w, w.line(d)), sign * wps_euler_char(w, w.line(-d - sum))) << w.name() << " d=" << d;
  }
}

TEST(Wps, ConjugateSectorsContributeConjugates) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> coef(-3, 3), exp(-6, 6);
  for (const auto& wts : kFamily) {
    WPS w(wts);
    for (int t = 0; t < 4; ++t) {
      KClass x = w.line(exp(rng)) * Cyclotomic(coef(rng)) + w.line(exp(rng)) * Cyclotomic(coef(rng));
      auto c = wps_sector_contributions(w, x);
      for (std::size_t i = 0; i < w.sector_count(); ++i) {
        const auto& s = w.sectors()[i];
        long conj = (s.g_order - s.g_exponent) % s.g_order;
        for (std::size_t j = 0; j < w.sector_count(); ++j) {
          const auto& r = w.sectors()[j];
          if (r.g_order == s.g_order && r.g_exponent == conj) EXPECT_EQ(c[j], c[i].conjugate());
        }
      }
    }
  }
}

TEST(Wps, EulerPairingGramHasFullRank) {
  for (const auto& wts : kFamily) {
    WPS w(wts);
    const std::size_t n = w.kring().degree();
    Matrix<Rational> gram(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        gram(i, j) = wps_euler_char(w, w.line(static_cast<long>(i)).dual() * w.line(static_cast<long>(j)));
    EXPECT_EQ(gram.rank(), n) << w.name();
  }
  EXPECT_EQ(WPS({2, 3}).kring().degree(), 5u);
}

TEST(Wps, ParsedClasses) {
  WPS w({2, 3});
  KClass x = parse_kclass(w.kring(), "2 - x^-1 + 3*x^2");
  EXPECT_EQ(wps_euler_char(w, x), Rational(2) * chi_oracle({2, 3}, 0) - chi_oracle({2, 3}, -1) + Rational(3) * chi_oracle({2, 3}, 2));
}
