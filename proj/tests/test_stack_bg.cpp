#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "orbihrr/catalog.hpp"
#include "orbihrr/stack_bg.hpp"
#include "orbihrr/stack_wps.hpp"

using namespace orbihrr;

namespace {

Cyclotomic z(int n, long k) { return Cyclotomic::root_of_unity(n, k); }

struct S3Fixture {
  GroupHandle s3 = catalog::symmetric_group(3);
  BGInertia bg{s3};
  Representation triv = Representation::trivial(s3);
  Representation sgn = Representation::sign(s3);
  Representation std2 = catalog::s3_standard(s3);
};

}  // namespace

TEST(BG, SectorsAndWeights) {
  S3Fixture f;
  ASSERT_EQ(f.bg.sector_count(), 3u);
  EXPECT_EQ(f.bg.integration_weight(0), Rational(1, 6));
  EXPECT_EQ(f.bg.integration_weight(1), Rational(1, 2));
  EXPECT_EQ(f.bg.integration_weight(2), Rational(1, 3));
}

TEST(BG, OrbchAndEulerChar) {
  S3Fixture f;
  InertiaClass ch = bg_orbch(f.bg, f.std2);
  EXPECT_EQ(ch.scalar(0), Cyclotomic(2));
  EXPECT_EQ(ch.scalar(1), Cyclotomic(0));
  EXPECT_EQ(ch.scalar(2), Cyclotomic(-1));
  EXPECT_EQ(bg_euler_char(f.bg, f.triv), Rational(1));
  EXPECT_EQ(bg_euler_char(f.bg, f.sgn), Rational(0));
  EXPECT_EQ(bg_euler_char(f.bg, f.std2), Rational(0));
  EXPECT_EQ(bg_euler_char(f.bg, Representation::regular(f.s3)), Rational(1));
  EXPECT_EQ(bg_euler_char(f.bg, Representation::permutation(f.s3)), Rational(1));
}

TEST(BG, PairingMatchesOracle) {
  S3Fixture f;
  std::vector<Representation> reps{f.triv,
                                   f.sgn,
                                   f.std2,
                                   Representation::permutation(f.s3),
                                   Representation::regular(f.s3),
                                   rep_tensor(f.std2, f.std2),
                                   rep_dsum(f.std2, f.sgn)};
  EXPECT_EQ(bg_euler_pairing(f.bg, f.std2, f.std2), Rational(1));
  EXPECT_EQ(bg_euler_pairing(f.bg, f.std2, Representation::regular(f.s3)), Rational(2));
  for (const auto& a : reps)
    for (const auto& b : reps)
      EXPECT_EQ(bg_euler_pairing(f.bg, a, b), Rational(static_cast<long>(hom_fixed_dim_oracle(a, b))));
}

TEST(BG, OrbchIsRingMap) {
  S3Fixture f;
  std::vector<Representation> reps{f.triv, f.sgn, f.std2, Representation::permutation(f.s3)};
  for (const auto& a : reps)
    for (const auto& b : reps) {
      EXPECT_EQ(f.bg.orbch(rep_dsum(a, b)), f.bg.orbch(a) + f.bg.orbch(b));
      EXPECT_EQ(f.bg.orbch(rep_tensor(a, b)), f.bg.orbch(a) * f.bg.orbch(b));
      EXPECT_EQ(f.bg.orbch(rep_dual(a)), f.bg.orbch(a).involution());
    }
}

TEST(BG, GramMatrixOfIrreduciblesHasFullRank) {
  S3Fixture f;
  std::vector<Representation> irr{f.triv, f.sgn, f.std2};
  Matrix<Rational> gram(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) gram(i, j) = bg_euler_pairing(f.bg, irr[i], irr[j]);
  EXPECT_EQ(gram, Matrix<Rational>::identity(3));
  EXPECT_EQ(gram.rank(), 3u);
}

TEST(BG, RandomCyclicPairings) {
  std::mt19937_64 rng(17);
  for (std::size_t n = 1; n <= 7; ++n) {
    auto g = catalog::cyclic_group(n);
    BGInertia bg(g);
    std::uniform_int_distribution<long> k(0, static_cast<long>(n) - 1);
    for (int t = 0; t < 10; ++t) {
      auto a = rep_dsum(catalog::cyclic_character(g, k(rng)), catalog::cyclic_character(g, k(rng)));
      auto b = rep_tensor(catalog::cyclic_character(g, k(rng)), catalog::cyclic_character(g, k(rng)));
      EXPECT_EQ(bg_euler_pairing(bg, a, b), Rational(static_cast<long>(hom_fixed_dim_oracle(a, b))));
    }
  }
}

TEST(BG, Errors) {
  S3Fixture f;
  auto mu3 = catalog::cyclic_group(3);
  EXPECT_THROW(f.bg.orbch(Representation::trivial(mu3)), Mismatch);
  EXPECT_THROW(bg_euler_pairing(f.bg, f.triv, Representation::trivial(mu3)), Mismatch);
  EXPECT_THROW(BGInertia(nullptr), std::invalid_argument);
}

TEST(Dft, Examples) {
  std::vector<Cyclotomic> e1{0, 1, 0, 0};
  EXPECT_EQ(idft(4, e1), (std::vector<Cyclotomic>{1, z(4, 1), -1, -z(4, 1)}));
  std::vector<Cyclotomic> ones{1, 1, 1};
  EXPECT_EQ(idft(3, ones), (std::vector<Cyclotomic>{3, 0, 0}));
  EXPECT_EQ(dft(3, std::vector<Cyclotomic>{3, 0, 0}), ones);
  std::vector<Cyclotomic> delta{1, 0, 0, 0, 0};
  EXPECT_EQ(idft(5, delta), (std::vector<Cyclotomic>(5, Cyclotomic(1))));
}

TEST(Dft, RoundTripAndParseval) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> v(-9, 9);
  for (std::size_t n = 1; n <= 12; ++n) {
    std::vector<long> f(n), g(n);
    for (auto& x : f) x = v(rng);
    for (auto& x : g) x = v(rng);
    std::vector<Cyclotomic> fc(f.begin(), f.end());
    EXPECT_EQ(dft(n, idft(n, fc)), fc);
    EXPECT_EQ(idft(n, dft(n, fc)), fc);
    ParsevalResult r = parseval_check(n, f, g);
    EXPECT_TRUE(r.equal);
    long dot = 0;
    for (std::size_t i = 0; i < n; ++i) dot += f[i] * g[i];
    EXPECT_EQ(r.lhs, Rational(dot));
    EXPECT_EQ(r.rhs, Rational(dot));
  }
  std::vector<long> f{1, 2, 3}, g{4, 5, 6};
  EXPECT_EQ(parseval_check(3, f, g).lhs, Rational(32));
}

TEST(Dft, IdftIsOrbchOfCyclicBG) {
  for (std::size_t n = 1; n <= 8; ++n) {
    BGInertia bg(catalog::cyclic_group(n));
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<Cyclotomic> e(n, Cyclotomic(0));
      e[k] = Cyclotomic(1);
      auto expected = idft(n, e);
      InertiaClass ch = bg.orbch(catalog::cyclic_character(bg.group(), static_cast<long>(k)));
      for (std::size_t j = 0; j < n; ++j) EXPECT_EQ(ch.scalar(j), expected[j]);
    }
  }
}

TEST(Dft, CyclicBGAsWeightedProjectiveStack) {
  // Bμ_n is the weighted projective stack P(n): same sectors, same pairing.
  for (long n = 1; n <= 6; ++n) {
    WPS w({n});
    ASSERT_EQ(w.sector_count(), static_cast<std::size_t>(n));
    BGInertia bg(catalog::cyclic_group(static_cast<std::size_t>(n)));
    for (long a = 0; a < n; ++a) {
      for (long b = 0; b < n; ++b) {
        Rational expected = a == b ? Rational(1) : Rational(0);
        EXPECT_EQ(wps_euler_char(w, w.line(a).dual() * w.line(b)), expected);
        EXPECT_EQ(bg_euler_pairing(bg, catalog::cyclic_character(bg.group(), a),
                                   catalog::cyclic_character(bg.group(), b)),
                  expected);
      }
      EXPECT_EQ(wps_euler_char(w, w.line(a)), a == 0 ? Rational(1) : Rational(0));
    }
  }
}

TEST(Dft, Errors) {
  std::vector<Cyclotomic> f{1, 2};
  EXPECT_THROW(idft(3, f), Mismatch);
  EXPECT_THROW(dft(3, f), Mismatch);
  EXPECT_THROW(idft(0, std::vector<Cyclotomic>{}), std::invalid_argument);
  std::vector<long> a{1, 2}, b{1, 2, 3};
  EXPECT_THROW(parseval_check(2, a, b), Mismatch);
  std::vector<Cyclotomic> x{1}, y{1, 2};
  EXPECT_THROW(weighted_inner_product(x, y), Mismatch);
}
