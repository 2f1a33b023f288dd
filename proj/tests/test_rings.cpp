#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "orbihrr/rings.hpp"

using namespace orbihrr;

namespace {

LaurentPoly random_laurent(std::mt19937_64& rng, long lo, long hi, int terms) {
  std::uniform_int_distribution<long> exp(lo, hi), coef(-4, 4);
  LaurentPoly p;
  for (int i = 0; i < terms; ++i) p.add_term(exp(rng), Cyclotomic(coef(rng)));
  return p;
}

const std::vector<std::vector<long>> kWeightFamily{{1}, {2}, {1, 1}, {2, 3}, {1, 2}, {2, 2}, {1, 1, 1}, {1, 2, 3}, {3, 4, 5}};

}  // namespace

TEST(KRing, Relations) {
  KRing p23 = KRing::weighted({2, 3});
  EXPECT_EQ(std::vector<long>(p23.relation().begin(), p23.relation().end()),
            (std::vector<long>{1, 0, -1, -1, 0, 1}));
  EXPECT_EQ(p23.degree(), 5u);
  EXPECT_EQ(p23.relation_poly().to_string(), "x^5 - x^3 - x^2 + 1");
  EXPECT_EQ(p23.presentation(), "Z[x]/<(x^2 - 1)*(x^3 - 1)>");

  KRing point = KRing::weighted({1});
  EXPECT_EQ(std::vector<long>(point.relation().begin(), point.relation().end()), (std::vector<long>{-1, 1}));
  EXPECT_EQ(KClass::line(point, 17), KClass::one(point));
  EXPECT_EQ(KClass::line(point, -4), KClass::one(point));

  KRing p1 = KRing::weighted({1, 1});
  EXPECT_EQ(std::vector<long>(p1.relation().begin(), p1.relation().end()), (std::vector<long>{1, -2, 1}));
  KClass t = KClass::one(p1) - KClass::line(p1, -1);
  EXPECT_TRUE((t * t).is_zero());
  EXPECT_FALSE(t.is_zero());
}

TEST(KRing, Errors) {
  EXPECT_THROW(KRing::weighted({}), std::invalid_argument);
  EXPECT_THROW(KRing::weighted({2, 0}), std::invalid_argument);
  EXPECT_THROW(KRing::weighted({-1}), std::invalid_argument);
  KClass a = KClass::one(KRing::weighted({2, 3}));
  KClass b = KClass::one(KRing::weighted({1, 1}));
  EXPECT_THROW(a + b, Mismatch);
  EXPECT_THROW(a * b, Mismatch);
  // Separately built rings with the same weights are the same ring.
  EXPECT_NO_THROW(a + KClass::one(KRing::weighted({2, 3})));
}

TEST(KClass, ReductionExamples) {
  KRing r = KRing::weighted({2, 3});
  KClass x5 = KClass::line(r, 5);
  EXPECT_EQ(x5.to_string(), "x^3 + x^2 - 1");
  KClass d = KClass::line(r, 2).dual();
  EXPECT_EQ(d, KClass::line(r, -2));
  for (const auto& [e, c] : d.rep().terms()) {
    EXPECT_GE(e, 0);
    EXPECT_LT(e, 5);
  }
  EXPECT_EQ(d * KClass::line(r, 2), KClass::one(r));
  EXPECT_EQ(KClass::one(r).dual(), KClass::one(r));
}

TEST(KClass, XIsInvertibleEverywhere) {
  for (const auto& w : kWeightFamily) {
    KRing r = KRing::weighted(w);
    EXPECT_EQ(KClass::line(r, 1) * KClass::line(r, -1), KClass::one(r));
    EXPECT_EQ(KClass::line(r, 1).inverse(), KClass::line(r, -1));
    for (long d = -12; d <= 12; ++d) EXPECT_EQ(KClass::line(r, d) * KClass::line(r, -d), KClass::one(r));
  }
}

TEST(KClass, CanonicalFormIsUnique) {
  std::mt19937_64 rng(5);
  for (const auto& w : kWeightFamily) {
    KRing r = KRing::weighted(w);
    for (int t = 0; t < 20; ++t) {
      LaurentPoly p = random_laurent(rng, -15, 15, 5);
      LaurentPoly q = random_laurent(rng, -8, 8, 4);
      EXPECT_EQ(r.reduce(p + r.relation_poly() * q), r.reduce(p));
      EXPECT_EQ(r.reduce(r.reduce(p)), r.reduce(p));
    }
  }
}

TEST(KClass, DualIsRingAutomorphism) {
  std::mt19937_64 rng(11);
  for (const auto& w : kWeightFamily) {
    KRing r = KRing::weighted(w);
    for (int t = 0; t < 15; ++t) {
      KClass a(r, random_laurent(rng, -6, 6, 4)), b(r, random_laurent(rng, -6, 6, 4));
      EXPECT_EQ((a * b).dual(), a.dual() * b.dual());
      EXPECT_EQ((a + b).dual(), a.dual() + b.dual());
      EXPECT_EQ(a.dual().dual(), a);
    }
  }
  // Scalars are conjugated, so dual is antilinear on K ⊗ C.
  KRing r = KRing::weighted({2, 3});
  Cyclotomic i = Cyclotomic::root_of_unity(4, 1);
  EXPECT_EQ((KClass::line(r, 1) * i).dual(), KClass::line(r, -1) * (-i));
}

TEST(KClass, InverseOfZeroDivisorFails) {
  KRing r = KRing::weighted({2, 3});
  EXPECT_THROW((KClass::one(r) - KClass::line(r, -1)).inverse(), NotInvertible);
  KClass u = KClass::one(r) + KClass::line(r, 1) * Cyclotomic(2);  // 1 + 2x: no root of unity is -1/2
  EXPECT_EQ(u * u.inverse(), KClass::one(r));
  KRing free = KRing::free();
  EXPECT_EQ(KClass::line(free, 3).inverse(), KClass::line(free, -3));
  EXPECT_THROW((KClass::one(free) + KClass::line(free, 1)).inverse(), NotInvertible);
}

TEST(KEulerClass, Examples) {
  KRing free = KRing::free();
  std::vector<SignedMonomial> sum{{1, 1}, {1, 2}, {1, 3}};
  KClass expected = KClass::one(free);
  for (long a : {1, 2, 3}) expected *= KClass::one(free) - KClass::line(free, -a);
  EXPECT_EQ(k_euler_class(free, sum), expected);
  EXPECT_EQ(k_euler_class(free, {}), KClass::one(free));
  std::vector<SignedMonomial> trivial{{1, 0}};
  EXPECT_TRUE(k_euler_class(free, trivial).is_zero());
  // The Euler class of Σ x^{a_i} is the defining relation of K(P(a)).
  KRing p = KRing::weighted({1, 2, 3});
  EXPECT_TRUE(k_euler_class(p, sum).is_zero());
}

TEST(KEulerClass, NegativeTermErrors) {
  KRing r = KRing::weighted({2, 3});
  std::vector<SignedMonomial> neg{{1, 1}, {-1, 2}};
  try {
    k_euler_class(r, neg);
    FAIL() << "expected EulerClassUndefined";
  } catch (const EulerClassUndefined& e) {
    EXPECT_EQ(e.exponent(), 2);
  }
  // Cancelling pairs are netted out first.
  std::vector<SignedMonomial> cancel{{1, 2}, {-1, 2}, {1, 1}};
  std::vector<SignedMonomial> single{{1, 1}};
  EXPECT_EQ(k_euler_class(r, cancel), k_euler_class(r, single));
}

TEST(KEulerClass, Multiplicativity) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> exp(-5, 5);
  std::uniform_int_distribution<int> len(0, 3);
  for (const KRing& r : {KRing::free(), KRing::weighted({1, 2}), KRing::weighted({3, 4, 5})}) {
    for (int t = 0; t < 40; ++t) {
      std::vector<SignedMonomial> u, v;
      for (int k = len(rng); k > 0; --k) u.push_back({1, exp(rng)});
      for (int k = len(rng); k > 0; --k) v.push_back({1, exp(rng)});
      std::vector<SignedMonomial> uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      EXPECT_EQ(k_euler_class(r, uv), k_euler_class(r, u) * k_euler_class(r, v));
    }
  }
}
