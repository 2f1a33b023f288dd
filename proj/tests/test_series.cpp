#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "orbihrr/series.hpp"

using namespace orbihrr;

namespace {

Cyclotomic q(long n, long d = 1) { return Cyclotomic(Rational(n, d)); }
Cyclotomic z(int n, long k) { return Cyclotomic::root_of_unity(n, k); }

// Standard Bernoulli numbers (B_1 = -1/2) from Σ_{j≤m} C(m+1, j) B_j = 0.
std::vector<Rational> bernoulli(std::size_t n) {
  std::vector<Rational> b(n + 1);
  b[0] = Rational(1);
  for (std::size_t m = 1; m <= n; ++m) {
    Rational acc(0);
    Rational binom(1);  // C(m+1, j)
    for (std::size_t j = 0; j < m; ++j) {
      acc += binom * b[j];
      binom = binom * Rational(static_cast<long>(m + 1 - j)) / Rational(static_cast<long>(j + 1));
    }
    b[m] = -acc / Rational(static_cast<long>(m) + 1);
  }
  return b;
}

Rational factorial(std::size_t k) {
  Rational f(1);
  for (std::size_t i = 2; i <= k; ++i) f *= Rational(static_cast<long>(i));
  return f;
}

SectorClass random_series(std::mt19937_64& rng, std::size_t dim, bool unit) {
  std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
  // One field per series keeps products inside Q(ζ_N) for modest N.
  const int orders[] = {1, 3, 4, 5, 8, 12};
  const int n = orders[std::uniform_int_distribution<int>(0, 5)(rng)];
  std::vector<Cyclotomic> c;
  for (std::size_t j = 0; j <= dim; ++j) {
    std::vector<Rational> poly;
    for (int i = 0; i < euler_totient(n); ++i) poly.emplace_back(num(rng), den(rng));
    c.push_back(Cyclotomic::from_poly(n, poly));
  }
  if (unit) c[0] = Cyclotomic(1);
  return SectorClass(dim, c);
}

}  // namespace

TEST(SectorClass, SqrtOfOnePlusH) {
  SectorClass u = SectorClass::one(2) + SectorClass::h(2);
  EXPECT_EQ(u.sqrt(), SectorClass(2, {q(1), q(1, 2), q(-1, 8)}));
}

TEST(SectorClass, InverseExamples) {
  EXPECT_EQ(SectorClass::one(3).inverse(), SectorClass::one(3));
  // 1 - ζ3^{-1} e^{-h} at D = 1 is a + ζ3^{-1} h with a = 1 - ζ3^{-1};
  // its inverse is 1/a - (ζ3^{-1}/a²) h.
  SectorClass f = SectorClass::one(1) - exp_line(SectorClass::h(1, -1)) * z(3, -1);
  Cyclotomic a = Cyclotomic(1) - z(3, 2);
  SectorClass inv = f.inverse();
  EXPECT_EQ(inv.coeff(0), a.inverse());
  EXPECT_EQ(inv.coeff(1), -(z(3, 2) / (a * a)));
  EXPECT_EQ(inv * f, SectorClass::one(1));
}

TEST(SectorClass, InvolutionExamples) {
  EXPECT_EQ((SectorClass::one(1) + SectorClass::h(1)).involution(), SectorClass::one(1) - SectorClass::h(1));
  EXPECT_EQ(SectorClass::constant(0, z(4, 1)).involution(), SectorClass::constant(0, z(4, 3)));
  SectorClass a = SectorClass::one(2) + SectorClass::h(2);
  SectorClass b = SectorClass::one(2) + SectorClass::h(2, z(3, 1));
  // (1+h)(1+ζh) = 1 + (1+ζ)h + ζh²; involution gives 1 - (1+ζ̄)h + ζ̄h².
  SectorClass expected(2, {q(1), -(Cyclotomic(1) + z(3, 2)), z(3, 2)});
  EXPECT_EQ((a * b).involution(), expected);
  EXPECT_EQ(a.involution() * b.involution(), expected);
}

TEST(SectorClass, ToddLineMatchesBernoulli) {
  EXPECT_EQ(todd_line(SectorClass::h(2)), SectorClass(2, {q(1), q(1, 2), q(1, 12)}));
  const std::size_t dim = 10;
  auto b = bernoulli(dim);
  SectorClass td = todd_line(SectorClass::h(dim));
  for (std::size_t k = 0; k <= dim; ++k) {
    Rational expected = (k % 2 == 1 ? -b[k] : b[k]) / factorial(k);  // B_k^+ / k!
    EXPECT_EQ(td.coeff(k), Cyclotomic(expected)) << "k=" << k;
  }
  EXPECT_EQ(todd_line(SectorClass(4)), SectorClass::one(4));
}

TEST(SectorClass, ToddTimesDenominatorIsIdentity) {
  // td(c) · (1 - e^{-c}) = c.
  for (long a = 1; a <= 5; ++a) {
    SectorClass c = SectorClass::h(6, a);
    SectorClass denom = SectorClass::one(6) - exp_line(-c);
    EXPECT_EQ(todd_line(c) * denom, c);
  }
}

TEST(SectorClass, ExpLine) {
  EXPECT_EQ(exp_line(SectorClass::h(1, 7)), SectorClass(1, {q(1), q(7)}));
  SectorClass e = exp_line(SectorClass::h(6, 3));
  Rational pow(1);
  for (std::size_t k = 0; k <= 6; ++k, pow *= Rational(3)) EXPECT_EQ(e.coeff(k), Cyclotomic(pow / factorial(k)));
  // e^{a h} e^{b h} = e^{(a+b) h}.
  EXPECT_EQ(exp_line(SectorClass::h(5, 2)) * exp_line(SectorClass::h(5, -7)), exp_line(SectorClass::h(5, -5)));
}

TEST(SectorClass, Errors) {
  EXPECT_THROW(SectorClass::h(2).inverse(), NotInvertible);
  EXPECT_THROW((SectorClass::one(2) * q(2)).sqrt(), std::domain_error);
  EXPECT_THROW(todd_line(SectorClass::one(2)), std::domain_error);
  EXPECT_THROW(exp_line(SectorClass::one(1)), std::domain_error);
  EXPECT_THROW(SectorClass::one(1) + SectorClass::one(2), Mismatch);
}

TEST(SectorClass, RandomProperties) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::size_t> dim(0, 6);
  for (int t = 0; t < 100; ++t) {
    std::size_t d = dim(rng);
    SectorClass u = random_series(rng, d, true);
    SectorClass root = u.sqrt();
    EXPECT_EQ(root * root, u);
    EXPECT_EQ(root.coeff(0), Cyclotomic(1));
    EXPECT_EQ(u.inverse() * u, SectorClass::one(d));
    SectorClass a = random_series(rng, d, false), b = random_series(rng, d, false);
    EXPECT_EQ((a * b).involution(), a.involution() * b.involution());
    EXPECT_EQ((a + b).involution(), a.involution() + b.involution());
    EXPECT_EQ(a.involution().involution(), a);
    EXPECT_EQ(u.involution().sqrt(), u.sqrt().involution());
  }
}

TEST(SectorClass, Printing) {
  EXPECT_EQ(SectorClass(2, {q(1), q(1, 2), q(-1, 8)}).to_string(), "1 + 1/2*h - 1/8*h^2");
  EXPECT_EQ(SectorClass(1, {0, z(3, 1)}).to_string(), "(z3)*h");
  EXPECT_EQ(SectorClass(3).to_string(), "0");
  EXPECT_EQ(SectorClass(2, {q(-1), q(-1), 0}).to_string(), "-1 - h");
}
