#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "superflow/cyclo_field.hpp"
#include "superflow/error.hpp"

using namespace superflow;

namespace {

// Random element of Q(zeta_n) with small coefficients.
CycNum random_element(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<Rational> c;
  for (int i = 0; i < euler_phi(n); ++i) c.push_back(Rational(num(rng)) / den(rng));
  return CycNum::from_power_coeffs(n, c);
}

// Coefficients of prod over primitive n-th roots of (x - root), rounded.
std::vector<long> numeric_cyclotomic(int n) {
  std::vector<std::complex<double>> poly{1.0};
  for (int k = 1; k <= n; ++k) {
    if (std::gcd(k, n) != 1) continue;
    auto root = std::polar(1.0, 2.0 * std::numbers::pi * k / n);
    std::vector<std::complex<double>> next(poly.size() + 1, 0.0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= root * poly[i];
    }
    poly = next;
  }
  std::vector<long> out;
  for (auto c : poly) out.push_back(std::lround(c.real()));
  return out;
}

}  // namespace

TEST(CycloField, RootOfUnityExamples) {
  EXPECT_TRUE(CycNum::root_of_unity(1, 0).is_one());
  auto i = CycNum::root_of_unity(4, 1);
  EXPECT_EQ(i * i, CycNum(-1));
  EXPECT_EQ(CycNum::root_of_unity(3, 1) + CycNum::root_of_unity(3, 2), CycNum(-1));
  EXPECT_EQ(CycNum::root_of_unity(5, 7), CycNum::root_of_unity(5, 2));
  EXPECT_EQ(CycNum::root_of_unity(5, -1), CycNum::root_of_unity(5, 4));
}

TEST(CycloField, ArithmeticExamples) {
  auto z7 = CycNum::root_of_unity(7, 1);
  EXPECT_TRUE((z7 * z7.pow(6)).is_one());
  auto quotient = CycNum(1) / CycNum::root_of_unity(14, 3);
  EXPECT_EQ(quotient, CycNum::root_of_unity(14, 11));
  // oracle: multiply back by repeated multiplication
  CycNum back = quotient;
  for (int j = 0; j < 3; ++j) back *= CycNum::root_of_unity(14, 1);
  EXPECT_TRUE(back.is_one());
  EXPECT_THROW(CycNum(1) / CycNum(0), DivisionByZero);
  EXPECT_THROW(CycNum(0).inverse(), DivisionByZero);
}

TEST(CycloField, CyclotomicPolynomialMatchesRootProduct) {
  for (int n = 1; n <= 40; ++n) {
    EXPECT_EQ(cyclotomic_polynomial(n), numeric_cyclotomic(n)) << "n = " << n;
    EXPECT_EQ(static_cast<int>(cyclotomic_polynomial(n).size()) - 1, euler_phi(n));
  }
}

TEST(CycloField, MixedOrdersLiftToLcm) {
  auto a = CycNum::root_of_unity(3, 1);
  auto b = CycNum::root_of_unity(4, 1);
  auto s = a + b;
  EXPECT_EQ(s.order(), 12);
  EXPECT_EQ(a * b, CycNum::root_of_unity(12, 7));
  // -zeta_3^-1 needs no larger field
  EXPECT_EQ((-a.inverse()).order(), 3);
}

TEST(CycloField, EqualityAcrossRepresentations) {
  EXPECT_EQ(CycNum::root_of_unity(6, 2), CycNum::root_of_unity(3, 1));
  EXPECT_EQ(CycNum::root_of_unity(10, 5), CycNum(-1));
  EXPECT_NE(CycNum::root_of_unity(5, 1), CycNum::root_of_unity(5, 2));
  EXPECT_EQ(CycNum::root_of_unity(3, 1).lifted(12), CycNum::root_of_unity(12, 4));
}

TEST(CycloField, EmbedExamples) {
  auto one = CycNum(1).embed();
  EXPECT_EQ(one, std::complex<double>(1.0, 0.0));
  auto i = CycNum::root_of_unity(4, 1).embed();
  EXPECT_NEAR(i.real(), 0.0, 1e-15);
  EXPECT_NEAR(i.imag(), 1.0, 1e-15);
  auto w = CycNum::root_of_unity(3, 1).embed();
  EXPECT_NEAR(w.real(), std::cos(2 * std::numbers::pi / 3), 1e-15);
  EXPECT_NEAR(w.imag(), std::sin(2 * std::numbers::pi / 3), 1e-15);
}

TEST(CycloField, MultiplicativeOrderExamples) {
  EXPECT_EQ(multiplicative_order(CycNum(1)), 1L);
  EXPECT_EQ(multiplicative_order(CycNum::root_of_unity(14, 1)), 14L);
  EXPECT_FALSE(multiplicative_order(CycNum(2)).has_value());
  EXPECT_EQ(multiplicative_order(CycNum(-1)), 2L);
  EXPECT_EQ(multiplicative_order(-CycNum::root_of_unity(3, 1)), 6L);
  EXPECT_EQ(multiplicative_order(CycNum::root_of_unity(12, 8)), 3L);
  // unit of absolute value 1 that is not a root of unity: (3 + 4i)/5
  auto i = CycNum::root_of_unity(4, 1);
  EXPECT_FALSE(multiplicative_order((CycNum(3) + CycNum(4) * i) / CycNum(5)).has_value());
  EXPECT_THROW(multiplicative_order(CycNum(0)), DivisionByZero);
}

TEST(CycloField, MultiplicativeOrderMatchesGcdFormula) {
  for (int n = 1; n <= 30; ++n) {
    for (int j = 0; j < n; ++j) {
      EXPECT_EQ(multiplicative_order(CycNum::root_of_unity(n, j)), static_cast<long>(n / std::gcd(n, j)))
          << "zeta_" << n << "^" << j;
    }
  }
}

TEST(CycloField, RingAxiomsOnRandomTriples) {
  std::mt19937_64 rng(11);
  for (int n : {3, 5, 7, 8, 9, 12, 14}) {
    for (int trial = 0; trial < 40; ++trial) {
      CycNum a = random_element(n, rng), b = random_element(n, rng), c = random_element(n, rng);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ(a + CycNum(0), a);
      EXPECT_EQ(a - a, CycNum(0));
      if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
      if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
    }
  }
}

TEST(CycloField, EmbeddingIsHomomorphism) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    int n = std::uniform_int_distribution<int>(1, 24)(rng);
    int m = std::uniform_int_distribution<int>(1, 24)(rng);
    auto a = CycNum::root_of_unity(n, std::uniform_int_distribution<int>(0, n - 1)(rng));
    auto b = CycNum::root_of_unity(m, std::uniform_int_distribution<int>(0, m - 1)(rng));
    EXPECT_LE(std::abs((a * b).embed() - a.embed() * b.embed()), 1e-12);
    EXPECT_LE(std::abs((a + b).embed() - (a.embed() + b.embed())), 1e-12);
  }
}

TEST(CycloField, ConjugateIsComplexConjugate) {
  std::mt19937_64 rng(2);
  for (int n : {5, 7, 12}) {
    for (int trial = 0; trial < 20; ++trial) {
      auto a = random_element(n, rng);
      EXPECT_LE(std::abs(a.conj().embed() - std::conj(a.embed())), 1e-12);
    }
  }
}

TEST(CycloField, ZetaToTheNIsOne) {
  for (int n = 1; n <= 40; ++n) EXPECT_TRUE(CycNum::root_of_unity(n, 1).pow(n).is_one()) << n;
}

TEST(CycloField, TextRoundTrip) {
  std::mt19937_64 rng(3);
  for (int n : {1, 3, 7, 12, 14}) {
    for (int trial = 0; trial < 20; ++trial) {
      CycNum a = random_element(n, rng);
      EXPECT_EQ(CycNum::parse(a.to_string()), a) << a.to_string();
    }
  }
  EXPECT_EQ(CycNum::root_of_unity(14, 11).to_string(), "-1*z^4; z = zeta_14");
  EXPECT_EQ(CycNum::parse("1 + z; z = zeta_3"), -CycNum::root_of_unity(3, 2));
  EXPECT_EQ(CycNum::parse("3/4"), CycNum(Rational(3) / 4));
  EXPECT_THROW(CycNum::parse("1 + ; z = zeta_3"), ParseError);
  EXPECT_THROW(CycNum::parse("1 + z; z = zeta_0"), ParseError);
}

TEST(CycloField, RationalQueries) {
  EXPECT_TRUE(CycNum(Rational(2) / 3).is_rational());
  EXPECT_EQ(*CycNum(Rational(2) / 3).as_rational(), Rational(2) / 3);
  EXPECT_FALSE(CycNum::root_of_unity(5, 1).as_rational().has_value());
  // zeta_3 + zeta_3^-1 = -1 is rational even though written in Q(zeta_3)
  auto z = CycNum::root_of_unity(3, 1);
  EXPECT_EQ(*(z + z.inverse()).as_rational(), Rational(-1));
}
