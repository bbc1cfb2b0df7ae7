#include <gtest/gtest.h>

#include <random>

#include "superflow/error.hpp"
#include "superflow/homog_algebra.hpp"

using namespace superflow;

namespace {

RatVF random_field(int n, int den_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> power(0, n - 1);
  const int D = den_degree + 2;
  const int lx = std::uniform_int_distribution<int>(0, den_degree)(rng);
  std::vector<CycNum> p, q;
  for (int i = 0; i <= D; ++i) {
    p.push_back(CycNum(coeff(rng)) * CycNum::root_of_unity(n, power(rng)));
    q.push_back(CycNum(coeff(rng)) * CycNum::root_of_unity(n, power(rng)));
  }
  return RatVF(HomPoly(D, p), HomPoly(D, q), {lx, den_degree - lx});
}

Mat2 random_diagonal(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> e(0, n - 1);
  std::uniform_int_distribution<int> scale(1, 3);
  return Mat2::diagonal(CycNum(scale(rng)) * CycNum::root_of_unity(n, e(rng)),
                        CycNum(scale(rng)) * CycNum::root_of_unity(n, e(rng)));
}

double rel_err(Point a, Point b) { return norm(a - b) / std::max(norm(b), 1e-300); }

}  // namespace

TEST(HomogAlgebra, EvalFieldExamples) {
  auto v = RatVF::parse("y^4/x^2 • 0");
  Point at1 = eval_field(v, {1.0, 1.0});
  EXPECT_EQ(at1.x, Complex(1.0));
  EXPECT_EQ(at1.y, Complex(0.0));
  EXPECT_EQ(eval_field(v, {2.0, 2.0}).x, Complex(4.0));
  auto sph = RatVF::parse("(x - y)^2 • (x - y)^2");
  Point p = eval_field(sph, {3.0, 1.0});
  EXPECT_EQ(p.x, Complex(4.0));
  EXPECT_EQ(p.y, Complex(4.0));
  EXPECT_THROW(eval_field(v, {0.0, 1.0}), SingularPoint);
}

TEST(HomogAlgebra, EvalFieldIsTwoHomogeneous) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    RatVF v = random_field(5, trial % 4, rng);
    Point p{Complex(u(rng), u(rng)) + 1.5, Complex(u(rng), u(rng)) - 1.5};
    Complex lambda(u(rng), u(rng));
    Point lhs = eval_field(v, {lambda * p.x, lambda * p.y});
    Point rhs = (lambda * lambda) * eval_field(v, p);
    EXPECT_LE(norm(lhs - rhs), 1e-10 * std::max(norm(rhs), 1.0));
  }
}

TEST(HomogAlgebra, HomPolyHomogeneity) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  HomPoly p(4, {CycNum(1), CycNum(-2), CycNum::root_of_unity(7, 3), CycNum(0), CycNum(5)});
  for (int trial = 0; trial < 20; ++trial) {
    Complex x(u(rng), u(rng)), y(u(rng), u(rng)), l(u(rng), u(rng));
    EXPECT_LE(std::abs(p.eval(l * x, l * y) - std::pow(l, 4) * p.eval(x, y)), 1e-10 * (1 + std::abs(p.eval(l * x, l * y))));
  }
  EXPECT_TRUE(HomPoly(3).is_zero());
}

TEST(HomogAlgebra, ConjugateFieldExamples) {
  auto v = RatVF::parse("y^4/x^2 • 0");
  EXPECT_EQ(conjugate_field(Mat2::identity(), v), v);
  auto parabolic = RatVF::parse("y^2 • 0");
  EXPECT_EQ(conjugate_field(alpha_matrix(3), parabolic), parabolic);
  EXPECT_EQ(conjugate_field(tau_matrix(), RatVF::parse("0 • x^2")), parabolic);
  // polynomial field under a general matrix
  Mat2 L(CycNum(1), CycNum(0), CycNum(-1), CycNum(1));
  EXPECT_EQ(conjugate_field(L, parabolic), RatVF::parse("(x - y)^2 • (x - y)^2").canonical().value());
  Mat2 singular(CycNum(1), CycNum(2), CycNum(2), CycNum(4));
  EXPECT_THROW(conjugate_field(singular, parabolic), SingularMatrix);
  EXPECT_THROW(conjugate_field(L, v), NonMonomialDenominator);
}

TEST(HomogAlgebra, DiagonalConjugationScalesCoefficients) {
  // u_i -> u_i s^(i - lx - 1) t^(D - i - ly) for the first component
  auto s = CycNum(2), t = CycNum(3);
  for (int i = 0; i <= 4; ++i) {
    auto v = RatVF::monomial({2, 0}, Component::first, i);
    auto w = conjugate_field(Mat2::diagonal(s, t), v);
    EXPECT_EQ(w, v.scaled(s.pow(i - 2 - 1) * t.pow(4 - i))) << i;
  }
}

TEST(HomogAlgebra, ConjugationIsRightAction) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    RatVF v = random_field(6, trial % 3, rng);
    Mat2 a = random_diagonal(6, rng), b = random_diagonal(6, rng);
    EXPECT_EQ(conjugate_field(a * b, v), conjugate_field(b, conjugate_field(a, v)));
    EXPECT_EQ(conjugate_field(a.inverse(), conjugate_field(a, v)), v);
    Mat2 anti = tau_matrix() * a;
    EXPECT_EQ(conjugate_field(anti.inverse(), conjugate_field(anti, v)), v);
  }
}

TEST(HomogAlgebra, ConjugationAgreesWithNumericAction) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.5, 1.5);
  for (int trial = 0; trial < 20; ++trial) {
    RatVF v = random_field(5, trial % 3, rng);
    Mat2 L = trial % 2 == 0 ? random_diagonal(5, rng) : tau_matrix() * random_diagonal(5, rng);
    NumMat2 n = NumMat2::from_exact(L);
    RatVF w = conjugate_field(L, v);
    for (int k = 0; k < 20; ++k) {
      Point p{u(rng), -u(rng)};
      Point numeric = n.inverse() * eval_field(v, n * p);
      EXPECT_LE(rel_err(eval_field(w, p), numeric), 1e-9);
    }
  }
}

TEST(HomogAlgebra, ReynoldsExamples) {
  // generic field over x^2 with all coefficients 1
  std::vector<CycNum> ones(5, CycNum(1));
  RatVF generic(HomPoly(4, ones), HomPoly(4, ones), {2, 0});
  auto avg = reynolds_average(alpha_group(7), generic);
  ASSERT_TRUE(avg.has_value());
  EXPECT_EQ(*avg->canonical(), RatVF::parse("y^4/x^2 • 0"));
  EXPECT_EQ(*avg, RatVF::parse("y^4/x^2 • 0"));

  std::vector<CycNum> three(3, CycNum(1));
  EXPECT_FALSE(reynolds_average(alpha_group(8), RatVF(HomPoly(2, three), HomPoly(2, three))).has_value());

  auto invariant = RatVF::parse("y^4/x^2 • 0");
  EXPECT_EQ(reynolds_average(alpha_group(7), invariant).value(), invariant);
}

TEST(HomogAlgebra, ReynoldsIdempotentAndInvariant) {
  std::mt19937_64 rng(12);
  for (int m : {3, 4, 5, 6, 7}) {
    auto g = alpha_group(m);
    for (int trial = 0; trial < 15; ++trial) {
      RatVF v = random_field(m, trial % 4, rng);
      auto avg = reynolds_average(g, v);
      if (!avg) continue;
      EXPECT_EQ(reynolds_average(g, *avg).value(), *avg);
      EXPECT_TRUE(is_invariant(g, *avg));
    }
  }
}

TEST(HomogAlgebra, CanonicalForm) {
  auto v = RatVF::parse("3*x^2*y^2/x^2 • 0");
  auto c = v.canonical().value();
  EXPECT_EQ(c.to_string(), "y^2 • 0");
  EXPECT_EQ(c.den().degree(), 0);
  EXPECT_FALSE(RatVF::zero({1, 1}).canonical().has_value());
  // scaling never changes the canonical form
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    RatVF f = random_field(7, 2, rng);
    if (f.is_zero()) continue;
    EXPECT_EQ(f.scaled(CycNum::root_of_unity(7, 2) * CycNum(5)).canonical()->to_string(), f.canonical()->to_string());
  }
}

TEST(HomogAlgebra, TextRoundTrip) {
  for (const char* text : {"y^4/x^2 • 0", "0 • x^3/y", "y^2 • 0", "x^2 - 2*x*y + y^2 • x^2 - 2*x*y + y^2",
                           "y^6/x^4 • 0"}) {
    EXPECT_EQ(RatVF::parse(text).to_string(), text);
  }
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    RatVF f = random_field(5, trial % 4, rng);
    EXPECT_EQ(RatVF::parse(f.to_string()), f) << f.to_string();
  }
  EXPECT_THROW(RatVF::parse("x^2"), ParseError);
  EXPECT_THROW(RatVF::parse("x^3 • y^2"), ParseError);
}

TEST(HomogAlgebra, DegreeValidation) {
  EXPECT_THROW(RatVF(HomPoly(3), HomPoly(3), {0, 0}), InvalidArgument);
  EXPECT_THROW(RatVF(HomPoly(2), HomPoly(3), {0, 0}), InvalidArgument);
  EXPECT_NO_THROW(RatVF(HomPoly(5), HomPoly(5), {1, 2}));
}
