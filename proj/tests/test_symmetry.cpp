#include <gtest/gtest.h>

#include <random>

#include "superflow/error.hpp"
#include "superflow/symmetry.hpp"

using namespace superflow;

namespace {

const SymmetryFamily kGamma43{FamilyKind::gamma_4k3, 1};
const SymmetryFamily kGamma41{FamilyKind::gamma_4k1, 1};
const SymmetryFamily kDelta{FamilyKind::delta_tilde, 1};
const SymmetryFamily kSph{FamilyKind::gamma_sph, 1};

std::vector<Point> points_off_axes(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> mag(0.5, 1.5), sign(-1.0, 1.0);
  std::vector<Point> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back({(sign(rng) < 0 ? -1.0 : 1.0) * mag(rng), (sign(rng) < 0 ? -1.0 : 1.0) * mag(rng)});
  }
  return out;
}

std::vector<FlowSample> flow_samples(const ClosedFormFlow& flow, std::size_t n, std::uint64_t seed) {
  std::vector<FlowSample> out;
  for (const auto& s : translation_samples(flow, n, seed)) out.push_back({s.p, s.t});
  return out;
}

}  // namespace

TEST(Symmetry, FieldSymmetryExamples) {
  auto v = RatVF::parse("y^4/x^2 • 0");
  auto pts = points_off_axes(20, 1);
  auto id = check_field_symmetry(Mat2::identity(), v, pts);
  EXPECT_TRUE(id.passed);
  EXPECT_TRUE(id.exact);
  EXPECT_EQ(id.max_residual, 0.0);
  auto c = CycNum::root_of_unity(5, 2) * CycNum(Rational(3) / 2);
  EXPECT_TRUE(check_field_symmetry(kGamma43.exact_member(c), v, pts).passed);
  EXPECT_TRUE(check_field_symmetry(kGamma43.member(Complex(0.9, 0.6)), v, pts).passed);
  auto bad = check_field_symmetry(Mat2::diagonal(CycNum(2), CycNum(3)), v, pts);
  EXPECT_FALSE(bad.passed);
  EXPECT_TRUE(bad.exact);
  EXPECT_GT(bad.max_residual, 1e-3);
  EXPECT_THROW(check_field_symmetry(Mat2(CycNum(1), CycNum(1), CycNum(1), CycNum(1)), v, pts), SingularMatrix);
}

TEST(Symmetry, NonMonomialMatrixUsesSampling) {
  auto v = RatVF::parse("y^4/x^2 • 0");
  Mat2 shear(CycNum(1), CycNum(Rational(1) / 10), CycNum(0), CycNum(1));
  auto check = check_field_symmetry(shear, v, points_off_axes(20, 2));
  EXPECT_FALSE(check.exact);
  EXPECT_FALSE(check.passed);
  // polynomial field with a non-monomial matrix is decided exactly
  auto sph = RatVF::parse("(x - y)^2 • (x - y)^2");
  auto z3 = CycNum::root_of_unity(3, 1);
  auto exact = check_field_symmetry(kSph.exact_member(CycNum(2), z3), sph, {});
  EXPECT_TRUE(exact.exact);
  EXPECT_TRUE(exact.passed);
}

TEST(Symmetry, FlowSymmetryExamples) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  auto parabolic = kDelta.flow();
  auto sph = kSph.flow();
  for (int trial = 0; trial < 10; ++trial) {
    Complex b(u(rng), u(rng)), d = std::polar(0.8 + 0.4 * std::abs(u(rng)), 3.0 * u(rng));
    EXPECT_TRUE(check_flow_symmetry(kDelta.member(b, d), parabolic, flow_samples(parabolic, 20, trial)).passed);
    EXPECT_TRUE(check_flow_symmetry(kSph.member(b, d), sph, flow_samples(sph, 20, trial)).passed);
  }
  ClosedFormFlow rx{FlowFamily::radical_x, 1};
  std::vector<FlowSample> samples{{{1.0, 0.3}, 0.05}, {{0.9, -0.2}, 0.1}};
  auto shear = check_flow_symmetry(NumMat2{1.0, 1.0, 0.0, 1.0}, rx, samples);
  EXPECT_FALSE(shear.passed);
  EXPECT_GT(shear.max_residual, 100 * kSymmetryTolerance);
}

TEST(Symmetry, BranchViolationIsDistinctFromFailure) {
  ClosedFormFlow rx{FlowFamily::radical_x, 1};
  std::vector<FlowSample> samples{{{1.0, 0.3}, 0.05}};
  // L p lands on the branch locus x = 0
  NumMat2 L{1.0, -1.0 / 0.3, 0.0, 1.0};
  EXPECT_THROW(check_flow_symmetry(L, rx, samples), BranchError);
}

TEST(Symmetry, ParabolicConjugatesToSph) {
  // gamma_{d,b} = L^-1 delta_{b,d} L with L = [[1,0],[-1,1]]
  NumMat2 L{1.0, 0.0, -1.0, 1.0};
  Complex b(0.3, -0.2), d(0.6, 0.7);
  NumMat2 lhs = kSph.member(b, d);
  NumMat2 rhs = L.inverse() * kDelta.member(b, d) * L;
  EXPECT_LE(std::abs(lhs.a - rhs.a) + std::abs(lhs.b - rhs.b) + std::abs(lhs.c - rhs.c) + std::abs(lhs.d - rhs.d), 1e-14);
}

TEST(Symmetry, DiagonalFamilyClosure) {
  std::mt19937_64 rng(5);
  for (const auto& fam : {kGamma43, kGamma41, SymmetryFamily{FamilyKind::gamma_4k3, 3}}) {
    for (int trial = 0; trial < 20; ++trial) {
      int n = std::uniform_int_distribution<int>(2, 12)(rng);
      auto c1 = CycNum(std::uniform_int_distribution<int>(1, 4)(rng)) * CycNum::root_of_unity(n, trial);
      auto c2 = CycNum(Rational(1) / std::uniform_int_distribution<int>(1, 4)(rng)) * CycNum::root_of_unity(n, 3 * trial);
      EXPECT_EQ(fam.exact_member(c1) * fam.exact_member(c2), fam.exact_member(c1 * c2));
      EXPECT_TRUE(check_field_symmetry(fam.exact_member(c1) * fam.exact_member(c2), closed_form_field(fam.flow()), {})
                      .passed);
    }
  }
}

TEST(Symmetry, DiagonalSolveExamples) {
  auto a = diagonal_symmetry_solve(RatVF::parse("y^4/x^2 • 0")).value();
  EXPECT_EQ(std::pair(a.s_exp, a.t_exp), std::pair(4, 3));
  EXPECT_FALSE(a.has_shear_symmetry);
  auto b = diagonal_symmetry_solve(RatVF::parse("0 • x^3/y")).value();
  EXPECT_EQ(std::pair(b.s_exp, b.t_exp), std::pair(2, 3));
  auto c = diagonal_symmetry_solve(RatVF::parse("y^2 • 0")).value();
  EXPECT_EQ(std::pair(c.s_exp, c.t_exp), std::pair(2, 1));
  EXPECT_TRUE(c.has_shear_symmetry);
  EXPECT_THROW(diagonal_symmetry_solve(RatVF::parse("x^2 + y^2 • 0")), InvalidArgument);
  // two independent exponent conditions leave only finitely many diagonal symmetries
  EXPECT_FALSE(diagonal_symmetry_solve(RatVF::parse("y^2 • x^2")).has_value());
  auto d = diagonal_symmetry_solve(RatVF::parse("y^5/x^3 • 0")).value();
  EXPECT_EQ(std::pair(d.s_exp, d.t_exp), std::pair(5, 4));
}

TEST(Symmetry, DiagonalSolveMatchesFamilies) {
  for (int k = 1; k <= 4; ++k) {
    SymmetryFamily f43{FamilyKind::gamma_4k3, k}, f41{FamilyKind::gamma_4k1, k};
    auto a = diagonal_symmetry_solve(closed_form_field(f43.flow())).value();
    EXPECT_EQ(std::pair(a.s_exp, a.t_exp), f43.exponents());
    EXPECT_EQ(a.torsion, 1);
    auto b = diagonal_symmetry_solve(closed_form_field(f41.flow())).value();
    EXPECT_EQ(std::pair(b.s_exp, b.t_exp), f41.exponents());
  }
}

TEST(Symmetry, DiagonalSolveOnAllSingleMonomials) {
  auto c = CycNum::root_of_unity(7, 3) * CycNum(2);
  for (int lx = 0; lx <= 3; ++lx) {
    for (int ly = 0; ly <= 3; ++ly) {
      const int D = lx + ly + 2;
      for (int i = 0; i <= D; ++i) {
        for (Component comp : {Component::first, Component::second}) {
          RatVF v = RatVF::monomial({lx, ly}, comp, i);
          auto sol = diagonal_symmetry_solve(v);
          if (!sol) continue;
          // every term has a + b = 1, so the lattice is always saturated
          EXPECT_EQ(sol->torsion, 1);
          Mat2 member = Mat2::diagonal(c.pow(sol->s_exp), c.pow(sol->t_exp));
          EXPECT_EQ(conjugate_field(member, v), v);
          Mat2 off = Mat2::diagonal(CycNum(2) * c.pow(sol->s_exp), CycNum(3) * c.pow(sol->t_exp));
          EXPECT_NE(conjugate_field(off, v), v);
        }
      }
    }
  }
}

TEST(Symmetry, FiniteOrderExamples) {
  EXPECT_EQ(family_finite_order(kSph, CycNum(0), CycNum(1)), 1L);
  EXPECT_FALSE(family_finite_order(kSph, CycNum(2), CycNum(1)).has_value());
  auto z6 = CycNum::root_of_unity(6, 1);
  EXPECT_EQ(family_finite_order(kDelta, CycNum(7), z6), 6L);
  EXPECT_FALSE(family_finite_order(kDelta, CycNum(0), CycNum(2)).has_value());
  EXPECT_EQ(family_finite_order(kGamma43, CycNum::root_of_unity(8, 1)), 8L);
  EXPECT_FALSE(family_finite_order(kGamma43, CycNum(3)).has_value());
  EXPECT_THROW(family_finite_order(kDelta, CycNum(1), CycNum(0)), SingularMatrix);
}

TEST(Symmetry, FiniteOrderAgreesWithPowering) {
  for (int n = 1; n <= 20; ++n) {
    for (int j = 0; j < n; ++j) {
      auto d = CycNum::root_of_unity(n, j);
      for (const CycNum& b : {CycNum(0), CycNum(1), d + CycNum(1)}) {
        for (const auto& fam : {kDelta, kSph}) {
          auto expected = matrix_finite_order(fam.exact_member(b, d), 60);
          EXPECT_EQ(family_finite_order(fam, b, d), expected) << fam.name() << " n=" << n << " j=" << j;
        }
      }
      for (const auto& fam : {kGamma43, kGamma41, SymmetryFamily{FamilyKind::gamma_4k1, 2}}) {
        EXPECT_EQ(family_finite_order(fam, d), matrix_finite_order(fam.exact_member(d), 60)) << n << " " << j;
      }
    }
  }
}

TEST(Symmetry, OrderSixGenerator) {
  auto z3 = CycNum::root_of_unity(3, 1);
  Mat2 gamma(z3, CycNum(0), z3 + z3.inverse(), -z3.inverse());
  EXPECT_TRUE(gamma.pow(6).is_identity());
  for (int j = 1; j <= 5; ++j) EXPECT_FALSE(gamma.pow(j).is_identity()) << j;
  EXPECT_EQ(kSph.exact_member(CycNum(0), -(z3 * z3)), gamma);
  EXPECT_TRUE(check_field_symmetry(gamma, closed_form_field(kSph.flow()), {}).passed);
}

TEST(Symmetry, FamiliesVerifyAndFalsify) {
  for (const auto& fam : {kGamma43, SymmetryFamily{FamilyKind::gamma_4k3, 2}, kGamma41,
                          SymmetryFamily{FamilyKind::gamma_4k1, 2}, kDelta, kSph}) {
    auto members = verify_family(fam, 20, 101);
    EXPECT_TRUE(members.all_passed) << fam.name() << " " << members.worst_residual;
    EXPECT_LE(members.worst_residual, kSymmetryTolerance);
    auto off = falsify_family(fam, 20, 202);
    EXPECT_TRUE(off.all_passed) << fam.name() << " " << off.worst_residual;
    EXPECT_GT(off.worst_residual, kSymmetryTolerance);
  }
}

TEST(Symmetry, ReportsAreDeterministic) {
  auto a = verify_family(kGamma41, 5, 42);
  auto b = verify_family(kGamma41, 5, 42);
  EXPECT_EQ(a.worst_residual, b.worst_residual);
  EXPECT_EQ(a.seed, 42u);
  EXPECT_EQ(a.subject, "radical_y(k=1)");
}

TEST(Symmetry, FamilyNames) {
  EXPECT_EQ(SymmetryFamily::from_name("gamma_sph").kind, FamilyKind::gamma_sph);
  EXPECT_EQ(SymmetryFamily::from_name("gamma_4k1", 3).flow().k, 3);
  EXPECT_THROW(SymmetryFamily::from_name("gamma_9"), InvalidArgument);
  EXPECT_THROW(kDelta.exponents(), InvalidArgument);
}
