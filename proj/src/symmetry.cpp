#include "superflow/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>

#include "superflow/error.hpp"

namespace superflow {
namespace {

constexpr double kAxisMargin = 0.05;
constexpr int kSampleBatches = 64;

bool regular_at(const RatVF& field, const Point& p) {
  if (!is_finite(p)) return false;
  if (field.den().x_exp > 0 && std::abs(p.x) < kAxisMargin) return false;
  if (field.den().y_exp > 0 && std::abs(p.y) < kAxisMargin) return false;
  return true;
}

class Draws {
 public:
  explicit Draws(std::uint64_t seed) : engine_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  Complex unit_scaled() {
    return std::polar(uniform(0.8, 1.25), uniform(0.0, 2.0 * std::numbers::pi));
  }
  Complex box() { return {uniform(-1.0, 1.0), uniform(-1.0, 1.0)}; }
  std::uint64_t next_seed() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

// Flow samples valid at p and at L p.
std::vector<FlowSample> flow_samples_for(const NumMat2& L, const ClosedFormFlow& flow, std::size_t n,
                                         std::uint64_t seed) {
  std::vector<FlowSample> out;
  for (int batch = 0; batch < kSampleBatches && out.size() < n; ++batch) {
    for (const auto& s : translation_samples(flow, 4 * n, seed + static_cast<std::uint64_t>(batch))) {
      if (branch_valid(flow, L * s.p, s.t)) out.push_back({s.p, s.t});
      if (out.size() == n) break;
    }
  }
  if (out.empty()) throw BranchError("no branch-valid samples for " + flow.name() + " under this matrix");
  return out;
}

std::vector<Point> field_samples_for(const NumMat2& L, const ClosedFormFlow& flow, const RatVF& field,
                                     std::size_t n, std::uint64_t seed) {
  std::vector<Point> out;
  for (int batch = 0; batch < kSampleBatches && out.size() < n; ++batch) {
    for (const auto& p : field_samples(flow, 4 * n, seed + static_cast<std::uint64_t>(batch))) {
      if (regular_at(field, p) && regular_at(field, L * p)) out.push_back(p);
      if (out.size() == n) break;
    }
  }
  if (out.empty()) throw SingularPoint("no regular samples for " + flow.name() + " under this matrix");
  return out;
}

double combined_residual(const NumMat2& L, const ClosedFormFlow& flow, std::size_t n, std::uint64_t seed) {
  const RatVF field = closed_form_field(flow);
  auto fs = flow_samples_for(L, flow, n, seed);
  auto ps = field_samples_for(L, flow, field, n, seed ^ 0x9e3779b97f4a7c15ULL);
  return std::max(check_flow_symmetry(L, flow, fs).max_residual,
                  check_field_symmetry(L, field, ps).max_residual);
}

struct Term {
  long a;
  long b;
};

}  // namespace

std::string SymmetryFamily::name() const {
  switch (kind) {
    case FamilyKind::gamma_4k3:
      return "gamma_4k3";
    case FamilyKind::gamma_4k1:
      return "gamma_4k1";
    case FamilyKind::delta_tilde:
      return "delta_tilde";
    case FamilyKind::gamma_sph:
      return "gamma_sph";
  }
  return "unknown";
}

SymmetryFamily SymmetryFamily::from_name(const std::string& name, int k) {
  if (k < 1) throw InvalidArgument("symmetry family index k must be >= 1");
  if (name == "gamma_4k3") return {FamilyKind::gamma_4k3, k};
  if (name == "gamma_4k1") return {FamilyKind::gamma_4k1, k};
  if (name == "delta_tilde") return {FamilyKind::delta_tilde, k};
  if (name == "gamma_sph") return {FamilyKind::gamma_sph, k};
  throw InvalidArgument("unknown symmetry family '" + name + "'");
}

ClosedFormFlow SymmetryFamily::flow() const {
  switch (kind) {
    case FamilyKind::gamma_4k3:
      return {FlowFamily::radical_x, k};
    case FamilyKind::gamma_4k1:
      return {FlowFamily::radical_y, k};
    case FamilyKind::delta_tilde:
      return {FlowFamily::parabolic, 1};
    case FamilyKind::gamma_sph:
      return {FlowFamily::sph_inf, 1};
  }
  throw InvalidArgument("unknown symmetry family");
}

std::pair<int, int> SymmetryFamily::exponents() const {
  switch (kind) {
    case FamilyKind::gamma_4k3:
      return {2 * k + 2, 2 * k + 1};
    case FamilyKind::gamma_4k1:
      return {2 * k, 2 * k + 1};
    default:
      throw InvalidArgument(name() + " is not a diagonal family");
  }
}

NumMat2 SymmetryFamily::member(Complex c) const {
  auto [p, q] = exponents();
  return {std::pow(c, p), 0.0, 0.0, std::pow(c, q)};
}

NumMat2 SymmetryFamily::member(Complex b, Complex d) const {
  switch (kind) {
    case FamilyKind::delta_tilde:
      return {d * d, b, 0.0, d};
    case FamilyKind::gamma_sph:
      return {d * d - b, b, d * d - d - b, d + b};
    default:
      throw InvalidArgument(name() + " is parametrized by a single c");
  }
}

Mat2 SymmetryFamily::exact_member(const CycNum& c) const {
  auto [p, q] = exponents();
  return Mat2::diagonal(c.pow(p), c.pow(q));
}

Mat2 SymmetryFamily::exact_member(const CycNum& b, const CycNum& d) const {
  switch (kind) {
    case FamilyKind::delta_tilde:
      return {d * d, b, CycNum(0), d};
    case FamilyKind::gamma_sph:
      return {d * d - b, b, d * d - d - b, d + b};
    default:
      throw InvalidArgument(name() + " is parametrized by a single c");
  }
}

SymmetryCheck check_field_symmetry(const Mat2& L, const RatVF& field, std::span<const Point> samples) {
  if (!L.is_invertible()) throw SingularMatrix();
  const RatVF reduced = field.reduced();
  if (L.is_monomial() || reduced.den().degree() == 0) {
    SymmetryCheck out;
    out.exact = true;
    out.passed = conjugate_field(L, reduced) == reduced;
    if (!out.passed) {
      out.max_residual = samples.empty() ? std::numeric_limits<double>::infinity()
                                         : check_field_symmetry(NumMat2::from_exact(L), field, samples).max_residual;
    }
    return out;
  }
  return check_field_symmetry(NumMat2::from_exact(L), field, samples);
}

SymmetryCheck check_field_symmetry(const NumMat2& L, const RatVF& field, std::span<const Point> samples) {
  const NumMat2 inv = L.inverse();
  SymmetryCheck out;
  for (const auto& p : samples) {
    Point diff = inv * eval_field(field, L * p) - eval_field(field, p);
    double r = norm(diff);
    if (!std::isfinite(r)) r = std::numeric_limits<double>::infinity();
    out.max_residual = std::max(out.max_residual, r);
  }
  out.passed = out.max_residual <= kSymmetryTolerance;
  return out;
}

SymmetryCheck check_flow_symmetry(const NumMat2& L, const ClosedFormFlow& flow,
                                  std::span<const FlowSample> samples) {
  SymmetryCheck out;
  for (const auto& s : samples) {
    if (!branch_valid(flow, s.p, s.t) || !branch_valid(flow, L * s.p, s.t)) {
      throw BranchError("sample is not branch-valid for " + flow.name());
    }
    double r = norm(conjugate_flow_numeric(L, flow, s.p, s.t) - flow_eval(flow, s.p, s.t));
    if (!std::isfinite(r)) r = std::numeric_limits<double>::infinity();
    out.max_residual = std::max(out.max_residual, r);
  }
  out.passed = out.max_residual <= kSymmetryTolerance;
  return out;
}

std::optional<DiagonalFamily> diagonal_symmetry_solve(const RatVF& field) {
  const RatVF v = field.reduced();
  if (v.is_zero()) throw InvalidArgument("diagonal_symmetry_solve: zero field");
  if (v.num_x().nonzero_count() > 1 || v.num_y().nonzero_count() > 1) {
    throw InvalidArgument("diagonal_symmetry_solve: numerators must be single monomials");
  }
  const int D = v.numerator_degree();
  const long lx = v.den().x_exp;
  const long ly = v.den().y_exp;
  // diag(s, t) scales the term by s^a t^b.
  std::vector<Term> terms;
  for (int i = 0; i <= D; ++i) {
    if (!v.num_x().coeff(i).is_zero()) terms.push_back({i - lx - 1, D - i - ly});
    if (!v.num_y().coeff(i).is_zero()) terms.push_back({i - lx, D - i - ly - 1});
  }
  // Lattice generated by the exponent vectors: rank and saturation index.
  long g = 0;
  Term primitive{0, 0};
  for (const auto& t : terms) {
    if (t.a == 0 && t.b == 0) continue;
    if (primitive.a == 0 && primitive.b == 0) {
      long h = std::gcd(t.a, t.b);
      primitive = {t.a / h, t.b / h};
    }
    if (t.a * primitive.b - t.b * primitive.a != 0) return std::nullopt;
    long multiple = primitive.a != 0 ? t.a / primitive.a : t.b / primitive.b;
    g = std::gcd(g, multiple);
  }
  if (g == 0) throw InvalidArgument("diagonal_symmetry_solve: every diagonal matrix is a symmetry");

  DiagonalFamily out;
  long p = primitive.b;
  long q = -primitive.a;
  if (p < 0 || (p == 0 && q < 0)) {
    p = -p;
    q = -q;
  }
  out.s_exp = static_cast<int>(p);
  out.t_exp = static_cast<int>(q);
  out.torsion = g;

  const Mat2 upper(CycNum(1), CycNum(1), CycNum(0), CycNum(1));
  const Mat2 lower(CycNum(1), CycNum(0), CycNum(1), CycNum(1));
  if (v.den().degree() == 0) {
    out.has_shear_symmetry = conjugate_field(upper, v) == v || conjugate_field(lower, v) == v;
  } else {
    // Off the coordinate axes a shear maps points onto them, so test numerically.
    const std::vector<Point> pts{{0.7, 1.3}, {-1.1, 0.6}, {Complex(0.4, 0.9), Complex(1.2, -0.3)}};
    auto residual = [&](const Mat2& L) {
      std::vector<Point> usable;
      NumMat2 n = NumMat2::from_exact(L);
      for (const auto& pt : pts) {
        if (regular_at(v, pt) && regular_at(v, n * pt)) usable.push_back(pt);
      }
      return !usable.empty() && check_field_symmetry(n, v, usable).passed;
    };
    out.has_shear_symmetry = residual(upper) || residual(lower);
  }
  return out;
}

std::optional<long> family_finite_order(const SymmetryFamily& family, const CycNum& c) {
  auto [p, q] = family.exponents();
  auto m = multiplicative_order(c);
  if (!m) return std::nullopt;
  long n = *m;
  return lcm_order(n / std::gcd(n, static_cast<long>(p)), n / std::gcd(n, static_cast<long>(q)));
}

std::optional<long> family_finite_order(const SymmetryFamily& family, const CycNum& b, const CycNum& d) {
  if (family.is_diagonal()) throw InvalidArgument(family.name() + " is parametrized by a single c");
  if (d.is_zero()) throw SingularMatrix();
  // Eigenvalues d^2 and d: unipotent when d = 1, diagonalizable otherwise.
  if (d.is_one()) {
    if (b.is_zero()) return 1;
    return std::nullopt;
  }
  return multiplicative_order(d);
}

SymmetryReport verify_family(const SymmetryFamily& family, std::size_t n_draws, std::uint64_t seed,
                             std::size_t samples_per_draw) {
  SymmetryReport report;
  report.subject = family.flow().name();
  report.family = family.name();
  report.mode = "members";
  report.n_draws = n_draws;
  report.seed = seed;
  report.all_passed = true;
  Draws rng(seed);
  for (std::size_t i = 0; i < n_draws; ++i) {
    NumMat2 L = family.is_diagonal() ? family.member(rng.unit_scaled())
                                     : family.member(rng.box(), rng.unit_scaled());
    double r = combined_residual(L, family.flow(), samples_per_draw, rng.next_seed());
    if (r > kSymmetryTolerance) r = combined_residual(L, family.flow(), samples_per_draw, rng.next_seed());
    report.worst_residual = std::max(report.worst_residual, r);
    if (r > kSymmetryTolerance) report.all_passed = false;
  }
  return report;
}

SymmetryReport falsify_family(const SymmetryFamily& family, std::size_t n_draws, std::uint64_t seed,
                              std::size_t samples_per_draw) {
  SymmetryReport report;
  report.subject = family.flow().name();
  report.family = family.name();
  report.mode = "off_family";
  report.n_draws = n_draws;
  report.seed = seed;
  report.all_passed = true;
  report.worst_residual = std::numeric_limits<double>::infinity();
  Draws rng(seed);
  for (std::size_t i = 0; i < n_draws; ++i) {
    NumMat2 L;
    if (i % 2 == 0) {
      // A family member with one entry knocked off the family.
      L = family.is_diagonal() ? family.member(rng.unit_scaled())
                               : family.member(rng.box(), rng.unit_scaled());
      Complex bump = std::polar(rng.uniform(0.1, 0.3), rng.uniform(0.0, 2.0 * std::numbers::pi));
      if (family.is_diagonal()) {
        L.a *= 1.0 + bump;
      } else {
        L.c += bump;
      }
    } else {
      do {
        L = {rng.box(), rng.box(), rng.box(), rng.box()};
      } while (std::abs(L.det()) < 0.1);
    }
    double r = combined_residual(L, family.flow(), samples_per_draw, rng.next_seed());
    report.worst_residual = std::min(report.worst_residual, r);
    if (r <= kSymmetryTolerance) report.all_passed = false;
  }
  return report;
}

}  // namespace superflow
