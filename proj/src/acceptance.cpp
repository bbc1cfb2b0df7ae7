#include "superflow/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "superflow/error.hpp"
#include "superflow/flow_kernel.hpp"
#include "superflow/superflow_engine.hpp"
#include "superflow/symmetry.hpp"

namespace superflow {
namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& failure) {
    if (!ok) {
      if (passed) {
        detail.str("");
      } else {
        detail << "; ";
      }
      passed = false;
      detail << failure;
    }
  }
};

Outcome classification() {
  Outcome out;
  auto start = std::chrono::steady_clock::now();
  auto rows = classify_alpha(3, 20);
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  for (const auto& row : rows) {
    const int m = row.m;
    const bool expect_superflow = m % 4 != 0;
    out.require((row.verdict.status == VerdictStatus::superflow) == expect_superflow,
                "m=" + std::to_string(m) + " status " + to_string(row.verdict.status));
    std::optional<RatVF> expected;
    if (m % 4 == 3) {
      const int k = (m - 3) / 4;
      expected = RatVF(HomPoly::monomial(2 * k + 2, 0), HomPoly(2 * k + 2), {2 * k, 0});
    } else if (m % 4 == 1) {
      const int k = (m - 1) / 4;
      expected = RatVF(HomPoly(2 * k + 1), HomPoly::monomial(2 * k + 1, 2 * k + 1), {0, 2 * k - 1});
    }
    if (expected && row.verdict.field) {
      out.require(*row.verdict.field == *expected && row.verdict.field->to_string() == expected->to_string(),
                  "m=" + std::to_string(m) + " field " + row.verdict.field->to_string());
    }
  }
  out.require(seconds < 30.0, "runtime " + sci(seconds) + " s");
  if (out.passed) out.detail << rows.size() << " groups classified in " << sci(seconds) << " s";
  return out;
}

Outcome character_sums() {
  Outcome out;
  std::size_t checked = 0;
  for (long m : {3, 5, 7, 9, 11, 13}) {
    for (long l = 0; l <= m; ++l) {
      for (long i = 0; i <= m + 2; ++i) {
        const bool first = monomial_survival(m, i, l, Component::first);
        const bool second = monomial_survival(m, i, l, Component::second);
        out.require(first == character_sum_nonzero(m, i + l, 2 * i - 2 * l - 3),
                    "m=" + std::to_string(m) + " i=" + std::to_string(i) + " l=" + std::to_string(l) + " first");
        out.require(second == character_sum_nonzero(m, i + l + 1, 2 * i - 2 * l - 1),
                    "m=" + std::to_string(m) + " i=" + std::to_string(i) + " l=" + std::to_string(l) + " second");
        checked += 2;
      }
    }
  }
  if (out.passed) out.detail << checked << " (m, i, l, component) cases agree";
  return out;
}

RatVF random_field(int m, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> degree(0, 4);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> power(0, m - 1);
  const int L = degree(rng);
  const int lx = std::uniform_int_distribution<int>(0, L)(rng);
  const int D = L + 2;
  std::vector<CycNum> px, py;
  for (int i = 0; i <= D; ++i) {
    px.push_back(CycNum(coeff(rng)) * CycNum::root_of_unity(m, power(rng)));
    py.push_back(CycNum(coeff(rng)) * CycNum::root_of_unity(m, power(rng)));
  }
  return RatVF(HomPoly(D, px), HomPoly(D, py), {lx, L - lx});
}

Outcome reynolds(std::uint64_t seed) {
  Outcome out;
  std::mt19937_64 rng(seed);
  std::size_t nonzero = 0;
  std::size_t total = 0;
  for (int m : {3, 5, 7}) {
    FiniteMatrixGroup group = alpha_group(m);
    for (int n = 0; n < 50; ++n) {
      RatVF field = random_field(m, rng);
      ++total;
      auto avg = reynolds_average(group, field);
      if (!avg) continue;
      ++nonzero;
      auto again = reynolds_average(group, *avg);
      out.require(again && *again == *avg, "m=" + std::to_string(m) + " averaging not idempotent on " +
                                               field.to_string());
      for (const auto& sigma : group.elements()) {
        out.require(conjugate_field(sigma, *avg) == *avg,
                    "m=" + std::to_string(m) + " average not invariant under " + sigma.to_string());
      }
    }
  }
  if (out.passed) out.detail << total << " fields, " << nonzero << " nonzero averages, all idempotent and invariant";
  return out;
}

Outcome flow_identities(std::uint64_t seed) {
  Outcome out;
  auto start = std::chrono::steady_clock::now();
  double worst_translation = 0.0, worst_pde = 0.0, worst_field = 0.0;
  for (const auto& flow : flow_catalog()) {
    const bool polynomial_exact = flow.family == FlowFamily::parabolic || flow.family == FlowFamily::level0;
    const double translation_tol = polynomial_exact ? 1e-10 : 1e-9;
    auto ts = translation_samples(flow, 200, seed);
    double tr = verify_translation(flow, ts).max_residual;
    out.require(tr <= translation_tol, flow.name() + " translation residual " + sci(tr));

    const RatVF field = closed_form_field(flow);
    auto ps = pde_samples(flow, 200, seed + 1);
    double pde = verify_pde(flow, field, ps).max_residual;
    out.require(pde <= 1e-6, flow.name() + " PDE residual " + sci(pde));

    double rel = 0.0;
    for (const auto& p : field_samples(flow, 200, seed + 2)) rel = std::max(rel, field_extraction_error(flow, field, p));
    out.require(rel <= 1e-7, flow.name() + " extracted field relative error " + sci(rel));
    worst_translation = std::max(worst_translation, tr);
    worst_pde = std::max(worst_pde, pde);
    worst_field = std::max(worst_field, rel);
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.require(seconds < 10.0, "runtime " + sci(seconds) + " s");
  if (out.passed) {
    out.detail << "worst translation " << sci(worst_translation) << ", PDE " << sci(worst_pde)
               << ", field " << sci(worst_field) << " in " << sci(seconds) << " s";
  }
  return out;
}

Outcome orbits(std::uint64_t seed) {
  Outcome out;
  struct Case {
    OrbitFunction w;
    RatVF field;
    Point start;
    double t_end;
  };
  const std::vector<Case> cases{
      {{OrbitKind::coordinate_y}, closed_form_field({FlowFamily::radical_x, 1}), {1.0, 0.5}, 1.0},
      {{OrbitKind::coordinate_x}, closed_form_field({FlowFamily::radical_y, 1}), {0.5, 1.0}, 1.0},
      {{OrbitKind::nonalgebraic_example}, RatVF::parse("x^2 + x*y + y^2 • x*y + y^2"), {1.0, 1.0}, 0.1},
  };
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  std::uniform_real_distribution<double> away(0.5, 1.5);
  double worst_path = 0.0, worst_ode = 0.0;
  for (const auto& c : cases) {
    auto path = integrate_trajectory(c.field, c.start, c.t_end, 1000);
    double r = orbit_residual(c.w, path);
    out.require(r <= 1e-6, c.w.name() + " orbit drift " + sci(r));
    std::vector<Point> samples;
    while (samples.size() < 100) {
      double sign = coord(rng) < 0 ? -1.0 : 1.0;
      // keep the coordinate in the denominator (and y for the non-algebraic W) away from 0
      Point p = c.w.kind == OrbitKind::coordinate_x ? Point{coord(rng), sign * away(rng)}
                                                    : c.w.kind == OrbitKind::coordinate_y
                                                          ? Point{sign * away(rng), coord(rng)}
                                                          : Point{coord(rng), sign * away(rng)};
      samples.push_back(p);
    }
    double ode = verify_orbit_ode(c.w, c.field, samples).max_residual;
    out.require(ode <= 1e-6, c.w.name() + " orbit ODE residual " + sci(ode));
    worst_path = std::max(worst_path, r);
    worst_ode = std::max(worst_ode, ode);
  }
  if (out.passed) out.detail << "worst drift " << sci(worst_path) << ", worst ODE residual " << sci(worst_ode);
  return out;
}

Outcome symmetry_families(std::uint64_t seed) {
  Outcome out;
  std::vector<SymmetryFamily> families{{FamilyKind::gamma_4k3, 1}, {FamilyKind::gamma_4k3, 2},
                                       {FamilyKind::gamma_4k1, 1}, {FamilyKind::gamma_4k1, 2},
                                       {FamilyKind::delta_tilde, 1}, {FamilyKind::gamma_sph, 1}};
  double worst_member = 0.0;
  double closest_off = std::numeric_limits<double>::infinity();
  for (std::size_t f = 0; f < families.size(); ++f) {
    const auto& fam = families[f];
    const std::string label = fam.name() + "(k=" + std::to_string(fam.k) + ")";
    auto members = verify_family(fam, 20, seed + 2 * f);
    out.require(members.all_passed, label + " member residual " + sci(members.worst_residual));
    auto off = falsify_family(fam, 20, seed + 2 * f + 1);
    out.require(off.all_passed, label + " off-family residual " + sci(off.worst_residual));
    worst_member = std::max(worst_member, members.worst_residual);
    closest_off = std::min(closest_off, off.worst_residual);
  }

  const CycNum z3 = CycNum::root_of_unity(3, 1);
  const Mat2 gamma(z3, CycNum(0), z3 + z3.inverse(), -z3.inverse());
  const Mat2 id = Mat2::identity();
  bool order6 = gamma.pow(6) == id;
  for (int j = 1; j < 6; ++j) order6 = order6 && !(gamma.pow(j) == id);
  out.require(order6, "gamma does not have exact order 6");
  const SymmetryFamily sph{FamilyKind::gamma_sph, 1};
  out.require(sph.exact_member(CycNum(0), -(z3 * z3)) == gamma, "gamma is not gamma_{d,b} with d = -zeta_3^2, b = 0");
  out.require(family_finite_order(sph, CycNum(0), -(z3 * z3)) == 6L, "family order of gamma is not 6");

  for (long b : {1, 2, -3}) {
    out.require(!family_finite_order(sph, CycNum(b), CycNum(1)).has_value(),
                "gamma_{1," + std::to_string(b) + "} reported finite");
    out.require(!matrix_finite_order(sph.exact_member(CycNum(b), CycNum(1)), 1000).has_value(),
                "gamma_{1," + std::to_string(b) + "} has a finite power");
  }

  const SymmetryFamily delta{FamilyKind::delta_tilde, 1};
  const CycNum z6 = CycNum::root_of_unity(6, 1);
  for (const CycNum& b : {CycNum(0), CycNum(1), CycNum(-5), z6 + CycNum(2)}) {
    out.require(family_finite_order(delta, b, z6) == 6L, "delta_{b,zeta_6} family order is not 6");
    out.require(matrix_finite_order(delta.exact_member(b, z6), 60) == 6L, "delta_{b,zeta_6} powers do not close at 6");
  }
  if (out.passed) {
    out.detail << families.size() << " families: worst member residual " << sci(worst_member)
               << ", smallest off-family residual " << sci(closest_off) << "; exact orders 6, infinite, 6";
  }
  return out;
}

Outcome impossibility() {
  Outcome out;
  for (int m : {4, 8, 12}) {
    FiniteMatrixGroup group = alpha_group(m);
    SuperflowVerdict fast = find_superflow(group);
    ScanOptions generic_options;
    generic_options.negative_identity_shortcut = false;
    SuperflowVerdict generic = find_superflow(group, generic_options);
    out.require(fast.negative_identity_shortcut && fast.status == VerdictStatus::none,
                "m=" + std::to_string(m) + " fast path did not answer none");
    out.require(!generic.negative_identity_shortcut && generic.status == VerdictStatus::none &&
                    generic.dimension == 0,
                "m=" + std::to_string(m) + " generic scan found " + to_string(generic.status));
  }
  if (out.passed) out.detail << "m = 4, 8, 12: fast path and scan up to |G| both give none";
  return out;
}

Outcome reduction() {
  Outcome out;
  for (int m : {6, 10, 14}) {
    auto even = find_superflow(alpha_group(m));
    auto odd = find_superflow(alpha_group(m / 2));
    if (!even.field || !odd.field) {
      out.require(false, "m=" + std::to_string(m) + " missing superflow");
      continue;
    }
    auto conjugated = conjugate_field(tau_matrix(), *odd.field).canonical();
    out.require(conjugated && *conjugated == *even.field && conjugated->to_string() == even.field->to_string(),
                "m=" + std::to_string(m) + ": " + even.field->to_string() + " vs tau-conjugate " +
                    (conjugated ? conjugated->to_string() : std::string("0")));
  }
  if (out.passed) out.detail << "m = 6, 10, 14 equal the tau-conjugates of m = 3, 5, 7";
  return out;
}

const char* criterion_name(int id) {
  switch (id) {
    case 1: return "classification";
    case 2: return "character-sum oracle";
    case 3: return "reynolds properties";
    case 4: return "flow identities";
    case 5: return "orbit checks";
    case 6: return "symmetry families";
    case 7: return "impossibility";
    case 8: return "m = 2 mod 4 reduction";
    default: return "unknown";
  }
}

}  // namespace

bool character_sum_nonzero(long m, long sign_exponent, long zeta_exponent) {
  const CycNum ratio = CycNum(sign_exponent % 2 == 0 ? 1 : -1) * CycNum::root_of_unity(static_cast<int>(m), 1).pow(zeta_exponent);
  CycNum sum(0);
  CycNum term(1);
  for (long s = 0; s < 2 * m; ++s) {
    sum += term;
    term *= ratio;
  }
  return !sum.is_zero();
}

CriterionResult run_criterion(int id, std::uint64_t seed) {
  CriterionResult result;
  result.id = id;
  result.name = criterion_name(id);
  auto start = std::chrono::steady_clock::now();
  try {
    Outcome out;
    switch (id) {
      case 1: out = classification(); break;
      case 2: out = character_sums(); break;
      case 3: out = reynolds(seed); break;
      case 4: out = flow_identities(seed); break;
      case 5: out = orbits(seed); break;
      case 6: out = symmetry_families(seed); break;
      case 7: out = impossibility(); break;
      case 8: out = reduction(); break;
      default: throw InvalidArgument("no acceptance criterion " + std::to_string(id));
    }
    result.passed = out.passed;
    result.detail = out.detail.str();
  } catch (const InvalidArgument&) {
    throw;
  } catch (const std::exception& e) {
    result.passed = false;
    result.detail = std::string("engine error: ") + e.what();
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
  std::vector<CriterionResult> results;
  for (int id = 1; id <= kCriterionCount; ++id) results.push_back(run_criterion(id, seed));
  return results;
}

std::string format_result(const CriterionResult& result) {
  char time[32];
  std::snprintf(time, sizeof time, "%.2f", result.seconds);
  return std::string(result.passed ? "PASS" : "FAIL") + " [" + std::to_string(result.id) + "] " + result.name +
         ": " + result.detail + " (" + time + " s)";
}

}  // namespace superflow
