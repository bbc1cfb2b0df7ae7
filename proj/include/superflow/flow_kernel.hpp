#pragma once

// Closed-form projective flows and their numerical verification: the
// translation equation phi^(t+s) = phi^s o phi^t with phi^t(p) = phi(p t)/t,
// the boundary condition, vector-field extraction, the flow PDE, orbit
// functions and RK4 trajectories.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "superflow/error.hpp"
#include "superflow/homog_algebra.hpp"
#include "superflow/matrix_groups.hpp"
#include "superflow/numeric.hpp"

namespace superflow {

enum class FlowFamily {
  radical_x,  // ((x^(2k+1) + y^(2k+2))^(1/(2k+1)), y)
  radical_y,  // (x, (y^(2k) + x^(2k+1))^(1/(2k)))
  parabolic,  // (y^2 + x, y)
  sph_inf,    // ((x-y)^2 + x, (x-y)^2 + y)
  level0,     // (x, y) / (x + y + 1)
};

struct ClosedFormFlow {
  FlowFamily family = FlowFamily::parabolic;
  int k = 1;  // radical families only

  std::string name() const;
  /// Parses "parabolic", "sph_inf", "level0", "radical_x", "radical_y".
  static ClosedFormFlow from_name(const std::string& family, int k = 1);
};

/// Every cataloged flow used by the verification suites.
std::vector<ClosedFormFlow> flow_catalog();

/// Exact vector field of a cataloged flow.
RatVF closed_form_field(const ClosedFormFlow& flow);

/// Cataloged level: 1 for the radical families and the parabolic flow, 0
/// for the rational flow; nullopt where none is cataloged.
std::optional<int> flow_level(const ClosedFormFlow& flow);

/// phi(p t)/t, with phi^0 = identity. Radical branches are continued along
/// the segment [0, t] from the anchor value at t = 0. Throws BranchError or
/// SingularPoint.
Point flow_eval(const ClosedFormFlow& flow, const Point& p, Complex t);

/// Whether flow_eval(flow, p, t) is defined with a comfortable margin.
bool branch_valid(const ClosedFormFlow& flow, const Point& p, Complex t);

struct TranslationSample {
  Point p;
  Complex t;
  Complex s;
};

struct FlowSample {
  Point p;
  Complex t;
};

/// Largest residual of a batch and the sample that produced it.
struct Residual {
  double max_residual = 0.0;
  std::size_t worst_index = 0;
};

/// max || phi^(t+s)(p) - phi^s(phi^t(p)) ||.
Residual verify_translation(const ClosedFormFlow& flow, std::span<const TranslationSample> samples);

/// d/dt phi(p t)/t at t = 0 by Richardson-extrapolated central differences.
Point extract_vector_field(const ClosedFormFlow& flow, const Point& p, double h = 1e-5);

/// ||extracted - exact|| / max(||exact||, ||p||^2) at p. The floor is the
/// natural scale of a 2-homogeneous field; it keeps the measure finite on the
/// zero set of the field (e.g. the line x = y for sph_inf).
double field_extraction_error(const ClosedFormFlow& flow, const RatVF& field, const Point& p);

/// Max of |u_x (w - x) + u_y (r - y) + u| over both components u of phi at t = 1,
/// with (w, r) the given field and partials by finite differences.
Residual verify_pde(const ClosedFormFlow& flow, const RatVF& field, std::span<const Point> samples,
                    double h = 1e-6);

/// Thrown when an RK4 trajectory comes within the abort distance of the
/// denominator's vanishing locus.
class SingularityApproach : public SingularPoint {
 public:
  SingularityApproach(std::size_t step, Point where);
  std::size_t step() const { return step_; }
  const Point& where() const { return where_; }

 private:
  std::size_t step_;
  Point where_;
};

inline constexpr double kSingularityAbortDistance = 1e-3;

/// Classical fixed-step RK4 along the field; returns steps + 1 points.
std::vector<Point> integrate_trajectory(const RatVF& field, const Point& start, double t_end,
                                        int steps);

enum class OrbitKind { coordinate_y, coordinate_x, nonalgebraic_example };

struct OrbitFunction {
  OrbitKind kind = OrbitKind::coordinate_y;

  std::string name() const;
  /// Level N with W^N rational; nullopt for the non-algebraic example.
  std::optional<int> level() const;
  /// W(p); exp(-x/y - x^2/(2 y^2)) y for the non-algebraic example.
  Complex operator()(const Point& p) const;
};

/// max |W(p) - W(p0)| / |W(p0)| along the path.
double orbit_residual(const OrbitFunction& w, std::span<const Point> path);

/// max |W r + W_x (y w - x r)| over the samples, field (w, r).
Residual verify_orbit_ode(const OrbitFunction& w, const RatVF& field, std::span<const Point> samples,
                          double h = 1e-6);

/// L^-1 phi^t(L p).
Point conjugate_flow_numeric(const NumMat2& L, const ClosedFormFlow& flow, const Point& p, Complex t);

// Seeded sample generators. Identical seeds give identical samples.

std::vector<TranslationSample> translation_samples(const ClosedFormFlow& flow, std::size_t n,
                                                   std::uint64_t seed);
/// Points where the flow is branch-valid at t = 1 and the field is regular.
std::vector<Point> pde_samples(const ClosedFormFlow& flow, std::size_t n, std::uint64_t seed);
/// Points where the field is regular and the flow is branch-valid for small t.
std::vector<Point> field_samples(const ClosedFormFlow& flow, std::size_t n, std::uint64_t seed);

}  // namespace superflow
