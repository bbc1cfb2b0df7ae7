#include "superflow/flow_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "superflow/error.hpp"

namespace superflow {
namespace {

// Root of w1 continued from `anchor` (a root of w0) along the straight
// segment w0 -> w1. The segment subtends less than pi at the origin, so the
// continuous argument change is the principal argument of w1 / w0.
Complex continue_root(Complex anchor, Complex w0, Complex w1, int n) {
  if (anchor == 0.0 || w0 == 0.0) {
    throw BranchError("radical anchored at a branch point (anchor coordinate is 0)");
  }
  const Complex dw = w1 - w0;
  double lambda = 0.0;
  if (std::norm(dw) > 0.0) {
    lambda = std::clamp(-(std::conj(w0) * dw).real() / std::norm(dw), 0.0, 1.0);
  }
  const double distance = std::abs(w0 + lambda * dw);
  if (distance <= 1e-12 * std::max(std::abs(w0), std::abs(w1))) {
    throw BranchError("radicand vanishes on the continuation path");
  }
  const Complex ratio = w1 / w0;
  return anchor * std::polar(std::pow(std::abs(ratio), 1.0 / n), std::arg(ratio) / n);
}

Point apply_inverse(const NumMat2& L, const Point& p) { return L.inverse() * p; }

// Distance from 0 to the segment [a, b] in the complex plane.
double segment_distance_to_zero(Complex a, Complex b) {
  const Complex d = b - a;
  if (std::norm(d) == 0.0) return std::abs(a);
  const double lambda = std::clamp(-(std::conj(a) * d).real() / std::norm(d), 0.0, 1.0);
  return std::abs(a + lambda * d);
}

// Richardson-extrapolated central difference of f at 0 along a real step.
template <typename F>
auto richardson(F&& f, double h) {
  auto central = [&f](double step) { return (f(step) - f(-step)) / Complex(2.0 * step); };
  return (Complex(4.0) * central(h / 2) - central(h)) / Complex(3.0);
}

Point richardson_point(const std::function<Point(double)>& f, double h) {
  auto central = [&f](double step) { return (f(step) - f(-step)) / Complex(2.0 * step); };
  return (Complex(4.0) * central(h / 2) - central(h)) / Complex(3.0);
}

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  double signed_magnitude(double lo, double hi) {
    double v = uniform(lo, hi);
    return uniform(0.0, 1.0) < 0.5 ? -v : v;
  }

 private:
  std::mt19937_64 engine_;
};

constexpr std::size_t kMaxRejections = 1000000;

Point random_point(const ClosedFormFlow& flow, Sampler& rng, bool for_pde) {
  switch (flow.family) {
    case FlowFamily::radical_x:
      if (for_pde) return {rng.uniform(0.8, 1.2), rng.signed_magnitude(0.1, 0.5)};
      return {rng.signed_magnitude(0.5, 1.5), rng.uniform(-1.0, 1.0)};
    case FlowFamily::radical_y:
      if (for_pde) return {rng.signed_magnitude(0.1, 0.5), rng.uniform(0.8, 1.2)};
      return {rng.uniform(-1.0, 1.0), rng.signed_magnitude(0.5, 1.5)};
    case FlowFamily::level0:
      if (for_pde) return {rng.uniform(0.0, 1.0), rng.uniform(0.0, 1.0)};
      return {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    case FlowFamily::parabolic:
    case FlowFamily::sph_inf:
      break;
  }
  return {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
}

double time_range(const ClosedFormFlow& flow) {
  switch (flow.family) {
    case FlowFamily::radical_x:
    case FlowFamily::radical_y:
      return 0.1;
    case FlowFamily::level0:
      return 0.5;
    case FlowFamily::parabolic:
    case FlowFamily::sph_inf:
      break;
  }
  return 1.0;
}

}  // namespace

std::string ClosedFormFlow::name() const {
  switch (family) {
    case FlowFamily::radical_x:
      return "radical_x(k=" + std::to_string(k) + ")";
    case FlowFamily::radical_y:
      return "radical_y(k=" + std::to_string(k) + ")";
    case FlowFamily::parabolic:
      return "parabolic";
    case FlowFamily::sph_inf:
      return "sph_inf";
    case FlowFamily::level0:
      return "level0";
  }
  return "unknown";
}

ClosedFormFlow ClosedFormFlow::from_name(const std::string& family, int k) {
  if (k < 1) throw InvalidArgument("flow parameter k must be positive");
  if (family == "radical_x") return {FlowFamily::radical_x, k};
  if (family == "radical_y") return {FlowFamily::radical_y, k};
  if (family == "parabolic") return {FlowFamily::parabolic, 1};
  if (family == "sph_inf") return {FlowFamily::sph_inf, 1};
  if (family == "level0") return {FlowFamily::level0, 1};
  throw InvalidArgument("unknown flow family '" + family + "'");
}

std::vector<ClosedFormFlow> flow_catalog() {
  return {{FlowFamily::parabolic, 1}, {FlowFamily::sph_inf, 1},   {FlowFamily::level0, 1},
          {FlowFamily::radical_x, 1}, {FlowFamily::radical_x, 2}, {FlowFamily::radical_y, 1},
          {FlowFamily::radical_y, 2}};
}

RatVF closed_form_field(const ClosedFormFlow& flow) {
  const int k = flow.k;
  switch (flow.family) {
    case FlowFamily::radical_x:
      return RatVF::monomial({2 * k, 0}, Component::first, 0, CycNum(Rational(1) / (2 * k + 1)));
    case FlowFamily::radical_y:
      return RatVF::monomial({0, 2 * k - 1}, Component::second, 2 * k + 1, CycNum(Rational(1) / (2 * k)));
    case FlowFamily::parabolic:
      return RatVF::parse("y^2 \xE2\x80\xA2 0");
    case FlowFamily::sph_inf:
      return RatVF::parse("(x - y)^2 \xE2\x80\xA2 (x - y)^2");
    case FlowFamily::level0:
      return RatVF::parse("-x^2 - x*y \xE2\x80\xA2 -x*y - y^2");
  }
  throw InvalidArgument("unknown flow family");
}

std::optional<int> flow_level(const ClosedFormFlow& flow) {
  switch (flow.family) {
    case FlowFamily::radical_x:
    case FlowFamily::radical_y:
    case FlowFamily::parabolic:
    case FlowFamily::sph_inf:
      return 1;
    case FlowFamily::level0:
      return 0;
  }
  return std::nullopt;
}

Point flow_eval(const ClosedFormFlow& flow, const Point& p, Complex t) {
  if (t == 0.0) return p;
  const auto& [x, y] = p;
  switch (flow.family) {
    case FlowFamily::radical_x: {
      const int n = 2 * flow.k + 1;
      Complex w0 = std::pow(x, n);
      return {continue_root(x, w0, w0 + t * std::pow(y, n + 1), n), y};
    }
    case FlowFamily::radical_y: {
      const int n = 2 * flow.k;
      Complex w0 = std::pow(y, n);
      return {x, continue_root(y, w0, w0 + t * std::pow(x, n + 1), n)};
    }
    case FlowFamily::parabolic:
      return {y * y * t + x, y};
    case FlowFamily::sph_inf: {
      Complex shift = (x - y) * (x - y) * t;
      return {shift + x, shift + y};
    }
    case FlowFamily::level0: {
      Complex den = 1.0 + t * (x + y);
      if (std::abs(den) < 1e-14) throw SingularPoint("level0 flow: x t + y t + 1 = 0");
      return {x / den, y / den};
    }
  }
  throw InvalidArgument("unknown flow family");
}

bool branch_valid(const ClosedFormFlow& flow, const Point& p, Complex t) {
  if (!is_finite(p)) return false;
  const auto& [x, y] = p;
  switch (flow.family) {
    case FlowFamily::radical_x: {
      const int n = 2 * flow.k + 1;
      return std::abs(x) >= 0.05 &&
             std::abs(t) * std::pow(std::abs(y), n + 1) <= 0.5 * std::pow(std::abs(x), n);
    }
    case FlowFamily::radical_y: {
      const int n = 2 * flow.k;
      return std::abs(y) >= 0.05 &&
             std::abs(t) * std::pow(std::abs(x), n + 1) <= 0.5 * std::pow(std::abs(y), n);
    }
    case FlowFamily::level0:
      return std::abs(1.0 + t * (x + y)) >= 0.2;
    case FlowFamily::parabolic:
    case FlowFamily::sph_inf:
      return true;
  }
  return false;
}

Residual verify_translation(const ClosedFormFlow& flow, std::span<const TranslationSample> samples) {
  Residual out;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& [p, t, s] = samples[i];
    Point direct = flow_eval(flow, p, t + s);
    Point composed = flow_eval(flow, flow_eval(flow, p, t), s);
    double r = norm(direct - composed);
    if (r > out.max_residual) {
      out.max_residual = r;
      out.worst_index = i;
    }
  }
  return out;
}

Point extract_vector_field(const ClosedFormFlow& flow, const Point& p, double h) {
  return richardson_point([&](double step) { return flow_eval(flow, p, Complex(step)); }, h);
}

double field_extraction_error(const ClosedFormFlow& flow, const RatVF& field, const Point& p) {
  const Point exact = eval_field(field, p);
  const double scale = std::max(norm(exact), norm(p) * norm(p));
  return norm(extract_vector_field(flow, p) - exact) / scale;
}

Residual verify_pde(const ClosedFormFlow& flow, const RatVF& field, std::span<const Point> samples,
                    double h) {
  Residual out;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const Point& p = samples[i];
    Point u = flow_eval(flow, p, 1.0);
    Point u_x = richardson_point([&](double step) { return flow_eval(flow, {p.x + step, p.y}, 1.0); }, h);
    Point u_y = richardson_point([&](double step) { return flow_eval(flow, {p.x, p.y + step}, 1.0); }, h);
    Point v = eval_field(field, p);
    Complex rx = u_x.x * (v.x - p.x) + u_y.x * (v.y - p.y) + u.x;
    Complex ry = u_x.y * (v.x - p.x) + u_y.y * (v.y - p.y) + u.y;
    double r = std::max(std::abs(rx), std::abs(ry));
    if (r > out.max_residual) {
      out.max_residual = r;
      out.worst_index = i;
    }
  }
  return out;
}

SingularityApproach::SingularityApproach(std::size_t step, Point where)
    : SingularPoint("trajectory approached the denominator's vanishing locus at step " +
                    std::to_string(step)),
      step_(step),
      where_(where) {}

std::vector<Point> integrate_trajectory(const RatVF& field, const Point& start, double t_end,
                                        int steps) {
  if (steps < 1) throw InvalidArgument("integrate_trajectory: steps must be positive");
  const auto& den = field.den();
  std::size_t step_index = 0;
  auto rhs = [&](const Point& q) {
    bool near_x_axis_locus = den.x_exp > 0 && std::abs(q.x) < kSingularityAbortDistance;
    bool near_y_axis_locus = den.y_exp > 0 && std::abs(q.y) < kSingularityAbortDistance;
    if (near_x_axis_locus || near_y_axis_locus || !is_finite(q)) {
      throw SingularityApproach(step_index, q);
    }
    return eval_field(field, q);
  };

  const double dt = t_end / steps;
  std::vector<Point> path;
  path.reserve(static_cast<std::size_t>(steps) + 1);
  path.push_back(start);
  Point q = start;
  for (int i = 0; i < steps; ++i) {
    step_index = static_cast<std::size_t>(i);
    Point k1 = rhs(q);
    Point k2 = rhs(q + (dt / 2) * k1);
    Point k3 = rhs(q + (dt / 2) * k2);
    Point k4 = rhs(q + dt * k3);
    Point next = q + (dt / 6) * (k1 + Complex(2.0) * k2 + Complex(2.0) * k3 + k4);
    // a large step can jump over the locus without landing near it
    if ((den.x_exp > 0 && segment_distance_to_zero(q.x, next.x) < kSingularityAbortDistance) ||
        (den.y_exp > 0 && segment_distance_to_zero(q.y, next.y) < kSingularityAbortDistance)) {
      throw SingularityApproach(step_index, next);
    }
    q = next;
    path.push_back(q);
  }
  step_index = static_cast<std::size_t>(steps);
  rhs(q);
  return path;
}

std::string OrbitFunction::name() const {
  switch (kind) {
    case OrbitKind::coordinate_y:
      return "W=y";
    case OrbitKind::coordinate_x:
      return "W=x";
    case OrbitKind::nonalgebraic_example:
      return "W=exp(-x/y-x^2/(2y^2))*y";
  }
  return "unknown";
}

std::optional<int> OrbitFunction::level() const {
  if (kind == OrbitKind::nonalgebraic_example) return std::nullopt;
  return 1;
}

Complex OrbitFunction::operator()(const Point& p) const {
  switch (kind) {
    case OrbitKind::coordinate_y:
      return p.y;
    case OrbitKind::coordinate_x:
      return p.x;
    case OrbitKind::nonalgebraic_example: {
      if (p.y == 0.0) throw SingularPoint("orbit function undefined at y = 0");
      Complex r = p.x / p.y;
      return std::exp(-r - r * r / 2.0) * p.y;
    }
  }
  throw InvalidArgument("unknown orbit function");
}

double orbit_residual(const OrbitFunction& w, std::span<const Point> path) {
  if (path.empty()) return 0.0;
  const Complex w0 = w(path.front());
  if (w0 == 0.0) throw SingularPoint("orbit function vanishes at the path start");
  double worst = 0.0;
  for (const auto& p : path) worst = std::max(worst, std::abs(w(p) - w0) / std::abs(w0));
  return worst;
}

Residual verify_orbit_ode(const OrbitFunction& w, const RatVF& field, std::span<const Point> samples,
                          double h) {
  Residual out;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const Point& p = samples[i];
    Complex w_x = richardson([&](double step) { return w({p.x + step, p.y}); }, h);
    Point v = eval_field(field, p);
    double r = std::abs(w(p) * v.y + w_x * (p.y * v.x - p.x * v.y));
    if (r > out.max_residual) {
      out.max_residual = r;
      out.worst_index = i;
    }
  }
  return out;
}

Point conjugate_flow_numeric(const NumMat2& L, const ClosedFormFlow& flow, const Point& p, Complex t) {
  return apply_inverse(L, flow_eval(flow, L * p, t));
}

std::vector<TranslationSample> translation_samples(const ClosedFormFlow& flow, std::size_t n,
                                                   std::uint64_t seed) {
  Sampler rng(seed);
  const double range = time_range(flow);
  std::vector<TranslationSample> out;
  for (std::size_t tries = 0; out.size() < n; ++tries) {
    if (tries > kMaxRejections) throw Error("translation_samples: rejection sampling did not converge");
    Point p = random_point(flow, rng, false);
    Complex t = rng.uniform(-range, range);
    Complex s = rng.uniform(-range, range);
    if (!branch_valid(flow, p, t) || !branch_valid(flow, p, t + s)) continue;
    Point mid = flow_eval(flow, p, t);
    if (!branch_valid(flow, mid, s)) continue;
    out.push_back({p, t, s});
  }
  return out;
}

std::vector<Point> pde_samples(const ClosedFormFlow& flow, std::size_t n, std::uint64_t seed) {
  Sampler rng(seed);
  std::vector<Point> out;
  for (std::size_t tries = 0; out.size() < n; ++tries) {
    if (tries > kMaxRejections) throw Error("pde_samples: rejection sampling did not converge");
    Point p = random_point(flow, rng, true);
    if (!branch_valid(flow, p, 1.0)) continue;
    out.push_back(p);
  }
  return out;
}

std::vector<Point> field_samples(const ClosedFormFlow& flow, std::size_t n, std::uint64_t seed) {
  Sampler rng(seed);
  std::vector<Point> out;
  for (std::size_t tries = 0; out.size() < n; ++tries) {
    if (tries > kMaxRejections) throw Error("field_samples: rejection sampling did not converge");
    Point p = random_point(flow, rng, false);
    if (!branch_valid(flow, p, 1e-3)) continue;
    out.push_back(p);
  }
  return out;
}

}  // namespace superflow
