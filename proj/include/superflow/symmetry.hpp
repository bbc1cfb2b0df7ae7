#pragma once

// Parametrized symmetry families of the cataloged superflows: membership
// verification for fields and flows, randomized falsification with
// off-family matrices, exact diagonal-symmetry solving for monomial fields,
// and finite-order decisions.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>

#include "superflow/flow_kernel.hpp"
#include "superflow/homog_algebra.hpp"
#include "superflow/matrix_groups.hpp"

namespace superflow {

enum class FamilyKind {
  gamma_4k3,    // diag(c^(2k+2), c^(2k+1)), symmetries of radical_x(k)
  gamma_4k1,    // diag(c^(2k), c^(2k+1)), symmetries of radical_y(k)
  delta_tilde,  // [[d^2, b], [0, d]], symmetries of the parabolic flow
  gamma_sph,    // [[d^2 - b, b], [d^2 - d - b, d + b]], symmetries of sph_inf
};

struct SymmetryFamily {
  FamilyKind kind = FamilyKind::gamma_4k3;
  int k = 1;

  std::string name() const;
  static SymmetryFamily from_name(const std::string& name, int k = 1);

  bool is_diagonal() const { return kind == FamilyKind::gamma_4k3 || kind == FamilyKind::gamma_4k1; }
  /// The flow whose symmetries the family describes.
  ClosedFormFlow flow() const;
  /// (p, q) with members diag(c^p, c^q); diagonal families only.
  std::pair<int, int> exponents() const;

  NumMat2 member(Complex c) const;
  NumMat2 member(Complex b, Complex d) const;
  Mat2 exact_member(const CycNum& c) const;
  Mat2 exact_member(const CycNum& b, const CycNum& d) const;
};

inline constexpr double kSymmetryTolerance = 1e-8;

struct SymmetryCheck {
  bool passed = false;
  double max_residual = 0.0;
  bool exact = false;  // decided by exact conjugation rather than sampling
};

/// Exact when L is monomial or the field is polynomial; numeric otherwise.
SymmetryCheck check_field_symmetry(const Mat2& L, const RatVF& field, std::span<const Point> samples);
SymmetryCheck check_field_symmetry(const NumMat2& L, const RatVF& field, std::span<const Point> samples);

/// ||L^-1 phi^t(L p) - phi^t(p)|| <= 1e-8 on every sample. Throws BranchError
/// for a sample that is not branch-valid at p or at L p.
SymmetryCheck check_flow_symmetry(const NumMat2& L, const ClosedFormFlow& flow,
                                  std::span<const FlowSample> samples);

/// One-parameter family {diag(c^s_exp, c^t_exp)} (times `torsion` discrete
/// components) of diagonal symmetries of a field with single-monomial numerators.
struct DiagonalFamily {
  int s_exp = 0;
  int t_exp = 0;
  long torsion = 1;
  /// A unipotent shear [[1, 1], [0, 1]] or [[1, 0], [1, 1]] is also a
  /// symmetry, so the diagonal family is not all symmetries.
  bool has_shear_symmetry = false;
};

/// nullopt when the diagonal symmetries form a finite group. Throws
/// InvalidArgument when a numerator has more than one term.
std::optional<DiagonalFamily> diagonal_symmetry_solve(const RatVF& field);

/// Order of a family member, nullopt when infinite.
std::optional<long> family_finite_order(const SymmetryFamily& family, const CycNum& c);
std::optional<long> family_finite_order(const SymmetryFamily& family, const CycNum& b, const CycNum& d);

struct SymmetryReport {
  std::string subject;  // flow name
  std::string family;
  std::string mode;     // "members" or "off_family"
  std::size_t n_draws = 0;
  bool all_passed = false;  // members: every draw passed; off_family: every draw failed
  double worst_residual = 0.0;  // members: largest; off_family: smallest
  std::uint64_t seed = 0;
};

/// Draws random family members and checks them against the family's flow
/// (and its vector field). A failing draw is re-checked once on fresh samples.
SymmetryReport verify_family(const SymmetryFamily& family, std::size_t n_draws, std::uint64_t seed,
                             std::size_t samples_per_draw = 8);

/// Draws random matrices outside the family; every one must fail.
SymmetryReport falsify_family(const SymmetryFamily& family, std::size_t n_draws, std::uint64_t seed,
                              std::size_t samples_per_draw = 8);

}  // namespace superflow
