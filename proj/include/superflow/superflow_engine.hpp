#pragma once

// Decision procedure for superflows of monomial (diagonal/antidiagonal)
// finite groups: scan monomial denominators by ascending degree, compute the
// space of invariant fields at each degree, and decide uniqueness.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "superflow/homog_algebra.hpp"
#include "superflow/matrix_groups.hpp"

namespace superflow {

/// Whether the averaging sum over s = 0 .. 2m-1 attached to the monomial
/// x^i y^(D-i) over x^l y^(L-l) survives for the group <alpha_m>. Component
/// first: ((-1)^(i+l) zeta_m^(2i-2l-3))^s; second: ((-1)^(i+l+1) zeta_m^(2i-2l-1))^s.
/// The sum is nonzero iff the ratio equals 1.
bool monomial_survival(long m, long i, long l, Component component);

/// Basis (canonical forms) of the G-invariant fields with the given denominator.
std::vector<RatVF> invariant_space(const FiniteMatrixGroup& group, MonomialDenominator den);

enum class VerdictStatus { superflow, none, not_unique };

std::string to_string(VerdictStatus status);

struct SuperflowVerdict {
  VerdictStatus status = VerdictStatus::none;
  std::optional<RatVF> field;         // canonical, set iff status == superflow
  std::optional<int> denom_degree;    // minimal degree with a nonzero space
  int dimension = 0;                  // dimension of the space at that degree
  std::vector<RatVF> basis;           // canonical basis of that space
  bool negative_identity_shortcut = false;
};

struct ScanOptions {
  /// Highest denominator degree scanned; nullopt means |G|.
  std::optional<int> max_denom_degree;
  /// Answer `none` immediately when -I is in the group.
  bool negative_identity_shortcut = true;
};

/// Throws NonMonomialDenominator for groups with non-monomial elements.
SuperflowVerdict find_superflow(const FiniteMatrixGroup& group, const ScanOptions& options = {});

struct ClassificationRow {
  int m = 0;
  std::size_t group_order = 0;
  SuperflowVerdict verdict;
  /// For m = 2 (mod 4): tau^-1 <alpha_m> tau = <alpha_{m/2}>.
  std::optional<int> reduction_target;
};

std::vector<ClassificationRow> classify_alpha(int m_lo, int m_hi);

/// Header "m\tgroup_order\tstatus\tdenom_degree\tfield\treduction" plus one line per row.
std::string classification_tsv(const std::vector<ClassificationRow>& rows);
nlohmann::json classification_json(const std::vector<ClassificationRow>& rows);

}  // namespace superflow
