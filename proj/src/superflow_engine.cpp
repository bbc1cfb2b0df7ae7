#include "superflow/superflow_engine.hpp"

#include <sstream>

#include "superflow/error.hpp"

namespace superflow {
namespace {

using Row = std::vector<CycNum>;

Row to_row(const RatVF& field, MonomialDenominator den) {
  RatVF lifted = field.with_denominator(den);
  Row row;
  row.reserve(2 * lifted.num_x().coeffs().size());
  for (const auto& c : lifted.num_x().coeffs()) row.push_back(c);
  for (const auto& c : lifted.num_y().coeffs()) row.push_back(c);
  return row;
}

RatVF from_row(const Row& row, MonomialDenominator den) {
  const int d = den.degree() + 2;
  const std::size_t n = static_cast<std::size_t>(d) + 1;
  return RatVF(HomPoly(d, Row(row.begin(), row.begin() + static_cast<long>(n))),
               HomPoly(d, Row(row.begin() + static_cast<long>(n), row.end())), den);
}

// Reduced row echelon form; returns the nonzero rows.
std::vector<Row> row_reduce(std::vector<Row> rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    CycNum inv = rows[rank][col].inverse();
    for (auto& c : rows[rank]) {
      if (!c.is_zero()) c *= inv;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      CycNum factor = rows[r][col];
      for (std::size_t k = col; k < cols; ++k) {
        if (!rows[rank][k].is_zero()) rows[r][k] -= factor * rows[rank][k];
      }
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

// Canonical basis of the span of the given nonzero fields.
std::vector<RatVF> span_basis(const std::vector<RatVF>& fields) {
  if (fields.empty()) return {};
  MonomialDenominator common;
  for (const auto& f : fields) {
    common.x_exp = std::max(common.x_exp, f.den().x_exp);
    common.y_exp = std::max(common.y_exp, f.den().y_exp);
  }
  std::vector<Row> rows;
  rows.reserve(fields.size());
  for (const auto& f : fields) rows.push_back(to_row(f, common));
  std::vector<RatVF> basis;
  for (const auto& row : row_reduce(std::move(rows))) {
    basis.push_back(*from_row(row, common).canonical());
  }
  return basis;
}

long mod(long a, long n) { return ((a % n) + n) % n; }

}  // namespace

bool monomial_survival(long m, long i, long l, Component component) {
  if (m < 1) throw InvalidArgument("monomial_survival: m must be positive");
  const bool first = component == Component::first;
  const long zeta_exponent = first ? 2 * i - 2 * l - 3 : 2 * i - 2 * l - 1;
  const long sign_exponent = first ? i + l : i + l + 1;
  // (-1)^a zeta_m^e = zeta_2m^(m a + 2 e)
  return mod(m * sign_exponent + 2 * zeta_exponent, 2 * m) == 0;
}

std::vector<RatVF> invariant_space(const FiniteMatrixGroup& group, MonomialDenominator den) {
  const int d = den.degree() + 2;
  std::vector<RatVF> images;
  for (Component component : {Component::first, Component::second}) {
    for (int i = 0; i <= d; ++i) {
      if (auto avg = reynolds_average(group, RatVF::monomial(den, component, i))) {
        images.push_back(std::move(*avg));
      }
    }
  }
  return span_basis(images);
}

std::string to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::superflow:
      return "superflow";
    case VerdictStatus::none:
      return "none";
    case VerdictStatus::not_unique:
      return "not_unique";
  }
  return "unknown";
}

SuperflowVerdict find_superflow(const FiniteMatrixGroup& group, const ScanOptions& options) {
  if (!group.is_monomial()) throw NonMonomialDenominator();
  SuperflowVerdict verdict;
  if (options.negative_identity_shortcut && group.contains(-Mat2::identity())) {
    // sigma = -I negates every 2-homogeneous field.
    verdict.negative_identity_shortcut = true;
    return verdict;
  }
  const int max_degree = options.max_denom_degree.value_or(static_cast<int>(group.order()));
  for (int degree = 0; degree <= max_degree; ++degree) {
    std::vector<RatVF> fields;
    for (int l = 0; l <= degree; ++l) {
      auto space = invariant_space(group, {l, degree - l});
      fields.insert(fields.end(), space.begin(), space.end());
    }
    if (fields.empty()) continue;
    verdict.basis = span_basis(fields);
    verdict.dimension = static_cast<int>(verdict.basis.size());
    verdict.denom_degree = degree;
    if (verdict.dimension == 1) {
      verdict.status = VerdictStatus::superflow;
      verdict.field = verdict.basis.front();
    } else {
      verdict.status = VerdictStatus::not_unique;
    }
    return verdict;
  }
  return verdict;
}

std::vector<ClassificationRow> classify_alpha(int m_lo, int m_hi) {
  if (m_lo < 3 || m_hi < m_lo) throw InvalidArgument("classify_alpha: need 3 <= m_lo <= m_hi");
  std::vector<ClassificationRow> rows;
  for (int m = m_lo; m <= m_hi; ++m) {
    ClassificationRow row;
    row.m = m;
    FiniteMatrixGroup group = alpha_group(m);
    row.group_order = group.order();
    row.verdict = find_superflow(group);
    if (m % 4 == 2) row.reduction_target = m / 2;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string classification_tsv(const std::vector<ClassificationRow>& rows) {
  std::ostringstream os;
  os << "m\tgroup_order\tstatus\tdenom_degree\tfield\treduction\n";
  for (const auto& row : rows) {
    os << row.m << '\t' << row.group_order << '\t' << to_string(row.verdict.status) << '\t';
    if (row.verdict.denom_degree) {
      os << *row.verdict.denom_degree;
    } else {
      os << '-';
    }
    os << '\t' << (row.verdict.field ? row.verdict.field->to_string() : std::string("-")) << '\t';
    if (row.reduction_target) {
      os << "tau:m=" << *row.reduction_target;
    } else {
      os << '-';
    }
    os << '\n';
  }
  return os.str();
}

nlohmann::json classification_json(const std::vector<ClassificationRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json entry{{"m", row.m},
                         {"group_order", row.group_order},
                         {"status", to_string(row.verdict.status)},
                         {"dimension", row.verdict.dimension}};
    entry["denom_degree"] =
        row.verdict.denom_degree ? nlohmann::json(*row.verdict.denom_degree) : nlohmann::json(nullptr);
    entry["field"] =
        row.verdict.field ? nlohmann::json(row.verdict.field->to_string()) : nlohmann::json(nullptr);
    entry["reduction"] =
        row.reduction_target ? nlohmann::json(*row.reduction_target) : nlohmann::json(nullptr);
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace superflow
