#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "superflow/cyclo_field.hpp"
#include "superflow/numeric.hpp"

namespace superflow {

/// 2x2 matrix over a cyclotomic field, row-major [[a, b], [c, d]].
/// All four entries share one conductor.
class Mat2 {
 public:
  Mat2(CycNum a, CycNum b, CycNum c, CycNum d);

  static Mat2 identity(int conductor = 1);
  static Mat2 diagonal(CycNum s, CycNum t);

  const CycNum& a() const { return a_; }
  const CycNum& b() const { return b_; }
  const CycNum& c() const { return c_; }
  const CycNum& d() const { return d_; }
  int conductor() const { return a_.order(); }

  CycNum det() const;
  CycNum trace() const;
  bool is_invertible() const { return !det().is_zero(); }
  /// Throws SingularMatrix.
  Mat2 inverse() const;
  Mat2 pow(long exponent) const;
  Mat2 lifted(int conductor) const;
  Mat2 operator-() const;

  bool is_identity() const;
  bool is_diagonal() const;
  bool is_antidiagonal() const;
  /// Diagonal or antidiagonal: maps monomials to monomials.
  bool is_monomial() const { return is_diagonal() || is_antidiagonal(); }

  friend Mat2 operator*(const Mat2& lhs, const Mat2& rhs);
  friend bool operator==(const Mat2& lhs, const Mat2& rhs);

  std::string to_string() const;

 private:
  CycNum a_, b_, c_, d_;
};

bool canonical_less(const Mat2& lhs, const Mat2& rhs);

/// Numeric 2x2 complex matrix used by the verification layers.
struct NumMat2 {
  std::complex<double> a, b, c, d;

  static NumMat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static NumMat2 from_exact(const Mat2& m);

  std::complex<double> det() const { return a * d - b * c; }
  /// Throws SingularMatrix when |det| is (numerically) zero.
  NumMat2 inverse() const;
  NumMat2 operator*(const NumMat2& rhs) const;
  Point operator*(const Point& p) const { return {a * p.x + b * p.y, c * p.x + d * p.y}; }
};

class FiniteMatrixGroup {
 public:
  const std::vector<Mat2>& generators() const { return generators_; }
  const std::vector<Mat2>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  int conductor() const { return conductor_; }

  bool contains(const Mat2& m) const;
  /// Every element is diagonal or antidiagonal.
  bool is_monomial() const;

  /// {conductor, generators, order}
  nlohmann::json to_json() const;

 private:
  friend FiniteMatrixGroup generate_group(const std::vector<Mat2>& gens, std::size_t cap);

  std::vector<Mat2> generators_;
  std::vector<Mat2> elements_;  // elements_[0] is the identity
  std::vector<std::size_t> sorted_;  // indices into elements_ in canonical order
  int conductor_ = 1;
};

inline constexpr std::size_t kDefaultGroupCap = 10000;

/// Breadth-first closure of the generators under multiplication. Throws
/// CapExceeded when the closure grows past `cap`, SingularMatrix for a
/// non-invertible generator.
FiniteMatrixGroup generate_group(const std::vector<Mat2>& gens,
                                 std::size_t cap = kDefaultGroupCap);

/// diag(zeta_m, -zeta_m^-1).
Mat2 alpha_matrix(int m);

/// Cyclic group generated by alpha_matrix(m); m >= 3.
FiniteMatrixGroup alpha_group(int m);

/// Coordinate swap [[0, 1], [1, 0]].
Mat2 tau_matrix();

/// Group generated by L^-1 g L for the generators g of G.
FiniteMatrixGroup conjugate_group(const FiniteMatrixGroup& group, const Mat2& by,
                                  std::size_t cap = kDefaultGroupCap);

/// Whether trace(M) is real to 1e-12. False certifies that M is not
/// conjugate to a real matrix.
bool is_real_conjugate_candidate(const Mat2& m);

/// Least k <= bound with M^k = I, nullopt when none is found.
std::optional<long> matrix_finite_order(const Mat2& m, long bound);

}  // namespace superflow
