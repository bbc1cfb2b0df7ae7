#pragma once

// Homogeneous bivariate polynomials over cyclotomic fields and
// 2-homogeneous rational vector fields with a monomial denominator,
// together with the conjugation action V -> L^-1 o V o L and the
// averaging (Reynolds) projector of a finite group.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "superflow/cyclo_field.hpp"
#include "superflow/matrix_groups.hpp"
#include "superflow/numeric.hpp"

namespace superflow {

/// Homogeneous polynomial of degree d; coefficient i belongs to x^i y^(d-i).
class HomPoly {
 public:
  explicit HomPoly(int degree = 0);
  HomPoly(int degree, std::vector<CycNum> coeffs);
  static HomPoly monomial(int degree, int x_power, CycNum coeff = CycNum(1));

  int degree() const { return degree_; }
  const CycNum& coeff(int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  const std::vector<CycNum>& coeffs() const { return coeffs_; }
  void set_coeff(int i, CycNum value) { coeffs_[static_cast<std::size_t>(i)] = std::move(value); }

  bool is_zero() const;
  std::size_t nonzero_count() const;
  /// lcm of the coefficient conductors.
  int conductor() const;
  /// Smallest power of x (resp. y) among nonzero terms; -1 for the zero polynomial.
  int min_x_power() const;
  int min_y_power() const;

  HomPoly operator+(const HomPoly& rhs) const;
  HomPoly operator-(const HomPoly& rhs) const;
  HomPoly operator*(const HomPoly& rhs) const;
  HomPoly scaled(const CycNum& factor) const;
  /// Multiplies by x^dx y^dy; negative shifts require divisibility.
  HomPoly shifted(int dx, int dy) const;
  /// P(a x + b y, c x + d y) for L = [[a, b], [c, d]].
  HomPoly substitute(const Mat2& L) const;

  Complex eval(Complex x, Complex y) const;

  friend bool operator==(const HomPoly& lhs, const HomPoly& rhs);

  /// Terms by descending power of x, e.g. "x^2 - 2*x*y + y^2". Irrational
  /// coefficients are parenthesized expressions in z (no conductor suffix).
  std::string expression() const;

 private:
  int degree_;
  std::vector<CycNum> coeffs_;
};

/// Denominator x^x_exp y^y_exp shared by both components of a field.
struct MonomialDenominator {
  int x_exp = 0;
  int y_exp = 0;

  int degree() const { return x_exp + y_exp; }
  friend bool operator==(const MonomialDenominator&, const MonomialDenominator&) = default;
};

enum class Component { first, second };

/// Vector field num_x / den  •  num_y / den with both numerators of degree
/// den.degree() + 2, so each component is a 2-homogeneous rational function.
class RatVF {
 public:
  RatVF(HomPoly num_x, HomPoly num_y, MonomialDenominator den = {});

  static RatVF zero(MonomialDenominator den = {});
  /// x^i y^(D-i) / den placed in one component, D = den.degree() + 2.
  static RatVF monomial(MonomialDenominator den, Component component, int x_power,
                        CycNum coeff = CycNum(1));

  const HomPoly& num_x() const { return num_x_; }
  const HomPoly& num_y() const { return num_y_; }
  const MonomialDenominator& den() const { return den_; }
  int numerator_degree() const { return num_x_.degree(); }
  int conductor() const;

  bool is_zero() const;
  /// Cancels monomial factors common to both numerators and the denominator.
  RatVF reduced() const;
  /// reduced(), scaled so the first nonzero coefficient (num_x before num_y,
  /// ascending power of x) is 1. nullopt for the zero field.
  std::optional<RatVF> canonical() const;
  /// Same field written over a larger monomial denominator.
  RatVF with_denominator(MonomialDenominator target) const;
  RatVF scaled(const CycNum& factor) const;

  RatVF operator+(const RatVF& rhs) const;
  RatVF operator-(const RatVF& rhs) const;
  /// Equality as rational functions.
  friend bool operator==(const RatVF& lhs, const RatVF& rhs);

  /// "P/x^a • Q/x^a" style text; "; z = zeta_N" is appended when a
  /// coefficient is irrational. Renders the stored (not canonicalized) form.
  std::string to_string() const;
  static RatVF parse(std::string_view text);

 private:
  HomPoly num_x_;
  HomPoly num_y_;
  MonomialDenominator den_;
};

/// Numeric value of the field at p. Throws SingularPoint on the vanishing
/// locus of the denominator.
Point eval_field(const RatVF& field, const Point& p);

/// L^-1 o V o L computed exactly. Throws SingularMatrix, or
/// NonMonomialDenominator when L is neither diagonal nor antidiagonal and
/// V has a nontrivial denominator.
RatVF conjugate_field(const Mat2& L, const RatVF& field);

/// (1/|G|) sum over sigma of sigma^-1 o V o sigma. nullopt marks the zero field.
std::optional<RatVF> reynolds_average(const FiniteMatrixGroup& group, const RatVF& field);

/// Exact check of sigma^-1 o V o sigma = V for every element of the group.
bool is_invariant(const FiniteMatrixGroup& group, const RatVF& field);

}  // namespace superflow
