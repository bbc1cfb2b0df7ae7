#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// An element of order N is stored in the power basis 1, z, ..., z^(phi(N)-1)
// with z = zeta_N = exp(2 pi i / N), reduced modulo the N-th cyclotomic
// polynomial. The representation is canonical for a fixed N; elements of
// different orders are compared and combined by lifting both operands to
// the field of order lcm(N1, N2).

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace superflow {

using Rational = mpq_class;

/// Coefficients of the N-th cyclotomic polynomial, constant term first.
/// Memoized; safe to call from several threads.
const std::vector<long>& cyclotomic_polynomial(int n);

/// Euler's totient, i.e. the degree of the N-th cyclotomic polynomial.
int euler_phi(int n);

class CycNum {
 public:
  /// Zero of Q.
  CycNum();
  CycNum(long value);  // NOLINT: rationals convert implicitly
  CycNum(const Rational& value);  // NOLINT
  /// Rational value placed in the field of the given order.
  CycNum(const Rational& value, int order);

  /// zeta_N^(j mod N).
  static CycNum root_of_unity(int n, long j);

  /// Element sum_j coeffs[j] * zeta_N^j. Any length is accepted; the
  /// polynomial is reduced modulo Phi_N.
  static CycNum from_power_coeffs(int order, std::vector<Rational> coeffs);

  int order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  std::optional<Rational> as_rational() const;

  /// Same element expressed in Q(zeta_target); target must be a multiple of order().
  CycNum lifted(int target) const;

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& rhs);
  CycNum& operator-=(const CycNum& rhs);
  CycNum& operator*=(const CycNum& rhs);
  CycNum& operator/=(const CycNum& rhs);

  friend CycNum operator+(CycNum lhs, const CycNum& rhs) { return lhs += rhs; }
  friend CycNum operator-(CycNum lhs, const CycNum& rhs) { return lhs -= rhs; }
  friend CycNum operator*(CycNum lhs, const CycNum& rhs) { return lhs *= rhs; }
  friend CycNum operator/(CycNum lhs, const CycNum& rhs) { return lhs /= rhs; }
  friend bool operator==(const CycNum& lhs, const CycNum& rhs);

  /// Multiplicative inverse; throws DivisionByZero for zero.
  CycNum inverse() const;
  /// Integer power; negative exponents go through inverse().
  CycNum pow(long exponent) const;
  /// Complex conjugate (z -> z^-1).
  CycNum conj() const;

  /// Value at zeta_N = exp(2 pi i / N) in double precision.
  std::complex<double> embed() const;

  /// "a0 + a1*z + ...; z = zeta_N", nonzero terms only.
  std::string to_string() const;
  /// to_string() without the conductor suffix.
  std::string expression() const;
  /// Inverse of to_string(). Also accepts any polynomial expression in z.
  static CycNum parse(std::string_view text);

  /// Total order usable for sets and maps; compares order first.
  friend bool canonical_less(const CycNum& lhs, const CycNum& rhs);

 private:
  CycNum(int order, std::vector<Rational> coeffs, bool already_reduced);

  int order_;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CycNum& value);

/// Least k >= 1 with a^k = 1, or nullopt when a is not a root of unity.
/// Throws DivisionByZero for a = 0.
std::optional<long> multiplicative_order(const CycNum& a);

/// Convenience: root_of_unity as a free function.
inline CycNum root_of_unity(int n, long j) { return CycNum::root_of_unity(n, j); }

long lcm_order(long a, long b);

}  // namespace superflow
