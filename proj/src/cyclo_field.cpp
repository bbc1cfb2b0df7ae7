#include "superflow/cyclo_field.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <ostream>
#include <sstream>

#include "expr_parser.hpp"
#include "superflow/error.hpp"

namespace superflow {
namespace {

using RatPoly = std::vector<Rational>;  // constant term first

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials by a monic divisor.
std::vector<long> divide_monic(std::vector<long> num, const std::vector<long>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<long> quotient(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    long c = num[i];
    quotient[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return quotient;
}

std::vector<long> compute_cyclotomic(int n, const std::map<int, std::vector<long>>& known) {
  std::vector<long> poly(static_cast<std::size_t>(n) + 1, 0);
  poly[0] = -1;
  poly[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) poly = divide_monic(poly, known.at(d));
  }
  return poly;
}

// Reduces p modulo the monic Phi_n in place and pads to deg Phi_n.
void reduce_mod_cyclotomic(int n, RatPoly& p) {
  const auto& phi = cyclotomic_polynomial(n);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = p.size(); i-- > deg;) {
    if (p[i] == 0) continue;
    Rational c = p[i];
    for (std::size_t j = 0; j < deg; ++j) {
      if (phi[j] != 0) p[i - deg + j] -= c * phi[j];
    }
    p[i] = 0;
  }
  p.resize(deg);
}

void divmod(const RatPoly& num, const RatPoly& den, RatPoly& quotient, RatPoly& remainder) {
  remainder = num;
  trim(remainder);
  const std::size_t dd = den.size() - 1;
  quotient.assign(remainder.size() > dd ? remainder.size() - dd : 1, 0);
  const Rational lead = den.back();
  while (!remainder.empty() && remainder.size() - 1 >= dd) {
    std::size_t shift = remainder.size() - 1 - dd;
    Rational c = remainder.back() / lead;
    quotient[shift] = c;
    for (std::size_t j = 0; j <= dd; ++j) remainder[shift + j] -= c * den[j];
    trim(remainder);
  }
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

RatPoly poly_sub(const RatPoly& a, const RatPoly& b) {
  RatPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

void append_rational(std::ostream& os, const Rational& c) { os << c.get_str(); }

}  // namespace

const std::vector<long>& cyclotomic_polynomial(int n) {
  if (n < 1) throw InvalidArgument("cyclotomic order must be positive");
  static std::mutex mutex;
  static std::map<int, std::vector<long>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0 && !cache.contains(d)) cache.emplace(d, compute_cyclotomic(d, cache));
  }
  return cache.at(n);
}

int euler_phi(int n) { return static_cast<int>(cyclotomic_polynomial(n).size()) - 1; }

long lcm_order(long a, long b) { return std::lcm(a, b); }

CycNum::CycNum() : CycNum(Rational(0), 1) {}
CycNum::CycNum(long value) : CycNum(Rational(value), 1) {}
CycNum::CycNum(const Rational& value) : CycNum(value, 1) {}

CycNum::CycNum(const Rational& value, int order) : order_(order) {
  coeffs_.assign(static_cast<std::size_t>(euler_phi(order)), 0);
  coeffs_[0] = value;
}

CycNum::CycNum(int order, std::vector<Rational> coeffs, bool already_reduced)
    : order_(order), coeffs_(std::move(coeffs)) {
  if (!already_reduced) reduce_mod_cyclotomic(order_, coeffs_);
}

CycNum CycNum::root_of_unity(int n, long j) {
  if (n < 1) throw InvalidArgument("root_of_unity: order must be positive");
  long e = ((j % n) + n) % n;
  std::vector<Rational> coeffs(static_cast<std::size_t>(e) + 1, 0);
  coeffs[static_cast<std::size_t>(e)] = 1;
  return CycNum(n, std::move(coeffs), false);
}

CycNum CycNum::from_power_coeffs(int order, std::vector<Rational> coeffs) {
  if (order < 1) throw InvalidArgument("from_power_coeffs: order must be positive");
  return CycNum(order, std::move(coeffs), false);
}

bool CycNum::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool CycNum::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

bool CycNum::is_one() const { return is_rational() && coeffs_[0] == 1; }

std::optional<Rational> CycNum::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return coeffs_[0];
}

CycNum CycNum::lifted(int target) const {
  if (target == order_) return *this;
  if (target % order_ != 0) {
    throw InvalidArgument("cannot lift order " + std::to_string(order_) + " to " +
                          std::to_string(target));
  }
  if (is_rational()) return CycNum(coeffs_[0], target);
  const std::size_t step = static_cast<std::size_t>(target / order_);
  std::vector<Rational> poly(static_cast<std::size_t>(target), 0);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) poly[j * step] = coeffs_[j];
  return CycNum(target, std::move(poly), false);
}

CycNum CycNum::operator-() const {
  CycNum out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycNum& CycNum::operator+=(const CycNum& rhs) {
  if (rhs.order_ == order_) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
  }
  int target = static_cast<int>(lcm_order(order_, rhs.order_));
  *this = lifted(target);
  CycNum other = rhs.lifted(target);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& rhs) { return *this += -rhs; }

CycNum& CycNum::operator*=(const CycNum& rhs) {
  int target = static_cast<int>(lcm_order(order_, rhs.order_));
  if (is_zero() || rhs.is_zero()) {
    *this = CycNum(Rational(0), target);
    return *this;
  }
  if (rhs.is_rational()) {
    if (target != order_) *this = lifted(target);
    for (auto& c : coeffs_) c *= rhs.coeffs_[0];
    return *this;
  }
  if (is_rational()) {
    Rational scale = coeffs_[0];
    *this = rhs.lifted(target);
    for (auto& c : coeffs_) c *= scale;
    return *this;
  }
  CycNum a = lifted(target);
  CycNum b = rhs.lifted(target);
  RatPoly product = poly_mul(a.coeffs_, b.coeffs_);
  reduce_mod_cyclotomic(target, product);
  order_ = target;
  coeffs_ = std::move(product);
  return *this;
}

CycNum& CycNum::operator/=(const CycNum& rhs) { return *this *= rhs.inverse(); }

CycNum CycNum::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (is_rational()) return CycNum(1 / coeffs_[0], order_);
  const auto& phi_int = cyclotomic_polynomial(order_);
  RatPoly r0(phi_int.begin(), phi_int.end());
  RatPoly r1 = coeffs_;
  trim(r1);
  RatPoly s0;
  RatPoly s1{Rational(1)};
  RatPoly q;
  RatPoly r;
  while (r1.size() > 1) {
    divmod(r0, r1, q, r);
    r0 = std::move(r1);
    r1 = std::move(r);
    RatPoly next = poly_sub(s0, poly_mul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(next);
  }
  if (r1.empty()) throw DivisionByZero();  // unreachable: Phi_N is irreducible
  Rational scale = 1 / r1[0];
  for (auto& c : s1) c *= scale;
  return CycNum(order_, std::move(s1), false);
}

CycNum CycNum::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  CycNum result(Rational(1), order_);
  CycNum base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

CycNum CycNum::conj() const {
  if (is_rational()) return *this;
  std::vector<Rational> poly(static_cast<std::size_t>(order_), 0);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    poly[(static_cast<std::size_t>(order_) - j) % static_cast<std::size_t>(order_)] += coeffs_[j];
  }
  return CycNum(order_, std::move(poly), false);
}

std::complex<double> CycNum::embed() const {
  std::complex<double> sum = 0.0;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / order_;
    sum += coeffs_[j].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return sum;
}

bool operator==(const CycNum& lhs, const CycNum& rhs) {
  if (lhs.order_ == rhs.order_) return lhs.coeffs_ == rhs.coeffs_;
  int target = static_cast<int>(lcm_order(lhs.order_, rhs.order_));
  return lhs.lifted(target).coeffs_ == rhs.lifted(target).coeffs_;
}

bool canonical_less(const CycNum& lhs, const CycNum& rhs) {
  if (lhs.order_ != rhs.order_) return lhs.order_ < rhs.order_;
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    int c = cmp(lhs.coeffs_[i], rhs.coeffs_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string CycNum::to_string() const {
  return expression() + "; z = zeta_" + std::to_string(order_);
}

std::string CycNum::expression() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const Rational& c = coeffs_[j];
    if (c == 0) continue;
    if (first) {
      append_rational(os, c);
    } else {
      os << (c < 0 ? " - " : " + ");
      append_rational(os, abs(c));
    }
    if (j == 1) os << "*z";
    if (j > 1) os << "*z^" << j;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

CycNum CycNum::parse(std::string_view text) {
  int conductor = detail::split_conductor(text);
  detail::Laurent terms = detail::parse_expression(text, conductor, false);
  CycNum value(Rational(0), conductor);
  for (const auto& [e, c] : terms) value += c;
  return value.lifted(static_cast<int>(lcm_order(value.order(), conductor)));
}

std::ostream& operator<<(std::ostream& os, const CycNum& value) { return os << value.to_string(); }

std::optional<long> multiplicative_order(const CycNum& a) {
  if (a.is_zero()) throw DivisionByZero();
  // Roots of unity in Q(zeta_N) are the lcm(2, N)-th roots of unity.
  const long bound = a.order() % 2 == 0 ? a.order() : 2L * a.order();
  if (!a.pow(bound).is_one()) return std::nullopt;
  for (long d = 1; d <= bound; ++d) {
    if (bound % d == 0 && a.pow(d).is_one()) return d;
  }
  return bound;
}

}  // namespace superflow
