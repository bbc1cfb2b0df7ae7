#include "superflow/matrix_groups.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "superflow/error.hpp"

namespace superflow {
namespace {

struct Mat2Less {
  bool operator()(const Mat2& lhs, const Mat2& rhs) const { return canonical_less(lhs, rhs); }
};

int common_conductor(const std::vector<Mat2>& mats) {
  long c = 1;
  for (const auto& m : mats) c = lcm_order(c, m.conductor());
  return static_cast<int>(c);
}

}  // namespace

Mat2::Mat2(CycNum a, CycNum b, CycNum c, CycNum d) {
  int n = static_cast<int>(
      lcm_order(lcm_order(a.order(), b.order()), lcm_order(c.order(), d.order())));
  a_ = a.lifted(n);
  b_ = b.lifted(n);
  c_ = c.lifted(n);
  d_ = d.lifted(n);
}

Mat2 Mat2::identity(int conductor) {
  return Mat2(CycNum(1, conductor), CycNum(0, conductor), CycNum(0, conductor),
              CycNum(1, conductor));
}

Mat2 Mat2::diagonal(CycNum s, CycNum t) { return Mat2(std::move(s), CycNum(0), CycNum(0), std::move(t)); }

CycNum Mat2::det() const { return a_ * d_ - b_ * c_; }
CycNum Mat2::trace() const { return a_ + d_; }

Mat2 Mat2::inverse() const {
  CycNum determinant = det();
  if (determinant.is_zero()) throw SingularMatrix();
  CycNum inv = determinant.inverse();
  return Mat2(d_ * inv, -b_ * inv, -c_ * inv, a_ * inv);
}

Mat2 Mat2::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Mat2 result = identity(conductor());
  Mat2 base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Mat2 Mat2::lifted(int conductor) const {
  return Mat2(a_.lifted(conductor), b_.lifted(conductor), c_.lifted(conductor),
              d_.lifted(conductor));
}

Mat2 Mat2::operator-() const { return Mat2(-a_, -b_, -c_, -d_); }

bool Mat2::is_identity() const {
  return a_.is_one() && b_.is_zero() && c_.is_zero() && d_.is_one();
}
bool Mat2::is_diagonal() const { return b_.is_zero() && c_.is_zero(); }
bool Mat2::is_antidiagonal() const { return a_.is_zero() && d_.is_zero(); }

Mat2 operator*(const Mat2& lhs, const Mat2& rhs) {
  return Mat2(lhs.a_ * rhs.a_ + lhs.b_ * rhs.c_, lhs.a_ * rhs.b_ + lhs.b_ * rhs.d_,
              lhs.c_ * rhs.a_ + lhs.d_ * rhs.c_, lhs.c_ * rhs.b_ + lhs.d_ * rhs.d_);
}

bool operator==(const Mat2& lhs, const Mat2& rhs) {
  return lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_ && lhs.c_ == rhs.c_ && lhs.d_ == rhs.d_;
}

std::string Mat2::to_string() const {
  std::ostringstream os;
  os << "[[" << a_.expression() << ", " << b_.expression() << "], [" << c_.expression() << ", "
     << d_.expression() << "]]";
  if (conductor() > 1) os << "; z = zeta_" << conductor();
  return os.str();
}

bool canonical_less(const Mat2& lhs, const Mat2& rhs) {
  const CycNum* l[] = {&lhs.a(), &lhs.b(), &lhs.c(), &lhs.d()};
  const CycNum* r[] = {&rhs.a(), &rhs.b(), &rhs.c(), &rhs.d()};
  for (int i = 0; i < 4; ++i) {
    if (canonical_less(*l[i], *r[i])) return true;
    if (canonical_less(*r[i], *l[i])) return false;
  }
  return false;
}

NumMat2 NumMat2::from_exact(const Mat2& m) {
  return {m.a().embed(), m.b().embed(), m.c().embed(), m.d().embed()};
}

NumMat2 NumMat2::inverse() const {
  std::complex<double> determinant = det();
  if (std::abs(determinant) == 0.0 || !std::isfinite(std::abs(determinant))) {
    throw SingularMatrix();
  }
  return {d / determinant, -b / determinant, -c / determinant, a / determinant};
}

NumMat2 NumMat2::operator*(const NumMat2& rhs) const {
  return {a * rhs.a + b * rhs.c, a * rhs.b + b * rhs.d, c * rhs.a + d * rhs.c,
          c * rhs.b + d * rhs.d};
}

bool FiniteMatrixGroup::contains(const Mat2& m) const {
  if (conductor_ % m.conductor() == 0) {
    Mat2 probe = m.lifted(conductor_);
    auto it = std::lower_bound(sorted_.begin(), sorted_.end(), probe,
                               [this](std::size_t idx, const Mat2& value) {
                                 return canonical_less(elements_[idx], value);
                               });
    return it != sorted_.end() && elements_[*it] == probe;
  }
  return std::any_of(elements_.begin(), elements_.end(),
                     [&m](const Mat2& e) { return e == m; });
}

bool FiniteMatrixGroup::is_monomial() const {
  return std::all_of(elements_.begin(), elements_.end(),
                     [](const Mat2& e) { return e.is_monomial(); });
}

nlohmann::json FiniteMatrixGroup::to_json() const {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : generators_) gens.push_back(g.to_string());
  return {{"conductor", conductor_}, {"generators", gens}, {"order", order()}};
}

FiniteMatrixGroup generate_group(const std::vector<Mat2>& gens, std::size_t cap) {
  FiniteMatrixGroup group;
  group.conductor_ = common_conductor(gens);
  for (const auto& g : gens) {
    if (!g.is_invertible()) throw SingularMatrix();
    group.generators_.push_back(g.lifted(group.conductor_));
  }

  std::set<Mat2, Mat2Less> seen;
  std::deque<std::size_t> frontier;
  Mat2 id = Mat2::identity(group.conductor_);
  seen.insert(id);
  group.elements_.push_back(id);
  frontier.push_back(0);
  while (!frontier.empty()) {
    std::size_t idx = frontier.front();
    frontier.pop_front();
    for (const auto& g : group.generators_) {
      Mat2 next = group.elements_[idx] * g;
      if (seen.insert(next).second) {
        if (group.elements_.size() >= cap) throw CapExceeded(cap);
        group.elements_.push_back(next);
        frontier.push_back(group.elements_.size() - 1);
      }
    }
  }

  group.sorted_.resize(group.elements_.size());
  for (std::size_t i = 0; i < group.sorted_.size(); ++i) group.sorted_[i] = i;
  std::sort(group.sorted_.begin(), group.sorted_.end(), [&group](std::size_t l, std::size_t r) {
    return canonical_less(group.elements_[l], group.elements_[r]);
  });
  return group;
}

Mat2 alpha_matrix(int m) {
  if (m < 1) throw InvalidArgument("alpha_matrix: m must be positive");
  return Mat2::diagonal(CycNum::root_of_unity(m, 1), -CycNum::root_of_unity(m, m - 1));
}

FiniteMatrixGroup alpha_group(int m) {
  if (m < 3) throw InvalidArgument("alpha_group: m must be at least 3");
  return generate_group({alpha_matrix(m)});
}

Mat2 tau_matrix() { return Mat2(CycNum(0), CycNum(1), CycNum(1), CycNum(0)); }

FiniteMatrixGroup conjugate_group(const FiniteMatrixGroup& group, const Mat2& by, std::size_t cap) {
  Mat2 inv = by.inverse();
  std::vector<Mat2> gens;
  gens.reserve(group.generators().size());
  for (const auto& g : group.generators()) gens.push_back(inv * g * by);
  return generate_group(gens, cap);
}

bool is_real_conjugate_candidate(const Mat2& m) {
  return std::abs(m.trace().embed().imag()) <= 1e-12;
}

std::optional<long> matrix_finite_order(const Mat2& m, long bound) {
  if (!m.is_invertible()) throw SingularMatrix();
  Mat2 power = m;
  for (long k = 1; k <= bound; ++k) {
    if (power.is_identity()) return k;
    power = power * m;
  }
  return std::nullopt;
}

}  // namespace superflow
