#include "superflow/homog_algebra.hpp"

#include <algorithm>
#include <sstream>

#include "expr_parser.hpp"
#include "superflow/error.hpp"

namespace superflow {
namespace {

constexpr std::string_view kBullet = "\xE2\x80\xA2";

// Powers base^0 .. base^n.
std::vector<CycNum> power_table(const CycNum& base, int n) {
  std::vector<CycNum> table;
  table.reserve(static_cast<std::size_t>(n) + 1);
  table.emplace_back(1);
  for (int i = 1; i <= n; ++i) table.push_back(table.back() * base);
  return table;
}

std::string monomial_text(int x_power, int y_power) {
  std::string out;
  auto append = [&out](char var, int power) {
    if (power == 0) return;
    if (!out.empty()) out += "*";
    out += var;
    if (power > 1) out += "^" + std::to_string(power);
  };
  append('x', x_power);
  append('y', y_power);
  return out;
}

std::string denominator_text(const MonomialDenominator& den) {
  std::string mono = monomial_text(den.x_exp, den.y_exp);
  if (den.x_exp > 0 && den.y_exp > 0) return "(" + mono + ")";
  return mono;
}

std::string component_text(const HomPoly& num, const MonomialDenominator& den) {
  if (num.is_zero()) return "0";
  std::string body = num.expression();
  if (den.degree() == 0) return body;
  if (num.nonzero_count() > 1) body = "(" + body + ")";
  return body + "/" + denominator_text(den);
}

HomPoly component_from_laurent(const detail::Laurent& terms, int degree, MonomialDenominator den,
                               int conductor) {
  HomPoly poly(degree);
  for (int i = 0; i <= degree; ++i) poly.set_coeff(i, CycNum(0, conductor));
  for (const auto& [e, c] : terms) {
    poly.set_coeff(e.first + den.x_exp, c);
  }
  return poly;
}

}  // namespace

// ---------------------------------------------------------------- HomPoly

HomPoly::HomPoly(int degree) : degree_(degree) {
  if (degree < 0) throw InvalidArgument("HomPoly: negative degree");
  coeffs_.assign(static_cast<std::size_t>(degree) + 1, CycNum(0));
}

HomPoly::HomPoly(int degree, std::vector<CycNum> coeffs) : degree_(degree), coeffs_(std::move(coeffs)) {
  if (degree < 0 || coeffs_.size() != static_cast<std::size_t>(degree) + 1) {
    throw InvalidArgument("HomPoly: expected degree + 1 coefficients");
  }
}

HomPoly HomPoly::monomial(int degree, int x_power, CycNum coeff) {
  HomPoly p(degree);
  if (x_power < 0 || x_power > degree) throw InvalidArgument("HomPoly::monomial: bad power");
  p.set_coeff(x_power, std::move(coeff));
  return p;
}

bool HomPoly::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const CycNum& c) { return c.is_zero(); });
}

std::size_t HomPoly::nonzero_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const CycNum& c) { return !c.is_zero(); }));
}

int HomPoly::conductor() const {
  long n = 1;
  for (const auto& c : coeffs_) {
    if (!c.is_rational()) n = lcm_order(n, c.order());
  }
  return static_cast<int>(n);
}

int HomPoly::min_x_power() const {
  for (int i = 0; i <= degree_; ++i) {
    if (!coeff(i).is_zero()) return i;
  }
  return -1;
}

int HomPoly::min_y_power() const {
  for (int i = degree_; i >= 0; --i) {
    if (!coeff(i).is_zero()) return degree_ - i;
  }
  return -1;
}

HomPoly HomPoly::operator+(const HomPoly& rhs) const {
  if (rhs.degree_ != degree_) throw InvalidArgument("HomPoly: degree mismatch in sum");
  HomPoly out = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!rhs.coeffs_[i].is_zero()) out.coeffs_[i] += rhs.coeffs_[i];
  }
  return out;
}

HomPoly HomPoly::operator-(const HomPoly& rhs) const { return *this + rhs.scaled(CycNum(-1)); }

HomPoly HomPoly::operator*(const HomPoly& rhs) const {
  HomPoly out(degree_ + rhs.degree_);
  for (int i = 0; i <= degree_; ++i) {
    if (coeff(i).is_zero()) continue;
    for (int j = 0; j <= rhs.degree_; ++j) {
      if (rhs.coeff(j).is_zero()) continue;
      out.coeffs_[static_cast<std::size_t>(i + j)] += coeff(i) * rhs.coeff(j);
    }
  }
  return out;
}

HomPoly HomPoly::scaled(const CycNum& factor) const {
  HomPoly out = *this;
  for (auto& c : out.coeffs_) {
    if (!c.is_zero()) c *= factor;
  }
  return out;
}

HomPoly HomPoly::shifted(int dx, int dy) const {
  HomPoly out(degree_ + dx + dy);
  for (int i = 0; i <= degree_; ++i) {
    if (coeff(i).is_zero()) continue;
    int target = i + dx;
    int y_power = degree_ - i + dy;
    if (target < 0 || y_power < 0) throw InvalidArgument("HomPoly::shifted: not divisible");
    out.coeffs_[static_cast<std::size_t>(target)] = coeff(i);
  }
  return out;
}

HomPoly HomPoly::substitute(const Mat2& L) const {
  const int n = degree_;
  if (L.is_diagonal()) {
    // x^i y^(n-i) -> a^i d^(n-i) x^i y^(n-i)
    HomPoly out(n);
    const bool sparse = nonzero_count() <= 2;
    std::vector<CycNum> ap, dp;
    if (!sparse) {
      ap = power_table(L.a(), n);
      dp = power_table(L.d(), n);
    }
    for (int i = 0; i <= n; ++i) {
      if (coeff(i).is_zero()) continue;
      CycNum factor = sparse ? L.a().pow(i) * L.d().pow(n - i)
                             : ap[static_cast<std::size_t>(i)] * dp[static_cast<std::size_t>(n - i)];
      out.set_coeff(i, coeff(i) * factor);
    }
    return out;
  }
  if (L.is_antidiagonal()) {
    // x^i y^(n-i) -> (b y)^i (c x)^(n-i)
    HomPoly out(n);
    for (int i = 0; i <= n; ++i) {
      if (coeff(i).is_zero()) continue;
      out.set_coeff(n - i, coeff(i) * L.b().pow(i) * L.c().pow(n - i));
    }
    return out;
  }
  HomPoly first(1, {L.b(), L.a()});   // a x + b y
  HomPoly second(1, {L.d(), L.c()});  // c x + d y
  std::vector<HomPoly> first_pow{HomPoly(0, {CycNum(1)})};
  std::vector<HomPoly> second_pow{HomPoly(0, {CycNum(1)})};
  for (int i = 1; i <= n; ++i) {
    first_pow.push_back(first_pow.back() * first);
    second_pow.push_back(second_pow.back() * second);
  }
  HomPoly out(n);
  for (int i = 0; i <= n; ++i) {
    if (coeff(i).is_zero()) continue;
    out = out + (first_pow[static_cast<std::size_t>(i)] * second_pow[static_cast<std::size_t>(n - i)])
                    .scaled(coeff(i));
  }
  return out;
}

Complex HomPoly::eval(Complex x, Complex y) const {
  Complex sum = 0.0;
  for (int i = 0; i <= degree_; ++i) {
    if (coeff(i).is_zero()) continue;
    sum += coeff(i).embed() * std::pow(x, i) * std::pow(y, degree_ - i);
  }
  return sum;
}

bool operator==(const HomPoly& lhs, const HomPoly& rhs) {
  if (lhs.degree_ != rhs.degree_) return lhs.is_zero() && rhs.is_zero();
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (!(lhs.coeffs_[i] == rhs.coeffs_[i])) return false;
  }
  return true;
}

std::string HomPoly::expression() const {
  std::ostringstream os;
  bool first = true;
  for (int i = degree_; i >= 0; --i) {
    const CycNum& c = coeff(i);
    if (c.is_zero()) continue;
    std::string mono = monomial_text(i, degree_ - i);
    if (auto r = c.as_rational()) {
      Rational magnitude = abs(*r);
      bool negative = *r < 0;
      if (first) {
        if (negative) os << "-";
      } else {
        os << (negative ? " - " : " + ");
      }
      if (mono.empty()) {
        os << magnitude.get_str();
      } else if (magnitude == 1) {
        os << mono;
      } else {
        os << magnitude.get_str() << "*" << mono;
      }
    } else {
      if (!first) os << " + ";
      os << "(" << c.expression() << ")";
      if (!mono.empty()) os << "*" << mono;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

// ---------------------------------------------------------------- RatVF

RatVF::RatVF(HomPoly num_x, HomPoly num_y, MonomialDenominator den)
    : num_x_(std::move(num_x)), num_y_(std::move(num_y)), den_(den) {
  if (den_.x_exp < 0 || den_.y_exp < 0) throw InvalidArgument("RatVF: negative denominator exponent");
  if (num_x_.degree() != den_.degree() + 2 || num_y_.degree() != den_.degree() + 2) {
    throw InvalidArgument("RatVF: numerator degree must be denominator degree + 2");
  }
}

RatVF RatVF::zero(MonomialDenominator den) {
  return RatVF(HomPoly(den.degree() + 2), HomPoly(den.degree() + 2), den);
}

RatVF RatVF::monomial(MonomialDenominator den, Component component, int x_power, CycNum coeff) {
  const int d = den.degree() + 2;
  HomPoly mono = HomPoly::monomial(d, x_power, std::move(coeff));
  if (component == Component::first) return RatVF(mono, HomPoly(d), den);
  return RatVF(HomPoly(d), mono, den);
}

int RatVF::conductor() const {
  return static_cast<int>(lcm_order(num_x_.conductor(), num_y_.conductor()));
}

bool RatVF::is_zero() const { return num_x_.is_zero() && num_y_.is_zero(); }

RatVF RatVF::reduced() const {
  if (is_zero()) return zero();
  auto min_power = [](int a, int b) {
    if (a < 0) return b;
    if (b < 0) return a;
    return std::min(a, b);
  };
  int kx = std::min(den_.x_exp, min_power(num_x_.min_x_power(), num_y_.min_x_power()));
  int ky = std::min(den_.y_exp, min_power(num_x_.min_y_power(), num_y_.min_y_power()));
  if (kx == 0 && ky == 0) return *this;
  return RatVF(num_x_.shifted(-kx, -ky), num_y_.shifted(-kx, -ky),
               {den_.x_exp - kx, den_.y_exp - ky});
}

std::optional<RatVF> RatVF::canonical() const {
  if (is_zero()) return std::nullopt;
  RatVF r = reduced();
  const CycNum* lead = nullptr;
  for (const HomPoly* poly : {&r.num_x_, &r.num_y_}) {
    for (const auto& c : poly->coeffs()) {
      if (!c.is_zero()) {
        lead = &c;
        break;
      }
    }
    if (lead != nullptr) break;
  }
  CycNum scale = lead->inverse();
  return r.scaled(scale);
}

RatVF RatVF::with_denominator(MonomialDenominator target) const {
  int dx = target.x_exp - den_.x_exp;
  int dy = target.y_exp - den_.y_exp;
  if (dx < 0 || dy < 0) throw InvalidArgument("RatVF::with_denominator: target too small");
  if (dx == 0 && dy == 0) return *this;
  return RatVF(num_x_.shifted(dx, dy), num_y_.shifted(dx, dy), target);
}

RatVF RatVF::scaled(const CycNum& factor) const {
  return RatVF(num_x_.scaled(factor), num_y_.scaled(factor), den_);
}

RatVF RatVF::operator+(const RatVF& rhs) const {
  MonomialDenominator common{std::max(den_.x_exp, rhs.den_.x_exp),
                             std::max(den_.y_exp, rhs.den_.y_exp)};
  RatVF l = with_denominator(common);
  RatVF r = rhs.with_denominator(common);
  return RatVF(l.num_x_ + r.num_x_, l.num_y_ + r.num_y_, common);
}

RatVF RatVF::operator-(const RatVF& rhs) const { return *this + rhs.scaled(CycNum(-1)); }

bool operator==(const RatVF& lhs, const RatVF& rhs) {
  MonomialDenominator common{std::max(lhs.den_.x_exp, rhs.den_.x_exp),
                             std::max(lhs.den_.y_exp, rhs.den_.y_exp)};
  RatVF l = lhs.with_denominator(common);
  RatVF r = rhs.with_denominator(common);
  return l.num_x_ == r.num_x_ && l.num_y_ == r.num_y_;
}

std::string RatVF::to_string() const {
  std::string out = component_text(num_x_, den_) + " " + std::string(kBullet) + " " +
                    component_text(num_y_, den_);
  int n = conductor();
  if (n > 1) out += "; z = zeta_" + std::to_string(n);
  return out;
}

RatVF RatVF::parse(std::string_view text) {
  int conductor = detail::split_conductor(text);
  auto bullet = text.find(kBullet);
  if (bullet == std::string_view::npos) throw ParseError("vector field needs two components separated by a bullet");
  detail::Laurent first =
      detail::parse_expression(text.substr(0, bullet), conductor, true);
  detail::Laurent second =
      detail::parse_expression(text.substr(bullet + kBullet.size()), conductor, true);

  MonomialDenominator den;
  for (const auto* terms : {&first, &second}) {
    for (const auto& [e, c] : *terms) {
      if (e.first + e.second != 2) throw ParseError("vector field components must be 2-homogeneous");
      den.x_exp = std::max(den.x_exp, -e.first);
      den.y_exp = std::max(den.y_exp, -e.second);
    }
  }
  const int degree = den.degree() + 2;
  return RatVF(component_from_laurent(first, degree, den, conductor),
               component_from_laurent(second, degree, den, conductor), den);
}

// ---------------------------------------------------------------- operations

Point eval_field(const RatVF& field, const Point& p) {
  const auto& den = field.den();
  if ((den.x_exp > 0 && p.x == 0.0) || (den.y_exp > 0 && p.y == 0.0)) {
    throw SingularPoint("vector field evaluated on the vanishing locus of its denominator");
  }
  Complex d = std::pow(p.x, den.x_exp) * std::pow(p.y, den.y_exp);
  Point value{field.num_x().eval(p.x, p.y) / d, field.num_y().eval(p.x, p.y) / d};
  if (!is_finite(value)) throw SingularPoint("vector field is not finite at the given point");
  return value;
}

RatVF conjugate_field(const Mat2& L, const RatVF& field) {
  const Mat2 inv = L.inverse();
  if (field.is_zero()) return field;
  const auto& den = field.den();
  if (den.degree() > 0 && !L.is_monomial()) throw NonMonomialDenominator();

  HomPoly px = field.num_x().substitute(L);
  HomPoly py = field.num_y().substitute(L);

  // The substituted denominator is K * x^a y^b; scale by 1/K.
  MonomialDenominator image_den = den;
  CycNum inv_k(1);
  if (den.degree() > 0) {
    if (L.is_diagonal()) {
      inv_k = inv.a().pow(den.x_exp) * inv.d().pow(den.y_exp);
    } else {
      // (b y)^lx (c x)^ly, with 1/b = inv.c and 1/c = inv.b.
      inv_k = inv.c().pow(den.x_exp) * inv.b().pow(den.y_exp);
      image_den = {den.y_exp, den.x_exp};
    }
  }

  HomPoly wx = px.scaled(inv.a()) + py.scaled(inv.b());
  HomPoly wy = px.scaled(inv.c()) + py.scaled(inv.d());
  if (!inv_k.is_one()) {
    wx = wx.scaled(inv_k);
    wy = wy.scaled(inv_k);
  }
  return RatVF(std::move(wx), std::move(wy), image_den);
}

std::optional<RatVF> reynolds_average(const FiniteMatrixGroup& group, const RatVF& field) {
  if (field.den().degree() > 0 && !group.is_monomial()) throw NonMonomialDenominator();
  std::optional<RatVF> sum;
  for (const auto& sigma : group.elements()) {
    RatVF term = conjugate_field(sigma, field);
    sum = sum ? *sum + term : term;
  }
  RatVF average = sum->scaled(CycNum(Rational(1) / Rational(static_cast<unsigned long>(group.order()))));
  if (average.is_zero()) return std::nullopt;
  return average;
}

bool is_invariant(const FiniteMatrixGroup& group, const RatVF& field) {
  return std::all_of(group.elements().begin(), group.elements().end(),
                     [&field](const Mat2& sigma) { return conjugate_field(sigma, field) == field; });
}

}  // namespace superflow
