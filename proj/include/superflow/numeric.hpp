#pragma once

#include <cmath>
#include <complex>

namespace superflow {

using Complex = std::complex<double>;

/// A point of C^2 (or of R^2 embedded in C^2).
struct Point {
  Complex x;
  Complex y;

  Point& operator+=(const Point& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  friend Point operator+(Point l, const Point& r) { return l += r; }
  friend Point operator-(const Point& l, const Point& r) { return {l.x - r.x, l.y - r.y}; }
  friend Point operator*(Complex s, const Point& p) { return {s * p.x, s * p.y}; }
  friend Point operator*(const Point& p, Complex s) { return {s * p.x, s * p.y}; }
  friend Point operator/(const Point& p, Complex s) { return {p.x / s, p.y / s}; }
};

/// Euclidean norm on C^2.
inline double norm(const Point& p) { return std::hypot(std::abs(p.x), std::abs(p.y)); }

inline bool is_finite(const Point& p) {
  return std::isfinite(p.x.real()) && std::isfinite(p.x.imag()) && std::isfinite(p.y.real()) &&
         std::isfinite(p.y.imag());
}

}  // namespace superflow
