#pragma once

#include <cmath>

namespace monocert {

/// Second-order Taylor jet of a scalar field on the plane: value, gradient and
/// Hessian at a point. The Hessian carries a single mixed entry, so the
/// symmetry hxy == hyx holds by construction.
struct Jet2 {
  double v = 0.0;
  double gx = 0.0;
  double gy = 0.0;
  double hxx = 0.0;
  double hxy = 0.0;
  double hyy = 0.0;

  static constexpr Jet2 constant(double c) noexcept { return {c, 0, 0, 0, 0, 0}; }
  static constexpr Jet2 var_x(double x) noexcept { return {x, 1, 0, 0, 0, 0}; }
  static constexpr Jet2 var_y(double y) noexcept { return {y, 0, 1, 0, 0, 0}; }

  bool all_finite() const noexcept {
    return std::isfinite(v) && std::isfinite(gx) && std::isfinite(gy) &&
           std::isfinite(hxx) && std::isfinite(hxy) && std::isfinite(hyy);
  }

  friend constexpr bool operator==(const Jet2&, const Jet2&) = default;
};

inline Jet2 operator-(const Jet2& a) noexcept {
  return {-a.v, -a.gx, -a.gy, -a.hxx, -a.hxy, -a.hyy};
}

inline Jet2 operator+(const Jet2& a, const Jet2& b) noexcept {
  return {a.v + b.v, a.gx + b.gx, a.gy + b.gy, a.hxx + b.hxx, a.hxy + b.hxy, a.hyy + b.hyy};
}

inline Jet2 operator-(const Jet2& a, const Jet2& b) noexcept {
  return {a.v - b.v, a.gx - b.gx, a.gy - b.gy, a.hxx - b.hxx, a.hxy - b.hxy, a.hyy - b.hyy};
}

inline Jet2 operator*(const Jet2& a, const Jet2& b) noexcept {
  return {a.v * b.v,
          a.gx * b.v + a.v * b.gx,
          a.gy * b.v + a.v * b.gy,
          a.hxx * b.v + 2.0 * a.gx * b.gx + a.v * b.hxx,
          a.hxy * b.v + a.gx * b.gy + a.gy * b.gx + a.v * b.hxy,
          a.hyy * b.v + 2.0 * a.gy * b.gy + a.v * b.hyy};
}

inline Jet2 operator*(double c, const Jet2& a) noexcept {
  return {c * a.v, c * a.gx, c * a.gy, c * a.hxx, c * a.hxy, c * a.hyy};
}

/// Quotient jet. The value is a.v / b.v exactly (not a.v * (1 / b.v)), so the
/// value-only evaluator can reproduce it bit for bit. Caller checks b.v != 0.
inline Jet2 operator/(const Jet2& a, const Jet2& b) noexcept {
  Jet2 q;
  q.v = a.v / b.v;
  q.gx = (a.gx - q.v * b.gx) / b.v;
  q.gy = (a.gy - q.v * b.gy) / b.v;
  q.hxx = (a.hxx - 2.0 * q.gx * b.gx - q.v * b.hxx) / b.v;
  q.hxy = (a.hxy - q.gx * b.gy - q.gy * b.gx - q.v * b.hxy) / b.v;
  q.hyy = (a.hyy - 2.0 * q.gy * b.gy - q.v * b.hyy) / b.v;
  return q;
}

/// Composes a univariate function g with a jet given g(u), g'(u), g''(u).
inline Jet2 compose(const Jet2& u, double g, double dg, double d2g) noexcept {
  return {g,
          dg * u.gx,
          dg * u.gy,
          d2g * u.gx * u.gx + dg * u.hxx,
          d2g * u.gx * u.gy + dg * u.hxy,
          d2g * u.gy * u.gy + dg * u.hyy};
}

struct SinCos {
  double s;
  double c;
};

/// sin and cos of one argument. Out of line so every caller gets the same
/// bits: compilers may fuse sin/cos pairs into sincos, which can differ from
/// a lone std::sin in the last place.
SinCos sin_cos(double t) noexcept;

inline Jet2 sin(const Jet2& u) noexcept {
  const SinCos sc = sin_cos(u.v);
  return compose(u, sc.s, sc.c, -sc.s);
}

inline Jet2 cos(const Jet2& u) noexcept {
  const SinCos sc = sin_cos(u.v);
  return compose(u, sc.c, -sc.s, -sc.c);
}

inline Jet2 exp(const Jet2& u) noexcept {
  const double e = std::exp(u.v);
  return compose(u, e, e, e);
}

}  // namespace monocert
