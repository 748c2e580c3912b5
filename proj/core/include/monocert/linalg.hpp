#pragma once

#include <algorithm>
#include <cmath>

namespace monocert {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr bool operator==(const Vec2&, const Vec2&) = default;
};

constexpr Vec2 operator+(Vec2 a, Vec2 b) noexcept { return {a.x + b.x, a.y + b.y}; }
constexpr Vec2 operator-(Vec2 a, Vec2 b) noexcept { return {a.x - b.x, a.y - b.y}; }
constexpr Vec2 operator*(double c, Vec2 a) noexcept { return {c * a.x, c * a.y}; }
constexpr double dot(Vec2 a, Vec2 b) noexcept { return a.x * b.x + a.y * b.y; }
inline double norm_inf(Vec2 a) noexcept { return std::max(std::abs(a.x), std::abs(a.y)); }

/// Row-major 2x2 matrix [[a11, a12], [a21, a22]].
struct Mat2 {
  double a11 = 0.0;
  double a12 = 0.0;
  double a21 = 0.0;
  double a22 = 0.0;

  static constexpr Mat2 identity() noexcept { return {1, 0, 0, 1}; }
  constexpr Mat2 transposed() const noexcept { return {a11, a21, a12, a22}; }

  friend constexpr bool operator==(const Mat2&, const Mat2&) = default;
};

constexpr Mat2 operator+(const Mat2& a, const Mat2& b) noexcept {
  return {a.a11 + b.a11, a.a12 + b.a12, a.a21 + b.a21, a.a22 + b.a22};
}
constexpr Mat2 operator*(double c, const Mat2& a) noexcept {
  return {c * a.a11, c * a.a12, c * a.a21, c * a.a22};
}
constexpr Vec2 operator*(const Mat2& m, Vec2 v) noexcept {
  return {m.a11 * v.x + m.a12 * v.y, m.a21 * v.x + m.a22 * v.y};
}

struct SymSkew {
  Mat2 sym;
  Mat2 skew;
};

/// M = S + K with S = (M + M^T)/2 and K = (M - M^T)/2. The diagonal of K is
/// exactly zero and S + K reproduces M (up to one rounding of the halved sums).
constexpr SymSkew sym_split(const Mat2& m) noexcept {
  const double s = 0.5 * (m.a12 + m.a21);
  const double k = 0.5 * (m.a12 - m.a21);
  return {{m.a11, s, s, m.a22}, {0.0, k, -k, 0.0}};
}

/// Smallest eigenvalue of the symmetric part of m, closed 2x2 formula.
/// Returns min(a11, a22) exactly when the symmetric part is diagonal.
inline double min_sym_eig(const Mat2& m) noexcept {
  const double off = 0.5 * (m.a12 + m.a21);
  if (off == 0.0) return std::min(m.a11, m.a22);
  const double mean = 0.5 * (m.a11 + m.a22);
  const double radius = std::hypot(0.5 * (m.a11 - m.a22), off);
  return mean - radius;
}

/// Integrability residual a12 - a21; zero for the Jacobian of a gradient.
constexpr double asymmetry(const Mat2& m) noexcept { return m.a12 - m.a21; }

inline double frobenius_norm(const Mat2& m) noexcept {
  return std::sqrt(m.a11 * m.a11 + m.a12 * m.a12 + m.a21 * m.a21 + m.a22 * m.a22);
}

}  // namespace monocert
