#include "monocert/builtins.hpp"

#include <cmath>
#include <string>

namespace monocert::builtins {

namespace {

// sign = +1 for f+, -1 for f-.
ScalarField2 coupled_quadratic(double sign, std::string name) {
  return ScalarField2(std::move(name), [sign](Vec2 p) {
    const double sx = std::sin(p.x), cx = std::cos(p.x);
    const double sy = std::sin(p.y), cy = std::cos(p.y);
    const double u = sx * sy;
    Jet2 j;
    j.v = 0.5 * p.x * p.x + sign * u - 0.5 * p.y * p.y;
    j.gx = p.x + sign * cx * sy;
    j.gy = sign * sx * cy - p.y;
    j.hxx = 1.0 - sign * u;
    j.hxy = sign * cx * cy;
    j.hyy = -sign * u - 1.0;
    return j;
  });
}

VectorField2 coupled_saddle(double sign, std::string name) {
  auto value = [sign](Vec2 p) {
    return Vec2{p.x + sign * std::cos(p.x) * std::sin(p.y),
                p.y - sign * std::sin(p.x) * std::cos(p.y)};
  };
  auto full = [sign](Vec2 p) {
    const double sx = std::sin(p.x), cx = std::cos(p.x);
    const double sy = std::sin(p.y), cy = std::cos(p.y);
    const double s = sx * sy;
    const double c = cx * cy;
    return FieldValue{{p.x + sign * cx * sy, p.y - sign * sx * cy},
                      {1.0 - sign * s, sign * c, -sign * c, 1.0 + sign * s}};
  };
  return VectorField2::closed_form(std::move(name), std::move(value), std::move(full));
}

}  // namespace

ScalarField2 f_plus() { return coupled_quadratic(1.0, "f+"); }
ScalarField2 f_minus() { return coupled_quadratic(-1.0, "f-"); }

ScalarField2 sum_potential() {
  return ScalarField2("x^2 + y^2", [](Vec2 p) {
    return Jet2{p.x * p.x + p.y * p.y, 2.0 * p.x, 2.0 * p.y, 2.0, 0.0, 2.0};
  });
}

VectorField2 F_plus() { return coupled_saddle(1.0, "F+"); }
VectorField2 F_minus() { return coupled_saddle(-1.0, "F-"); }
VectorField2 F_sum() { return add(F_plus(), F_minus()); }

VectorField2 identity_field() {
  return VectorField2::closed_form(
      "identity", [](Vec2 p) { return p; },
      [](Vec2 p) { return FieldValue{p, Mat2::identity()}; });
}

VectorField2 skew_affine_field(double a, Vec2 b) {
  auto value = [a, b](Vec2 p) { return Vec2{a * p.y + b.x, -a * p.x + b.y}; };
  auto full = [a, b](Vec2 p) {
    return FieldValue{{a * p.y + b.x, -a * p.x + b.y}, {0.0, a, -a, 0.0}};
  };
  return VectorField2::closed_form("skew(" + std::to_string(a) + ")", std::move(value),
                                   std::move(full));
}

VectorField2 constant_field(Vec2 c) {
  return VectorField2::closed_form(
      "constant", [c](Vec2) { return c; }, [c](Vec2) { return FieldValue{c, Mat2{}}; });
}

std::optional<VectorField2> field_by_name(std::string_view name) {
  if (name == "fplus") return F_plus();
  if (name == "fminus") return F_minus();
  if (name == "sum") return F_sum();
  if (name == "identity") return identity_field();
  return std::nullopt;
}

std::optional<ScalarField2> scalar_by_name(std::string_view name) {
  if (name == "fplus") return f_plus();
  if (name == "fminus") return f_minus();
  return std::nullopt;
}

}  // namespace monocert::builtins
