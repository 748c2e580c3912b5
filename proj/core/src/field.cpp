#include "monocert/field.hpp"

#include <cmath>
#include <limits>
#include <utility>

namespace monocert {

ScalarField2::ScalarField2(std::string name, Evaluator evaluator)
    : name_(std::move(name)), evaluator_(std::move(evaluator)) {}

ScalarField2 ScalarField2::from_expr(Expr e, std::string name) {
  if (name.empty()) name = to_string(e);
  ScalarField2 f(std::move(name), [e](Vec2 p) { return eval_jet(e, p); });
  f.expr_ = std::move(e);
  return f;
}

ScalarField2 ScalarField2::parse(std::string_view text, std::string name) {
  return from_expr(monocert::parse(text), std::move(name));
}

double ScalarField2::value(Vec2 p) const {
  if (expr_) return eval(*expr_, p);
  return evaluator_(p).v;
}

std::string_view to_string(FieldKind kind) noexcept {
  switch (kind) {
    case FieldKind::ClosedForm: return "closed-form";
    case FieldKind::Gradient: return "gradient";
    case FieldKind::Saddle: return "saddle";
    case FieldKind::Sum: return "sum";
    case FieldKind::Scaled: return "scaled";
    case FieldKind::Shifted: return "shifted";
  }
  return "unknown";
}

double fd_step(double c) noexcept {
  static const double base = std::cbrt(std::numeric_limits<double>::epsilon());
  return base * std::max(1.0, std::abs(c));
}

Mat2 fd_jacobian(const VectorField2::ValueFn& f, Vec2 p) {
  const double hx = fd_step(p.x);
  const double hy = fd_step(p.y);
  const Vec2 dx = (1.0 / (2.0 * hx)) * (f({p.x + hx, p.y}) - f({p.x - hx, p.y}));
  const Vec2 dy = (1.0 / (2.0 * hy)) * (f({p.x, p.y + hy}) - f({p.x, p.y - hy}));
  return {dx.x, dy.x, dx.y, dy.y};
}

VectorField2::VectorField2(FieldKind kind, std::string name, bool exact, ValueFn value,
                           Evaluator full)
    : kind_(kind),
      name_(std::move(name)),
      exact_jacobian_(exact),
      value_(std::move(value)),
      full_(std::move(full)) {}

VectorField2 VectorField2::closed_form(std::string name, ValueFn value, Evaluator full) {
  return VectorField2(FieldKind::ClosedForm, std::move(name), true, std::move(value),
                      std::move(full));
}

VectorField2 VectorField2::closed_form(std::string name, ValueFn value) {
  auto full = [value](Vec2 p) { return FieldValue{value(p), fd_jacobian(value, p)}; };
  return VectorField2(FieldKind::ClosedForm, std::move(name), false, std::move(value),
                      std::move(full));
}

VectorField2 gradient_field(const ScalarField2& f) {
  auto full = [f](Vec2 p) {
    const Jet2 j = f.jet(p);
    return FieldValue{{j.gx, j.gy}, {j.hxx, j.hxy, j.hxy, j.hyy}};
  };
  auto value = [f](Vec2 p) {
    const Jet2 j = f.jet(p);
    return Vec2{j.gx, j.gy};
  };
  return VectorField2(FieldKind::Gradient, "grad(" + f.name() + ")", true, std::move(value),
                      std::move(full));
}

VectorField2 saddle_field(const ScalarField2& f) {
  auto full = [f](Vec2 p) {
    const Jet2 j = f.jet(p);
    return FieldValue{{j.gx, -j.gy}, {j.hxx, j.hxy, -j.hxy, -j.hyy}};
  };
  auto value = [f](Vec2 p) {
    const Jet2 j = f.jet(p);
    return Vec2{j.gx, -j.gy};
  };
  return VectorField2(FieldKind::Saddle, "saddle(" + f.name() + ")", true, std::move(value),
                      std::move(full));
}

VectorField2 add(const VectorField2& a, const VectorField2& b) {
  auto full = [a, b](Vec2 p) {
    const FieldValue fa = a.eval(p);
    const FieldValue fb = b.eval(p);
    return FieldValue{fa.value + fb.value, fa.jacobian + fb.jacobian};
  };
  auto value = [a, b](Vec2 p) { return a.value(p) + b.value(p); };
  return VectorField2(FieldKind::Sum, a.name() + " + " + b.name(),
                      a.exact_jacobian() && b.exact_jacobian(), std::move(value), std::move(full));
}

VectorField2 scale(const VectorField2& a, double c) {
  auto full = [a, c](Vec2 p) {
    const FieldValue fa = a.eval(p);
    return FieldValue{c * fa.value, c * fa.jacobian};
  };
  auto value = [a, c](Vec2 p) { return c * a.value(p); };
  return VectorField2(FieldKind::Scaled, std::to_string(c) + "*(" + a.name() + ")",
                      a.exact_jacobian(), std::move(value), std::move(full));
}

VectorField2 shift(const VectorField2& a, Vec2 b) {
  auto full = [a, b](Vec2 p) {
    const FieldValue fa = a.eval(p);
    return FieldValue{fa.value + b, fa.jacobian};
  };
  auto value = [a, b](Vec2 p) { return a.value(p) + b; };
  return VectorField2(FieldKind::Shifted,
                      "(" + a.name() + ") + (" + std::to_string(b.x) + ", " + std::to_string(b.y) + ")",
                      a.exact_jacobian(), std::move(value), std::move(full));
}

}  // namespace monocert
