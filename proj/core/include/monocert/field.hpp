#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "monocert/expr.hpp"
#include "monocert/jet.hpp"
#include "monocert/linalg.hpp"

namespace monocert {

/// Scalar field on the plane with exact second-order derivatives.
class ScalarField2 {
 public:
  using Evaluator = std::function<Jet2(Vec2)>;

  /// Built-in field backed by a hand-written jet evaluator.
  ScalarField2(std::string name, Evaluator evaluator);

  static ScalarField2 from_expr(Expr e, std::string name = {});
  /// Parses text; throws ParseError.
  static ScalarField2 parse(std::string_view text, std::string name = {});

  const std::string& name() const noexcept { return name_; }
  bool from_expression() const noexcept { return expr_.has_value(); }
  const std::optional<Expr>& expression() const noexcept { return expr_; }

  Jet2 jet(Vec2 p) const { return evaluator_(p); }
  double value(Vec2 p) const;

 private:
  std::string name_;
  Evaluator evaluator_;
  std::optional<Expr> expr_;
};

enum class FieldKind { ClosedForm, Gradient, Saddle, Sum, Scaled, Shifted };

std::string_view to_string(FieldKind kind) noexcept;

struct FieldValue {
  Vec2 value;
  Mat2 jacobian;
};

/// Planar vector field with Jacobians. Fields are immutable; the algebra below
/// builds new fields that share their parts.
class VectorField2 {
 public:
  using ValueFn = std::function<Vec2(Vec2)>;
  using Evaluator = std::function<FieldValue(Vec2)>;

  /// Closed form with an exact hand-written Jacobian.
  static VectorField2 closed_form(std::string name, ValueFn value, Evaluator full);
  /// Closed form without a Jacobian; jacobian() falls back to central
  /// differences and exact_jacobian() reports false.
  static VectorField2 closed_form(std::string name, ValueFn value);

  FieldKind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }
  bool exact_jacobian() const noexcept { return exact_jacobian_; }

  Vec2 value(Vec2 p) const { return value_(p); }
  Mat2 jacobian(Vec2 p) const { return full_(p).jacobian; }
  FieldValue eval(Vec2 p) const { return full_(p); }

 private:
  VectorField2(FieldKind kind, std::string name, bool exact, ValueFn value, Evaluator full);

  friend VectorField2 gradient_field(const ScalarField2& f);
  friend VectorField2 saddle_field(const ScalarField2& f);
  friend VectorField2 add(const VectorField2& a, const VectorField2& b);
  friend VectorField2 scale(const VectorField2& a, double c);
  friend VectorField2 shift(const VectorField2& a, Vec2 b);

  FieldKind kind_;
  std::string name_;
  bool exact_jacobian_;
  ValueFn value_;
  Evaluator full_;
};

/// (f_x, f_y) with the Hessian as Jacobian.
VectorField2 gradient_field(const ScalarField2& f);
/// (f_x, -f_y) with Jacobian [[f_xx, f_xy], [-f_xy, -f_yy]].
VectorField2 saddle_field(const ScalarField2& f);
VectorField2 add(const VectorField2& a, const VectorField2& b);
VectorField2 scale(const VectorField2& a, double c);
VectorField2 shift(const VectorField2& a, Vec2 b);

inline Mat2 jacobian(const VectorField2& f, Vec2 p) { return f.jacobian(p); }

/// Central-difference Jacobian, step cbrt(eps) * max(1, |coordinate|).
Mat2 fd_jacobian(const VectorField2::ValueFn& f, Vec2 p);

/// Central-difference step used throughout for coordinate c.
double fd_step(double c) noexcept;

}  // namespace monocert
