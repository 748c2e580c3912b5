#pragma once

#include <optional>
#include <string_view>

#include "monocert/field.hpp"

namespace monocert::builtins {

/// Expression text of the coupling term of the reference pair.
inline constexpr std::string_view kSinProduct = "sin(x)*sin(y)";
inline constexpr std::string_view kFPlusText = "x^2/2 + sin(x)*sin(y) - y^2/2";
inline constexpr std::string_view kFMinusText = "x^2/2 - sin(x)*sin(y) - y^2/2";

/// f+(x,y) = x^2/2 + sin x sin y - y^2/2 with a hand-written jet.
ScalarField2 f_plus();
/// f-(x,y) = x^2/2 - sin x sin y - y^2/2 with a hand-written jet.
ScalarField2 f_minus();
/// h(x,y) = x^2 + y^2.
ScalarField2 sum_potential();

/// F+ = (x + cos x sin y, y - sin x cos y), hard-coded with its Jacobian.
VectorField2 F_plus();
/// F- = (x - cos x sin y, y + sin x cos y), hard-coded with its Jacobian.
VectorField2 F_minus();
/// add(F_plus(), F_minus()).
VectorField2 F_sum();

VectorField2 identity_field();
/// z -> (a*y + b.x, -a*x + b.y).
VectorField2 skew_affine_field(double a, Vec2 b);
VectorField2 constant_field(Vec2 c);

/// fplus | fminus | sum | identity.
std::optional<VectorField2> field_by_name(std::string_view name);
/// fplus | fminus.
std::optional<ScalarField2> scalar_by_name(std::string_view name);

}  // namespace monocert::builtins
