#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "monocert/builtins.hpp"
#include "monocert/field.hpp"
#include "monocert/grid.hpp"
#include "testkit.hpp"

namespace monocert {
namespace {

constexpr double kPi = std::numbers::pi;

void expect_mat_eq(const Mat2& m, const Mat2& want) {
  EXPECT_EQ(m.a11, want.a11);
  EXPECT_EQ(m.a12, want.a12);
  EXPECT_EQ(m.a21, want.a21);
  EXPECT_EQ(m.a22, want.a22);
}

TEST(Linalg, SymSplitOfFPlusJacobianAtOrigin) {
  const Mat2 j = builtins::F_plus().jacobian({0, 0});
  expect_mat_eq(j, {1, 1, -1, 1});
  const SymSkew s = sym_split(j);
  expect_mat_eq(s.sym, Mat2::identity());
  expect_mat_eq(s.skew, {0, 1, -1, 0});
  EXPECT_EQ(min_sym_eig(j), 1.0);
  EXPECT_EQ(asymmetry(j), 2.0);
}

TEST(Linalg, SymmetricInput) {
  const Mat2 m{2, 0.5, 0.5, -1};
  const SymSkew s = sym_split(m);
  expect_mat_eq(s.skew, {});
  EXPECT_EQ(asymmetry(m), 0.0);
  EXPECT_NEAR(min_sym_eig(m), 0.5 - std::sqrt(2.25 + 0.25), 1e-15);
}

TEST(Linalg, FPlusJacobianAtHalfPi) {
  const Mat2 j = builtins::F_plus().jacobian({kPi / 2, kPi / 2});
  const SymSkew s = sym_split(j);
  EXPECT_EQ(s.sym.a11, 0.0);
  EXPECT_EQ(s.sym.a22, 2.0);
  EXPECT_NEAR(s.sym.a12, 0.0, 1e-16);
  EXPECT_NEAR(min_sym_eig(j), 0.0, 1e-16);
}

TEST(Linalg, SplitReassembles) {
  testkit::Rng rng(3);
  std::uniform_real_distribution<double> u(-10, 10);
  for (int n = 0; n < 1000; ++n) {
    const Mat2 m{u(rng), u(rng), u(rng), u(rng)};
    const SymSkew s = sym_split(m);
    EXPECT_EQ(s.skew.a11, 0.0);
    EXPECT_EQ(s.skew.a22, 0.0);
    EXPECT_EQ(s.skew.a12, -s.skew.a21);
    const Mat2 back = s.sym + s.skew;
    EXPECT_NEAR(back.a12, m.a12, 1e-14);
    EXPECT_NEAR(back.a21, m.a21, 1e-14);
    EXPECT_EQ(back.a11, m.a11);
    EXPECT_EQ(back.a22, m.a22);
    const double lo = min_sym_eig(m);
    const double t = 0.5 * (m.a11 + m.a22);
    const double d = std::hypot(0.5 * (m.a11 - m.a22), 0.5 * (m.a12 + m.a21));
    EXPECT_NEAR(lo, t - d, 1e-12);
  }
}

TEST(Grid, LatticeIsCornerInclusive) {
  const Region r{};
  const GridSpec g{};
  EXPECT_EQ(grid_point(r, g, 0), (Vec2{-kPi, -kPi}));
  EXPECT_EQ(grid_point(r, g, g.size() - 1), (Vec2{kPi, kPi}));
  EXPECT_EQ(grid_point(r, g, 32 * 129 + 32), (Vec2{-kPi / 2, -kPi / 2}));
  EXPECT_EQ(grid_point(r, g, 96 * 129 + 96), (Vec2{kPi / 2, kPi / 2}));
  EXPECT_EQ(grid_point(r, g, 64 * 129 + 64), (Vec2{0, 0}));
}

TEST(Grid, Validation) {
  EXPECT_THROW(validate(Region{1, 0, 0, 1}), std::invalid_argument);
  EXPECT_THROW(validate(Region{0, 1e-16, 0, 1}), std::invalid_argument);
  EXPECT_THROW(validate(Region{0, INFINITY, 0, 1}), std::invalid_argument);
  EXPECT_THROW(validate(GridSpec{1, 5}), std::invalid_argument);
  EXPECT_NO_THROW(validate(GridSpec{2, 2}));
  EXPECT_NO_THROW(make_region(-1, 1, -1, 1));
}

TEST(GradientField, Examples) {
  const VectorField2 g = gradient_field(ScalarField2::parse("x^2 + y^2"));
  const FieldValue v = g.eval({1, 2});
  EXPECT_EQ(v.value, (Vec2{2, 4}));
  expect_mat_eq(v.jacobian, 2.0 * Mat2::identity());
  EXPECT_EQ(gradient_field(builtins::f_plus()).value({0, 0}), (Vec2{0, 0}));
  const VectorField2 c = gradient_field(ScalarField2::parse("5"));
  EXPECT_EQ(c.value({0.3, -2}), (Vec2{0, 0}));
  EXPECT_EQ(g.kind(), FieldKind::Gradient);
  EXPECT_TRUE(g.exact_jacobian());
}

TEST(SaddleField, Examples) {
  const VectorField2 s = saddle_field(ScalarField2::parse(builtins::kFPlusText));
  const Vec2 v = s.value({kPi / 2, 0});
  EXPECT_EQ(v.x, kPi / 2 + std::cos(kPi / 2) * std::sin(0.0));
  EXPECT_EQ(v.y, -1.0);
  EXPECT_EQ(s.value({0, 0}), (Vec2{0, 0}));
  const VectorField2 id = saddle_field(ScalarField2::parse("x^2/2 - y^2/2"));
  for (Vec2 p : {Vec2{0.5, -2}, Vec2{3, 1}}) {
    EXPECT_EQ(id.value(p), p);
    expect_mat_eq(id.jacobian(p), Mat2::identity());
  }
}

TEST(SaddleField, SymmetricPartIsDiagonal) {
  testkit::Rng rng(5);
  std::uniform_real_distribution<double> coord(-2, 2);
  for (int n = 0; n < 200; ++n) {
    const Expr e = testkit::random_expr(rng, 4);
    const Vec2 p{coord(rng), coord(rng)};
    const Jet2 j = eval_jet(e, p);
    const Mat2 m = saddle_field(ScalarField2::from_expr(e)).jacobian(p);
    EXPECT_EQ(sym_split(m).sym.a12, 0.0);
    EXPECT_EQ(min_sym_eig(m), std::min(j.hxx, -j.hyy));
    EXPECT_EQ(asymmetry(gradient_field(ScalarField2::from_expr(e)).jacobian(p)), 0.0);
  }
}

TEST(Algebra, Examples) {
  const VectorField2 sum = add(builtins::F_plus(), builtins::F_minus());
  const Vec2 v = sum.value({0.3, -1.1});
  EXPECT_NEAR(v.x, 0.6, 1e-15);
  EXPECT_NEAR(v.y, -2.2, 1e-15);
  const VectorField2 zero = scale(builtins::F_plus(), 0.0);
  EXPECT_EQ(zero.value({1.2, 0.7}), (Vec2{0, 0}));
  expect_mat_eq(zero.jacobian({1.2, 0.7}), {});
  EXPECT_EQ(shift(builtins::identity_field(), {1, -1}).value({0, 0}), (Vec2{1, -1}));
  expect_mat_eq(builtins::identity_field().jacobian({4, -9}), Mat2::identity());
}

TEST(Algebra, SumJacobianIsTwiceIdentity) {
  const VectorField2 sum = add(builtins::F_plus(), builtins::F_minus());
  testkit::Rng rng(9);
  std::uniform_real_distribution<double> coord(-kPi, kPi);
  for (int n = 0; n < 1000; ++n) {
    const Mat2 j = sum.jacobian({coord(rng), coord(rng)});
    EXPECT_NEAR(j.a11, 2.0, 1e-15);
    EXPECT_NEAR(j.a22, 2.0, 1e-15);
    EXPECT_EQ(j.a12, 0.0);
    EXPECT_EQ(j.a21, 0.0);
  }
}

TEST(Algebra, JacobiansFollowComponents) {
  testkit::Rng rng(12);
  std::uniform_real_distribution<double> coord(-3, 3);
  const VectorField2 a = builtins::F_plus();
  const VectorField2 b = saddle_field(ScalarField2::parse("exp(x/3)*cos(y) + x*y^2"));
  for (int n = 0; n < 500; ++n) {
    const Vec2 p{coord(rng), coord(rng)};
    const double c = coord(rng);
    const Mat2 ja = a.jacobian(p), jb = b.jacobian(p);
    expect_mat_eq(add(a, b).jacobian(p), ja + jb);
    expect_mat_eq(scale(a, c).jacobian(p), c * ja);
    expect_mat_eq(shift(b, {c, -c}).jacobian(p), jb);
    EXPECT_EQ(shift(b, {c, -c}).value(p), b.value(p) + (Vec2{c, -c}));
  }
}

TEST(Builtins, ClosedFormMatchesParsedSaddleField) {
  const VectorField2 closed_plus = builtins::F_plus();
  const VectorField2 closed_minus = builtins::F_minus();
  const VectorField2 parsed_plus = saddle_field(ScalarField2::parse(builtins::kFPlusText));
  const VectorField2 parsed_minus = saddle_field(ScalarField2::parse(builtins::kFMinusText));
  testkit::Rng rng(10000);
  std::uniform_real_distribution<double> coord(-kPi, kPi);
  double worst = 0.0;
  for (int n = 0; n < 10000; ++n) {
    const Vec2 p{coord(rng), coord(rng)};
    worst = std::max(worst, norm_inf(closed_plus.value(p) - parsed_plus.value(p)));
    worst = std::max(worst, norm_inf(closed_minus.value(p) - parsed_minus.value(p)));
    const Mat2 d = closed_plus.jacobian(p) + (-1.0) * parsed_plus.jacobian(p);
    worst = std::max({worst, std::abs(d.a11), std::abs(d.a12), std::abs(d.a21), std::abs(d.a22)});
  }
  EXPECT_LE(worst, 1e-14);
}

TEST(Builtins, ScalarJetsMatchExpressions) {
  testkit::Rng rng(4);
  std::uniform_real_distribution<double> coord(-kPi, kPi);
  const Expr plus = parse(builtins::kFPlusText);
  for (int n = 0; n < 1000; ++n) {
    const Vec2 p{coord(rng), coord(rng)};
    const Jet2 a = builtins::f_plus().jet(p), b = eval_jet(plus, p);
    EXPECT_NEAR(a.v, b.v, 1e-14);
    EXPECT_NEAR(a.gx, b.gx, 1e-14);
    EXPECT_NEAR(a.gy, b.gy, 1e-14);
    EXPECT_NEAR(a.hxx, b.hxx, 1e-14);
    EXPECT_NEAR(a.hxy, b.hxy, 1e-14);
    EXPECT_NEAR(a.hyy, b.hyy, 1e-14);
  }
}

TEST(Builtins, Lookup) {
  for (const char* name : {"fplus", "fminus", "sum", "identity"}) {
    EXPECT_TRUE(builtins::field_by_name(name).has_value()) << name;
  }
  EXPECT_FALSE(builtins::field_by_name("nope").has_value());
  EXPECT_TRUE(builtins::scalar_by_name("fminus").has_value());
  EXPECT_FALSE(builtins::scalar_by_name("sum").has_value());
}

TEST(FiniteDifferenceJacobian, ClosedFormWithoutJacobian) {
  const VectorField2 f = VectorField2::closed_form(
      "rot", [](Vec2 p) { return Vec2{std::sin(p.y), p.x * p.x}; });
  EXPECT_FALSE(f.exact_jacobian());
  const Mat2 j = f.jacobian({0.5, 0.25});
  EXPECT_NEAR(j.a11, 0.0, 1e-9);
  EXPECT_NEAR(j.a12, std::cos(0.25), 1e-9);
  EXPECT_NEAR(j.a21, 1.0, 1e-9);
  EXPECT_NEAR(j.a22, 0.0, 1e-9);
  EXPECT_FALSE(add(f, builtins::identity_field()).exact_jacobian());
}

}  // namespace
}  // namespace monocert
