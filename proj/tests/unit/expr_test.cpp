#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "monocert/errors.hpp"
#include "monocert/expr.hpp"
#include "testkit.hpp"

namespace monocert {
namespace {

ParseError parse_failure(std::string_view text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "expected a parse error for '" << text << "'";
  return ParseError(ParseErrorKind::Syntax, 0, "");
}

TEST(Parse, ProductOfSines) {
  const Expr e = parse("sin(x)*sin(y)");
  EXPECT_EQ(e, sin(Expr::x()) * sin(Expr::y()));
  EXPECT_EQ(e.op(), Op::Mul);
  EXPECT_EQ(e.lhs().op(), Op::Sin);
}

TEST(Parse, FPlusMatchesBuilderTree) {
  const Expr x = Expr::x(), y = Expr::y();
  const Expr expected = Expr::pow(x, 2) / Expr::constant(2) + sin(x) * sin(y) -
                        Expr::pow(y, 2) / Expr::constant(2);
  EXPECT_EQ(parse("x^2/2 + sin(x)*sin(y) - y^2/2"), expected);
}

TEST(Parse, Precedence) {
  const Expr x = Expr::x(), y = Expr::y();
  EXPECT_EQ(parse("-x^2"), -Expr::pow(x, 2));
  EXPECT_EQ(parse("x - y - 1"), (x - y) - Expr::constant(1));
  EXPECT_EQ(parse("x / y / 2"), (x / y) / Expr::constant(2));
  EXPECT_EQ(parse("x + y * 2"), x + y * Expr::constant(2));
  EXPECT_EQ(parse("-x * y"), (-x) * y);
  EXPECT_EQ(parse("(x + y)^3"), Expr::pow(x + y, 3));
  EXPECT_EQ(parse("--x"), -(-x));
  EXPECT_EQ(parse("  exp( x )\t"), exp(x));
}

TEST(Parse, NumericLiterals) {
  EXPECT_EQ(parse("2.5e-3").literal(), 2.5e-3);
  EXPECT_EQ(parse(".5").literal(), 0.5);
  EXPECT_EQ(parse("3.").literal(), 3.0);
  EXPECT_EQ(parse("1E2").literal(), 100.0);
  EXPECT_EQ(parse("-4"), -Expr::constant(4));
}

TEST(ParseErrors, SyntaxOffset) {
  const ParseError e = parse_failure("x +* y");
  EXPECT_EQ(e.kind(), ParseErrorKind::Syntax);
  EXPECT_EQ(e.offset(), 3u);
}

TEST(ParseErrors, Kinds) {
  EXPECT_EQ(parse_failure("").kind(), ParseErrorKind::Syntax);
  EXPECT_EQ(parse_failure("(x + y").kind(), ParseErrorKind::Syntax);
  EXPECT_EQ(parse_failure("x y").offset(), 2u);
  EXPECT_EQ(parse_failure("sin x").kind(), ParseErrorKind::Syntax);

  const ParseError unknown = parse_failure("x + tan(y)");
  EXPECT_EQ(unknown.kind(), ParseErrorKind::UnknownIdentifier);
  EXPECT_EQ(unknown.offset(), 4u);
  EXPECT_EQ(parse_failure("z").kind(), ParseErrorKind::UnknownIdentifier);

  const ParseError frac = parse_failure("x^2.5");
  EXPECT_EQ(frac.kind(), ParseErrorKind::NonIntegerExponent);
  EXPECT_EQ(frac.offset(), 2u);
  EXPECT_EQ(parse_failure("x^y").kind(), ParseErrorKind::NonIntegerExponent);
  EXPECT_EQ(parse_failure("x^-1").kind(), ParseErrorKind::NonIntegerExponent);
  EXPECT_EQ(parse_failure("x^2^3").kind(), ParseErrorKind::Syntax);
}

TEST(Print, MinimalParentheses) {
  EXPECT_EQ(to_string(parse("(x + y) * (x - y)")), "(x + y)*(x - y)");
  EXPECT_EQ(to_string(parse("x - (y - 1)")), "x - (y - 1)");
  EXPECT_EQ(to_string(parse("(x - y) - 1")), "x - y - 1");
  EXPECT_EQ(to_string(parse("(-x)^2")), "(-x)^2");
  EXPECT_EQ(to_string(parse("0.1*x")), "0.1*x");
}

TEST(Print, RoundTripProperty) {
  testkit::Rng rng(7);
  for (int n = 0; n < 500; ++n) {
    const Expr e = testkit::random_expr(rng, 5);
    const std::string text = to_string(e);
    EXPECT_EQ(parse(text), e) << text;
    EXPECT_EQ(to_string(parse(text)), text);
  }
}

TEST(EvalJet, ProductOfSinesAtOrigin) {
  const Jet2 j = eval_jet(parse("sin(x)*sin(y)"), {0.0, 0.0});
  EXPECT_EQ(j, (Jet2{0, 0, 0, 0, 1, 0}));
}

TEST(EvalJet, HalfSquare) {
  const Jet2 j = eval_jet(parse("x^2/2"), {3.0, 7.0});
  EXPECT_EQ(j, (Jet2{4.5, 3, 0, 1, 0, 0}));
}

TEST(EvalJet, Exponential) {
  const Jet2 j = eval_jet(parse("exp(x*y)"), {1.0, 2.0});
  const double e2 = std::exp(2.0);
  EXPECT_DOUBLE_EQ(j.v, e2);
  EXPECT_DOUBLE_EQ(j.gx, 2 * e2);
  EXPECT_DOUBLE_EQ(j.gy, e2);
  EXPECT_DOUBLE_EQ(j.hxx, 4 * e2);
  EXPECT_DOUBLE_EQ(j.hxy, 3 * e2);
  EXPECT_DOUBLE_EQ(j.hyy, e2);
}

TEST(EvalJet, DivisionByZeroNamesSubexpression) {
  try {
    eval_jet(parse("y + 1/x"), {0.0, 0.0});
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_EQ(e.subexpression(), "1/x");
  }
  EXPECT_THROW(eval(parse("1/x"), {0.0, 0.0}), DomainError);
}

TEST(EvalJet, OverflowIsDomainError) {
  EXPECT_THROW(eval(parse("exp(exp(x))"), {10.0, 0.0}), DomainError);
  EXPECT_THROW(eval_jet(parse("exp(exp(x))"), {10.0, 0.0}), DomainError);
}

TEST(Eval, Examples) {
  EXPECT_EQ(eval(parse("x^2/2 + sin(x)*sin(y) - y^2/2"), {0.0, 0.0}), 0.0);
  const double half_pi = std::numbers::pi / 2;
  EXPECT_EQ(eval(parse("sin(x)*sin(y)"), {half_pi, half_pi}), 1.0);
  EXPECT_NEAR(eval(parse("exp(x)"), {1.0, 0.0}), 2.718281828, 1e-9);
  EXPECT_EQ(eval(parse("x^0"), {0.0, 0.0}), 1.0);
}

TEST(Eval, MatchesJetValueBitForBit) {
  testkit::Rng rng(11);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  for (int n = 0; n < 2000; ++n) {
    const Expr e = testkit::random_expr(rng, 5);
    const Vec2 p{coord(rng), coord(rng)};
    EXPECT_EQ(eval(e, p), eval_jet(e, p).v) << to_string(e);
  }
}

TEST(EvalJet, AgreesWithCentralDifferences) {
  testkit::Rng rng(2024);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  auto close = [](double jet, double fd) {
    return std::abs(jet - fd) <= 1e-6 * std::max({1.0, std::abs(jet), std::abs(fd)});
  };
  for (int n = 0; n < 1000; ++n) {
    const Expr e = testkit::random_expr(rng, 4);
    const Vec2 p{coord(rng), coord(rng)};
    const Jet2 j = eval_jet(e, p);
    const testkit::CentralDiff d = testkit::central_differences(e, p);
    const std::string where = to_string(e);
    EXPECT_TRUE(close(j.gx, d.gx)) << where;
    EXPECT_TRUE(close(j.gy, d.gy)) << where;
    EXPECT_TRUE(close(j.hxx, d.hxx)) << where;
    EXPECT_TRUE(close(j.hxy, d.hxy)) << where;
    EXPECT_TRUE(close(j.hxy, d.hyx)) << where;
    EXPECT_TRUE(close(j.hyy, d.hyy)) << where;
  }
}

TEST(Builders, PowBounds) {
  EXPECT_THROW(Expr::pow(Expr::x(), Expr::kMaxExponent + 1), std::invalid_argument);
  EXPECT_EQ(Expr::pow(Expr::x(), 3).exponent(), 3u);
}

}  // namespace
}  // namespace monocert
