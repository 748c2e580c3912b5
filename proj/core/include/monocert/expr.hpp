#pragma once

// Expression language for scalar fields u(x, y).
//
// Grammar (see docs/grammar.md):
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' exponent)?
//   primary := number | 'x' | 'y' | func '(' expr ')' | '(' expr ')'
//   func    := 'sin' | 'cos' | 'exp'
//   exponent:= integer | '(' integer ')'

#include <cstddef>
#include <limits>
#include <memory>
#include <string>
#include <string_view>

#include "monocert/jet.hpp"
#include "monocert/linalg.hpp"

namespace monocert {

enum class Op { Literal, VarX, VarY, Neg, Add, Sub, Mul, Div, Pow, Sin, Cos, Exp };

/// Immutable expression tree. Copies share structure.
class Expr {
 public:
  static constexpr std::size_t kNoOffset = std::numeric_limits<std::size_t>::max();
  static constexpr unsigned kMaxExponent = 4096;

  /// Literal nodes hold nonnegative finite values; a negative constant is
  /// represented as Neg(Literal(|c|)), which is also what the parser builds.
  static Expr constant(double c);
  static Expr x();
  static Expr y();
  static Expr unary(Op op, Expr arg);
  static Expr binary(Op op, Expr lhs, Expr rhs);
  static Expr pow(Expr base, unsigned exponent);

  Op op() const noexcept;
  double literal() const noexcept;
  unsigned exponent() const noexcept;
  /// Byte offset of the node in parsed source, kNoOffset for built nodes.
  std::size_t offset() const noexcept;
  /// First operand (unary argument, binary lhs, power base).
  Expr lhs() const;
  Expr rhs() const;

  friend bool operator==(const Expr& a, const Expr& b);

  struct Node;
  const Node* node() const noexcept { return node_.get(); }

 private:
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  friend Expr parse(std::string_view text);
  friend class Parser;

  std::shared_ptr<const Node> node_;
};

Expr operator-(Expr a);
Expr operator+(Expr a, Expr b);
Expr operator-(Expr a, Expr b);
Expr operator*(Expr a, Expr b);
Expr operator/(Expr a, Expr b);
Expr sin(Expr a);
Expr cos(Expr a);
Expr exp(Expr a);

/// Parses text; throws ParseError carrying the byte offset of the problem.
Expr parse(std::string_view text);

/// Minimal-parenthesis rendering that re-parses to a structurally equal tree.
std::string to_string(const Expr& e);

/// Value and all partials up to order two. Throws DomainError.
Jet2 eval_jet(const Expr& e, Vec2 p);

/// Value only; bit-identical to eval_jet(e, p).v.
double eval(const Expr& e, Vec2 p);

}  // namespace monocert
