#include "monocert/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <system_error>

#include "monocert/errors.hpp"

namespace monocert {

struct Expr::Node {
  Op op = Op::Literal;
  double value = 0.0;
  unsigned exponent = 0;
  std::size_t offset = kNoOffset;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;

NodePtr make_node(Op op, double value, unsigned exponent, std::size_t offset, NodePtr lhs,
                  NodePtr rhs) {
  auto n = std::make_shared<Expr::Node>();
  n->op = op;
  n->value = value;
  n->exponent = exponent;
  n->offset = offset;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

bool is_unary(Op op) { return op == Op::Neg || op == Op::Sin || op == Op::Cos || op == Op::Exp; }
bool is_binary(Op op) {
  return op == Op::Add || op == Op::Sub || op == Op::Mul || op == Op::Div;
}

bool structurally_equal(const Expr::Node* a, const Expr::Node* b) {
  if (a == b) return true;
  if (a == nullptr || b == nullptr) return false;
  if (a->op != b->op) return false;
  switch (a->op) {
    case Op::Literal:
      return a->value == b->value;
    case Op::VarX:
    case Op::VarY:
      return true;
    case Op::Pow:
      return a->exponent == b->exponent && structurally_equal(a->lhs.get(), b->lhs.get());
    default:
      return structurally_equal(a->lhs.get(), b->lhs.get()) &&
             structurally_equal(a->rhs.get(), b->rhs.get());
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

Expr Expr::constant(double c) {
  if (!std::isfinite(c)) throw std::invalid_argument("Expr::constant: non-finite literal");
  if (std::signbit(c) && c != 0.0) return unary(Op::Neg, constant(-c));
  return Expr(make_node(Op::Literal, c == 0.0 ? 0.0 : c, 0, kNoOffset, nullptr, nullptr));
}

Expr Expr::x() { return Expr(make_node(Op::VarX, 0, 0, kNoOffset, nullptr, nullptr)); }
Expr Expr::y() { return Expr(make_node(Op::VarY, 0, 0, kNoOffset, nullptr, nullptr)); }

Expr Expr::unary(Op op, Expr arg) {
  if (!is_unary(op)) throw std::invalid_argument("Expr::unary: not a unary operator");
  return Expr(make_node(op, 0, 0, kNoOffset, std::move(arg.node_), nullptr));
}

Expr Expr::binary(Op op, Expr lhs, Expr rhs) {
  if (!is_binary(op)) throw std::invalid_argument("Expr::binary: not a binary operator");
  return Expr(make_node(op, 0, 0, kNoOffset, std::move(lhs.node_), std::move(rhs.node_)));
}

Expr Expr::pow(Expr base, unsigned exponent) {
  if (exponent > kMaxExponent) throw std::invalid_argument("Expr::pow: exponent too large");
  return Expr(make_node(Op::Pow, 0, exponent, kNoOffset, std::move(base.node_), nullptr));
}

Op Expr::op() const noexcept { return node_->op; }
double Expr::literal() const noexcept { return node_->value; }
unsigned Expr::exponent() const noexcept { return node_->exponent; }
std::size_t Expr::offset() const noexcept { return node_->offset; }

Expr Expr::lhs() const {
  if (!node_->lhs) throw std::logic_error("Expr::lhs: node has no operands");
  return Expr(node_->lhs);
}

Expr Expr::rhs() const {
  if (!node_->rhs) throw std::logic_error("Expr::rhs: node has no second operand");
  return Expr(node_->rhs);
}

bool operator==(const Expr& a, const Expr& b) {
  return structurally_equal(a.node_.get(), b.node_.get());
}

Expr operator-(Expr a) { return Expr::unary(Op::Neg, std::move(a)); }
Expr operator+(Expr a, Expr b) { return Expr::binary(Op::Add, std::move(a), std::move(b)); }
Expr operator-(Expr a, Expr b) { return Expr::binary(Op::Sub, std::move(a), std::move(b)); }
Expr operator*(Expr a, Expr b) { return Expr::binary(Op::Mul, std::move(a), std::move(b)); }
Expr operator/(Expr a, Expr b) { return Expr::binary(Op::Div, std::move(a), std::move(b)); }
Expr sin(Expr a) { return Expr::unary(Op::Sin, std::move(a)); }
Expr cos(Expr a) { return Expr::unary(Op::Cos, std::move(a)); }
Expr exp(Expr a) { return Expr::unary(Op::Exp, std::move(a)); }

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr run() {
    skip_ws();
    if (pos_ == text_.size()) fail(ParseErrorKind::Syntax, pos_, "empty expression");
    NodePtr root = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) {
      fail(ParseErrorKind::Syntax, pos_, "unexpected '" + std::string(1, text_[pos_]) + "'");
    }
    return Expr(std::move(root));
  }

 private:
  [[noreturn]] static void fail(ParseErrorKind kind, std::size_t offset, const std::string& msg) {
    throw ParseError(kind, offset, msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) {
      if (pos_ == text_.size()) {
        fail(ParseErrorKind::Syntax, pos_, std::string("expected '") + c + "' before end of input");
      }
      fail(ParseErrorKind::Syntax, pos_,
           std::string("expected '") + c + "', found '" + text_[pos_] + "'");
    }
    ++pos_;
  }

  NodePtr parse_expr() {
    NodePtr lhs = parse_term();
    while (true) {
      skip_ws();
      if (pos_ >= text_.size()) return lhs;
      const char c = text_[pos_];
      if (c != '+' && c != '-') return lhs;
      const std::size_t at = pos_++;
      NodePtr rhs = parse_term();
      lhs = make_node(c == '+' ? Op::Add : Op::Sub, 0, 0, at, std::move(lhs), std::move(rhs));
    }
  }

  NodePtr parse_term() {
    NodePtr lhs = parse_unary();
    while (true) {
      skip_ws();
      if (pos_ >= text_.size()) return lhs;
      const char c = text_[pos_];
      if (c != '*' && c != '/') return lhs;
      const std::size_t at = pos_++;
      NodePtr rhs = parse_unary();
      lhs = make_node(c == '*' ? Op::Mul : Op::Div, 0, 0, at, std::move(lhs), std::move(rhs));
    }
  }

  NodePtr parse_unary() {
    if (peek('-')) {
      const std::size_t at = pos_++;
      return make_node(Op::Neg, 0, 0, at, parse_unary(), nullptr);
    }
    return parse_power();
  }

  NodePtr parse_power() {
    NodePtr base = parse_primary();
    if (!peek('^')) return base;
    const std::size_t at = pos_++;
    const unsigned n = parse_exponent();
    if (peek('^')) {
      fail(ParseErrorKind::Syntax, pos_, "chained '^' is ambiguous; parenthesize the base");
    }
    return make_node(Op::Pow, 0, n, at, std::move(base), nullptr);
  }

  unsigned parse_exponent() {
    skip_ws();
    if (peek('(')) {
      ++pos_;
      const unsigned n = parse_exponent();
      expect(')');
      return n;
    }
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) fail(ParseErrorKind::Syntax, pos_, "missing exponent after '^'");
    const char c = text_[pos_];
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '.') {
      if (c == '-' || std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        fail(ParseErrorKind::NonIntegerExponent, start,
             "exponent must be a nonnegative integer literal");
      }
      fail(ParseErrorKind::Syntax, start, std::string("unexpected '") + c + "' after '^'");
    }
    const double value = scan_number();
    if (value != std::floor(value) || value > Expr::kMaxExponent) {
      fail(ParseErrorKind::NonIntegerExponent, start,
           "exponent must be an integer in [0, " + std::to_string(Expr::kMaxExponent) + "]");
    }
    return static_cast<unsigned>(value);
  }

  NodePtr parse_primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail(ParseErrorKind::Syntax, pos_, "unexpected end of input");
    const std::size_t at = pos_;
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr inner = parse_expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const double value = scan_number();
      return make_node(Op::Literal, value, 0, at, nullptr, nullptr);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view ident = text_.substr(at, pos_ - at);
      if (ident == "x") return make_node(Op::VarX, 0, 0, at, nullptr, nullptr);
      if (ident == "y") return make_node(Op::VarY, 0, 0, at, nullptr, nullptr);
      Op fn;
      if (ident == "sin") {
        fn = Op::Sin;
      } else if (ident == "cos") {
        fn = Op::Cos;
      } else if (ident == "exp") {
        fn = Op::Exp;
      } else {
        fail(ParseErrorKind::UnknownIdentifier, at, "unknown identifier '" + std::string(ident) + "'");
      }
      expect('(');
      NodePtr arg = parse_expr();
      expect(')');
      return make_node(fn, 0, 0, at, std::move(arg), nullptr);
    }
    fail(ParseErrorKind::Syntax, at, std::string("unexpected '") + c + "'");
  }

  // number := (digits ['.' digits*] | '.' digits) [('e'|'E') ['+'|'-'] digits]
  double scan_number() {
    const std::size_t start = pos_;
    std::size_t digits = 0;
    auto scan_digits = [&] {
      std::size_t n = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
        ++n;
      }
      return n;
    };
    digits += scan_digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      digits += scan_digits();
    }
    if (digits == 0) fail(ParseErrorKind::Syntax, start, "malformed number");
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (scan_digits() == 0) fail(ParseErrorKind::Syntax, start, "malformed number exponent");
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc() || ptr != text_.data() + pos_ || !std::isfinite(value)) {
      fail(ParseErrorKind::Syntax, start, "number literal out of range");
    }
    return value;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

Expr parse(std::string_view text) { return Parser(text).run(); }

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

namespace {

int precedence(Op op) {
  switch (op) {
    case Op::Add:
    case Op::Sub:
      return 1;
    case Op::Mul:
    case Op::Div:
      return 2;
    case Op::Neg:
      return 3;
    case Op::Pow:
      return 4;
    default:
      return 5;
  }
}

std::string format_literal(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

void print(const Expr::Node* n, std::string& out);

void print_child(const Expr::Node* child, bool parenthesize, std::string& out) {
  if (parenthesize) out += '(';
  print(child, out);
  if (parenthesize) out += ')';
}

void print(const Expr::Node* n, std::string& out) {
  switch (n->op) {
    case Op::Literal:
      out += format_literal(n->value);
      return;
    case Op::VarX:
      out += 'x';
      return;
    case Op::VarY:
      out += 'y';
      return;
    case Op::Neg:
      out += '-';
      print_child(n->lhs.get(), precedence(n->lhs->op) < 3, out);
      return;
    case Op::Sin:
    case Op::Cos:
    case Op::Exp:
      out += n->op == Op::Sin ? "sin(" : n->op == Op::Cos ? "cos(" : "exp(";
      print(n->lhs.get(), out);
      out += ')';
      return;
    case Op::Pow:
      print_child(n->lhs.get(), precedence(n->lhs->op) < 5, out);
      out += '^';
      out += std::to_string(n->exponent);
      return;
    default: {
      const int p = precedence(n->op);
      print_child(n->lhs.get(), precedence(n->lhs->op) < p, out);
      switch (n->op) {
        case Op::Add: out += " + "; break;
        case Op::Sub: out += " - "; break;
        case Op::Mul: out += "*"; break;
        default: out += "/"; break;
      }
      print_child(n->rhs.get(), precedence(n->rhs->op) <= p, out);
      return;
    }
  }
}

}  // namespace

std::string to_string(const Expr& e) {
  std::string out;
  print(e.node(), out);
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

namespace {

std::string render(const Expr::Node* n) {
  std::string out;
  print(n, out);
  return out;
}

void check_finite(bool finite, const Expr::Node* n) {
  if (!finite) throw DomainError("non-finite value", render(n));
}

Jet2 jet_of(const Expr::Node* n, Vec2 p) {
  Jet2 r;
  switch (n->op) {
    case Op::Literal:
      return Jet2::constant(n->value);
    case Op::VarX:
      return Jet2::var_x(p.x);
    case Op::VarY:
      return Jet2::var_y(p.y);
    case Op::Neg:
      return -jet_of(n->lhs.get(), p);
    case Op::Add:
      r = jet_of(n->lhs.get(), p) + jet_of(n->rhs.get(), p);
      break;
    case Op::Sub:
      r = jet_of(n->lhs.get(), p) - jet_of(n->rhs.get(), p);
      break;
    case Op::Mul:
      r = jet_of(n->lhs.get(), p) * jet_of(n->rhs.get(), p);
      break;
    case Op::Div: {
      const Jet2 num = jet_of(n->lhs.get(), p);
      const Jet2 den = jet_of(n->rhs.get(), p);
      if (den.v == 0.0) throw DomainError("division by zero", render(n));
      r = num / den;
      break;
    }
    case Op::Pow: {
      const Jet2 base = jet_of(n->lhs.get(), p);
      r = Jet2::constant(1.0);
      for (unsigned i = 0; i < n->exponent; ++i) r = r * base;
      break;
    }
    case Op::Sin:
      r = sin(jet_of(n->lhs.get(), p));
      break;
    case Op::Cos:
      r = cos(jet_of(n->lhs.get(), p));
      break;
    case Op::Exp:
      r = exp(jet_of(n->lhs.get(), p));
      break;
  }
  check_finite(r.all_finite(), n);
  return r;
}

double value_of(const Expr::Node* n, Vec2 p) {
  double r = 0.0;
  switch (n->op) {
    case Op::Literal:
      return n->value;
    case Op::VarX:
      return p.x;
    case Op::VarY:
      return p.y;
    case Op::Neg:
      return -value_of(n->lhs.get(), p);
    case Op::Add:
      r = value_of(n->lhs.get(), p) + value_of(n->rhs.get(), p);
      break;
    case Op::Sub:
      r = value_of(n->lhs.get(), p) - value_of(n->rhs.get(), p);
      break;
    case Op::Mul:
      r = value_of(n->lhs.get(), p) * value_of(n->rhs.get(), p);
      break;
    case Op::Div: {
      const double num = value_of(n->lhs.get(), p);
      const double den = value_of(n->rhs.get(), p);
      if (den == 0.0) throw DomainError("division by zero", render(n));
      r = num / den;
      break;
    }
    case Op::Pow: {
      const double base = value_of(n->lhs.get(), p);
      // Same multiplication order as the jet path: 1 * b * b * ...
      r = 1.0;
      for (unsigned i = 0; i < n->exponent; ++i) r = r * base;
      break;
    }
    case Op::Sin:
      r = sin_cos(value_of(n->lhs.get(), p)).s;
      break;
    case Op::Cos:
      r = sin_cos(value_of(n->lhs.get(), p)).c;
      break;
    case Op::Exp:
      r = std::exp(value_of(n->lhs.get(), p));
      break;
  }
  check_finite(std::isfinite(r), n);
  return r;
}

}  // namespace

Jet2 eval_jet(const Expr& e, Vec2 p) { return jet_of(e.node(), p); }

double eval(const Expr& e, Vec2 p) { return value_of(e.node(), p); }

}  // namespace monocert
