#include "liouville/expr.hpp"

#include <cctype>
#include <limits>

namespace liouville {

namespace {

using Node = std::shared_ptr<const ExprAst>;

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  ExprAst run() {
    Node root = expr();
    skip_space();
    if (pos_ < src_.size()) fail({"'+'", "'-'", "'*'", "end of input"});
    return *root;
  }

 private:
  [[noreturn]] void fail(std::vector<std::string> expected) const {
    std::string what = "parse error at offset " + std::to_string(pos_) + ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) what += (i ? ", " : "") + expected[i];
    if (pos_ < src_.size())
      what += std::string(", found '") + src_[pos_] + "'";
    else
      what += ", found end of input";
    throw ParseError(pos_, std::move(expected), what);
  }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  static bool starts_base(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == 'x' || c == 'y' ||
           c == 'z' || c == '(';
  }

  static Node make(ExprAst::Kind kind, std::size_t offset, std::vector<Node> children) {
    auto n = std::make_shared<ExprAst>();
    n->kind = kind;
    n->offset = offset;
    n->children = std::move(children);
    return n;
  }

  Node expr() {
    Node lhs = term();
    for (;;) {
      const char c = peek();
      if (c != '+' && c != '-') return lhs;
      const std::size_t at = pos_++;
      Node rhs = term();
      lhs = make(c == '+' ? ExprAst::Kind::Add : ExprAst::Kind::Sub, at, {lhs, rhs});
    }
  }

  Node term() {
    Node lhs = unary();
    for (;;) {
      const char c = peek();
      const std::size_t at = pos_;
      if (c == '*') {
        ++pos_;
      } else if (c == '/') {
        fail({"'*'", "'+'", "'-'", "end of input"});
      } else if (!starts_base(c)) {
        return lhs;
      }
      Node rhs = unary();
      lhs = make(ExprAst::Kind::Mul, at, {lhs, rhs});
    }
  }

  Node unary() {
    const char c = peek();
    if (c == '-' || c == '+') {
      const std::size_t at = pos_++;
      Node inner = unary();
      return c == '-' ? make(ExprAst::Kind::Neg, at, {inner}) : inner;
    }
    return factor();
  }

  Node factor() {
    Node b = base();
    if (peek() != '^') return b;
    const std::size_t at = pos_++;
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) fail({"natural exponent"});
    const std::string digits(src_.substr(start, pos_ - start));
    if (digits.size() > 6) {
      pos_ = start;
      fail({"exponent below 1000000"});
    }
    auto n = std::make_shared<ExprAst>();
    n->kind = ExprAst::Kind::Pow;
    n->offset = at;
    n->exponent = static_cast<unsigned>(std::stoul(digits));
    n->children = {b};
    return n;
  }

  Node base() {
    const char c = peek();
    const std::size_t at = pos_;
    if (c == 'x' || c == 'y' || c == 'z') {
      ++pos_;
      auto n = std::make_shared<ExprAst>();
      n->kind = ExprAst::Kind::Variable;
      n->offset = at;
      n->variable = static_cast<std::size_t>(c - 'x');
      return n;
    }
    if (c == '(') {
      ++pos_;
      Node inner = expr();
      if (peek() != ')') fail({"')'"});
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return literal();
    fail({"number", "'x'", "'y'", "'z'", "'('"});
  }

  std::size_t digits() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    return pos_ - start;
  }

  Node literal() {
    const std::size_t start = pos_;
    std::size_t n = digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      n += digits();
      if (n == 0) fail({"digit"});
    } else if (pos_ < src_.size() && src_[pos_] == '/') {
      ++pos_;
      if (digits() == 0) fail({"denominator digits"});
    }
    const std::string text(src_.substr(start, pos_ - start));
    auto node = std::make_shared<ExprAst>();
    node->kind = ExprAst::Kind::Literal;
    node->offset = start;
    try {
      node->value = parse_rational(text);
    } catch (const std::exception&) {
      pos_ = start;
      fail({"nonzero denominator"});
    }
    return node;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

TrivarPoly power(const TrivarPoly& p, unsigned n) {
  TrivarPoly result = TrivarPoly::constant(1);
  TrivarPoly base = p;
  while (n) {
    if (n & 1u) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

}  // namespace

ExprAst parse_expr(std::string_view src) { return Parser(src).run(); }

TrivarPoly lower(const ExprAst& ast) {
  using K = ExprAst::Kind;
  switch (ast.kind) {
    case K::Literal:
      return TrivarPoly::constant(ast.value);
    case K::Variable:
      return TrivarPoly::variable(ast.variable);
    case K::Neg:
      return -lower(*ast.children[0]);
    case K::Add:
      return lower(*ast.children[0]) + lower(*ast.children[1]);
    case K::Sub:
      return lower(*ast.children[0]) - lower(*ast.children[1]);
    case K::Mul:
      return lower(*ast.children[0]) * lower(*ast.children[1]);
    case K::Pow:
      return power(lower(*ast.children[0]), ast.exponent);
  }
  throw Error(ErrorCode::InternalInvariant, "unknown expression node");
}

TrivarPoly parse_polynomial(std::string_view src) { return lower(parse_expr(src)); }

BivarPoly parse_plane_polynomial(std::string_view src) {
  const TrivarPoly p = parse_polynomial(src);
  if (p.depends_on(kZ))
    throw Error(ErrorCode::InvalidArgument, "plane polynomial may not involve z");
  return narrow<2>(p);
}

RationalJet parse_germ(std::string_view src, std::size_t order) {
  const TrivarPoly p = parse_polynomial(src);
  if (p.depends_on(kZ)) throw Error(ErrorCode::InvalidArgument, "germ may not involve z");
  if (p.depends_on(kX) && p.depends_on(kY))
    throw Error(ErrorCode::InvalidArgument, "germ must be univariate in x or y");
  return *to_jet(p, p.depends_on(kX) ? kX : kY, order);
}

}  // namespace liouville
