#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "liouville/jet.hpp"
#include "liouville/polynomial.hpp"

namespace liouville {

/// Syntax tree of a polynomial expression over x, y, z with rational literals.
struct ExprAst {
  enum class Kind { Literal, Variable, Neg, Add, Sub, Mul, Pow };

  Kind kind = Kind::Literal;
  Rational value;           ///< Literal
  std::size_t variable = 0; ///< Variable: 0 = x, 1 = y, 2 = z
  unsigned exponent = 0;    ///< Pow
  std::size_t offset = 0;   ///< Byte offset of the node in the source.
  std::vector<std::shared_ptr<const ExprAst>> children;
};

/// expr := term (('+'|'-') term)*
/// term := unary ('*'? unary)*
/// unary := '-' unary | '+' unary | factor
/// factor := base ('^' nat)?
/// base := rational | 'x' | 'y' | 'z' | '(' expr ')'
/// Rational literals are "12", "3/4" or "0.25". Throws ParseError.
ExprAst parse_expr(std::string_view src);

TrivarPoly lower(const ExprAst& ast);

/// Parses into a polynomial in x, y, z.
TrivarPoly parse_polynomial(std::string_view src);
/// Parses a polynomial in x, y; z is rejected.
BivarPoly parse_plane_polynomial(std::string_view src);
/// Parses a univariate germ written in either x or y (not both).
RationalJet parse_germ(std::string_view src, std::size_t order);

}  // namespace liouville
