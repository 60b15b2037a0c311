#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "cosdyn/errors.hpp"

namespace cosdyn::expr {

/// One-variable expression AST. Grammar, loosest to tightest binding:
///
///   expr   := 'if' var '>=' number 'then' expr 'else' expr | sum
///   sum    := term (('+' | '-') term)*
///   term   := factor (('*' | '/') factor)*
///   factor := '-' factor | power
///   power  := atom ('^' factor)?
///   atom   := number | var | ('abs'|'ln'|'exp') '(' expr ')' | '(' expr ')'
///
/// The variable is spelled `x` or `i`. '^' is right associative and binds
/// tighter than unary minus. Whitespace is insignificant.
struct Node;
using NodePtr = std::shared_ptr<const Node>;

enum class UnaryOp { negate, abs, ln, exp };
enum class BinaryOp { add, sub, mul, div, pow };

struct Node {
    enum class Kind { number, variable, unary, binary, conditional } kind;
    double number = 0.0;        // kind == number
    UnaryOp unary{};            // kind == unary
    BinaryOp binary{};          // kind == binary
    double threshold = 0.0;     // kind == conditional: var >= threshold ? a : b
    NodePtr a, b;
};

NodePtr make_number(double v);
NodePtr make_variable();
NodePtr make_unary(UnaryOp op, NodePtr a);
NodePtr make_binary(BinaryOp op, NodePtr a, NodePtr b);
NodePtr make_conditional(double threshold, NodePtr then_branch, NodePtr else_branch);

/// Parses the source or throws ParseError with a byte position and the
/// expected-token description.
NodePtr parse(std::string_view src);

/// Evaluates at x. Division by zero and ln of a nonpositive value throw
/// EvalError; NaN from any other operation does too.
double eval(const Node& node, double x);

/// Canonical fully parenthesized rendering; parse(to_string(e)) == e.
std::string to_string(const Node& node);

/// Structural equality (exact double comparison on literals).
bool equal(const Node& lhs, const Node& rhs);

/// True when the expression never reads the variable.
bool is_constant(const Node& node);

}  // namespace cosdyn::expr
