#pragma once

// Implicit-function expressions in x, y (and z): numbers, + - * / ^, unary
// minus, parentheses, and sqrt abs min max sin cos. Parsed into a tree, then
// compiled to a flat stack program for evaluation.

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace shadow {

enum class NodeKind { constant, variable, negate, add, sub, mul, div, pow, call };
enum class Function { sqrt, abs, min, max, sin, cos };

struct ExprNode {
  NodeKind kind = NodeKind::constant;
  double value = 0.0;          // constant
  int variable = 0;            // 0 = x, 1 = y, 2 = z
  Function function = Function::sqrt;
  std::vector<std::unique_ptr<ExprNode>> children;
};

class Expression {
 public:
  /// Parses `text` for a `dim`-dimensional domain (z is rejected when
  /// dim == 2). Throws ParseError with the failing position.
  static Expression parse(std::string_view text, int dim);

  Expression(const Expression& other);
  Expression& operator=(const Expression& other);
  Expression(Expression&&) noexcept = default;
  Expression& operator=(Expression&&) noexcept = default;
  ~Expression();

  int dim() const noexcept { return dim_; }
  const ExprNode& root() const noexcept { return *root_; }
  const std::string& source() const noexcept { return source_; }

  /// Evaluates at a point with exactly dim() coordinates (dimension_mismatch
  /// otherwise). Throws evaluation_error on division by zero, the square
  /// root of a negative number, or any non-finite result.
  double operator()(std::span<const double> p) const;
  /// Tree-walking evaluation; same semantics, used as a cross-check.
  double evaluate_tree(std::span<const double> p) const;

  /// Fully parenthesized text that parses back to an equivalent tree.
  std::string to_string() const;

 private:
  Expression() = default;
  void compile();

  struct Instr {
    NodeKind kind;
    double value;
    int variable;
    Function function;
    int argc;
  };

  std::unique_ptr<ExprNode> root_;
  std::vector<Instr> program_;
  std::size_t max_stack_ = 0;
  int dim_ = 2;
  std::string source_;
};

/// Convenience for the domain module; see Expression::parse.
Expression parse_implicit(std::string_view text, int dim);

}  // namespace shadow
