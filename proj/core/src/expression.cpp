#include "shadow/expression.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "shadow/error.hpp"

namespace shadow {

namespace {

using NodePtr = std::unique_ptr<ExprNode>;

NodePtr make_node(NodeKind kind) {
  auto n = std::make_unique<ExprNode>();
  n->kind = kind;
  return n;
}

NodePtr clone(const ExprNode& n) {
  auto c = std::make_unique<ExprNode>();
  c->kind = n.kind;
  c->value = n.value;
  c->variable = n.variable;
  c->function = n.function;
  for (const auto& ch : n.children) c->children.push_back(clone(*ch));
  return c;
}

struct FunctionInfo {
  std::string_view name;
  Function fn;
  int min_args;
  int max_args;
};

constexpr std::array<FunctionInfo, 6> kFunctions{{
    {"sqrt", Function::sqrt, 1, 1},
    {"abs", Function::abs, 1, 1},
    {"min", Function::min, 2, 64},
    {"max", Function::max, 2, 64},
    {"sin", Function::sin, 1, 1},
    {"cos", Function::cos, 1, 1},
}};

const FunctionInfo* find_function(std::string_view name) {
  for (const auto& f : kFunctions)
    if (f.name == name) return &f;
  return nullptr;
}

std::string_view function_name(Function fn) {
  for (const auto& f : kFunctions)
    if (f.fn == fn) return f.name;
  return "?";
}

// Recursive-descent parser. Precedence, loosest first:
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/') unary)*
//   unary := '-' unary | power
//   power := primary ('^' unary)?        (right associative)
class Parser {
 public:
  Parser(std::string_view text, int dim) : text_(text), dim_(dim) {}

  NodePtr parse() {
    NodePtr e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, Errc code = Errc::parse_error) const {
    throw ParseError(code, pos_, msg);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  NodePtr binary(NodeKind kind, NodePtr lhs, NodePtr rhs) {
    auto n = make_node(kind);
    n->children.push_back(std::move(lhs));
    n->children.push_back(std::move(rhs));
    return n;
  }

  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = binary(NodeKind::add, std::move(lhs), term());
      } else if (accept('-')) {
        lhs = binary(NodeKind::sub, std::move(lhs), term());
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    for (;;) {
      if (accept('*')) {
        lhs = binary(NodeKind::mul, std::move(lhs), unary());
      } else if (accept('/')) {
        lhs = binary(NodeKind::div, std::move(lhs), unary());
      } else {
        return lhs;
      }
    }
  }

  NodePtr unary() {
    if (accept('-')) {
      auto n = make_node(NodeKind::negate);
      n->children.push_back(unary());
      return n;
    }
    if (accept('+')) return unary();
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (accept('^')) return binary(NodeKind::pow, std::move(base), unary());
    return base;
  }

  NodePtr primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  NodePtr number() {
    const std::string rest(text_.substr(pos_));
    char* end = nullptr;
    const double v = std::strtod(rest.c_str(), &end);
    if (end == rest.c_str()) fail("malformed number");
    pos_ += static_cast<std::size_t>(end - rest.c_str());
    auto n = make_node(NodeKind::constant);
    n->value = v;
    return n;
  }

  NodePtr identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    const std::string_view name = text_.substr(start, pos_ - start);
    if (const FunctionInfo* f = find_function(name)) {
      if (!accept('(')) fail("expected '(' after " + std::string(name));
      auto n = make_node(NodeKind::call);
      n->function = f->fn;
      n->children.push_back(expr());
      while (accept(',')) n->children.push_back(expr());
      expect(')');
      const int argc = static_cast<int>(n->children.size());
      if (argc < f->min_args || argc > f->max_args) {
        pos_ = start;
        fail("wrong number of arguments to " + std::string(name));
      }
      return n;
    }
    if (name == "pi") {
      auto n = make_node(NodeKind::constant);
      n->value = 3.14159265358979323846;
      return n;
    }
    int var = -1;
    if (name == "x") var = 0;
    if (name == "y") var = 1;
    if (name == "z" && dim_ == 3) var = 2;
    if (var < 0) {
      pos_ = start;
      fail("unknown identifier '" + std::string(name) + "'", Errc::unknown_identifier);
    }
    auto n = make_node(NodeKind::variable);
    n->variable = var;
    return n;
  }

  std::string_view text_;
  int dim_;
  std::size_t pos_ = 0;
};

[[noreturn]] void eval_fail(const char* what) { throw Error(Errc::evaluation_error, what); }

double checked(double v) {
  if (!std::isfinite(v)) eval_fail("expression evaluated to a non-finite value");
  return v;
}

double apply_binary(NodeKind kind, double a, double b) {
  switch (kind) {
    case NodeKind::add: return a + b;
    case NodeKind::sub: return a - b;
    case NodeKind::mul: return a * b;
    case NodeKind::div:
      if (b == 0.0) eval_fail("division by zero");
      return a / b;
    case NodeKind::pow: return std::pow(a, b);
    default: return 0.0;
  }
}

double apply_call(Function fn, std::span<const double> args) {
  switch (fn) {
    case Function::sqrt:
      if (args[0] < 0.0) eval_fail("square root of a negative number");
      return std::sqrt(args[0]);
    case Function::abs: return std::abs(args[0]);
    case Function::sin: return std::sin(args[0]);
    case Function::cos: return std::cos(args[0]);
    case Function::min: {
      double m = args[0];
      for (double a : args.subspan(1)) m = std::min(m, a);
      return m;
    }
    case Function::max: {
      double m = args[0];
      for (double a : args.subspan(1)) m = std::max(m, a);
      return m;
    }
  }
  return 0.0;
}

double eval_node(const ExprNode& n, std::span<const double> p) {
  switch (n.kind) {
    case NodeKind::constant: return n.value;
    case NodeKind::variable: return p[static_cast<std::size_t>(n.variable)];
    case NodeKind::negate: return -eval_node(*n.children[0], p);
    case NodeKind::call: {
      std::vector<double> args;
      args.reserve(n.children.size());
      for (const auto& c : n.children) args.push_back(eval_node(*c, p));
      return checked(apply_call(n.function, args));
    }
    default:
      return checked(
          apply_binary(n.kind, eval_node(*n.children[0], p), eval_node(*n.children[1], p)));
  }
}

void print_node(const ExprNode& n, std::ostringstream& os) {
  switch (n.kind) {
    case NodeKind::constant:
      // Parenthesized so negative literals survive re-parsing under '^'.
      os << '(' << n.value << ')';
      return;
    case NodeKind::variable: os << "xyz"[n.variable]; return;
    case NodeKind::negate:
      os << "(-";
      print_node(*n.children[0], os);
      os << ')';
      return;
    case NodeKind::call:
      os << function_name(n.function) << '(';
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        if (i) os << ", ";
        print_node(*n.children[i], os);
      }
      os << ')';
      return;
    default: {
      static constexpr std::string_view ops = "+-*/^";
      const auto idx = static_cast<std::size_t>(n.kind) - static_cast<std::size_t>(NodeKind::add);
      os << '(';
      print_node(*n.children[0], os);
      os << ' ' << ops[idx] << ' ';
      print_node(*n.children[1], os);
      os << ')';
    }
  }
}

}  // namespace

Expression Expression::parse(std::string_view text, int dim) {
  if (dim != 2 && dim != 3) throw Error(Errc::invalid_argument, "dimension must be 2 or 3");
  Expression e;
  e.dim_ = dim;
  e.source_ = std::string(text);
  e.root_ = Parser(text, dim).parse();
  e.compile();
  return e;
}

Expression::Expression(const Expression& other)
    : root_(other.root_ ? clone(*other.root_) : nullptr),
      program_(other.program_),
      max_stack_(other.max_stack_),
      dim_(other.dim_),
      source_(other.source_) {}

Expression& Expression::operator=(const Expression& other) {
  if (this != &other) *this = Expression(other);
  return *this;
}

Expression::~Expression() = default;

void Expression::compile() {
  program_.clear();
  std::size_t depth = 0;
  max_stack_ = 0;
  auto emit = [&](auto&& self, const ExprNode& n) -> void {
    for (const auto& c : n.children) self(self, *c);
    program_.push_back(Instr{n.kind, n.value, n.variable, n.function,
                             static_cast<int>(n.children.size())});
    depth = depth - n.children.size() + 1;
    max_stack_ = std::max(max_stack_, depth);
  };
  emit(emit, *root_);
}

double Expression::operator()(std::span<const double> p) const {
  if (p.size() != static_cast<std::size_t>(dim_)) {
    throw Error(Errc::dimension_mismatch, "expression evaluated with the wrong number of coordinates");
  }
  constexpr std::size_t kStack = 64;
  if (max_stack_ > kStack) return evaluate_tree(p);
  std::array<double, kStack> stack;
  std::size_t top = 0;
  for (const Instr& in : program_) {
    switch (in.kind) {
      case NodeKind::constant: stack[top++] = in.value; break;
      case NodeKind::variable: stack[top++] = p[static_cast<std::size_t>(in.variable)]; break;
      case NodeKind::negate: stack[top - 1] = -stack[top - 1]; break;
      case NodeKind::call: {
        const auto argc = static_cast<std::size_t>(in.argc);
        top -= argc;
        stack[top] = checked(apply_call(in.function, {stack.data() + top, argc}));
        ++top;
        break;
      }
      default: {
        --top;
        stack[top - 1] = checked(apply_binary(in.kind, stack[top - 1], stack[top]));
      }
    }
  }
  return stack[0];
}

double Expression::evaluate_tree(std::span<const double> p) const {
  if (p.size() != static_cast<std::size_t>(dim_)) {
    throw Error(Errc::dimension_mismatch, "expression evaluated with the wrong number of coordinates");
  }
  return eval_node(*root_, p);
}

std::string Expression::to_string() const {
  std::ostringstream os;
  os.precision(17);
  print_node(*root_, os);
  return os.str();
}

Expression parse_implicit(std::string_view text, int dim) { return Expression::parse(text, dim); }

}  // namespace shadow
