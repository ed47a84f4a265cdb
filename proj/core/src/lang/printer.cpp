#include <sstream>

#include "hybridlang/lang/printer.hpp"
#include "hybridlang/util/number_format.hpp"

namespace hybridlang::lang {

namespace {

// Higher binds tighter; mirrors the parser's precedence ladder.
int precedence(const Expr& e) {
  if (const auto* b = std::get_if<Binary>(&e.node)) {
    switch (b->op) {
      case BinaryOp::Or: return 1;
      case BinaryOp::And: return 2;
      case BinaryOp::Lt:
      case BinaryOp::Gt:
      case BinaryOp::Le:
      case BinaryOp::Ge:
      case BinaryOp::Eq: return 3;
      case BinaryOp::Add:
      case BinaryOp::Sub: return 4;
      case BinaryOp::Mul:
      case BinaryOp::Div: return 5;
      case BinaryOp::Pow: return 7;
    }
  }
  if (std::holds_alternative<Unary>(e.node)) return 6;
  return 8;
}

const char* op_text(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add: return "+";
    case BinaryOp::Sub: return "-";
    case BinaryOp::Mul: return "*";
    case BinaryOp::Div: return "/";
    case BinaryOp::Pow: return "^";
    case BinaryOp::And: return "&&";
    case BinaryOp::Or: return "||";
    case BinaryOp::Lt: return "<";
    case BinaryOp::Gt: return ">";
    case BinaryOp::Le: return "<=";
    case BinaryOp::Ge: return ">=";
    case BinaryOp::Eq: return "==";
  }
  return "?";
}

const char* builtin_name(Builtin fn) {
  switch (fn) {
    case Builtin::Sin: return "sin";
    case Builtin::Cos: return "cos";
    case Builtin::Tan: return "tan";
    case Builtin::Asin: return "asin";
    case Builtin::Acos: return "acos";
    case Builtin::Sqrt: return "sqrt";
    case Builtin::Dot: return "dot";
    case Builtin::Cross: return "cross";
    case Builtin::Norm: return "norm";
  }
  return "?";
}

void print_expr_into(std::ostream& os, const Expr& e);

// Wraps the child in parentheses when its precedence is too weak for the slot.
void child(std::ostream& os, const Expr& e, int min_prec) {
  if (precedence(e) < min_prec) {
    os << '(';
    print_expr_into(os, e);
    os << ')';
  } else {
    print_expr_into(os, e);
  }
}

void print_expr_into(std::ostream& os, const Expr& e) {
  if (const auto* n = std::get_if<NumberLit>(&e.node)) {
    os << util::format_double(n->value);
  } else if (const auto* n = std::get_if<BoolLit>(&e.node)) {
    os << (n->value ? "true" : "false");
  } else if (const auto* n = std::get_if<StringLit>(&e.node)) {
    os << '"' << n->value << '"';
  } else if (const auto* n = std::get_if<VectorLit>(&e.node)) {
    os << '[';
    for (size_t i = 0; i < n->elements.size(); ++i) {
      if (i) os << ',';
      print_expr_into(os, *n->elements[i]);
    }
    os << ']';
  } else if (const auto* n = std::get_if<MatrixLit>(&e.node)) {
    os << '[';
    for (size_t r = 0; r < n->rows.size(); ++r) {
      if (r) os << ',';
      os << '[';
      for (size_t c = 0; c < n->rows[r].size(); ++c) {
        if (c) os << ',';
        print_expr_into(os, *n->rows[r][c]);
      }
      os << ']';
    }
    os << ']';
  } else if (const auto* n = std::get_if<VarRef>(&e.node)) {
    os << n->display();
  } else if (const auto* n = std::get_if<Unary>(&e.node)) {
    os << (n->op == UnaryOp::Neg ? "-" : "not ");
    child(os, *n->operand, 6);
  } else if (const auto* n = std::get_if<Binary>(&e.node)) {
    int prec = precedence(e);
    if (n->op == BinaryOp::Pow) {
      child(os, *n->lhs, 8);  // base must be atomic
      os << '^';
      child(os, *n->rhs, 6);  // exponent may carry a unary minus
    } else {
      child(os, *n->lhs, prec);
      os << op_text(n->op);
      child(os, *n->rhs, prec + 1);
    }
  } else if (const auto* n = std::get_if<Call>(&e.node)) {
    os << builtin_name(n->fn) << '(';
    for (size_t i = 0; i < n->args.size(); ++i) {
      if (i) os << ',';
      print_expr_into(os, *n->args[i]);
    }
    os << ')';
  }
}

void print_stmts(std::ostream& os, const std::vector<StmtPtr>& stmts, int indent);

void print_stmt_into(std::ostream& os, const Stmt& stmt, int indent) {
  std::string pad(static_cast<size_t>(indent) * 2, ' ');
  if (const auto* n = std::get_if<Continuous>(&stmt.node)) {
    os << pad << n->lhs.display() << " = ";
    print_expr_into(os, *n->rhs);
    os << ';';
  } else if (const auto* n = std::get_if<Discrete>(&stmt.node)) {
    os << pad << n->lhs.display() << " := ";
    print_expr_into(os, *n->rhs);
    os << ';';
  } else if (const auto* n = std::get_if<If>(&stmt.node)) {
    os << pad << "if ";
    print_expr_into(os, *n->cond);
    os << '\n';
    print_stmts(os, n->then_branch, indent + 1);
    if (!n->else_branch.empty()) {
      os << pad << "else\n";
      print_stmts(os, n->else_branch, indent + 1);
    }
    os << pad << "end";
  } else if (const auto* n = std::get_if<Switch>(&stmt.node)) {
    os << pad << "switch ";
    print_expr_into(os, *n->subject);
    os << '\n';
    for (const auto& c : n->cases) {
      os << pad << "case ";
      print_expr_into(os, *c.literal);
      os << '\n';
      print_stmts(os, c.body, indent + 1);
    }
    os << pad << "end";
  } else if (const auto* n = std::get_if<Create>(&stmt.node)) {
    os << pad << n->target << " := create " << n->class_name << " (";
    for (size_t i = 0; i < n->args.size(); ++i) {
      if (i) os << ',';
      print_expr_into(os, *n->args[i]);
    }
    os << ");";
  } else if (const auto* n = std::get_if<Terminate>(&stmt.node)) {
    os << pad << "terminate " << n->target << ';';
  }
}

void print_stmts(std::ostream& os, const std::vector<StmtPtr>& stmts, int indent) {
  for (const auto& stmt : stmts) {
    print_stmt_into(os, *stmt, indent);
    os << '\n';
  }
}

}  // namespace

std::string print_expr(const Expr& expr) {
  std::ostringstream os;
  print_expr_into(os, expr);
  return os.str();
}

std::string print_stmt(const Stmt& stmt, int indent) {
  std::ostringstream os;
  print_stmt_into(os, stmt, indent);
  return os.str();
}

std::string print_class(const ClassDef& cls) {
  std::ostringstream os;
  os << "class " << cls.name << " (";
  for (size_t i = 0; i < cls.params.size(); ++i) {
    if (i) os << ", ";
    os << cls.params[i];
  }
  os << ")\nprivate\n";
  print_stmts(os, cls.private_inits, 1);
  os << "end\n";
  print_stmts(os, cls.body, 1);
  os << "end\n";
  return os.str();
}

std::string print_model(const Model& model) {
  std::string out;
  for (size_t i = 0; i < model.classes.size(); ++i) {
    if (i) out += '\n';
    out += print_class(model.classes[i]);
  }
  return out;
}

}  // namespace hybridlang::lang
