#include <cmath>
#include <sstream>

#include "hybridlang/symcas/expr.hpp"
#include "hybridlang/util/number_format.hpp"

namespace hybridlang::symcas {

namespace {

std::shared_ptr<const Node> make(Node n) { return std::make_shared<const Node>(std::move(n)); }

bool finite(double v) { return std::isfinite(v); }

}  // namespace

Expr Expr::num(double v) {
  Node n;
  n.kind = NodeKind::Num;
  n.value = v;
  return Expr(make(std::move(n)));
}

Expr Expr::sym(std::string name) {
  Node n;
  n.kind = NodeKind::Sym;
  n.name = std::move(name);
  return Expr(make(std::move(n)));
}

Expr operator+(const Expr& a, const Expr& b) {
  if (a.is_num() && b.is_num()) {
    double v = a.num_value() + b.num_value();
    if (finite(v)) return Expr::num(v);
  }
  if (a.is_num(0.0)) return b;
  if (b.is_num(0.0)) return a;
  // collapse (c1 + x) + c2 and c1 + (c2 + x)
  if (a.is_num() && b.kind() == NodeKind::Add && b.left().is_num())
    return Expr::num(a.num_value() + b.left().num_value()) + b.right();
  if (b.is_num() && a.kind() == NodeKind::Add && a.left().is_num())
    return Expr::num(b.num_value() + a.left().num_value()) + a.right();
  // keep constants on the left
  if (b.is_num() && !a.is_num()) return b + a;
  Node n;
  n.kind = NodeKind::Add;
  n.a = a.ptr();
  n.b = b.ptr();
  return Expr(make(std::move(n)));
}

Expr operator-(const Expr& a, const Expr& b) {
  if (a.is_num() && b.is_num()) {
    double v = a.num_value() - b.num_value();
    if (finite(v)) return Expr::num(v);
  }
  if (b.is_num(0.0)) return a;
  if (a.is_num(0.0)) return Expr::num(-1.0) * b;
  Node n;
  n.kind = NodeKind::Sub;
  n.a = a.ptr();
  n.b = b.ptr();
  return Expr(make(std::move(n)));
}

Expr operator*(const Expr& a, const Expr& b) {
  if (a.is_num() && b.is_num()) {
    double v = a.num_value() * b.num_value();
    if (finite(v)) return Expr::num(v);
  }
  if (a.is_num(0.0) || b.is_num(0.0)) return Expr::num(0.0);
  if (a.is_num(1.0)) return b;
  if (b.is_num(1.0)) return a;
  // collapse nested constant factors: c1 * (c2 * x) -> (c1*c2) * x
  if (a.is_num() && b.kind() == NodeKind::Mul && b.left().is_num())
    return Expr::num(a.num_value() * b.left().num_value()) * b.right();
  if (b.is_num() && a.kind() == NodeKind::Mul && a.left().is_num())
    return Expr::num(b.num_value() * a.left().num_value()) * a.right();
  if (b.is_num() && !a.is_num()) return b * a;
  Node n;
  n.kind = NodeKind::Mul;
  n.a = a.ptr();
  n.b = b.ptr();
  return Expr(make(std::move(n)));
}

Expr operator/(const Expr& a, const Expr& b) {
  if (b.is_num(0.0)) throw MathError("division by the constant 0 in a symbolic expression");
  if (a.is_num() && b.is_num()) {
    double v = a.num_value() / b.num_value();
    if (finite(v)) return Expr::num(v);
  }
  if (a.is_num(0.0)) return Expr::num(0.0);
  if (b.is_num(1.0)) return a;
  Node n;
  n.kind = NodeKind::Div;
  n.a = a.ptr();
  n.b = b.ptr();
  return Expr(make(std::move(n)));
}

Expr operator-(const Expr& a) { return Expr::num(0.0) - a; }

Expr pow(const Expr& base, double exponent) {
  if (exponent == 0.0) return Expr::num(1.0);
  if (exponent == 1.0) return base;
  if (base.is_num()) {
    double v = std::pow(base.num_value(), exponent);
    if (finite(v)) return Expr::num(v);
  }
  Node n;
  n.kind = NodeKind::Pow;
  n.value = exponent;
  n.a = base.ptr();
  return Expr(make(std::move(n)));
}

Expr fun(FunKind kind, const Expr& arg) {
  if (arg.is_num()) {
    double x = arg.num_value();
    double v = 0.0;
    switch (kind) {
      case FunKind::Sin: v = std::sin(x); break;
      case FunKind::Cos: v = std::cos(x); break;
      case FunKind::Tan: v = std::tan(x); break;
      case FunKind::Sqrt: v = std::sqrt(x); break;
      case FunKind::Asin: v = std::asin(x); break;
    }
    if (finite(v)) return Expr::num(v);
  }
  Node n;
  n.kind = NodeKind::Fun;
  n.fun = kind;
  n.a = arg.ptr();
  return Expr(make(std::move(n)));
}

Expr sin(const Expr& a) { return fun(FunKind::Sin, a); }
Expr cos(const Expr& a) { return fun(FunKind::Cos, a); }
Expr tan(const Expr& a) { return fun(FunKind::Tan, a); }
Expr sqrt(const Expr& a) { return fun(FunKind::Sqrt, a); }
Expr asin(const Expr& a) { return fun(FunKind::Asin, a); }

Expr simplify(const Expr& e) {
  switch (e.kind()) {
    case NodeKind::Num:
    case NodeKind::Sym:
      return e;
    case NodeKind::Add: return simplify(e.left()) + simplify(e.right());
    case NodeKind::Sub: return simplify(e.left()) - simplify(e.right());
    case NodeKind::Mul: return simplify(e.left()) * simplify(e.right());
    case NodeKind::Div: return simplify(e.left()) / simplify(e.right());
    case NodeKind::Pow: return pow(simplify(e.left()), e.exponent());
    case NodeKind::Fun: return fun(e.fun(), simplify(e.left()));
  }
  return e;
}

double evaluate(const Expr& e, const std::map<std::string, double>& bindings) {
  switch (e.kind()) {
    case NodeKind::Num:
      return e.num_value();
    case NodeKind::Sym: {
      auto it = bindings.find(e.sym_name());
      if (it == bindings.end()) throw UnboundSymbol(e.sym_name());
      return it->second;
    }
    case NodeKind::Add: return evaluate(e.left(), bindings) + evaluate(e.right(), bindings);
    case NodeKind::Sub: return evaluate(e.left(), bindings) - evaluate(e.right(), bindings);
    case NodeKind::Mul: return evaluate(e.left(), bindings) * evaluate(e.right(), bindings);
    case NodeKind::Div: {
      double d = evaluate(e.right(), bindings);
      if (d == 0.0) throw MathError("division by zero");
      return evaluate(e.left(), bindings) / d;
    }
    case NodeKind::Pow: {
      double v = std::pow(evaluate(e.left(), bindings), e.exponent());
      if (!std::isfinite(v)) throw MathError("invalid power");
      return v;
    }
    case NodeKind::Fun: {
      double x = evaluate(e.left(), bindings);
      switch (e.fun()) {
        case FunKind::Sin: return std::sin(x);
        case FunKind::Cos: return std::cos(x);
        case FunKind::Tan: return std::tan(x);
        case FunKind::Sqrt:
          if (x < 0.0) throw MathError("sqrt of negative value");
          return std::sqrt(x);
        case FunKind::Asin:
          if (x < -1.0 || x > 1.0) throw MathError("asin out of domain");
          return std::asin(x);
      }
    }
  }
  throw MathError("unreachable expression node");
}

bool identical(const Expr& a, const Expr& b) {
  if (a.ptr() == b.ptr()) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case NodeKind::Num: return a.num_value() == b.num_value();
    case NodeKind::Sym: return a.sym_name() == b.sym_name();
    case NodeKind::Pow:
      return a.exponent() == b.exponent() && identical(a.left(), b.left());
    case NodeKind::Fun: return a.fun() == b.fun() && identical(a.left(), b.left());
    default:
      return identical(a.left(), b.left()) && identical(a.right(), b.right());
  }
}

void free_symbols(const Expr& e, std::set<std::string>& out) {
  switch (e.kind()) {
    case NodeKind::Num: return;
    case NodeKind::Sym:
      out.insert(e.sym_name());
      return;
    case NodeKind::Pow:
    case NodeKind::Fun:
      free_symbols(e.left(), out);
      return;
    default:
      free_symbols(e.left(), out);
      free_symbols(e.right(), out);
  }
}

std::set<std::string> free_symbols(const Expr& e) {
  std::set<std::string> out;
  free_symbols(e, out);
  return out;
}

namespace {

// precedence: add/sub 4, mul/div 5, unary 6, pow 7, atoms 8
int prec(const Expr& e) {
  switch (e.kind()) {
    case NodeKind::Add:
    case NodeKind::Sub: return 4;
    case NodeKind::Mul:
    case NodeKind::Div: return 5;
    case NodeKind::Pow: return 7;
    case NodeKind::Num: return e.num_value() < 0 ? 6 : 8;
    default: return 8;
  }
}

void print(std::ostream& os, const Expr& e);

void child(std::ostream& os, const Expr& e, int min_prec) {
  if (prec(e) < min_prec) {
    os << '(';
    print(os, e);
    os << ')';
  } else {
    print(os, e);
  }
}

void print(std::ostream& os, const Expr& e) {
  switch (e.kind()) {
    case NodeKind::Num:
      os << util::format_double(e.num_value());
      break;
    case NodeKind::Sym:
      os << e.sym_name();
      break;
    case NodeKind::Add:
      child(os, e.left(), 4);
      os << '+';
      child(os, e.right(), 5);
      break;
    case NodeKind::Sub:
      child(os, e.left(), 4);
      os << '-';
      child(os, e.right(), 5);
      break;
    case NodeKind::Mul:
      child(os, e.left(), 5);
      os << '*';
      child(os, e.right(), 6);
      break;
    case NodeKind::Div:
      child(os, e.left(), 5);
      os << '/';
      child(os, e.right(), 6);
      break;
    case NodeKind::Pow:
      child(os, e.left(), 8);
      os << '^';
      if (e.exponent() < 0) {
        os << '(' << util::format_double(e.exponent()) << ')';
      } else {
        os << util::format_double(e.exponent());
      }
      break;
    case NodeKind::Fun: {
      const char* name = "";
      switch (e.fun()) {
        case FunKind::Sin: name = "sin"; break;
        case FunKind::Cos: name = "cos"; break;
        case FunKind::Tan: name = "tan"; break;
        case FunKind::Sqrt: name = "sqrt"; break;
        case FunKind::Asin: name = "asin"; break;
      }
      os << name << '(';
      print(os, e.left());
      os << ')';
      break;
    }
  }
}

}  // namespace

std::string to_string(const Expr& e) {
  std::ostringstream os;
  print(os, e);
  return os.str();
}

}  // namespace hybridlang::symcas
