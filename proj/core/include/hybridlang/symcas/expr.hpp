#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>

#include "hybridlang/errors.hpp"

namespace hybridlang::symcas {

enum class FunKind { Sin, Cos, Tan, Sqrt, Asin };

enum class NodeKind { Num, Sym, Add, Sub, Mul, Div, Pow, Fun };

struct Node {
  NodeKind kind;
  double value = 0.0;   // Num payload, or Pow exponent
  std::string name;     // Sym payload
  FunKind fun = FunKind::Sin;
  std::shared_ptr<const Node> a, b;
};

// Immutable symbolic scalar expression. Construction applies local
// simplification rules (constant folding, neutral/absorbing elements,
// nested constant collapse), so built trees stay reasonably small.
class Expr {
 public:
  Expr() : Expr(num(0.0)) {}

  static Expr num(double v);
  static Expr sym(std::string name);

  NodeKind kind() const { return node_->kind; }
  bool is_num() const { return node_->kind == NodeKind::Num; }
  bool is_num(double v) const { return is_num() && node_->value == v; }
  bool is_sym() const { return node_->kind == NodeKind::Sym; }
  double num_value() const { return node_->value; }
  const std::string& sym_name() const { return node_->name; }
  double exponent() const { return node_->value; }
  FunKind fun() const { return node_->fun; }
  Expr left() const { return Expr(node_->a); }
  Expr right() const { return Expr(node_->b); }
  const Node& node() const { return *node_; }
  const std::shared_ptr<const Node>& ptr() const { return node_; }

  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

 private:
  std::shared_ptr<const Node> node_;
};

Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);

inline Expr operator+(const Expr& a, double b) { return a + Expr::num(b); }
inline Expr operator+(double a, const Expr& b) { return Expr::num(a) + b; }
inline Expr operator-(const Expr& a, double b) { return a - Expr::num(b); }
inline Expr operator-(double a, const Expr& b) { return Expr::num(a) - b; }
inline Expr operator*(const Expr& a, double b) { return a * Expr::num(b); }
inline Expr operator*(double a, const Expr& b) { return Expr::num(a) * b; }
inline Expr operator/(const Expr& a, double b) { return a / Expr::num(b); }
inline Expr operator/(double a, const Expr& b) { return Expr::num(a) / b; }

Expr pow(const Expr& base, double exponent);
Expr fun(FunKind kind, const Expr& arg);
Expr sin(const Expr& a);
Expr cos(const Expr& a);
Expr tan(const Expr& a);
Expr sqrt(const Expr& a);
Expr asin(const Expr& a);

// Rebuilds bottom-up through the simplifying constructors (fixpoint of the
// local rule set); semantics-preserving at every point.
Expr simplify(const Expr& e);

// IEEE double evaluation; UnboundSymbol / MathError on failures.
double evaluate(const Expr& e, const std::map<std::string, double>& bindings);

// Structural equality.
bool identical(const Expr& a, const Expr& b);

void free_symbols(const Expr& e, std::set<std::string>& out);
std::set<std::string> free_symbols(const Expr& e);

// Rendered in the modeling-language expression grammar.
std::string to_string(const Expr& e);

}  // namespace hybridlang::symcas
