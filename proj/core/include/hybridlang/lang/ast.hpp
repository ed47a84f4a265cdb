#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hybridlang/errors.hpp"

namespace hybridlang::lang {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct NumberLit {
  double value = 0.0;
};

struct BoolLit {
  bool value = false;
};

struct StringLit {
  std::string value;
};

struct VectorLit {
  std::vector<ExprPtr> elements;  // non-empty
};

struct MatrixLit {
  std::vector<std::vector<ExprPtr>> rows;  // non-empty, rectangular
};

// A possibly dotted variable reference; quotes attach to the last segment.
struct VarRef {
  std::vector<std::string> path;
  int deriv_order = 0;

  std::string display() const;
};

enum class UnaryOp { Neg, Not };

enum class BinaryOp { Add, Sub, Mul, Div, Pow, And, Or, Lt, Gt, Le, Ge, Eq };

enum class Builtin { Sin, Cos, Tan, Asin, Acos, Sqrt, Dot, Cross, Norm };

struct Unary {
  UnaryOp op;
  ExprPtr operand;
};

struct Binary {
  BinaryOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};

struct Call {
  Builtin fn;
  std::vector<ExprPtr> args;
};

struct Expr {
  std::variant<NumberLit, BoolLit, StringLit, VectorLit, MatrixLit, VarRef, Unary, Binary, Call> node;
  SourcePos pos;
};

ExprPtr make_expr(Expr e);

struct Stmt;
using StmtPtr = std::shared_ptr<const Stmt>;

struct Continuous {
  VarRef lhs;
  ExprPtr rhs;
};

struct Discrete {
  VarRef lhs;
  ExprPtr rhs;
};

struct If {
  ExprPtr cond;
  std::vector<StmtPtr> then_branch;
  std::vector<StmtPtr> else_branch;
};

struct SwitchCase {
  ExprPtr literal;
  std::vector<StmtPtr> body;
};

struct Switch {
  ExprPtr subject;
  std::vector<SwitchCase> cases;
};

// Only valid inside a private section.
struct Create {
  std::string target;
  std::string class_name;
  std::vector<ExprPtr> args;
};

// Parses everywhere, rejected when executed.
struct Terminate {
  std::string target;
};

struct Stmt {
  std::variant<Continuous, Discrete, If, Switch, Create, Terminate> node;
  SourcePos pos;
};

StmtPtr make_stmt(Stmt s);

struct ClassDef {
  std::string name;
  std::vector<std::string> params;
  std::vector<StmtPtr> private_inits;  // Discrete or Create only
  std::vector<StmtPtr> body;
  SourcePos pos;
};

// Per-class facts computed at load time.
struct ClassInfo {
  std::map<std::string, int> highest_cont_order;   // name -> max continuously assigned order
  std::map<std::string, std::string> child_class;  // create target -> class name
};

struct Model {
  std::vector<ClassDef> classes;
  std::map<std::string, ClassInfo> info;  // keyed by class name

  const ClassDef* find(const std::string& name) const;
  const ClassInfo& info_for(const std::string& name) const;
};

// Structural equality (positions ignored).
bool equal(const Expr& a, const Expr& b);
bool equal(const Stmt& a, const Stmt& b);
bool equal(const ClassDef& a, const ClassDef& b);
bool equal(const Model& a, const Model& b);

}  // namespace hybridlang::lang
