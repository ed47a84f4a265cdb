#pragma once

#include <string>

#include "hybridlang/lang/ast.hpp"

namespace hybridlang::lang {

// Source text that reparses to a structurally identical AST.
std::string print_model(const Model& model);
std::string print_class(const ClassDef& cls);
std::string print_expr(const Expr& expr);
std::string print_stmt(const Stmt& stmt, int indent = 0);

}  // namespace hybridlang::lang
