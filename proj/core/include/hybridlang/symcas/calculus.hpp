#pragma once

#include <map>
#include <string>

#include "hybridlang/symcas/expr.hpp"

namespace hybridlang::symcas {

// Static partial derivative; every symbol other than `s` is a constant.
Expr partial(const Expr& e, const std::string& s);

// Total time derivative: sum over symbols of partial(e, s) * flow(s).
// Symbols absent from `flow` are constants (their flow is 0).
Expr time_derivative(const Expr& e, const std::map<std::string, std::string>& flow);

Expr substitute(const Expr& e, const std::map<std::string, Expr>& bindings);

}  // namespace hybridlang::symcas
