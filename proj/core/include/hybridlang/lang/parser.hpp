#pragma once

#include <string>
#include <vector>

#include "hybridlang/lang/ast.hpp"
#include "hybridlang/lang/token.hpp"

namespace hybridlang::lang {

// Parses a full source file and validates model-level invariants
// (unique class names, defined variables, create graph acyclic, ...).
// Throws LexError / ParseError / LoadError.
Model parse_model(const std::string& source);

// Expression sub-grammar entry points, shared with the CLI and the
// Lagrangian spec-file reader.
ExprPtr parse_expression(const std::string& source);
VarRef parse_var_path(const std::string& source);

// Load-time validation; fills Model::info. Exposed for tests.
void validate_model(Model& model);

}  // namespace hybridlang::lang
