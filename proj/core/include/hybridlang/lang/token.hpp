#pragma once

#include <string>
#include <vector>

#include "hybridlang/errors.hpp"

namespace hybridlang::lang {

enum class TokenKind {
  Ident,      // identifier, possibly with a trailing derivative-quote count
  Number,
  String,
  KwClass,
  KwPrivate,
  KwEnd,
  KwIf,
  KwElse,
  KwSwitch,
  KwCase,
  KwCreate,
  KwTerminate,
  KwTrue,
  KwFalse,
  KwNot,
  Assign,     // :=
  Equals,     // =
  EqEq,       // ==
  Le,
  Ge,
  Lt,
  Gt,
  Plus,
  Minus,
  Star,
  Slash,
  Caret,
  AndAnd,
  OrOr,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Semi,
  Dot,
  Eof,
};

struct Token {
  TokenKind kind = TokenKind::Eof;
  std::string text;       // identifier name (without quotes) or string contents
  double number = 0.0;
  int deriv_order = 0;    // number of trailing quotes on an identifier
  SourcePos pos;
};

const char* token_kind_name(TokenKind kind);

// Splits source text into tokens. `//` comments and whitespace are skipped;
// trailing quotes fold into the identifier token as its derivative order.
std::vector<Token> tokenize(const std::string& source);

}  // namespace hybridlang::lang
