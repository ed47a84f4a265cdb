#include <cctype>
#include <cstdlib>

#include "hybridlang/lang/token.hpp"

namespace hybridlang::lang {

const char* token_kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::Ident: return "identifier";
    case TokenKind::Number: return "number";
    case TokenKind::String: return "string";
    case TokenKind::KwClass: return "'class'";
    case TokenKind::KwPrivate: return "'private'";
    case TokenKind::KwEnd: return "'end'";
    case TokenKind::KwIf: return "'if'";
    case TokenKind::KwElse: return "'else'";
    case TokenKind::KwSwitch: return "'switch'";
    case TokenKind::KwCase: return "'case'";
    case TokenKind::KwCreate: return "'create'";
    case TokenKind::KwTerminate: return "'terminate'";
    case TokenKind::KwTrue: return "'true'";
    case TokenKind::KwFalse: return "'false'";
    case TokenKind::KwNot: return "'not'";
    case TokenKind::Assign: return "':='";
    case TokenKind::Equals: return "'='";
    case TokenKind::EqEq: return "'=='";
    case TokenKind::Le: return "'<='";
    case TokenKind::Ge: return "'>='";
    case TokenKind::Lt: return "'<'";
    case TokenKind::Gt: return "'>'";
    case TokenKind::Plus: return "'+'";
    case TokenKind::Minus: return "'-'";
    case TokenKind::Star: return "'*'";
    case TokenKind::Slash: return "'/'";
    case TokenKind::Caret: return "'^'";
    case TokenKind::AndAnd: return "'&&'";
    case TokenKind::OrOr: return "'||'";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::LBracket: return "'['";
    case TokenKind::RBracket: return "']'";
    case TokenKind::Comma: return "','";
    case TokenKind::Semi: return "';'";
    case TokenKind::Dot: return "'.'";
    case TokenKind::Eof: return "end of input";
  }
  return "?";
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

struct Lexer {
  const std::string& src;
  size_t i = 0;
  int line = 1;
  int col = 1;

  char peek(size_t off = 0) const { return i + off < src.size() ? src[i + off] : '\0'; }
  bool done() const { return i >= src.size(); }

  char advance() {
    char c = src[i++];
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    return c;
  }

  void skip_trivia() {
    while (!done()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (!done() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  Token lex_number(SourcePos pos) {
    size_t start = i;
    while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
    if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      advance();
      while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
    }
    if ((peek() == 'e' || peek() == 'E') &&
        (std::isdigit(static_cast<unsigned char>(peek(1))) ||
         ((peek(1) == '+' || peek(1) == '-') && std::isdigit(static_cast<unsigned char>(peek(2)))))) {
      advance();
      if (peek() == '+' || peek() == '-') advance();
      while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
    }
    Token tok;
    tok.kind = TokenKind::Number;
    tok.number = std::strtod(src.substr(start, i - start).c_str(), nullptr);
    tok.pos = pos;
    return tok;
  }

  Token lex_ident(SourcePos pos) {
    size_t start = i;
    while (ident_char(peek())) advance();
    std::string name = src.substr(start, i - start);
    int quotes = 0;
    while (peek() == '\'') {
      advance();
      ++quotes;
    }

    Token tok;
    tok.pos = pos;
    if (quotes == 0) {
      if (name == "class") tok.kind = TokenKind::KwClass;
      else if (name == "private") tok.kind = TokenKind::KwPrivate;
      else if (name == "end") tok.kind = TokenKind::KwEnd;
      else if (name == "if") tok.kind = TokenKind::KwIf;
      else if (name == "else") tok.kind = TokenKind::KwElse;
      else if (name == "switch") tok.kind = TokenKind::KwSwitch;
      else if (name == "case") tok.kind = TokenKind::KwCase;
      else if (name == "create") tok.kind = TokenKind::KwCreate;
      else if (name == "terminate") tok.kind = TokenKind::KwTerminate;
      else if (name == "true" || name == "True") tok.kind = TokenKind::KwTrue;
      else if (name == "false" || name == "False") tok.kind = TokenKind::KwFalse;
      else if (name == "not") tok.kind = TokenKind::KwNot;
      else tok.kind = TokenKind::Ident;
      if (tok.kind == TokenKind::Ident) tok.text = std::move(name);
      return tok;
    }
    if (name == "class" || name == "end" || name == "if")
      throw LexError(pos, "derivative quotes on keyword '" + name + "'");
    tok.kind = TokenKind::Ident;
    tok.text = std::move(name);
    tok.deriv_order = quotes;
    return tok;
  }

  Token lex_string(SourcePos pos) {
    advance();  // opening quote
    size_t start = i;
    while (!done() && peek() != '"') {
      if (peek() == '\n') throw LexError(pos, "unterminated string literal");
      advance();
    }
    if (done()) throw LexError(pos, "unterminated string literal");
    std::string value = src.substr(start, i - start);
    advance();  // closing quote
    Token tok;
    tok.kind = TokenKind::String;
    tok.text = std::move(value);
    tok.pos = pos;
    return tok;
  }

  Token next() {
    skip_trivia();
    SourcePos pos{line, col};
    if (done()) return Token{TokenKind::Eof, "", 0.0, 0, pos};

    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return lex_number(pos);
    if (ident_start(c)) return lex_ident(pos);
    if (c == '"') return lex_string(pos);

    auto simple = [&](TokenKind kind, int len) {
      for (int k = 0; k < len; ++k) advance();
      return Token{kind, "", 0.0, 0, pos};
    };

    switch (c) {
      case ':':
        if (peek(1) == '=') return simple(TokenKind::Assign, 2);
        throw LexError(pos, "stray ':'");
      case '=':
        if (peek(1) == '=') return simple(TokenKind::EqEq, 2);
        return simple(TokenKind::Equals, 1);
      case '<':
        if (peek(1) == '=') return simple(TokenKind::Le, 2);
        return simple(TokenKind::Lt, 1);
      case '>':
        if (peek(1) == '=') return simple(TokenKind::Ge, 2);
        return simple(TokenKind::Gt, 1);
      case '&':
        if (peek(1) == '&') return simple(TokenKind::AndAnd, 2);
        throw LexError(pos, "stray '&'");
      case '|':
        if (peek(1) == '|') return simple(TokenKind::OrOr, 2);
        throw LexError(pos, "stray '|'");
      case '+': return simple(TokenKind::Plus, 1);
      case '-': return simple(TokenKind::Minus, 1);
      case '*': return simple(TokenKind::Star, 1);
      case '/': return simple(TokenKind::Slash, 1);
      case '^': return simple(TokenKind::Caret, 1);
      case '(': return simple(TokenKind::LParen, 1);
      case ')': return simple(TokenKind::RParen, 1);
      case '[': return simple(TokenKind::LBracket, 1);
      case ']': return simple(TokenKind::RBracket, 1);
      case ',': return simple(TokenKind::Comma, 1);
      case ';': return simple(TokenKind::Semi, 1);
      case '.': return simple(TokenKind::Dot, 1);
      default:
        throw LexError(pos, std::string("illegal character '") + c + "'");
    }
  }
};

}  // namespace

std::vector<Token> tokenize(const std::string& source) {
  Lexer lexer{source};
  std::vector<Token> tokens;
  for (;;) {
    Token tok = lexer.next();
    if (tok.kind == TokenKind::Eof) break;
    tokens.push_back(std::move(tok));
  }
  return tokens;
}

}  // namespace hybridlang::lang
