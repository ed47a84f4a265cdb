#include <algorithm>
#include <cassert>

#include "hybridlang/lang/parser.hpp"

namespace hybridlang::lang {

ExprPtr make_expr(Expr e) { return std::make_shared<const Expr>(std::move(e)); }
StmtPtr make_stmt(Stmt s) { return std::make_shared<const Stmt>(std::move(s)); }

std::string VarRef::display() const {
  std::string out;
  for (size_t i = 0; i < path.size(); ++i) {
    if (i) out += '.';
    out += path[i];
  }
  out.append(static_cast<size_t>(deriv_order), '\'');
  return out;
}

const ClassDef* Model::find(const std::string& name) const {
  for (const auto& cls : classes)
    if (cls.name == name) return &cls;
  return nullptr;
}

const ClassInfo& Model::info_for(const std::string& name) const {
  auto it = info.find(name);
  if (it == info.end()) throw UnknownClass(name);
  return it->second;
}

namespace {

// Statement-list terminators differ by context.
struct Terminators {
  bool end = false;
  bool else_ = false;
  bool case_ = false;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {
    if (!tokens_.empty()) eof_token_.pos = tokens_.back().pos;
  }

  Model parse_model() {
    Model model;
    while (!at(TokenKind::Eof)) {
      model.classes.push_back(parse_class());
    }
    return model;
  }

  ExprPtr parse_expression_only() {
    ExprPtr e = parse_expr();
    expect(TokenKind::Eof, "end of expression");
    return e;
  }

  VarRef parse_var_path_only() {
    VarRef ref = parse_varref_from(expect(TokenKind::Ident, "identifier"));
    expect(TokenKind::Eof, "end of path");
    return ref;
  }

 private:
  std::vector<Token> tokens_;
  size_t pos_ = 0;
  Token eof_token_{TokenKind::Eof, "", 0.0, 0, {1, 1}};

  const Token& peek(size_t off = 0) const {
    return pos_ + off < tokens_.size() ? tokens_[pos_ + off] : eof_token_;
  }
  bool at(TokenKind kind) const { return peek().kind == kind; }

  Token advance() {
    Token tok = peek();
    if (pos_ < tokens_.size()) ++pos_;
    return tok;
  }

  bool accept(TokenKind kind) {
    if (at(kind)) {
      advance();
      return true;
    }
    return false;
  }

  Token expect(TokenKind kind, const std::string& what) {
    if (!at(kind)) throw ParseError(peek().pos, what, token_kind_name(peek().kind));
    return advance();
  }

  [[noreturn]] void fail(const std::string& expected) {
    throw ParseError(peek().pos, expected, token_kind_name(peek().kind));
  }

  // --- classes ---------------------------------------------------------

  ClassDef parse_class() {
    ClassDef cls;
    cls.pos = peek().pos;
    expect(TokenKind::KwClass, "'class'");
    Token name = expect(TokenKind::Ident, "class name");
    if (name.deriv_order) throw ParseError(name.pos, "class name", "derivative identifier");
    cls.name = name.text;

    expect(TokenKind::LParen, "'('");
    if (!at(TokenKind::RParen)) {
      for (;;) {
        Token param = expect(TokenKind::Ident, "parameter name");
        if (param.deriv_order)
          throw ParseError(param.pos, "parameter name", "derivative identifier");
        cls.params.push_back(param.text);
        if (!accept(TokenKind::Comma)) break;
      }
    }
    expect(TokenKind::RParen, "')'");

    expect(TokenKind::KwPrivate, "'private'");
    cls.private_inits = parse_inits();
    expect(TokenKind::KwEnd, "'end'");

    cls.body = parse_stmts({.end = true});
    expect(TokenKind::KwEnd, "'end'");
    return cls;
  }

  std::vector<StmtPtr> parse_inits() {
    std::vector<StmtPtr> inits;
    while (!at(TokenKind::KwEnd) && !at(TokenKind::Eof)) {
      inits.push_back(parse_init());
      if (accept(TokenKind::Semi)) continue;
      break;  // missing ';' must mean the section is over
    }
    return inits;
  }

  StmtPtr parse_init() {
    SourcePos pos = peek().pos;
    Token name = expect(TokenKind::Ident, "variable name");
    if (at(TokenKind::Dot)) throw ParseError(peek().pos, "':='", "'.'");
    VarRef lhs{{name.text}, name.deriv_order};
    expect(TokenKind::Assign, "':='");
    if (at(TokenKind::KwCreate)) {
      if (lhs.deriv_order)
        throw ParseError(pos, "plain identifier before 'create'", "derivative identifier");
      advance();
      Token cls = expect(TokenKind::Ident, "class name");
      expect(TokenKind::LParen, "'('");
      std::vector<ExprPtr> args;
      if (!at(TokenKind::RParen)) {
        for (;;) {
          args.push_back(parse_expr());
          if (!accept(TokenKind::Comma)) break;
        }
      }
      expect(TokenKind::RParen, "')'");
      return make_stmt({Create{name.text, cls.text, std::move(args)}, pos});
    }
    ExprPtr rhs = parse_expr();
    return make_stmt({Discrete{std::move(lhs), std::move(rhs)}, pos});
  }

  // --- statements ---------------------------------------------------------

  bool at_terminator(const Terminators& term) const {
    if (at(TokenKind::Eof)) return true;
    if (term.end && at(TokenKind::KwEnd)) return true;
    if (term.else_ && at(TokenKind::KwElse)) return true;
    if (term.case_ && at(TokenKind::KwCase)) return true;
    return false;
  }

  std::vector<StmtPtr> parse_stmts(const Terminators& term) {
    std::vector<StmtPtr> stmts;
    while (!at_terminator(term)) {
      StmtPtr stmt = parse_stmt();
      bool block = std::holds_alternative<If>(stmt->node) ||
                   std::holds_alternative<Switch>(stmt->node);
      stmts.push_back(std::move(stmt));
      if (accept(TokenKind::Semi)) continue;
      if (at_terminator(term)) break;
      // The listings omit ';' after a block's 'end'; require it elsewhere.
      if (!block) fail("';'");
    }
    return stmts;
  }

  StmtPtr parse_stmt() {
    SourcePos pos = peek().pos;
    if (at(TokenKind::KwIf)) return parse_if();
    if (at(TokenKind::KwSwitch)) return parse_switch();
    if (at(TokenKind::KwTerminate)) {
      advance();
      Token target = expect(TokenKind::Ident, "object name");
      return make_stmt({Terminate{target.text}, pos});
    }
    if (at(TokenKind::KwCreate))
      throw ParseError(pos, "statement ('create' is only valid in a private section)", "'create'");

    Token head = expect(TokenKind::Ident, "statement");
    VarRef lhs = parse_varref_from(head);
    if (accept(TokenKind::Equals)) {
      return make_stmt({Continuous{std::move(lhs), parse_expr()}, pos});
    }
    if (accept(TokenKind::Assign)) {
      if (at(TokenKind::KwCreate))
        throw ParseError(peek().pos, "expression ('create' is only valid in a private section)",
                         "'create'");
      return make_stmt({Discrete{std::move(lhs), parse_expr()}, pos});
    }
    fail("'=' or ':='");
  }

  StmtPtr parse_if() {
    SourcePos pos = peek().pos;
    expect(TokenKind::KwIf, "'if'");
    ExprPtr cond = parse_expr();
    std::vector<StmtPtr> then_branch = parse_stmts({.end = true, .else_ = true});
    std::vector<StmtPtr> else_branch;
    if (accept(TokenKind::KwElse)) {
      else_branch = parse_stmts({.end = true});
    }
    expect(TokenKind::KwEnd, "'end'");
    return make_stmt({If{std::move(cond), std::move(then_branch), std::move(else_branch)}, pos});
  }

  StmtPtr parse_switch() {
    SourcePos pos = peek().pos;
    expect(TokenKind::KwSwitch, "'switch'");
    ExprPtr subject = parse_expr();
    Switch sw{std::move(subject), {}};
    while (at(TokenKind::KwCase)) {
      advance();
      ExprPtr literal = parse_case_literal();
      std::vector<StmtPtr> body = parse_stmts({.end = true, .case_ = true});
      sw.cases.push_back(SwitchCase{std::move(literal), std::move(body)});
    }
    expect(TokenKind::KwEnd, "'end'");
    return make_stmt({std::move(sw), pos});
  }

  ExprPtr parse_case_literal() {
    SourcePos pos = peek().pos;
    if (at(TokenKind::Number)) return make_expr({NumberLit{advance().number}, pos});
    if (at(TokenKind::Minus)) {
      advance();
      Token num = expect(TokenKind::Number, "number");
      return make_expr({NumberLit{-num.number}, pos});
    }
    if (at(TokenKind::String)) return make_expr({StringLit{advance().text}, pos});
    if (at(TokenKind::KwTrue)) return make_expr({BoolLit{(advance(), true)}, pos});
    if (at(TokenKind::KwFalse)) return make_expr({BoolLit{(advance(), false)}, pos});
    fail("case literal");
  }

  // --- expressions ---------------------------------------------------------
  // precedence: ^  >  unary -/not  >  * /  >  + -  >  comparisons  >  &&  >  ||

  ExprPtr parse_expr() { return parse_or(); }

  ExprPtr parse_or() {
    ExprPtr lhs = parse_and();
    while (at(TokenKind::OrOr)) {
      SourcePos pos = advance().pos;
      lhs = make_expr({Binary{BinaryOp::Or, std::move(lhs), parse_and()}, pos});
    }
    return lhs;
  }

  ExprPtr parse_and() {
    ExprPtr lhs = parse_cmp();
    while (at(TokenKind::AndAnd)) {
      SourcePos pos = advance().pos;
      lhs = make_expr({Binary{BinaryOp::And, std::move(lhs), parse_cmp()}, pos});
    }
    return lhs;
  }

  ExprPtr parse_cmp() {
    ExprPtr lhs = parse_addsub();
    for (;;) {
      BinaryOp op;
      if (at(TokenKind::Lt)) op = BinaryOp::Lt;
      else if (at(TokenKind::Gt)) op = BinaryOp::Gt;
      else if (at(TokenKind::Le)) op = BinaryOp::Le;
      else if (at(TokenKind::Ge)) op = BinaryOp::Ge;
      else if (at(TokenKind::EqEq)) op = BinaryOp::Eq;
      else break;
      SourcePos pos = advance().pos;
      lhs = make_expr({Binary{op, std::move(lhs), parse_addsub()}, pos});
    }
    return lhs;
  }

  ExprPtr parse_addsub() {
    ExprPtr lhs = parse_muldiv();
    for (;;) {
      BinaryOp op;
      if (at(TokenKind::Plus)) op = BinaryOp::Add;
      else if (at(TokenKind::Minus)) op = BinaryOp::Sub;
      else break;
      SourcePos pos = advance().pos;
      lhs = make_expr({Binary{op, std::move(lhs), parse_muldiv()}, pos});
    }
    return lhs;
  }

  ExprPtr parse_muldiv() {
    ExprPtr lhs = parse_unary();
    for (;;) {
      BinaryOp op;
      if (at(TokenKind::Star)) op = BinaryOp::Mul;
      else if (at(TokenKind::Slash)) op = BinaryOp::Div;
      else break;
      SourcePos pos = advance().pos;
      lhs = make_expr({Binary{op, std::move(lhs), parse_unary()}, pos});
    }
    return lhs;
  }

  ExprPtr parse_unary() {
    if (at(TokenKind::Minus)) {
      SourcePos pos = advance().pos;
      return make_expr({Unary{UnaryOp::Neg, parse_unary()}, pos});
    }
    if (at(TokenKind::KwNot)) {
      SourcePos pos = advance().pos;
      return make_expr({Unary{UnaryOp::Not, parse_unary()}, pos});
    }
    return parse_power();
  }

  ExprPtr parse_power() {
    ExprPtr base = parse_primary();
    if (at(TokenKind::Caret)) {
      SourcePos pos = advance().pos;
      // right-associative; the exponent may carry a unary minus
      return make_expr({Binary{BinaryOp::Pow, std::move(base), parse_unary()}, pos});
    }
    return base;
  }

  ExprPtr parse_primary() {
    SourcePos pos = peek().pos;
    if (at(TokenKind::Number)) return make_expr({NumberLit{advance().number}, pos});
    if (at(TokenKind::String)) return make_expr({StringLit{advance().text}, pos});
    if (at(TokenKind::KwTrue)) return make_expr({BoolLit{(advance(), true)}, pos});
    if (at(TokenKind::KwFalse)) return make_expr({BoolLit{(advance(), false)}, pos});
    if (accept(TokenKind::LParen)) {
      ExprPtr inner = parse_expr();
      expect(TokenKind::RParen, "')'");
      return inner;
    }
    if (at(TokenKind::LBracket)) return parse_bracket_literal();
    if (at(TokenKind::Ident)) {
      Token head = advance();
      if (at(TokenKind::LParen)) return parse_call(head);
      return make_expr({parse_varref_from(head), pos});
    }
    fail("expression");
  }

  ExprPtr parse_call(const Token& name) {
    static const std::pair<const char*, Builtin> table[] = {
        {"sin", Builtin::Sin},   {"cos", Builtin::Cos},     {"tan", Builtin::Tan},
        {"asin", Builtin::Asin}, {"acos", Builtin::Acos},   {"sqrt", Builtin::Sqrt},
        {"dot", Builtin::Dot},   {"cross", Builtin::Cross}, {"norm", Builtin::Norm},
    };
    const Builtin* fn = nullptr;
    for (const auto& [text, builtin] : table)
      if (name.text == text && name.deriv_order == 0) fn = &builtin;
    if (!fn)
      throw ParseError(name.pos, "builtin function (sin, cos, tan, asin, acos, sqrt, dot, cross, norm)",
                       "'" + name.text + "'");

    expect(TokenKind::LParen, "'('");
    std::vector<ExprPtr> args;
    if (!at(TokenKind::RParen)) {
      for (;;) {
        args.push_back(parse_expr());
        if (!accept(TokenKind::Comma)) break;
      }
    }
    Token close = expect(TokenKind::RParen, "')'");
    size_t arity = (*fn == Builtin::Dot || *fn == Builtin::Cross) ? 2 : 1;
    if (args.size() != arity)
      throw ParseError(close.pos,
                       name.text + " with " + std::to_string(arity) + " argument(s)",
                       std::to_string(args.size()) + " argument(s)");
    return make_expr({Call{*fn, std::move(args)}, name.pos});
  }

  ExprPtr parse_bracket_literal() {
    SourcePos pos = peek().pos;
    expect(TokenKind::LBracket, "'['");
    if (at(TokenKind::RBracket)) fail("expression (vector literals are non-empty)");
    std::vector<ExprPtr> elements;
    for (;;) {
      elements.push_back(parse_expr());
      if (!accept(TokenKind::Comma)) break;
    }
    expect(TokenKind::RBracket, "']'");

    bool all_rows = std::all_of(elements.begin(), elements.end(), [](const ExprPtr& e) {
      return std::holds_alternative<VectorLit>(e->node);
    });
    if (all_rows) {
      MatrixLit mat;
      size_t width = std::get<VectorLit>(elements.front()->node).elements.size();
      for (const auto& row : elements) {
        const auto& lit = std::get<VectorLit>(row->node);
        if (lit.elements.size() != width)
          throw ParseError(row->pos, "matrix row of width " + std::to_string(width),
                           "row of width " + std::to_string(lit.elements.size()));
        mat.rows.push_back(lit.elements);
      }
      return make_expr({std::move(mat), pos});
    }
    return make_expr({VectorLit{std::move(elements)}, pos});
  }

  VarRef parse_varref_from(const Token& head) {
    VarRef ref;
    ref.path.push_back(head.text);
    ref.deriv_order = head.deriv_order;
    while (at(TokenKind::Dot)) {
      if (ref.deriv_order)
        throw ParseError(peek().pos, "end of variable reference",
                         "'.' after a derivative identifier");
      advance();
      Token part = expect(TokenKind::Ident, "field name");
      ref.path.push_back(part.text);
      ref.deriv_order = part.deriv_order;
    }
    return ref;
  }
};

}  // namespace

Model parse_model(const std::string& source) {
  Parser parser(tokenize(source));
  Model model = parser.parse_model();
  validate_model(model);
  return model;
}

ExprPtr parse_expression(const std::string& source) {
  return Parser(tokenize(source)).parse_expression_only();
}

VarRef parse_var_path(const std::string& source) {
  return Parser(tokenize(source)).parse_var_path_only();
}

}  // namespace hybridlang::lang
