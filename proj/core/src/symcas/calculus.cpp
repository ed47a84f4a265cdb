#include "hybridlang/symcas/calculus.hpp"

namespace hybridlang::symcas {

Expr partial(const Expr& e, const std::string& s) {
  switch (e.kind()) {
    case NodeKind::Num:
      return Expr::num(0.0);
    case NodeKind::Sym:
      return Expr::num(e.sym_name() == s ? 1.0 : 0.0);
    case NodeKind::Add:
      return partial(e.left(), s) + partial(e.right(), s);
    case NodeKind::Sub:
      return partial(e.left(), s) - partial(e.right(), s);
    case NodeKind::Mul:
      return partial(e.left(), s) * e.right() + e.left() * partial(e.right(), s);
    case NodeKind::Div:
      return (partial(e.left(), s) * e.right() - e.left() * partial(e.right(), s)) /
             pow(e.right(), 2.0);
    case NodeKind::Pow:
      return Expr::num(e.exponent()) * pow(e.left(), e.exponent() - 1.0) * partial(e.left(), s);
    case NodeKind::Fun: {
      Expr da = partial(e.left(), s);
      switch (e.fun()) {
        case FunKind::Sin: return cos(e.left()) * da;
        case FunKind::Cos: return Expr::num(-1.0) * sin(e.left()) * da;
        case FunKind::Tan: return da / pow(cos(e.left()), 2.0);
        case FunKind::Sqrt: return da / (Expr::num(2.0) * sqrt(e.left()));
        case FunKind::Asin: return da / sqrt(Expr::num(1.0) - pow(e.left(), 2.0));
      }
    }
  }
  return Expr::num(0.0);
}

Expr time_derivative(const Expr& e, const std::map<std::string, std::string>& flow) {
  Expr total = Expr::num(0.0);
  for (const auto& name : free_symbols(e)) {
    auto it = flow.find(name);
    if (it == flow.end()) continue;
    total = total + partial(e, name) * Expr::sym(it->second);
  }
  return total;
}

Expr substitute(const Expr& e, const std::map<std::string, Expr>& bindings) {
  switch (e.kind()) {
    case NodeKind::Num:
      return e;
    case NodeKind::Sym: {
      auto it = bindings.find(e.sym_name());
      return it == bindings.end() ? e : it->second;
    }
    case NodeKind::Add: return substitute(e.left(), bindings) + substitute(e.right(), bindings);
    case NodeKind::Sub: return substitute(e.left(), bindings) - substitute(e.right(), bindings);
    case NodeKind::Mul: return substitute(e.left(), bindings) * substitute(e.right(), bindings);
    case NodeKind::Div: return substitute(e.left(), bindings) / substitute(e.right(), bindings);
    case NodeKind::Pow: return pow(substitute(e.left(), bindings), e.exponent());
    case NodeKind::Fun: return fun(e.fun(), substitute(e.left(), bindings));
  }
  return e;
}

}  // namespace hybridlang::symcas
