#include <functional>
#include <set>
#include <sstream>

#include "hybridlang/lang/parser.hpp"

namespace hybridlang::lang {

namespace {

// What a class declares, gathered before read-checking.
struct Declared {
  std::set<std::string> params;
  std::map<std::string, int> init_order;  // name -> max privately initialized order
  std::map<std::string, std::string> children;
  std::map<std::string, int> cont_order;  // name -> max continuous order
};

void scan_continuous(const std::vector<StmtPtr>& stmts, std::map<std::string, int>& orders,
                     std::vector<std::string>& problems, const std::string& cls) {
  for (const auto& stmt : stmts) {
    if (const auto* cont = std::get_if<Continuous>(&stmt->node)) {
      if (cont->lhs.path.size() == 1) {
        auto& cur = orders[cont->lhs.path[0]];
        cur = std::max(cur, cont->lhs.deriv_order);
      }
    } else if (const auto* branch = std::get_if<If>(&stmt->node)) {
      scan_continuous(branch->then_branch, orders, problems, cls);
      scan_continuous(branch->else_branch, orders, problems, cls);
    } else if (const auto* sw = std::get_if<Switch>(&stmt->node)) {
      for (const auto& c : sw->cases) scan_continuous(c.body, orders, problems, cls);
    }
  }
}

void check_cont_orders(const std::vector<StmtPtr>& stmts, const std::map<std::string, int>& orders,
                       std::vector<std::string>& problems, const std::string& cls) {
  for (const auto& stmt : stmts) {
    if (const auto* cont = std::get_if<Continuous>(&stmt->node)) {
      if (cont->lhs.path.size() == 1) {
        int max_order = orders.at(cont->lhs.path[0]);
        if (cont->lhs.deriv_order != max_order) {
          std::ostringstream os;
          os << cls << ": " << to_string(stmt->pos) << ": continuous assignment to "
             << cont->lhs.display() << " but " << cont->lhs.path[0]
             << " has a continuous equation at order " << max_order;
          problems.push_back(os.str());
        }
      }
    } else if (const auto* branch = std::get_if<If>(&stmt->node)) {
      check_cont_orders(branch->then_branch, orders, problems, cls);
      check_cont_orders(branch->else_branch, orders, problems, cls);
    } else if (const auto* sw = std::get_if<Switch>(&stmt->node)) {
      for (const auto& c : sw->cases) check_cont_orders(c.body, orders, problems, cls);
    }
  }
}

class Validator {
 public:
  explicit Validator(Model& model) : model_(model) {}

  void run() {
    for (const auto& cls : model_.classes) {
      if (!by_name_.emplace(cls.name, &cls).second)
        problems_.push_back("duplicate class name: " + cls.name);
    }

    for (const auto& cls : model_.classes) declared_[cls.name] = gather(cls);

    for (const auto& cls : model_.classes) {
      check_create_targets(cls);
      check_class(cls);
      ClassInfo info;
      info.highest_cont_order = declared_[cls.name].cont_order;
      info.child_class = declared_[cls.name].children;
      model_.info[cls.name] = std::move(info);
    }

    check_create_cycles();

    if (!problems_.empty()) {
      std::ostringstream os;
      os << "model failed to load:";
      for (const auto& p : problems_) os << "\n  " << p;
      throw LoadError(os.str());
    }
  }

 private:
  Model& model_;
  std::map<std::string, const ClassDef*> by_name_;
  std::map<std::string, Declared> declared_;
  std::vector<std::string> problems_;

  Declared gather(const ClassDef& cls) {
    Declared d;
    for (const auto& p : cls.params) d.params.insert(p);
    for (const auto& init : cls.private_inits) {
      if (const auto* disc = std::get_if<Discrete>(&init->node)) {
        const std::string& name = disc->lhs.path[0];
        if (disc->lhs.deriv_order == 0 && d.params.count(name))
          problems_.push_back(cls.name + ": private init shadows parameter " + name);
        auto [it, fresh] = d.init_order.emplace(name, disc->lhs.deriv_order);
        if (!fresh) it->second = std::max(it->second, disc->lhs.deriv_order);
      } else if (const auto* create = std::get_if<Create>(&init->node)) {
        if (d.params.count(create->target))
          problems_.push_back(cls.name + ": create target shadows parameter " + create->target);
        d.children[create->target] = create->class_name;
      }
    }
    scan_continuous(cls.body, d.cont_order, problems_, cls.name);
    return d;
  }

  void check_create_targets(const ClassDef& cls) {
    for (const auto& init : cls.private_inits) {
      if (const auto* create = std::get_if<Create>(&init->node)) {
        if (!by_name_.count(create->class_name))
          problems_.push_back(cls.name + ": create references undefined class " +
                              create->class_name);
      }
    }
  }

  void check_create_cycles() {
    // 0 = unvisited, 1 = on stack, 2 = done
    std::map<std::string, int> state;
    std::function<void(const std::string&)> visit = [&](const std::string& name) {
      int& s = state[name];
      if (s == 1) {
        problems_.push_back("cyclic create chain through class " + name);
        return;
      }
      if (s == 2) return;
      s = 1;
      auto it = declared_.find(name);
      if (it != declared_.end())
        for (const auto& [target, child] : it->second.children)
          if (by_name_.count(child)) visit(child);
      s = 2;
    };
    for (const auto& cls : model_.classes) visit(cls.name);
  }

  // Max derivative order readable/writable for `name` in `cls`, or -1 if unknown.
  int max_order(const std::string& cls_name, const std::string& name) const {
    auto it = declared_.find(cls_name);
    if (it == declared_.end()) return -1;
    const Declared& d = it->second;
    int order = -1;
    if (d.params.count(name)) order = 0;
    if (auto i = d.init_order.find(name); i != d.init_order.end())
      order = std::max(order, i->second);
    if (auto c = d.cont_order.find(name); c != d.cont_order.end())
      order = std::max(order, c->second);
    if (d.children.count(name)) order = std::max(order, 0);
    return order;
  }

  void check_ref(const ClassDef& cls, const VarRef& ref, SourcePos pos, bool write) {
    const std::string* cur_cls = &cls.name;
    for (size_t i = 0; i + 1 < ref.path.size(); ++i) {
      auto it = declared_.find(*cur_cls);
      if (it == declared_.end()) return;  // already reported as unknown class
      auto child = it->second.children.find(ref.path[i]);
      if (child == it->second.children.end()) {
        problems_.push_back(cls.name + ": " + to_string(pos) + ": " + ref.display() +
                            " does not name a child object at '" + ref.path[i] + "'");
        return;
      }
      cur_cls = &child->second;
    }
    const std::string& leaf = ref.path.back();
    int known = max_order(*cur_cls, leaf);
    if (known < 0) {
      problems_.push_back(cls.name + ": " + to_string(pos) + ": undefined variable " +
                          ref.display());
      return;
    }
    if (!write && ref.deriv_order > known) {
      problems_.push_back(cls.name + ": " + to_string(pos) + ": " + ref.display() +
                          " read above its highest defined order " + std::to_string(known));
    }
  }

  void check_expr(const ClassDef& cls, const Expr& expr) {
    if (const auto* ref = std::get_if<VarRef>(&expr.node)) {
      check_ref(cls, *ref, expr.pos, /*write=*/false);
    } else if (const auto* unary = std::get_if<Unary>(&expr.node)) {
      check_expr(cls, *unary->operand);
    } else if (const auto* binary = std::get_if<Binary>(&expr.node)) {
      check_expr(cls, *binary->lhs);
      check_expr(cls, *binary->rhs);
    } else if (const auto* call = std::get_if<Call>(&expr.node)) {
      for (const auto& arg : call->args) check_expr(cls, *arg);
    } else if (const auto* vec = std::get_if<VectorLit>(&expr.node)) {
      for (const auto& e : vec->elements) check_expr(cls, *e);
    } else if (const auto* mat = std::get_if<MatrixLit>(&expr.node)) {
      for (const auto& row : mat->rows)
        for (const auto& e : row) check_expr(cls, *e);
    }
  }

  void check_stmts(const ClassDef& cls, const std::vector<StmtPtr>& stmts) {
    for (const auto& stmt : stmts) {
      if (const auto* cont = std::get_if<Continuous>(&stmt->node)) {
        check_ref(cls, cont->lhs, stmt->pos, /*write=*/true);
        check_expr(cls, *cont->rhs);
      } else if (const auto* disc = std::get_if<Discrete>(&stmt->node)) {
        check_ref(cls, disc->lhs, stmt->pos, /*write=*/true);
        check_expr(cls, *disc->rhs);
      } else if (const auto* branch = std::get_if<If>(&stmt->node)) {
        check_expr(cls, *branch->cond);
        check_stmts(cls, branch->then_branch);
        check_stmts(cls, branch->else_branch);
      } else if (const auto* sw = std::get_if<Switch>(&stmt->node)) {
        check_expr(cls, *sw->subject);
        for (const auto& c : sw->cases) check_stmts(cls, c.body);
      } else if (const auto* term = std::get_if<Terminate>(&stmt->node)) {
        VarRef ref{{term->target}, 0};
        check_ref(cls, ref, stmt->pos, /*write=*/false);
      }
    }
  }

  void check_class(const ClassDef& cls) {
    for (const auto& init : cls.private_inits) {
      if (const auto* disc = std::get_if<Discrete>(&init->node)) {
        check_expr(cls, *disc->rhs);
      } else if (const auto* create = std::get_if<Create>(&init->node)) {
        for (const auto& arg : create->args) check_expr(cls, *arg);
      }
    }
    check_stmts(cls, cls.body);
    check_cont_orders(cls.body, declared_[cls.name].cont_order, problems_, cls.name);
  }
};

}  // namespace

void validate_model(Model& model) { Validator(model).run(); }

// --- structural equality -----------------------------------------------------

namespace {

bool equal_list(const std::vector<ExprPtr>& a, const std::vector<ExprPtr>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!equal(*a[i], *b[i])) return false;
  return true;
}

bool equal_stmts(const std::vector<StmtPtr>& a, const std::vector<StmtPtr>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!equal(*a[i], *b[i])) return false;
  return true;
}

}  // namespace

bool equal(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  if (const auto* n = std::get_if<NumberLit>(&a.node))
    return n->value == std::get<NumberLit>(b.node).value;
  if (const auto* n = std::get_if<BoolLit>(&a.node))
    return n->value == std::get<BoolLit>(b.node).value;
  if (const auto* n = std::get_if<StringLit>(&a.node))
    return n->value == std::get<StringLit>(b.node).value;
  if (const auto* n = std::get_if<VectorLit>(&a.node))
    return equal_list(n->elements, std::get<VectorLit>(b.node).elements);
  if (const auto* n = std::get_if<MatrixLit>(&a.node)) {
    const auto& m = std::get<MatrixLit>(b.node);
    if (n->rows.size() != m.rows.size()) return false;
    for (size_t i = 0; i < n->rows.size(); ++i)
      if (!equal_list(n->rows[i], m.rows[i])) return false;
    return true;
  }
  if (const auto* n = std::get_if<VarRef>(&a.node)) {
    const auto& m = std::get<VarRef>(b.node);
    return n->path == m.path && n->deriv_order == m.deriv_order;
  }
  if (const auto* n = std::get_if<Unary>(&a.node)) {
    const auto& m = std::get<Unary>(b.node);
    return n->op == m.op && equal(*n->operand, *m.operand);
  }
  if (const auto* n = std::get_if<Binary>(&a.node)) {
    const auto& m = std::get<Binary>(b.node);
    return n->op == m.op && equal(*n->lhs, *m.lhs) && equal(*n->rhs, *m.rhs);
  }
  if (const auto* n = std::get_if<Call>(&a.node)) {
    const auto& m = std::get<Call>(b.node);
    return n->fn == m.fn && equal_list(n->args, m.args);
  }
  return false;
}

bool equal(const Stmt& a, const Stmt& b) {
  if (a.node.index() != b.node.index()) return false;
  if (const auto* n = std::get_if<Continuous>(&a.node)) {
    const auto& m = std::get<Continuous>(b.node);
    return n->lhs.path == m.lhs.path && n->lhs.deriv_order == m.lhs.deriv_order &&
           equal(*n->rhs, *m.rhs);
  }
  if (const auto* n = std::get_if<Discrete>(&a.node)) {
    const auto& m = std::get<Discrete>(b.node);
    return n->lhs.path == m.lhs.path && n->lhs.deriv_order == m.lhs.deriv_order &&
           equal(*n->rhs, *m.rhs);
  }
  if (const auto* n = std::get_if<If>(&a.node)) {
    const auto& m = std::get<If>(b.node);
    return equal(*n->cond, *m.cond) && equal_stmts(n->then_branch, m.then_branch) &&
           equal_stmts(n->else_branch, m.else_branch);
  }
  if (const auto* n = std::get_if<Switch>(&a.node)) {
    const auto& m = std::get<Switch>(b.node);
    if (!equal(*n->subject, *m.subject) || n->cases.size() != m.cases.size()) return false;
    for (size_t i = 0; i < n->cases.size(); ++i) {
      if (!equal(*n->cases[i].literal, *m.cases[i].literal)) return false;
      if (!equal_stmts(n->cases[i].body, m.cases[i].body)) return false;
    }
    return true;
  }
  if (const auto* n = std::get_if<Create>(&a.node)) {
    const auto& m = std::get<Create>(b.node);
    return n->target == m.target && n->class_name == m.class_name && equal_list(n->args, m.args);
  }
  if (const auto* n = std::get_if<Terminate>(&a.node))
    return n->target == std::get<Terminate>(b.node).target;
  return false;
}

bool equal(const ClassDef& a, const ClassDef& b) {
  return a.name == b.name && a.params == b.params &&
         equal_stmts(a.private_inits, b.private_inits) && equal_stmts(a.body, b.body);
}

bool equal(const Model& a, const Model& b) {
  if (a.classes.size() != b.classes.size()) return false;
  for (size_t i = 0; i < a.classes.size(); ++i)
    if (!equal(a.classes[i], b.classes[i])) return false;
  return true;
}

}  // namespace hybridlang::lang
