#include <algorithm>
#include <cmath>
#include <sstream>

#include "hybridlang/lang/parser.hpp"
#include "hybridlang/sim/engine.hpp"

namespace hybridlang::sim {

using lang::ClassDef;
using lang::Expr;
using lang::Model;
using lang::Stmt;
using lang::StmtPtr;
using lang::VarRef;

bool ObjectInstance::has(const std::string& name, int order) const {
  return index_.count({name, order}) != 0;
}

const Value& ObjectInstance::get(const std::string& name, int order) const {
  auto it = index_.find({name, order});
  if (it == index_.end())
    throw EvalError("unknown variable " + name + std::string(static_cast<size_t>(order), '\'') +
                    " in " + cls_->name);
  return slots_[it->second].value;
}

void ObjectInstance::set(const std::string& name, int order, Value v) {
  auto it = index_.find({name, order});
  if (it == index_.end()) {
    index_[{name, order}] = slots_.size();
    slots_.push_back({name, order, std::move(v)});
  } else {
    slots_[it->second].value = std::move(v);
  }
}

ObjectInstance* ObjectInstance::child(const std::string& name) {
  auto it = child_index_.find(name);
  return it == child_index_.end() ? nullptr : children_[it->second].second.get();
}

const ObjectInstance* ObjectInstance::child(const std::string& name) const {
  auto it = child_index_.find(name);
  return it == child_index_.end() ? nullptr : children_[it->second].second.get();
}

void ObjectInstance::add_child(const std::string& name, std::unique_ptr<ObjectInstance> obj) {
  child_index_[name] = children_.size();
  children_.emplace_back(name, std::move(obj));
}

size_t ObjectInstance::slot_index(const std::string& name, int order) const {
  auto it = index_.find({name, order});
  if (it == index_.end())
    throw EvalError("unknown variable " + name + std::string(static_cast<size_t>(order), '\'') +
                    " in " + cls_->name);
  return it->second;
}

namespace {

// Resolves the object owning a (possibly dotted) reference.
ObjectInstance& resolve_object(ObjectInstance& obj, const VarRef& ref) {
  ObjectInstance* cur = &obj;
  for (size_t i = 0; i + 1 < ref.path.size(); ++i) {
    ObjectInstance* next = cur->child(ref.path[i]);
    if (!next)
      throw EvalError("no child object '" + ref.path[i] + "' in " + cur->class_name());
    cur = next;
  }
  return *cur;
}

Value read_ref(ObjectInstance& obj, const VarRef& ref, SourcePos pos) {
  try {
    return resolve_object(obj, ref).get(ref.path.back(), ref.deriv_order);
  } catch (const EvalError& e) {
    throw EvalError(e.what() + std::string(" (reading ") + ref.display() + ")", pos);
  }
}

void write_ref(ObjectInstance& obj, const VarRef& ref, Value v) {
  resolve_object(obj, ref).set(ref.path.back(), ref.deriv_order, std::move(v));
}

Value eval(ObjectInstance& obj, const Expr& e);

Value eval_call(ObjectInstance& obj, const lang::Call& call, SourcePos pos) {
  auto scalar = [&](double (*fn)(double), const char* name, bool domain_check) {
    Value v = eval(obj, *call.args[0]);
    double x = v.as_real();
    if (domain_check && (x < -1.0 || x > 1.0))
      throw MathError(std::string(name) + "(" + v.display() + ") out of domain", pos);
    return Value(fn(x));
  };
  try {
    switch (call.fn) {
      case lang::Builtin::Sin: return scalar(std::sin, "sin", false);
      case lang::Builtin::Cos: return scalar(std::cos, "cos", false);
      case lang::Builtin::Tan: return scalar(std::tan, "tan", false);
      case lang::Builtin::Asin: return scalar(std::asin, "asin", true);
      case lang::Builtin::Acos: return scalar(std::acos, "acos", true);
      case lang::Builtin::Sqrt: {
        Value v = eval(obj, *call.args[0]);
        if (v.as_real() < 0.0) throw MathError("sqrt(" + v.display() + ") out of domain", pos);
        return Value(std::sqrt(v.as_real()));
      }
      case lang::Builtin::Dot:
        return Value(numlin::dot(eval(obj, *call.args[0]).as_vector(),
                                 eval(obj, *call.args[1]).as_vector()));
      case lang::Builtin::Cross:
        return Value(numlin::cross(eval(obj, *call.args[0]).as_vector(),
                                   eval(obj, *call.args[1]).as_vector()));
      case lang::Builtin::Norm:
        return Value(numlin::norm(eval(obj, *call.args[0]).as_vector()));
    }
  } catch (const DimensionMismatch& e) {
    throw EvalError(e.what(), pos);
  }
  throw EvalError("unreachable builtin", pos);
}

Value eval(ObjectInstance& obj, const Expr& e) {
  if (const auto* n = std::get_if<lang::NumberLit>(&e.node)) return Value(n->value);
  if (const auto* n = std::get_if<lang::BoolLit>(&e.node)) return Value(n->value);
  if (const auto* n = std::get_if<lang::StringLit>(&e.node)) return Value(n->value);
  if (const auto* n = std::get_if<VarRef>(&e.node)) return read_ref(obj, *n, e.pos);
  if (const auto* n = std::get_if<lang::VectorLit>(&e.node)) {
    Value::Vector out;
    out.reserve(n->elements.size());
    for (const auto& el : n->elements) {
      Value v = eval(obj, *el);
      if (!v.is_real())
        throw EvalError(std::string("vector element is ") + v.type_name(), e.pos);
      out.push_back(v.as_real());
    }
    return Value(std::move(out));
  }
  if (const auto* n = std::get_if<lang::MatrixLit>(&e.node)) {
    Value::Matrix out;
    for (const auto& row : n->rows) {
      Value::Vector r;
      for (const auto& el : row) {
        Value v = eval(obj, *el);
        if (!v.is_real())
          throw EvalError(std::string("matrix element is ") + v.type_name(), e.pos);
        r.push_back(v.as_real());
      }
      out.push_back(std::move(r));
    }
    return Value(std::move(out));
  }
  if (const auto* n = std::get_if<lang::Unary>(&e.node)) {
    Value v = eval(obj, *n->operand);
    try {
      if (n->op == lang::UnaryOp::Neg) return value_neg(v);
      return Value(!v.as_bool());
    } catch (const EvalError& err) {
      throw EvalError(err.what(), e.pos);
    }
  }
  if (const auto* n = std::get_if<lang::Binary>(&e.node)) {
    using lang::BinaryOp;
    if (n->op == BinaryOp::And) {
      return Value(eval(obj, *n->lhs).as_bool() && eval(obj, *n->rhs).as_bool());
    }
    if (n->op == BinaryOp::Or) {
      return Value(eval(obj, *n->lhs).as_bool() || eval(obj, *n->rhs).as_bool());
    }
    Value a = eval(obj, *n->lhs);
    Value b = eval(obj, *n->rhs);
    try {
      switch (n->op) {
        case BinaryOp::Add: return value_add(a, b);
        case BinaryOp::Sub: return value_sub(a, b);
        case BinaryOp::Mul: return value_mul(a, b);
        case BinaryOp::Div: return value_div(a, b);
        case BinaryOp::Pow: return value_pow(a, b);
        case BinaryOp::Lt: return Value(a.as_real() < b.as_real());
        case BinaryOp::Gt: return Value(a.as_real() > b.as_real());
        case BinaryOp::Le: return Value(a.as_real() <= b.as_real());
        case BinaryOp::Ge: return Value(a.as_real() >= b.as_real());
        case BinaryOp::Eq:
          if (a.is_real() && b.is_real()) return Value(a.as_real() == b.as_real());
          if (a.is_bool() && b.is_bool()) return Value(a.as_bool() == b.as_bool());
          if (a.is_text() && b.is_text()) return Value(a.as_text() == b.as_text());
          throw EvalError(std::string("cannot compare ") + a.type_name() + " == " + b.type_name());
        default: break;
      }
    } catch (const EvalError& err) {
      throw EvalError(err.what(), e.pos);
    } catch (const MathError& err) {
      throw MathError(err.what(), e.pos);
    } catch (const DimensionMismatch& err) {
      throw EvalError(err.what(), e.pos);
    }
  }
  if (const auto* n = std::get_if<lang::Call>(&e.node)) return eval_call(obj, *n, e.pos);
  throw EvalError("unreachable expression node", e.pos);
}

// --- instantiate -------------------------------------------------------------

std::unique_ptr<ObjectInstance> instantiate_impl(const Model& model, const ClassDef& cls,
                                                 const std::vector<Value>& args) {
  if (args.size() != cls.params.size())
    throw ArityMismatch(cls.name + " takes " + std::to_string(cls.params.size()) +
                        " argument(s), got " + std::to_string(args.size()));

  auto obj = std::make_unique<ObjectInstance>(model, cls);
  for (size_t i = 0; i < cls.params.size(); ++i) obj->set(cls.params[i], 0, args[i]);

  for (const auto& init : cls.private_inits) {
    if (const auto* disc = std::get_if<lang::Discrete>(&init->node)) {
      Value v;
      try {
        v = eval(*obj, *disc->rhs);
      } catch (const EvalError& e) {
        throw InitError("initializing " + disc->lhs.display() + " in " + cls.name + ": " +
                        e.what());
      }
      obj->set(disc->lhs.path[0], disc->lhs.deriv_order, std::move(v));
    } else if (const auto* create = std::get_if<lang::Create>(&init->node)) {
      const ClassDef* child_cls = model.find(create->class_name);
      if (!child_cls) throw UnknownClass(create->class_name);
      std::vector<Value> child_args;
      for (const auto& arg : create->args) {
        try {
          child_args.push_back(eval(*obj, *arg));
        } catch (const EvalError& e) {
          throw InitError("creating " + create->target + " in " + cls.name + ": " + e.what());
        }
      }
      obj->add_child(create->target, instantiate_impl(model, *child_cls, child_args));
    }
  }

  for (const auto& [name, order] : model.info_for(cls.name).highest_cont_order) {
    for (int k = 0; k <= order; ++k)
      if (!obj->has(name, k)) obj->set(name, k, Value(0.0));
  }
  return obj;
}

// --- step ----------------------------------------------------------------------

enum class Phase { Discrete, Continuous };

void run_stmts(ObjectInstance& obj, const std::vector<StmtPtr>& stmts, Phase phase) {
  for (const auto& stmt : stmts) {
    if (const auto* disc = std::get_if<lang::Discrete>(&stmt->node)) {
      if (phase == Phase::Discrete) write_ref(obj, disc->lhs, eval(obj, *disc->rhs));
    } else if (const auto* cont = std::get_if<lang::Continuous>(&stmt->node)) {
      if (phase == Phase::Continuous) write_ref(obj, cont->lhs, eval(obj, *cont->rhs));
    } else if (const auto* branch = std::get_if<lang::If>(&stmt->node)) {
      int choice;
      if (phase == Phase::Discrete) {
        Value cond = eval(obj, *branch->cond);
        if (!cond.is_bool())
          throw EvalError(std::string("if condition is ") + cond.type_name(), stmt->pos);
        choice = cond.as_bool() ? 1 : 0;
        obj.push_choice(choice);
      } else {
        choice = obj.next_choice();
      }
      run_stmts(obj, choice ? branch->then_branch : branch->else_branch, phase);
    } else if (const auto* sw = std::get_if<lang::Switch>(&stmt->node)) {
      int choice = -1;
      if (phase == Phase::Discrete) {
        Value subject = eval(obj, *sw->subject);
        for (size_t i = 0; i < sw->cases.size(); ++i) {
          if (eval(obj, *sw->cases[i].literal) == subject) {
            choice = static_cast<int>(i);
            break;
          }
        }
        obj.push_choice(choice);
      } else {
        choice = obj.next_choice();
      }
      if (choice >= 0) run_stmts(obj, sw->cases[static_cast<size_t>(choice)].body, phase);
    } else if (std::get_if<lang::Terminate>(&stmt->node)) {
      throw UnsupportedConstruct("terminate is not supported at execution (" +
                                 to_string(stmt->pos) + ")");
    }
  }
}

void run_phase(ObjectInstance& obj, Phase phase) {
  if (phase == Phase::Discrete)
    obj.reset_choices();
  else
    obj.rewind_choices();
  run_stmts(obj, obj.class_def().body, phase);
  for (auto& [name, child] : obj.children()) run_phase(*child, phase);
}

void integrate(ObjectInstance& obj, double dt) {
  // Snapshot so every update reads only start-of-phase values.
  std::vector<Value> before;
  before.reserve(obj.slots().size());
  for (const auto& slot : obj.slots()) before.push_back(slot.value);

  const auto& orders = obj.model().info_for(obj.class_name()).highest_cont_order;
  for (const auto& [name, highest] : orders) {
    if (highest < 1) continue;
    for (int k = highest - 1; k >= 0; --k) {
      size_t xi = obj.slot_index(name, k);
      size_t di = obj.slot_index(name, k + 1);
      try {
        obj.set(name, k, value_add(before[xi], value_mul(before[di], Value(dt))));
      } catch (const EvalError& e) {
        throw EvalError("integrating " + name + std::string(static_cast<size_t>(k), '\'') + ": " +
                        e.what());
      }
    }
  }
  for (auto& [name, child] : obj.children()) integrate(*child, dt);
}

}  // namespace

std::unique_ptr<ObjectInstance> instantiate(const Model& model, const std::string& class_name,
                                            const std::vector<Value>& args) {
  const ClassDef* cls = model.find(class_name);
  if (!cls) throw UnknownClass(class_name);
  return instantiate_impl(model, *cls, args);
}

void step(ObjectInstance& root, double dt) {
  if (!(dt > 0.0)) throw EvalError("step requires dt > 0");
  run_phase(root, Phase::Discrete);
  run_phase(root, Phase::Continuous);
  integrate(root, dt);
}

Trace simulate(const lang::Model& model, const std::string& entry,
               const std::vector<Value>& args, const SimConfig& config) {
  if (!(config.dt > 0.0)) throw EvalError("config.dt must be > 0");
  if (!(config.end_time >= 0.0)) throw EvalError("config.endTime must be >= 0");

  auto root = instantiate(model, entry, args);

  // Resolve recorded columns: explicit paths, or every scalar/vector root slot.
  struct Recorded {
    VarRef ref;
    std::string label;
  };
  std::vector<Recorded> recorded;
  if (config.recorded.empty()) {
    for (const auto& slot : root->slots()) {
      if (!slot.value.is_real() && !slot.value.is_vector()) continue;
      VarRef ref{{slot.name}, slot.order};
      recorded.push_back({ref, ref.display()});
    }
  } else {
    for (const auto& path : config.recorded) {
      VarRef ref = lang::parse_var_path(path);
      recorded.push_back({ref, ref.display()});
    }
  }

  Trace trace;
  for (const auto& r : recorded) trace.columns.push_back(r.label);

  auto record = [&](double t) {
    TraceRow row;
    row.time = t;
    for (const auto& r : recorded) row.values.push_back(read_ref(*root, r.ref, {}));
    trace.rows.push_back(std::move(row));
  };

  // ceil(endTime/dt) with a tolerance for binary dt values like 1e-3
  double q = config.end_time / config.dt;
  double rounded = std::round(q);
  long long steps = (std::fabs(q - rounded) < 1e-9 * std::max(1.0, std::fabs(q)))
                        ? static_cast<long long>(rounded)
                        : static_cast<long long>(std::ceil(q));

  record(0.0);
  for (long long k = 1; k <= steps; ++k) {
    try {
      step(*root, config.dt);
    } catch (const EvalError& e) {
      throw EvalError("step " + std::to_string(k) + " (t=" +
                      std::to_string(static_cast<double>(k) * config.dt) + "): " + e.what());
    } catch (const MathError& e) {
      throw MathError("step " + std::to_string(k) + " (t=" +
                      std::to_string(static_cast<double>(k) * config.dt) + "): " + e.what());
    }
    record(static_cast<double>(k) * config.dt);
  }
  return trace;
}

}  // namespace hybridlang::sim
