#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hybridlang/lang/ast.hpp"
#include "hybridlang/sim/trace.hpp"
#include "hybridlang/sim/value.hpp"

namespace hybridlang::sim {

// Runtime variable store of one object: slots keyed by (name, derivative
// order), kept in insertion order so traversal and traces are deterministic.
class ObjectInstance {
 public:
  ObjectInstance(const lang::Model& model, const lang::ClassDef& cls)
      : model_(&model), cls_(&cls) {}

  const std::string& class_name() const { return cls_->name; }
  const lang::ClassDef& class_def() const { return *cls_; }
  const lang::Model& model() const { return *model_; }

  bool has(const std::string& name, int order) const;
  const Value& get(const std::string& name, int order) const;
  void set(const std::string& name, int order, Value v);

  ObjectInstance* child(const std::string& name);
  const ObjectInstance* child(const std::string& name) const;
  void add_child(const std::string& name, std::unique_ptr<ObjectInstance> obj);

  struct Slot {
    std::string name;
    int order;
    Value value;
  };
  const std::vector<Slot>& slots() const { return slots_; }
  size_t slot_index(const std::string& name, int order) const;
  const std::vector<std::pair<std::string, std::unique_ptr<ObjectInstance>>>& children() const {
    return children_;
  }
  std::vector<std::pair<std::string, std::unique_ptr<ObjectInstance>>>& children() {
    return children_;
  }

  // Branch decisions made in the discrete phase, replayed by the continuous
  // phase (guards are evaluated once per step).
  void reset_choices() {
    branch_choices_.clear();
    choice_cursor_ = 0;
  }
  void rewind_choices() { choice_cursor_ = 0; }
  void push_choice(int c) { branch_choices_.push_back(c); }
  int next_choice() { return branch_choices_.at(choice_cursor_++); }

 private:
  const lang::Model* model_;
  const lang::ClassDef* cls_;
  std::vector<Slot> slots_;
  std::map<std::pair<std::string, int>, size_t> index_;
  std::vector<std::pair<std::string, std::unique_ptr<ObjectInstance>>> children_;
  std::map<std::string, size_t> child_index_;
  std::vector<int> branch_choices_;
  size_t choice_cursor_ = 0;
};

struct SimConfig {
  double dt = 1e-3;        // seconds, > 0
  double end_time = 10.0;  // seconds, >= 0
  // Variable paths to record ("theta", "theta'", "s.p"); empty means every
  // scalar and vector slot of the root object.
  std::vector<std::string> recorded;
};

// Runs the private section top to bottom; create recurses. Derivative slots up
// to the highest continuously assigned order materialize as 0 when absent.
// The model must outlive the returned instance.
std::unique_ptr<ObjectInstance> instantiate(const lang::Model& model,
                                            const std::string& class_name,
                                            const std::vector<Value>& args);

// One step of the three-phase semantics: discrete assignments run first in
// textual order (guards evaluated once, against the store as traversed),
// continuous assignments follow reading the most recently written value, and
// explicit Euler integration closes the step reading only pre-phase values.
void step(ObjectInstance& root, double dt);

Trace simulate(const lang::Model& model, const std::string& entry,
               const std::vector<Value>& args, const SimConfig& config);

}  // namespace hybridlang::sim
