#pragma once

#include <string>
#include <variant>
#include <vector>

#include "hybridlang/errors.hpp"
#include "hybridlang/numlin/numlin.hpp"

namespace hybridlang::sim {

// Ground value of the modeled language. Vectors and matrices hold reals and
// are non-empty; matrices are rectangular.
class Value {
 public:
  using Vector = std::vector<double>;
  using Matrix = std::vector<std::vector<double>>;

  Value() : v_(0.0) {}
  Value(double x) : v_(x) {}
  Value(bool b) : v_(b) {}
  Value(std::string s) : v_(std::move(s)) {}
  Value(Vector v) : v_(std::move(v)) {}
  Value(Matrix m) : v_(std::move(m)) {}

  bool is_real() const { return std::holds_alternative<double>(v_); }
  bool is_bool() const { return std::holds_alternative<bool>(v_); }
  bool is_text() const { return std::holds_alternative<std::string>(v_); }
  bool is_vector() const { return std::holds_alternative<Vector>(v_); }
  bool is_matrix() const { return std::holds_alternative<Matrix>(v_); }

  double as_real() const;
  bool as_bool() const;
  const std::string& as_text() const;
  const Vector& as_vector() const;
  const Matrix& as_matrix() const;

  const char* type_name() const;
  std::string display() const;

  friend bool operator==(const Value& a, const Value& b) { return a.v_ == b.v_; }

 private:
  std::variant<double, bool, std::string, Vector, Matrix> v_;
};

// Arithmetic used by the interpreter; throws EvalError on type mismatches and
// MathError on division by zero / domain violations.
Value value_add(const Value& a, const Value& b);
Value value_sub(const Value& a, const Value& b);
Value value_mul(const Value& a, const Value& b);
Value value_div(const Value& a, const Value& b);
Value value_pow(const Value& a, const Value& b);
Value value_neg(const Value& a);

}  // namespace hybridlang::sim
