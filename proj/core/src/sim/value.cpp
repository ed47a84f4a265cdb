#include <cmath>
#include <sstream>

#include "hybridlang/sim/value.hpp"
#include "hybridlang/util/number_format.hpp"

namespace hybridlang::sim {

namespace {

[[noreturn]] void type_error(const char* op, const Value& a, const Value& b) {
  throw EvalError(std::string("cannot apply '") + op + "' to " + a.type_name() + " and " +
                  b.type_name());
}

}  // namespace

double Value::as_real() const {
  if (const auto* x = std::get_if<double>(&v_)) return *x;
  throw EvalError(std::string("expected real, got ") + type_name());
}

bool Value::as_bool() const {
  if (const auto* b = std::get_if<bool>(&v_)) return *b;
  throw EvalError(std::string("expected bool, got ") + type_name());
}

const std::string& Value::as_text() const {
  if (const auto* s = std::get_if<std::string>(&v_)) return *s;
  throw EvalError(std::string("expected string, got ") + type_name());
}

const Value::Vector& Value::as_vector() const {
  if (const auto* v = std::get_if<Vector>(&v_)) return *v;
  throw EvalError(std::string("expected vector, got ") + type_name());
}

const Value::Matrix& Value::as_matrix() const {
  if (const auto* m = std::get_if<Matrix>(&v_)) return *m;
  throw EvalError(std::string("expected matrix, got ") + type_name());
}

const char* Value::type_name() const {
  switch (v_.index()) {
    case 0: return "real";
    case 1: return "bool";
    case 2: return "string";
    case 3: return "vector";
    case 4: return "matrix";
  }
  return "?";
}

std::string Value::display() const {
  std::ostringstream os;
  if (is_real()) {
    os << util::format_double(as_real());
  } else if (is_bool()) {
    os << (as_bool() ? "true" : "false");
  } else if (is_text()) {
    os << '"' << as_text() << '"';
  } else if (is_vector()) {
    os << '[';
    const auto& v = as_vector();
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) os << ',';
      os << util::format_double(v[i]);
    }
    os << ']';
  } else {
    os << '[';
    const auto& m = as_matrix();
    for (size_t r = 0; r < m.size(); ++r) {
      if (r) os << ',';
      os << '[';
      for (size_t c = 0; c < m[r].size(); ++c) {
        if (c) os << ',';
        os << util::format_double(m[r][c]);
      }
      os << ']';
    }
    os << ']';
  }
  return os.str();
}

Value value_add(const Value& a, const Value& b) {
  if (a.is_real() && b.is_real()) return a.as_real() + b.as_real();
  if (a.is_vector() && b.is_vector()) return numlin::add(a.as_vector(), b.as_vector());
  if (a.is_matrix() && b.is_matrix()) return numlin::add(a.as_matrix(), b.as_matrix());
  type_error("+", a, b);
}

Value value_sub(const Value& a, const Value& b) {
  if (a.is_real() && b.is_real()) return a.as_real() - b.as_real();
  if (a.is_vector() && b.is_vector()) return numlin::sub(a.as_vector(), b.as_vector());
  if (a.is_matrix() && b.is_matrix()) return numlin::sub(a.as_matrix(), b.as_matrix());
  type_error("-", a, b);
}

Value value_mul(const Value& a, const Value& b) {
  if (a.is_real() && b.is_real()) return a.as_real() * b.as_real();
  if (a.is_real() && b.is_vector()) return numlin::scale(a.as_real(), b.as_vector());
  if (a.is_vector() && b.is_real()) return numlin::scale(b.as_real(), a.as_vector());
  if (a.is_real() && b.is_matrix()) return numlin::scale(a.as_real(), b.as_matrix());
  if (a.is_matrix() && b.is_real()) return numlin::scale(b.as_real(), a.as_matrix());
  if (a.is_matrix() && b.is_vector()) return numlin::matvec(a.as_matrix(), b.as_vector());
  if (a.is_matrix() && b.is_matrix()) return numlin::matmul(a.as_matrix(), b.as_matrix());
  type_error("*", a, b);
}

Value value_div(const Value& a, const Value& b) {
  if (!b.is_real()) type_error("/", a, b);
  double d = b.as_real();
  if (d == 0.0) throw MathError("division by zero");
  if (a.is_real()) return a.as_real() / d;
  if (a.is_vector()) return numlin::scale(1.0 / d, a.as_vector());
  if (a.is_matrix()) return numlin::scale(1.0 / d, a.as_matrix());
  type_error("/", a, b);
}

Value value_pow(const Value& a, const Value& b) {
  if (!a.is_real() || !b.is_real()) type_error("^", a, b);
  double r = std::pow(a.as_real(), b.as_real());
  if (std::isnan(r)) throw MathError("invalid power " + a.display() + "^" + b.display());
  return r;
}

Value value_neg(const Value& a) {
  if (a.is_real()) return -a.as_real();
  if (a.is_vector()) return numlin::scale(-1.0, a.as_vector());
  if (a.is_matrix()) return numlin::scale(-1.0, a.as_matrix());
  throw EvalError(std::string("cannot negate ") + a.type_name());
}

}  // namespace hybridlang::sim
