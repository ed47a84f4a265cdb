#pragma once

#include <stdexcept>
#include <string>

namespace hybridlang {

struct SourcePos {
  int line = 0;
  int column = 0;
};

inline std::string to_string(SourcePos pos) {
  return std::to_string(pos.line) + ":" + std::to_string(pos.column);
}

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// --- source handling -------------------------------------------------------

class LexError : public Error {
 public:
  LexError(SourcePos pos, const std::string& what)
      : Error(to_string(pos) + ": " + what), pos(pos) {}
  SourcePos pos;
};

class ParseError : public Error {
 public:
  ParseError(SourcePos pos, const std::string& expected, const std::string& found)
      : Error(to_string(pos) + ": expected " + expected + ", found " + found),
        pos(pos), expected(expected), found(found) {}
  SourcePos pos;
  std::string expected;
  std::string found;
};

class LoadError : public Error {
 public:
  using Error::Error;
};

// --- simulation ------------------------------------------------------------

class EvalError : public Error {
 public:
  explicit EvalError(const std::string& what, SourcePos pos = {})
      : Error(pos.line ? to_string(pos) + ": " + what : what), pos(pos) {}
  SourcePos pos;
};

class MathError : public Error {
 public:
  explicit MathError(const std::string& what, SourcePos pos = {})
      : Error(pos.line ? to_string(pos) + ": " + what : what), pos(pos) {}
  SourcePos pos;
};

class UnknownClass : public Error {
 public:
  explicit UnknownClass(const std::string& name) : Error("unknown class: " + name) {}
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

class InitError : public Error {
 public:
  using Error::Error;
};

class UnsupportedConstruct : public Error {
 public:
  using Error::Error;
};

// --- numeric kernel ---------------------------------------------------------

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class Singular : public Error {
 public:
  using Error::Error;
};

// --- symbolic engine ---------------------------------------------------------

class UnboundSymbol : public Error {
 public:
  explicit UnboundSymbol(const std::string& name) : Error("unbound symbol: " + name) {}
};

class NonlinearInAccel : public Error {
 public:
  using Error::Error;
};

class SingularMass : public Error {
 public:
  using Error::Error;
};

class TooManyCoords : public Error {
 public:
  using Error::Error;
};

class SingularSymbolicDet : public Error {
 public:
  using Error::Error;
};

// --- model library -----------------------------------------------------------

class NonPositiveParam : public Error {
 public:
  using Error::Error;
};

class UnknownModel : public Error {
 public:
  explicit UnknownModel(const std::string& name) : Error("unknown model: " + name) {}
};

class GimbalLock : public Error {
 public:
  using Error::Error;
};

}  // namespace hybridlang
