#ifndef COLORLIE_ERROR_HPP
#define COLORLIE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace colorlie {

/// Base class for every error this library throws on purpose.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed textual input (expressions, scalar literals, JSON files).
class ParseError : public Error {
public:
  ParseError(const std::string& msg, int line, int column)
      : Error(msg + " at " + std::to_string(line) + ":" + std::to_string(column)),
        line(line), column(column) {}
  explicit ParseError(const std::string& msg) : Error(msg), line(0), column(0) {}
  int line;
  int column;
};

/// Well-formed JSON that does not match the algebra-file schema.
class SchemaError : public Error {
public:
  using Error::Error;
};

/// Operation is mathematically undefined for the given input
/// (torsion splitting, color Chevalley-Eilenberg complexes, ...).
class UnsupportedError : public Error {
public:
  using Error::Error;
};

/// Caller violated a stated precondition (mixed algebras, bad dimensions).
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// Division by zero and friends.
class ArithmeticError : public Error {
public:
  using Error::Error;
};

}  // namespace colorlie

#endif
