#pragma once

#include <stdexcept>
#include <string>

namespace ttl {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

// Structurally invalid value (dimension mismatch, duplicate id, empty body, ...).
class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& msg) : Error(msg) {}
};

// A precondition of an operation does not hold for the given arguments.
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

// Work would exceed an explicit enumeration or search budget.
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& msg) : Error(msg) {}
};

// Input passed shallow validation but contradicts itself on closer inspection.
class DataCorruption : public Error {
 public:
  explicit DataCorruption(const std::string& msg) : Error(msg) {}
};

}  // namespace ttl
