#pragma once

#include <stdexcept>
#include <string>

namespace orbihrr {

// Raised by field division and inversion of zero.
class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
  explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

// A ring element (series, K-class, matrix) that has no inverse.
class NotInvertible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Operands that live in different rings, groups or truncation degrees.
class Mismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A mathematical identity that must hold did not: inconsistent input data
// (e.g. generator matrices that are not a homomorphism) or an internal fault.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class GroupTooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace orbihrr
