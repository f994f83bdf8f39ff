#pragma once

#include <stdexcept>
#include <string>

namespace cominimal {

/// Base class for all library errors.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// A documented precondition of an operation was violated by the caller.
class precondition_error : public error {
 public:
  explicit precondition_error(const std::string& what) : error(what) {}
};

/// Window or element arithmetic left the signed 64-bit range.
class arithmetic_overflow_error : public error {
 public:
  explicit arithmetic_overflow_error(const std::string& what) : error(what) {}
};

/// A membership predicate did not become constant over the scanned span.
class stabilization_error : public error {
 public:
  explicit stabilization_error(const std::string& what) : error(what) {}
};

/// A generator could not meet its postcondition (e.g. coverage target).
class construction_error : public error {
 public:
  explicit construction_error(const std::string& what) : error(what) {}
};

/// Filesystem / serialization input problems.
class io_error : public error {
 public:
  explicit io_error(const std::string& what) : error(what) {}
};

}  // namespace cominimal
