#pragma once

#include <stdexcept>
#include <string>

namespace gradalg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arithmetic misuse: division by zero, shape or context mismatch.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Input outside the documented scope (non-root-of-unity cocycle values, blocks of dim > 1 ...).
class UnsupportedInput : public Error {
 public:
  using Error::Error;
};

// Malformed workspace JSON; path is a JSON pointer to the offending node.
class SchemaError : public Error {
 public:
  SchemaError(std::string path, const std::string& what)
      : Error(path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// A structural result the theory guarantees did not hold; signals an engine bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace gradalg
