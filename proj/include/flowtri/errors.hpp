#pragma once

#include <stdexcept>
#include <string>

namespace flowtri {

/// Malformed or structurally invalid input (bad JSON, invalid DAG, broken rotation system).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The DAG violates degree equality where a Gorenstein polytope is required.
class NotGorenstein : public std::domain_error {
 public:
  NotGorenstein() : std::domain_error("not Gorenstein") {}
  explicit NotGorenstein(const std::string& what) : std::domain_error(what) {}
};

/// An internal cross-check failed. Always a bug signal, never a user error.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A configured enumeration bound was exceeded.
class BoundExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace flowtri
