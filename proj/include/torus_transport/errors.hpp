#pragma once

#include <stdexcept>
#include <string>

namespace torus_transport {

/// Invalid argument or violated precondition (bad grid, mass mismatch, ...).
class invalid_input : public std::invalid_argument {
 public:
  explicit invalid_input(const std::string& what) : std::invalid_argument(what) {}
};

/// An iterative routine failed to converge within its budget.
class numeric_failure : public std::runtime_error {
 public:
  explicit numeric_failure(const std::string& what) : std::runtime_error(what) {}
};

/// File or format problem while reading/writing measures and reports.
class io_failure : public std::runtime_error {
 public:
  explicit io_failure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace torus_transport
