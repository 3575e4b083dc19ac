#pragma once

#include <stdexcept>
#include <string>

namespace orbital {

// Process exit codes double as error categories. Every failure path maps to
// exactly one of these.
enum class ErrorCode : int {
  ok = 0,
  verification_failed = 1,
  usage = 2,
  malformed_input = 3,
  unknown_element = 4,
  degree_mismatch = 5,
  invalid_action = 6,
  invalid_structure = 7,
  budget_exceeded = 8,
  inconsistency = 9,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  int exit_code() const noexcept { return static_cast<int>(code_); }

 private:
  ErrorCode code_;
};

// Bad user-supplied data: malformed permutations, cyclic relations, loops.
class InputError : public Error {
 public:
  explicit InputError(const std::string& what,
                      ErrorCode code = ErrorCode::invalid_structure)
      : Error(code, what) {}
};

// A group element that does not act by automorphisms.
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what)
      : Error(ErrorCode::invalid_action, what) {}
};

// An internal identity failed; unreachable unless an invariant was broken.
class ConsistencyError : public Error {
 public:
  explicit ConsistencyError(const std::string& what)
      : Error(ErrorCode::inconsistency, what) {}
};

class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& what)
      : Error(ErrorCode::budget_exceeded, what) {}
};

}  // namespace orbital
