#pragma once

#include <stdexcept>
#include <string>

namespace opreduce {

// Caller handed us data that violates a documented precondition.
struct InputError : std::invalid_argument {
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// Tried to invert a matrix whose determinant is zero.
struct SingularMatrixError : InputError {
  explicit SingularMatrixError(const std::string& what) : InputError(what) {}
};

// A verified-construction step failed its own consistency check. Never
// recoverable by the caller; indicates a bug in this library.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace opreduce
