#pragma once

#include <stdexcept>
#include <string>

namespace hilbcup {

/// Raised when caller-supplied data violates a documented precondition
/// (malformed partitions, weights of the wrong sign, sizes that do not match).
class InputError : public std::invalid_argument {
public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when an internal consistency check fails, i.e. a bug rather than bad input.
class InvariantError : public std::logic_error {
public:
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace hilbcup
