#pragma once

#include <stdexcept>
#include <string>

namespace hilbfam {

/// Raised when an input violates a stated precondition (bad prime, out-of-range
/// size, malformed family file, ...).
class DomainError : public std::invalid_argument {
public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when a requested enumeration would exceed the configured cap.
class ResourceError : public std::length_error {
public:
  explicit ResourceError(const std::string& what) : std::length_error(what) {}
};

}  // namespace hilbfam
