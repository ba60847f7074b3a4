#pragma once

#include <stdexcept>
#include <string>

namespace phr {

// Precondition or argument violation (bad prime, wrong field, malformed input).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured size cap would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exact computation produced something that cannot be right: a lift out of
// range, a failed homomorphism check, an eigenspace split that does not close.
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Cache file is missing, stale, or corrupt.
class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace phr
