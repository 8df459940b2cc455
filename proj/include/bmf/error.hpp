#pragma once

#include <stdexcept>
#include <string>

namespace bmf {

// Malformed input: bad indices, mismatched strand counts, parse failures.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured size cap (free-word length, enumeration size) was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numerical continuation failed or produced an inconsistent braid.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bmf
