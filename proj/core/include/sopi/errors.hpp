#pragma once

#include <stdexcept>
#include <string>

namespace sopi {

// Precondition or input validation failure (bad SOPI ranges, M too large, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The inputs were valid but the requested result does not exist,
// e.g. a palette too small to color a graph.
class DomainFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sopi
