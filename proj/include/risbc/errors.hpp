#pragma once

#include <stdexcept>
#include <string>

namespace risbc {

// Malformed dimensions, non-finite entries, out-of-domain parameters.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A problem that provably admits no feasible point (e.g. an ME whose
// composite channel is identically zero).
class Infeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace risbc
