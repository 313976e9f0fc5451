#pragma once

#include <stdexcept>
#include <string>

namespace hcube {

/// Raised for structurally invalid input: bad encodings, out-of-range
/// arguments, malformed permutations.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an oracle that was promised to be a graph automorphism
/// produces images that no automorphism could produce.
class MalformedOracle : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hcube
