#pragma once

#include <stdexcept>
#include <string>

namespace dicut {

// Malformed or unusable input: bad files, invalid edge sets, improper colorings.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The caller violated an operation's documented precondition (class
// membership, digon-freeness, connectivity, ...).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A self-check inside an algorithm failed. Never expected on valid input.
class AlgorithmError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An exact search would exceed its configured guard.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dicut
