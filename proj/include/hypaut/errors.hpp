#pragma once

#include <stdexcept>
#include <string>

namespace hypaut {

// Malformed or out-of-contract input (bad vertex, label < 2, invalid witness, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A search exceeded a configured cap; the message names the limit and how to raise it.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DeadlineExceeded : public ResourceError {
 public:
  DeadlineExceeded() : ResourceError("deadline exceeded") {}
};

}  // namespace hypaut
