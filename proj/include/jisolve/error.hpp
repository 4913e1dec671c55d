#pragma once

#include <stdexcept>
#include <string>

namespace jis {

// Base for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad intervals, mismatched instances, unreadable files.
class InputError : public Error {
 public:
  using Error::Error;
};

// An algorithm was called on an instance outside its domain
// (non-proper input to color packing, weighted input to the branch solver, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A configured resource limit was exceeded (Q, gamma, oracle size).
class LimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace jis
