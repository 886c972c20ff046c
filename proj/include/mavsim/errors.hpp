#pragma once

#include <stdexcept>
#include <string>

namespace mavsim {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A struct or config value violates one of its invariants.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A geometric query was made from an illegal location (e.g. raycast
// origin outside free space).
class QueryError : public Error {
 public:
  using Error::Error;
};

// Non-finite values entered a numeric computation.
class NumericError : public Error {
 public:
  using Error::Error;
};

// Grid access outside the allocated extents.
class BoundsError : public Error {
 public:
  using Error::Error;
};

// File could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

// A caller broke an API contract (wrong sequence length, regressing
// timestamps, ...).
class ContractError : public Error {
 public:
  using Error::Error;
};

}  // namespace mavsim
