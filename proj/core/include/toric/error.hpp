#pragma once

#include <stdexcept>
#include <string>

namespace toric {

// Base for all failures raised by the library. The CLI maps every Error to
// exit status 1; usage and I/O failures are reported separately.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on an argument does not hold (bad vertex id, even cycle
// length for add_cycle, malformed walk, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// An enumeration or completion exceeded its configured safety cap. Results
// are never truncated silently.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what_cap, std::size_t cap);

  const std::string& cap_name() const { return cap_name_; }
  std::size_t cap() const { return cap_; }

 private:
  std::string cap_name_;
  std::size_t cap_;
};

// A walk whose odd and even positions cancel completely.
class ZeroBinomial : public Error {
 public:
  using Error::Error;
};

// Fixed-width exponent arithmetic overflowed.
class Overflow : public Error {
 public:
  using Error::Error;
};

// Two computation routes that must agree did not. Indicates a bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// Text input (graph or matrix files) could not be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A file could not be opened.
class FileError : public Error {
 public:
  using Error::Error;
};

}  // namespace toric
