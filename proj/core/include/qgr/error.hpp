#pragma once

#include <stdexcept>
#include <string>

namespace qgr {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// malformed input files / JSON
struct ParseError : Error {
  using Error::Error;
};

// structurally invalid data (loops, cycles, dimension mismatches, ...)
struct ValidationError : Error {
  using Error::Error;
};

// quiver is representation-finite, not affine
struct FiniteTypeError : Error {
  using Error::Error;
};

// quiver is wild, not affine
struct WildTypeError : Error {
  using Error::Error;
};

// exact division failed; always a logic bug upstream, never data-dependent
struct DivisionError : Error {
  using Error::Error;
};

// operation outside its mathematical domain (bad tube index, non-admissible
// parameters, degenerate band value, ...)
struct DomainError : Error {
  using Error::Error;
};

} // namespace qgr
