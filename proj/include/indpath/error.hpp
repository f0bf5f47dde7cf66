// error.hpp
// Typed error for every precondition and resource failure in the library.
// Validation errors (bad input) map to CLI exit 2; computational failures
// (unsupported sizes, exhausted budgets) map to CLI exit 1.

#pragma once

#include <stdexcept>
#include <string>

namespace indpath {

enum class Errc {
  Loop,           // arc (u,u)
  TwoCycle,       // both (u,v) and (v,u)
  OutOfRange,     // index or numeric parameter outside its domain
  SizeMismatch,   // pattern larger than host, set larger than allowed
  Unsupported,    // operation valid but outside the supported size range
  InvalidSpec,    // malformed construction or problem specification
  UnknownCase,    // grid case id not defined
  InvalidStart,   // search start violates the requested constraint
  ShapeMismatch,  // certificate block does not match the basis
  IoError,        // file could not be read or written
  ResourceLimit,  // configured work budget exceeded
  ParseError,     // malformed text input
};

const char* errc_name(Errc c);

// true for errors caused by bad user input rather than by problem size
bool is_validation_error(Errc c);

struct Error : std::runtime_error {
  Errc code;
  Error(Errc c, const std::string& msg)
      : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code(c) {}
};

}  // namespace indpath
