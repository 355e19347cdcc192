#pragma once

#include <stdexcept>

namespace foldkit {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed textual input: graph6 lines, edge lists, traces, certificates.
struct ParseError : Error {
  using Error::Error;
};

// Structurally valid input outside an operation's contract: size bounds,
// connectivity requirements, fold preconditions, family parameter minimums.
struct PreconditionError : Error {
  using Error::Error;
};

// A requested value outside its admissible interval.
struct RangeError : Error {
  using Error::Error;
};

}  // namespace foldkit
