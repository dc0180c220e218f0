#pragma once

#include <stdexcept>
#include <string>

namespace polyform {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operands live over different variable counts or incompatible form degrees.
struct DimensionError : Error {
  using Error::Error;
};

// An operation received a polynomial or form of the wrong degree.
struct DegreeError : Error {
  using Error::Error;
};

// Mixed or wrong parity where a parity-pure input is required.
struct ParityError : Error {
  using Error::Error;
};

// Exact division failed; the message names the offending term.
struct DivisibilityError : Error {
  using Error::Error;
};

// Input is not in the advertised space (e.g. not in the image of the chart map).
struct StructureError : Error {
  using Error::Error;
};

// An expression mixes the simplex and sphere coordinate systems.
struct CoordinateError : Error {
  using Error::Error;
};

// An internal cross-check failed; indicates a bug, not bad user input.
struct ConsistencyError : Error {
  using Error::Error;
};

// Expression syntax error; the message carries the offset.
struct ParseError : Error {
  using Error::Error;
};

// Bad command line parameters.
struct UsageError : Error {
  using Error::Error;
};

}  // namespace polyform
