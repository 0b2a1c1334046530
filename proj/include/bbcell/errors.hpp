#pragma once

#include <stdexcept>
#include <string>

namespace bbcell {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MixedRings : Error {
  using Error::Error;
};

struct DivisionByNonUnit : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct NotZeroDimensional : Error {
  using Error::Error;
};

struct UndeterminedPolarity : Error {
  using Error::Error;
};

struct ZeroPolynomial : Error {
  using Error::Error;
};

struct IterationLimit : Error {
  using Error::Error;
};

struct BoundNotVerified : Error {
  using Error::Error;
};

struct LengthMismatch : Error {
  using Error::Error;
};

// A proved theorem failed on a concrete instance, or an internal
// invariant broke. Callers treat this as a defect, never as input error.
struct InternalError : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(int line, int col, const std::string& msg)
      : Error("line " + std::to_string(line) + ", col " + std::to_string(col) +
              ": " + msg),
        line(line),
        col(col) {}
  int line;
  int col;
};

}  // namespace bbcell
