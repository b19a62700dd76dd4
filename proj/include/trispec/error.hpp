#pragma once

#include <stdexcept>
#include <string>

namespace trispec {

// Base class for every failure raised by the library. The message is the
// user-facing diagnostic ("possible pole", "degenerate triangle", ...).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Interval evaluation could not produce an enclosure (pole, domain error).
class EvaluationError : public Error {
 public:
  using Error::Error;
};

class DegenerateTriangle : public Error {
 public:
  DegenerateTriangle() : Error("degenerate triangle") {}
};

}  // namespace trispec
