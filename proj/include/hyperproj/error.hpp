#pragma once

#include <stdexcept>
#include <string>

namespace hyperproj {

// Base of every error raised by the library. The CLI maps InvalidParams to a
// usage failure and everything else to a runtime failure.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

// A binomial coefficient or threshold is not finitely representable.
class Overflow : public Error {
 public:
  using Error::Error;
};

// Likelihood factors are undefined for q == 0, q == 1 or p == 1.
class DegenerateNoise : public Error {
 public:
  using Error::Error;
};

class CliqueBudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Enumeration or sweep size above its configured cap.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class UnsupportedRegime : public Error {
 public:
  using Error::Error;
};

class UnsupportedArity : public Error {
 public:
  using Error::Error;
};

// Observation has zero probability under the model.
class ZeroEvidence : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace hyperproj
