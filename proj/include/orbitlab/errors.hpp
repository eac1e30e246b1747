#pragma once

#include <stdexcept>
#include <string>

namespace orbitlab {

// Base class for every error the library raises on purpose. Anything else
// escaping (std::bad_alloc aside) is a bug.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input validation / parsing.
struct ParseError : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};

// exactnum
struct ZeroInput : Error {
  using Error::Error;
};
struct NonPositive : Error {
  using Error::Error;
};
struct BudgetExceeded : Error {
  using Error::Error;
};

// projective
struct AllZero : Error {
  using Error::Error;
};
struct IndeterminatePoint : Error {
  explicit IndeterminatePoint(const std::string& msg, int step_ = -1)
      : Error(msg), step(step_) {}
  int step;  // iterate index at which the map vanished, -1 if not applicable
};

// heights
struct OnSupport : Error {
  using Error::Error;
};
struct InfiniteHeight : Error {
  using Error::Error;
};

// mult1
struct MapDegenerate : Error {
  using Error::Error;
};
struct IterateOverflow : Error {
  using Error::Error;
};
struct ZeroPolynomial : Error {
  using Error::Error;
};

// orbits
struct OnIndeterminacy : Error {
  using Error::Error;
};

}  // namespace orbitlab
