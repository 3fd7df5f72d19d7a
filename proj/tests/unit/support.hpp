#pragma once

#include "diffortho/numeric.hpp"

#include "doctest.h"

namespace diffortho::testing {

inline ExtScalar X(const char* s) { return ExtScalar(s); }

// |a - b| <= tol * max(1, |b|)
inline bool close(const ExtScalar& a, const ExtScalar& b, const ExtScalar& tol) {
  using std::max;
  return abs(a - b) <= tol * max(ExtScalar(1), ExtScalar(abs(b)));
}

inline bool close(const ExtComplex& a, const ExtComplex& b, const ExtScalar& tol) {
  return abs(a - b) <= tol * std::max(ExtScalar(1), abs(b));
}

}  // namespace diffortho::testing
