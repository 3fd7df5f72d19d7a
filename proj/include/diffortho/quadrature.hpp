#pragma once

// Gauss rules for the classical weights. Nodes are seeded from a double
// tridiagonal eigen-solve and polished by Newton on the monic recurrence at
// working precision.

#include "diffortho/polycore.hpp"

#include <memory>
#include <vector>

namespace diffortho {

struct QuadRule {
  Case basis;
  std::vector<ExtScalar> nodes;
  std::vector<ExtScalar> weights;
  std::size_t size() const { return nodes.size(); }
};

/// N-point Gauss rule for w. Rules are cached per (basis, N, precision);
/// concurrent readers are safe.
std::shared_ptr<const QuadRule> gauss_rule(const Case& c, std::size_t n);

/// Sum_k w_k f(x_k).
template <class F>
ExtScalar integrate(const QuadRule& rule, F&& f) {
  ExtScalar s(0);
  for (std::size_t k = 0; k < rule.size(); ++k) s += rule.weights[k] * f(rule.nodes[k]);
  return s;
}

}  // namespace diffortho
