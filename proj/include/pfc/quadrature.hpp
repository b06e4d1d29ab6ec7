#pragma once

#include <vector>

#include "pfc/matrix.hpp"

namespace pfc {

// Quadrature rule on [0,1]: strictly increasing nodes, positive weights
// summing to 1 (within 1e-12; construction renormalizes round-off away).
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  QuadratureRule(std::vector<double> nodes_in, std::vector<double> weights_in);
  int size() const { return static_cast<int>(nodes.size()); }
};

// n-point Gauss-Legendre rule mapped to [0,1].
QuadratureRule gauss_legendre_01(int n);

}  // namespace pfc
