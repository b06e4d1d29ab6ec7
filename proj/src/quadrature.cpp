#include "pfc/quadrature.hpp"

#include <cmath>

namespace pfc {

QuadratureRule::QuadratureRule(std::vector<double> nodes_in, std::vector<double> weights_in)
    : nodes(std::move(nodes_in)), weights(std::move(weights_in)) {
  if (nodes.empty() || nodes.size() != weights.size())
    throw InputError("QuadratureRule: nodes/weights size mismatch");
  double sum = 0.0;
  for (size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i] < 0.0 || nodes[i] > 1.0) throw InputError("QuadratureRule: node outside [0,1]");
    if (i > 0 && nodes[i] <= nodes[i - 1])
      throw InputError("QuadratureRule: nodes must be strictly increasing");
    if (weights[i] <= 0.0) throw InputError("QuadratureRule: weights must be positive");
    sum += weights[i];
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw InputError("QuadratureRule: weights sum to " + std::to_string(sum) + ", expected 1");
}

QuadratureRule gauss_legendre_01(int n) {
  if (n < 1 || n > kMaxDim) throw InputError("gauss_legendre_01: node count out of range");
  std::vector<double> x(n), w(n);

  // Newton iteration on P_n from the Chebyshev-angle initial guess; roots come
  // in +- pairs on [-1,1], so only half are computed.
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) < 1e-15) break;
    }
    // Map [-1,1] -> [0,1].
    x[i] = 0.5 * (1.0 - z);
    x[n - 1 - i] = 0.5 * (1.0 + z);
    w[i] = 1.0 / ((1.0 - z * z) * pp * pp);
    w[n - 1 - i] = w[i];
  }

  double sum = 0.0;
  for (double wi : w) sum += wi;
  for (double& wi : w) wi /= sum;
  return QuadratureRule(std::move(x), std::move(w));
}

}  // namespace pfc
