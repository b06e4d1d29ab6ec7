#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pfc/matrix.hpp"
#include "pfc/quadrature.hpp"

namespace pfc {

// Nonnegative kernel k(s,t) on the unit square. Evaluators must be pure; the
// positivity claim is checked only at sampled nodes (the continuum statement
// is not machine-checkable).
struct Kernel {
  std::function<double(double, double)> evaluator;
  bool strictly_positive_claimed = false;
  std::string description;
};

Kernel const_kernel(double c);

// k(s,t) = sum_m coeffs[m] * (s*t)^m, the separable polynomial family.
Kernel poly_kernel(std::vector<double> coeffs);

Kernel exp_kernel();

// Builds a kernel from a declarative spec: "const:<c>", "poly:<c0>,<c1>,...",
// or "exp". Bare "const" and "poly" default to k = 1 and k = 1 + st.
Kernel make_named_kernel(const std::string& spec);

// Discrete Jentzsch data at the quadrature nodes.
struct JentzschReport {
  double rho = 0.0;
  std::vector<double> eigenfunction;  // values at nodes, unit 1-norm
  double min_eigenfunction = 0.0;
  double gap_ratio = 0.0;  // |lambda_2| / rho from the reference eigensolver
  bool simple = false;
};

struct SchaeferResult {
  bool irreducible_in_schaefer_sense = false;
  std::vector<int> violating_split;  // nonempty iff the check fails
};

struct RefinementStudy {
  std::vector<int> sizes;
  std::vector<double> rhos;
  std::vector<double> diffs;  // |rho_k - rho_{k-1}|, one per refinement step
};

// Nystrom discretization: entry (i,j) = k(s_i, s_j) * w_j. Errors on a
// negative kernel sample, naming the offending point.
NonnegativeMatrix discretize(const Kernel& kernel, const QuadratureRule& rule);

JentzschReport jentzsch_analyze(const Kernel& kernel, const QuadratureRule& rule);

// Discrete analogue of the Schaefer irreducibility condition: every
// nontrivial index split S must carry positive block mass over (X-S) x S.
// Equivalent to strong connectivity of the support digraph, which is how it
// is decided; a violating S (closed under predecessors) is returned otherwise.
SchaeferResult schaefer_check(const NonnegativeMatrix& a);

RefinementStudy refine_study(const Kernel& kernel, const std::vector<int>& sizes);

}  // namespace pfc
