#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pfc/matrix.hpp"

namespace pfc {

// Residual target and iteration budget for the fixed-point solvers.
inline constexpr double kDefaultTol = 1e-10;
inline constexpr long long kDefaultMaxIter = 100000;

// Certified Perron data at the returned vector: rho is the spectral-radius
// estimate, cw_lower/cw_upper the Collatz-Wielandt bounds at `vector`
// (cw_lower <= rho <= cw_upper up to 1e-12 slack), residual = ||A v - rho v||_1.
struct PerronCertificate {
  double rho = 0.0;
  OrderedVector vector;
  double cw_lower = 0.0;
  double cw_upper = 0.0;
  double residual = 0.0;
  long long iterations = 0;
  bool strictly_positive = false;
  bool converged = false;
  bool nilpotent = false;
};

// Evaluation of the characteristic-polynomial derivative at rho as the sum of
// principal-minor characteristic polynomials, with a finite-difference
// cross-check of d/dX det(XI - A).
struct SimplicityReport {
  double derivative_value = 0.0;
  std::vector<double> summand_values;
  bool simple = false;
  double fd_crosscheck = 0.0;
  double threshold = 0.0;
};

enum class Dominance { DOMINATED_STRICT, DOMINATED_EQ_RADIUS, NOT_DOMINATED };

struct DominanceReport {
  Dominance verdict = Dominance::NOT_DOMINATED;
  double rho_b = 0.0;
  double rho_m = 0.0;
  // Set on the equal-radius branch: |B| == M entrywise (within 1e-9) and the
  // moduli of peripheral eigenvectors of B are Perron vectors of M.
  bool abs_equals_m = false;
  bool peripheral_vectors_check = false;
};

struct ImproveResult {
  OrderedVector y;
  double r_new = 0.0;
};

struct KreinRutmanBound {
  double mu = 0.0;          // eigenvalue of A, >= lambda
  OrderedVector eigenvector;  // in the orthant, unit 1-norm
  double residual = 0.0;
  long long iterations = 0;
};

// min/max of (Ax)_j / x_j over the support of x. upper is +infinity when some
// coordinate with x_j = 0 has (Ax)_j > 0; coordinates with x_j = 0 and
// (Ax)_j = 0 are excluded from both bounds.
std::pair<double, double> collatz_wielandt(const NonnegativeMatrix& a, const OrderedVector& x);

// Simplex fixed-point iteration for a general nonnegative matrix. Nilpotent
// inputs (decided exactly on the boolean support) short-circuit to rho = 0;
// otherwise iterates x -> A'x / ||A'x||_1 with the primitive surrogate
// A' = (I+A)/2 and recovers rho = 2 rho(A') - 1.
PerronCertificate perron_fixed_point(const NonnegativeMatrix& a, double tol = kDefaultTol,
                                     long long max_iter = kDefaultMaxIter);

// One strict improvement step of the Collatz-Wielandt lower bound: given
// Ax >= rx with Ax != rx and A irreducible, y = normalized (I+A)^{n-1} x is
// strictly positive and min_j (Ay)_j / y_j > r.
ImproveResult improve_bound(const NonnegativeMatrix& a, const OrderedVector& x, double r);

// Full strong-form solve for an irreducible matrix: strictly positive vector,
// rho > 0, simplicity verified. Stalls are broken with improve_bound.
PerronCertificate perron_irreducible(const NonnegativeMatrix& a, double tol = kDefaultTol);

SimplicityReport simplicity_check(const NonnegativeMatrix& a, double rho);

// Lemma-1.12-style comparison of a complex matrix B against an irreducible
// majorant M with |B| <= M.
DominanceReport dominance_compare(const ComplexMatrix& b, const NonnegativeMatrix& m);

// From a witness pair A^p x >= lambda^p x (x >= 0, lambda > 0), produces an
// eigenpair of A with eigenvalue mu >= lambda: finds a cone eigenvector v of
// A^p on the invariant simplex slice, then lifts it through
// w = sum_{i<p} nu^{(p-1-i)/p} A^i v.
KreinRutmanBound krein_rutman_lower(const NonnegativeMatrix& a, const OrderedVector& x, int p,
                                    double lambda);

}  // namespace pfc
