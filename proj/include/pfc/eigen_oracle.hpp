#pragma once

#include <complex>
#include <vector>

#include "pfc/matrix.hpp"

// Reference dense eigensolver. Everything here is oracle machinery: it backs
// the spectral-splitting and dominance comparisons and cross-checks the
// certified solvers, but never replaces them.

namespace pfc::oracle {

// Full eigendecomposition; eigenvalues sorted by (-|lambda|, arg) so output
// order is deterministic. eigenvectors[k] matches eigenvalues[k] and has unit
// Euclidean norm.
struct EigenPairs {
  std::vector<std::complex<double>> eigenvalues;
  std::vector<std::vector<std::complex<double>>> eigenvectors;
};

std::vector<std::complex<double>> spectrum(const RealMatrix& a);
std::vector<std::complex<double>> spectrum(const ComplexMatrix& a);

double spectral_radius(const RealMatrix& a);
double spectral_radius(const ComplexMatrix& a);

EigenPairs eigenpairs(const RealMatrix& a);
EigenPairs eigenpairs(const ComplexMatrix& a);

}  // namespace pfc::oracle
