#include "pfc/eigen_oracle.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <numeric>

namespace pfc::oracle {

namespace {

Eigen::MatrixXcd to_eigen(const RealMatrix& a) {
  Eigen::MatrixXcd m(a.n, a.n);
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j) m(i, j) = a(i, j);
  return m;
}

Eigen::MatrixXcd to_eigen(const ComplexMatrix& a) {
  Eigen::MatrixXcd m(a.n, a.n);
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j) m(i, j) = a(i, j);
  return m;
}

EigenPairs solve(const Eigen::MatrixXcd& m) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, /*computeEigenvectors=*/true);
  if (solver.info() != Eigen::Success)
    throw ConvergenceError("oracle eigensolver failed to converge");

  const int n = static_cast<int>(m.rows());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  const auto& vals = solver.eigenvalues();
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    const double ai = std::abs(vals[i]), aj = std::abs(vals[j]);
    if (ai != aj) return ai > aj;
    return std::arg(vals[i]) < std::arg(vals[j]);
  });

  EigenPairs out;
  out.eigenvalues.reserve(n);
  out.eigenvectors.reserve(n);
  for (int k : order) {
    out.eigenvalues.push_back(vals[k]);
    std::vector<std::complex<double>> v(n);
    for (int i = 0; i < n; ++i) v[i] = solver.eigenvectors()(i, k);
    out.eigenvectors.push_back(std::move(v));
  }
  return out;
}

std::vector<std::complex<double>> values_only(const Eigen::MatrixXcd& m) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw ConvergenceError("oracle eigensolver failed to converge");
  std::vector<std::complex<double>> vals(solver.eigenvalues().data(),
                                         solver.eigenvalues().data() + m.rows());
  std::sort(vals.begin(), vals.end(), [](const auto& x, const auto& y) {
    const double ax = std::abs(x), ay = std::abs(y);
    if (ax != ay) return ax > ay;
    return std::arg(x) < std::arg(y);
  });
  return vals;
}

}  // namespace

std::vector<std::complex<double>> spectrum(const RealMatrix& a) { return values_only(to_eigen(a)); }
std::vector<std::complex<double>> spectrum(const ComplexMatrix& a) {
  return values_only(to_eigen(a));
}

double spectral_radius(const RealMatrix& a) { return std::abs(spectrum(a).front()); }
double spectral_radius(const ComplexMatrix& a) { return std::abs(spectrum(a).front()); }

EigenPairs eigenpairs(const RealMatrix& a) { return solve(to_eigen(a)); }
EigenPairs eigenpairs(const ComplexMatrix& a) { return solve(to_eigen(a)); }

}  // namespace pfc::oracle
