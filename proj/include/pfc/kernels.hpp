#pragma once

#include <cstdint>
#include <vector>

#include "pfc/matrix.hpp"

// Dense inner-loop kernels. Each kernel exists twice: a plain serial
// reference under kernels::serial, and an OpenMP version parallelized over
// output rows. Both compute every output element with the identical
// sequential inner loop, so results are bitwise equal; tests rely on that.
// The unqualified names dispatch to the OpenMP version above a size cutoff.

namespace pfc::kernels {

// Below this dimension the parallel versions fall back to the serial loop.
inline constexpr int kParallelCutoff = 64;

namespace serial {

void matvec(const RealMatrix& a, const double* x, double* y);
RealMatrix matmul(const RealMatrix& a, const RealMatrix& b);

// Fills m(i,j) = f(s_i, t_j) * w_j for a Nystrom-style operator.
template <typename F>
void nystrom_fill(RealMatrix& m, const std::vector<double>& s, const std::vector<double>& w,
                  F&& f) {
  const int n = m.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = f(s[i], s[j]) * w[j];
}

}  // namespace serial

void matvec(const RealMatrix& a, const double* x, double* y);
RealMatrix matmul(const RealMatrix& a, const RealMatrix& b);

template <typename F>
void nystrom_fill(RealMatrix& m, const std::vector<double>& s, const std::vector<double>& w,
                  F&& f) {
  const int n = m.n;
#pragma omp parallel for schedule(static) if (n >= kParallelCutoff)
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = f(s[i], s[j]) * w[j];
}

// Real matrix power by repeated squaring; exp >= 0.
RealMatrix matpow(const RealMatrix& a, long long exp);

// Square boolean matrix with bit-packed rows; used for support patterns.
struct BoolMatrix {
  int n = 0;
  int wpr = 0;  // 64-bit words per row
  std::vector<uint64_t> bits;

  BoolMatrix() = default;
  explicit BoolMatrix(int dim);

  bool get(int i, int j) const {
    return (bits[static_cast<size_t>(i) * wpr + (j >> 6)] >> (j & 63)) & 1u;
  }
  void set(int i, int j) { bits[static_cast<size_t>(i) * wpr + (j >> 6)] |= uint64_t(1) << (j & 63); }

  bool all_true() const;
  bool all_false() const;

  static BoolMatrix support(const RealMatrix& a);  // entries > 0, exact
  static BoolMatrix identity(int dim);
  BoolMatrix with_identity() const;  // bitwise OR with the identity
};

namespace serial {
BoolMatrix bool_matmul(const BoolMatrix& a, const BoolMatrix& b);
}
BoolMatrix bool_matmul(const BoolMatrix& a, const BoolMatrix& b);
BoolMatrix bool_matpow(const BoolMatrix& a, long long exp);

// det(A) via LU with partial pivoting; returns 0 on exact singularity.
double lu_determinant(RealMatrix a);

}  // namespace pfc::kernels
