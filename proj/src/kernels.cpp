#include "pfc/kernels.hpp"

#include <cmath>
#include <utility>

namespace pfc::kernels {

namespace serial {

void matvec(const RealMatrix& a, const double* x, double* y) {
  const int n = a.n;
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    const double* row = &a.a[static_cast<size_t>(i) * n];
    for (int j = 0; j < n; ++j) acc += row[j] * x[j];
    y[i] = acc;
  }
}

RealMatrix matmul(const RealMatrix& a, const RealMatrix& b) {
  const int n = a.n;
  RealMatrix c(n);
  for (int i = 0; i < n; ++i) {
    const double* arow = &a.a[static_cast<size_t>(i) * n];
    double* crow = &c.a[static_cast<size_t>(i) * n];
    for (int k = 0; k < n; ++k) {
      const double aik = arow[k];
      if (aik == 0.0) continue;
      const double* brow = &b.a[static_cast<size_t>(k) * n];
      for (int j = 0; j < n; ++j) crow[j] += aik * brow[j];
    }
  }
  return c;
}

BoolMatrix bool_matmul(const BoolMatrix& a, const BoolMatrix& b) {
  BoolMatrix c(a.n);
  const int n = a.n, wpr = a.wpr;
  for (int i = 0; i < n; ++i) {
    uint64_t* crow = &c.bits[static_cast<size_t>(i) * wpr];
    for (int k = 0; k < n; ++k) {
      if (!a.get(i, k)) continue;
      const uint64_t* brow = &b.bits[static_cast<size_t>(k) * wpr];
      for (int w = 0; w < wpr; ++w) crow[w] |= brow[w];
    }
  }
  return c;
}

}  // namespace serial

void matvec(const RealMatrix& a, const double* x, double* y) {
  const int n = a.n;
#pragma omp parallel for schedule(static) if (n >= kParallelCutoff)
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    const double* row = &a.a[static_cast<size_t>(i) * n];
    for (int j = 0; j < n; ++j) acc += row[j] * x[j];
    y[i] = acc;
  }
}

RealMatrix matmul(const RealMatrix& a, const RealMatrix& b) {
  const int n = a.n;
  RealMatrix c(n);
#pragma omp parallel for schedule(static) if (n >= kParallelCutoff)
  for (int i = 0; i < n; ++i) {
    const double* arow = &a.a[static_cast<size_t>(i) * n];
    double* crow = &c.a[static_cast<size_t>(i) * n];
    for (int k = 0; k < n; ++k) {
      const double aik = arow[k];
      if (aik == 0.0) continue;
      const double* brow = &b.a[static_cast<size_t>(k) * n];
      for (int j = 0; j < n; ++j) crow[j] += aik * brow[j];
    }
  }
  return c;
}

RealMatrix matpow(const RealMatrix& a, long long exp) {
  RealMatrix result = RealMatrix::identity(a.n);
  RealMatrix base = a;
  while (exp > 0) {
    if (exp & 1) result = matmul(result, base);
    exp >>= 1;
    if (exp > 0) base = matmul(base, base);
  }
  return result;
}

BoolMatrix::BoolMatrix(int dim)
    : n(dim), wpr((dim + 63) / 64), bits(static_cast<size_t>(dim) * ((dim + 63) / 64), 0) {}

bool BoolMatrix::all_true() const {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!get(i, j)) return false;
  return true;
}

bool BoolMatrix::all_false() const {
  for (uint64_t w : bits)
    if (w != 0) return false;
  return true;
}

BoolMatrix BoolMatrix::support(const RealMatrix& a) {
  BoolMatrix s(a.n);
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j)
      if (a(i, j) > 0.0) s.set(i, j);
  return s;
}

BoolMatrix BoolMatrix::identity(int dim) {
  BoolMatrix s(dim);
  for (int i = 0; i < dim; ++i) s.set(i, i);
  return s;
}

BoolMatrix BoolMatrix::with_identity() const {
  BoolMatrix s = *this;
  for (int i = 0; i < n; ++i) s.set(i, i);
  return s;
}

BoolMatrix bool_matmul(const BoolMatrix& a, const BoolMatrix& b) {
  BoolMatrix c(a.n);
  const int n = a.n, wpr = a.wpr;
#pragma omp parallel for schedule(static) if (n >= kParallelCutoff)
  for (int i = 0; i < n; ++i) {
    uint64_t* crow = &c.bits[static_cast<size_t>(i) * wpr];
    for (int k = 0; k < n; ++k) {
      if (!a.get(i, k)) continue;
      const uint64_t* brow = &b.bits[static_cast<size_t>(k) * wpr];
      for (int w = 0; w < wpr; ++w) crow[w] |= brow[w];
    }
  }
  return c;
}

BoolMatrix bool_matpow(const BoolMatrix& a, long long exp) {
  BoolMatrix result = BoolMatrix::identity(a.n);
  BoolMatrix base = a;
  while (exp > 0) {
    if (exp & 1) result = bool_matmul(result, base);
    exp >>= 1;
    if (exp > 0) base = bool_matmul(base, base);
  }
  return result;
}

double lu_determinant(RealMatrix a) {
  const int n = a.n;
  double det = 1.0;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = std::abs(a(k, k));
    for (int i = k + 1; i < n; ++i) {
      const double v = std::abs(a(i, k));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best == 0.0) return 0.0;
    if (piv != k) {
      for (int j = k; j < n; ++j) std::swap(a(k, j), a(piv, j));
      det = -det;
    }
    det *= a(k, k);
    const double inv = 1.0 / a(k, k);
    for (int i = k + 1; i < n; ++i) {
      const double factor = a(i, k) * inv;
      if (factor == 0.0) continue;
      for (int j = k + 1; j < n; ++j) a(i, j) -= factor * a(k, j);
    }
  }
  return det;
}

}  // namespace pfc::kernels
