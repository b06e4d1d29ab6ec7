#include "pfc/matrix.hpp"

#include <cmath>

#include "pfc/kernels.hpp"

namespace pfc {

RealMatrix RealMatrix::identity(int dim) {
  RealMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

NonnegativeMatrix::NonnegativeMatrix(RealMatrix m) : m_(std::move(m)) {
  if (m_.n < 1) throw InputError("NonnegativeMatrix: dimension must be >= 1");
  if (m_.n > kMaxDim)
    throw InputError("NonnegativeMatrix: dimension " + std::to_string(m_.n) + " exceeds cap " +
                     std::to_string(kMaxDim));
  if (m_.a.size() != static_cast<size_t>(m_.n) * m_.n)
    throw InputError("NonnegativeMatrix: entry count does not match dimension");
  for (int i = 0; i < m_.n; ++i) {
    for (int j = 0; j < m_.n; ++j) {
      double& v = m_(i, j);
      if (std::isnan(v)) throw InputError("NonnegativeMatrix: NaN entry");
      if (v < 0.0) {
        if (v < kNegClamp)
          throw InputError("NonnegativeMatrix: negative entry " + std::to_string(v) + " at (" +
                           std::to_string(i) + "," + std::to_string(j) + ")");
        v = 0.0;
        clamped_ = true;
      }
    }
  }
}

OrderedVector::OrderedVector(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw InputError("OrderedVector: empty coordinate list");
  for (double c : coords_) norm1_ += std::abs(c);
}

const char* to_string(Ordering o) {
  switch (o) {
    case Ordering::EQ: return "EQ";
    case Ordering::STRICT_LT: return "STRICT_LT";
    case Ordering::STRICT_GT: return "STRICT_GT";
    case Ordering::LEQ: return "LEQ";
    case Ordering::GEQ: return "GEQ";
    case Ordering::INCOMPARABLE: return "INCOMPARABLE";
  }
  return "?";
}

NonnegativeMatrix entrywise_abs(const ComplexMatrix& m) {
  RealMatrix out(m.n);
  for (size_t k = 0; k < m.a.size(); ++k) out.a[k] = std::abs(m.a[k]);
  return NonnegativeMatrix(std::move(out));
}

Ordering entrywise_cmp(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw InputError("entrywise_cmp: dimension mismatch");
  bool all_le = true, all_ge = true, all_lt = true, all_gt = true;
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] > y[i]) all_le = false;
    if (x[i] < y[i]) all_ge = false;
    if (x[i] >= y[i]) all_lt = false;
    if (x[i] <= y[i]) all_gt = false;
  }
  if (all_le && all_ge) return Ordering::EQ;
  if (all_lt) return Ordering::STRICT_LT;
  if (all_gt) return Ordering::STRICT_GT;
  if (all_le) return Ordering::LEQ;
  if (all_ge) return Ordering::GEQ;
  return Ordering::INCOMPARABLE;
}

Ordering entrywise_cmp(const OrderedVector& x, const OrderedVector& y) {
  return entrywise_cmp(x.coords(), y.coords());
}

Ordering entrywise_cmp(const NonnegativeMatrix& x, const NonnegativeMatrix& y) {
  if (x.dim() != y.dim()) throw InputError("entrywise_cmp: dimension mismatch");
  return entrywise_cmp(x.raw().a, y.raw().a);
}

OrderedVector apply(const NonnegativeMatrix& a, const OrderedVector& x) {
  if (a.dim() != x.dim()) throw InputError("apply: dimension mismatch");
  std::vector<double> y(static_cast<size_t>(a.dim()));
  kernels::matvec(a.raw(), x.coords().data(), y.data());
  return OrderedVector(std::move(y));
}

OrderedVector normalize_1(const OrderedVector& x) {
  if (x.norm1() == 0.0) throw InputError("normalize_1: zero vector");
  std::vector<double> y(x.coords());
  for (double& c : y) c /= x.norm1();
  return OrderedVector(std::move(y));
}

}  // namespace pfc
