#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace pfc {

// Hard cap on matrix dimension; the toolkit is dense-only by design.
inline constexpr int kMaxDim = 512;

// Threshold for "strictly positive" claims on 1-norm-normalized vectors.
inline constexpr double kPosTol = 1e-12;

// Entries in [kNegClamp, 0) coming from upstream round-off are clamped to 0.
inline constexpr double kNegClamp = -1e-12;

// Invalid or malformed input (bad dimensions, negative entries, parse errors).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& msg) : std::invalid_argument(msg) {}
};

// An iteration ran out of budget before reaching its residual target.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

// Dense square real matrix, row-major.
struct RealMatrix {
  int n = 0;
  std::vector<double> a;

  RealMatrix() = default;
  explicit RealMatrix(int dim) : n(dim), a(static_cast<size_t>(dim) * dim, 0.0) {}
  RealMatrix(int dim, std::vector<double> entries) : n(dim), a(std::move(entries)) {}

  double& operator()(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  double operator()(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

  static RealMatrix identity(int dim);
};

// Dense square complex matrix, row-major.
struct ComplexMatrix {
  int n = 0;
  std::vector<std::complex<double>> a;

  ComplexMatrix() = default;
  explicit ComplexMatrix(int dim) : n(dim), a(static_cast<size_t>(dim) * dim) {}
  ComplexMatrix(int dim, std::vector<std::complex<double>> entries)
      : n(dim), a(std::move(entries)) {}

  std::complex<double>& operator()(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  std::complex<double> operator()(int i, int j) const {
    return a[static_cast<size_t>(i) * n + j];
  }
};

// Entrywise-nonnegative square matrix. Construction validates every entry;
// values in [kNegClamp, 0) are clamped to zero and flagged (quadrature weights
// and similar upstream arithmetic can carry round-off).
class NonnegativeMatrix {
 public:
  explicit NonnegativeMatrix(RealMatrix m);

  int dim() const { return m_.n; }
  double operator()(int i, int j) const { return m_(i, j); }
  const RealMatrix& raw() const { return m_; }
  bool clamped_negatives() const { return clamped_; }

 private:
  RealMatrix m_;
  bool clamped_ = false;
};

// Real vector carrying its 1-norm. Default construction gives the empty
// "unset" value used by report structs; the validating constructor rejects it.
class OrderedVector {
 public:
  OrderedVector() = default;
  explicit OrderedVector(std::vector<double> coords);

  int dim() const { return static_cast<int>(coords_.size()); }
  double operator[](int i) const { return coords_[i]; }
  const std::vector<double>& coords() const { return coords_; }
  double norm1() const { return norm1_; }

 private:
  std::vector<double> coords_;
  double norm1_ = 0.0;
};

// Verdict of the entrywise partial order. STRICT_* requires strict inequality
// in every coordinate; LEQ/GEQ are the non-strict versions.
enum class Ordering { EQ, STRICT_LT, STRICT_GT, LEQ, GEQ, INCOMPARABLE };

const char* to_string(Ordering o);

NonnegativeMatrix entrywise_abs(const ComplexMatrix& m);

Ordering entrywise_cmp(const std::vector<double>& x, const std::vector<double>& y);
Ordering entrywise_cmp(const OrderedVector& x, const OrderedVector& y);
Ordering entrywise_cmp(const NonnegativeMatrix& x, const NonnegativeMatrix& y);

OrderedVector apply(const NonnegativeMatrix& a, const OrderedVector& x);

// Scales x to unit 1-norm. Errors on the zero vector.
OrderedVector normalize_1(const OrderedVector& x);

}  // namespace pfc
