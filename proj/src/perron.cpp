#include "pfc/perron.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pfc/eigen_oracle.hpp"
#include "pfc/kernels.hpp"
#include "pfc/structure.hpp"

namespace pfc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double sum_abs(const std::vector<double>& v) {
  double s = 0.0;
  for (double c : v) s += std::abs(c);
  return s;
}

bool is_nonnegative(const OrderedVector& x) {
  for (int i = 0; i < x.dim(); ++i)
    if (x[i] < 0.0) return false;
  return true;
}

void require_admissible(const OrderedVector& x, const char* who) {
  if (!is_nonnegative(x)) throw InputError(std::string(who) + ": vector has negative coordinates");
  if (x.norm1() == 0.0) throw InputError(std::string(who) + ": zero vector");
}

bool support_irreducible(const NonnegativeMatrix& a) {
  return detail::strongly_connected_components(a.raw()).size() == 1;
}

// One simplex step of x -> (x + Ax) / ||x + Ax||_1 for nonnegative x; returns
// the new iterate together with ||Ax||_1 and the eigen-residual of A at x.
struct StepResult {
  std::vector<double> next;
  double rho_est;
  double residual;
};

StepResult surrogate_step(const RealMatrix& a, const std::vector<double>& x) {
  const int n = a.n;
  std::vector<double> ax(n);
  kernels::matvec(a, x.data(), ax.data());
  double rho = 0.0;
  for (double v : ax) rho += v;
  double res = 0.0;
  for (int i = 0; i < n; ++i) res += std::abs(ax[i] - rho * x[i]);
  std::vector<double> next(n);
  const double scale = 1.0 / (1.0 + rho);
  for (int i = 0; i < n; ++i) next[i] = (x[i] + ax[i]) * scale;
  return {std::move(next), rho, res};
}

PerronCertificate certify(const NonnegativeMatrix& a, std::vector<double> x, long long iters,
                          bool converged) {
  OrderedVector v{std::move(x)};
  std::vector<double> av(v.dim());
  kernels::matvec(a.raw(), v.coords().data(), av.data());
  PerronCertificate cert{.vector = v};
  for (double c : av) cert.rho += c;
  for (int i = 0; i < v.dim(); ++i) cert.residual += std::abs(av[i] - cert.rho * v[i]);
  auto [lo, hi] = collatz_wielandt(a, v);
  cert.cw_lower = lo;
  cert.cw_upper = hi;
  cert.iterations = iters;
  cert.converged = converged;
  cert.strictly_positive = true;
  for (int i = 0; i < v.dim(); ++i)
    if (v[i] <= kPosTol) cert.strictly_positive = false;
  return cert;
}

PerronCertificate nilpotent_certificate(const NonnegativeMatrix& a) {
  // A nilpotent support digraph is acyclic, so some column is all zero; the
  // corresponding basis vector is an exact eigenvector for eigenvalue 0.
  const int n = a.dim();
  int zero_col = -1;
  for (int j = 0; j < n && zero_col < 0; ++j) {
    bool all_zero = true;
    for (int i = 0; i < n; ++i)
      if (a(i, j) > 0.0) all_zero = false;
    if (all_zero) zero_col = j;
  }
  std::vector<double> e(n, 0.0);
  e[zero_col] = 1.0;
  PerronCertificate cert = certify(a, std::move(e), 0, true);
  cert.nilpotent = true;
  return cert;
}

}  // namespace

std::pair<double, double> collatz_wielandt(const NonnegativeMatrix& a, const OrderedVector& x) {
  if (a.dim() != x.dim()) throw InputError("collatz_wielandt: dimension mismatch");
  require_admissible(x, "collatz_wielandt");
  std::vector<double> ax(x.dim());
  kernels::matvec(a.raw(), x.coords().data(), ax.data());
  double lo = kInf, hi = -kInf;
  bool unsupported_mass = false;
  for (int j = 0; j < x.dim(); ++j) {
    if (x[j] > 0.0) {
      const double ratio = ax[j] / x[j];
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    } else if (ax[j] > 0.0) {
      unsupported_mass = true;
    }
  }
  if (unsupported_mass) hi = kInf;
  return {lo, hi};
}

PerronCertificate perron_fixed_point(const NonnegativeMatrix& a, double tol, long long max_iter) {
  const int n = a.dim();
  const auto support = kernels::BoolMatrix::support(a.raw());
  if (kernels::bool_matpow(support, n).all_false()) return nilpotent_certificate(a);

  std::vector<double> x(n, 1.0 / n);
  for (long long iter = 1; iter <= max_iter; ++iter) {
    auto step = surrogate_step(a.raw(), x);
    if (step.residual <= tol) return certify(a, std::move(x), iter, true);
    x = std::move(step.next);
  }
  return certify(a, std::move(x), max_iter, false);
}

ImproveResult improve_bound(const NonnegativeMatrix& a, const OrderedVector& x, double r) {
  const int n = a.dim();
  if (x.dim() != n) throw InputError("improve_bound: dimension mismatch");
  require_admissible(x, "improve_bound");
  if (!support_irreducible(a)) throw InputError("improve_bound: matrix is reducible");

  std::vector<double> ax(n);
  kernels::matvec(a.raw(), x.coords().data(), ax.data());
  double max_x = 0.0;
  for (int i = 0; i < n; ++i) max_x = std::max(max_x, x[i]);
  const double slack = 1e-12 * std::max(1.0, std::abs(r)) * std::max(1.0, max_x);
  double gap = 0.0;
  for (int i = 0; i < n; ++i) {
    if (ax[i] < r * x[i] - slack) throw InputError("improve_bound: Ax >= rx fails");
    gap += std::abs(ax[i] - r * x[i]);
  }
  if (gap == 0.0) throw InputError("improve_bound: Ax equals rx exactly");

  // y = normalized (I+A)^{n-1} x, renormalizing each factor to keep scale.
  std::vector<double> y = x.coords();
  std::vector<double> ay(n);
  for (int step = 0; step < n - 1; ++step) {
    kernels::matvec(a.raw(), y.data(), ay.data());
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
      y[i] += ay[i];
      s += y[i];
    }
    for (int i = 0; i < n; ++i) y[i] /= s;
  }
  kernels::matvec(a.raw(), y.data(), ay.data());
  double r_new = kInf;
  for (int i = 0; i < n; ++i) r_new = std::min(r_new, ay[i] / y[i]);
  return {OrderedVector(std::move(y)), r_new};
}

PerronCertificate perron_irreducible(const NonnegativeMatrix& a, double tol) {
  const int n = a.dim();
  if (!support_irreducible(a)) throw InputError("perron_irreducible: matrix is reducible");
  if (n == 1 && a(0, 0) == 0.0)
    throw InputError("perron_irreducible: 1x1 zero matrix has spectral radius 0");

  std::vector<double> x(n, 1.0 / n);
  double best_residual = kInf;
  long long since_progress = 0;
  bool done = false;
  long long iter = 1;
  for (; iter <= kDefaultMaxIter; ++iter) {
    auto step = surrogate_step(a.raw(), x);
    if (step.residual <= tol) {
      done = true;
      break;
    }
    if (step.residual < 0.999 * best_residual) {
      best_residual = step.residual;
      since_progress = 0;
    } else if (++since_progress >= 50) {
      // Stalled: jump with the Lemma-1.9 step, which is strictly positive and
      // strictly improves the Collatz-Wielandt lower bound.
      OrderedVector cur{x};
      auto [lo, hi] = collatz_wielandt(a, cur);
      (void)hi;
      x = improve_bound(a, cur, lo).y.coords();
      since_progress = 0;
      continue;
    }
    x = std::move(step.next);
  }
  if (!done) throw ConvergenceError("perron_irreducible: no convergence within budget");
  PerronCertificate cert = certify(a, std::move(x), iter, true);

  if (!cert.strictly_positive)
    throw ConvergenceError("perron_irreducible: converged vector is not strictly positive");
  if (!simplicity_check(a, cert.rho).simple)
    throw ConvergenceError("perron_irreducible: simplicity check failed at rho");
  return cert;
}

SimplicityReport simplicity_check(const NonnegativeMatrix& a, double rho) {
  const int n = a.dim();
  if (rho < 0.0) throw InputError("simplicity_check: rho must be >= 0");
  SimplicityReport report;
  report.summand_values.resize(n);

  for (int j = 0; j < n; ++j) {
    if (n == 1) {
      report.summand_values[j] = 1.0;  // empty determinant
      continue;
    }
    RealMatrix minor(n - 1);
    for (int r = 0, mr = 0; r < n; ++r) {
      if (r == j) continue;
      for (int c = 0, mc = 0; c < n; ++c) {
        if (c == j) continue;
        minor(mr, mc) = (r == c ? rho : 0.0) - a(r, c);
        ++mc;
      }
      ++mr;
    }
    report.summand_values[j] = kernels::lu_determinant(std::move(minor));
  }
  for (double v : report.summand_values) report.derivative_value += v;

  const auto char_poly = [&](double t) {
    RealMatrix m(n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) m(r, c) = (r == c ? t : 0.0) - a(r, c);
    return kernels::lu_determinant(std::move(m));
  };
  const double h = 1e-5 * std::max(1.0, rho);
  report.fd_crosscheck = (char_poly(rho + h) - char_poly(rho - h)) / (2.0 * h);

  report.threshold = 1e-8 * std::pow(std::max(1.0, rho), n - 1);
  report.simple = report.derivative_value > report.threshold;
  return report;
}

DominanceReport dominance_compare(const ComplexMatrix& b, const NonnegativeMatrix& m) {
  if (b.n != m.dim()) throw InputError("dominance_compare: dimension mismatch");
  if (!support_irreducible(m)) throw InputError("dominance_compare: M is reducible");

  DominanceReport report;
  const NonnegativeMatrix abs_b = entrywise_abs(b);
  const Ordering ord = entrywise_cmp(abs_b, m);
  if (ord != Ordering::LEQ && ord != Ordering::EQ && ord != Ordering::STRICT_LT) {
    report.verdict = Dominance::NOT_DOMINATED;
    return report;
  }

  report.rho_b = oracle::spectral_radius(b);
  report.rho_m = perron_irreducible(m).rho;
  const double eq_tol = 1e-9 * std::max(1.0, report.rho_m);
  if (report.rho_b < report.rho_m - eq_tol) {
    report.verdict = Dominance::DOMINATED_STRICT;
    return report;
  }
  report.verdict = Dominance::DOMINATED_EQ_RADIUS;

  double max_diff = 0.0;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) max_diff = std::max(max_diff, m(i, j) - abs_b(i, j));
  report.abs_equals_m = max_diff <= 1e-9;

  // Moduli of peripheral eigenvectors of B must be Perron vectors of M.
  report.peripheral_vectors_check = true;
  const auto pairs = oracle::eigenpairs(b);
  for (size_t k = 0; k < pairs.eigenvalues.size(); ++k) {
    if (std::abs(pairs.eigenvalues[k]) < report.rho_b - eq_tol) continue;
    std::vector<double> mod(m.dim());
    double s = 0.0;
    for (int i = 0; i < m.dim(); ++i) {
      mod[i] = std::abs(pairs.eigenvectors[k][i]);
      s += mod[i];
    }
    for (double& c : mod) c /= s;
    std::vector<double> mmod(m.dim());
    kernels::matvec(m.raw(), mod.data(), mmod.data());
    double res = 0.0;
    for (int i = 0; i < m.dim(); ++i) res += std::abs(mmod[i] - report.rho_m * mod[i]);
    if (res > 1e-7 * std::max(1.0, report.rho_m)) report.peripheral_vectors_check = false;
  }
  return report;
}

KreinRutmanBound krein_rutman_lower(const NonnegativeMatrix& a, const OrderedVector& x, int p,
                                    double lambda) {
  const int n = a.dim();
  if (x.dim() != n) throw InputError("krein_rutman_lower: dimension mismatch");
  require_admissible(x, "krein_rutman_lower");
  if (lambda <= 0.0) throw InputError("krein_rutman_lower: lambda must be positive");
  if (p < 1) throw InputError("krein_rutman_lower: p must be >= 1");

  const RealMatrix ap = kernels::matpow(a.raw(), p);
  const double lp = std::pow(lambda, p);
  {
    std::vector<double> apx(n);
    kernels::matvec(ap, x.coords().data(), apx.data());
    double max_x = 0.0;
    for (int i = 0; i < n; ++i) max_x = std::max(max_x, x[i]);
    const double slack = 1e-12 * std::max(1.0, lp * max_x);
    for (int i = 0; i < n; ++i)
      if (apx[i] < lp * x[i] - slack)
        throw InputError("krein_rutman_lower: witness inequality A^p x >= lambda^p x fails");
  }

  // Averaged fixed-point iteration on the simplex slice of the invariant set
  // {y >= 0, ||y||_1 = 1, A^p y >= lambda^p y}; every iterate keeps
  // ||A^p y||_1 >= lambda^p, so the limiting eigenvalue cannot drop below it.
  std::vector<double> y = normalize_1(x).coords();
  std::vector<double> apy(n);
  double nu = 0.0;
  long long iters = 0;
  double residual = kInf;
  for (long long iter = 1; iter <= kDefaultMaxIter; ++iter) {
    kernels::matvec(ap, y.data(), apy.data());
    nu = sum_abs(apy);
    residual = 0.0;
    for (int i = 0; i < n; ++i) residual += std::abs(apy[i] - nu * y[i]);
    iters = iter;
    if (residual <= kDefaultTol) break;
    for (int i = 0; i < n; ++i) y[i] = 0.5 * (y[i] + apy[i] / nu);
  }
  if (residual > kDefaultTol)
    throw ConvergenceError("krein_rutman_lower: eigenvector iteration did not converge");

  const double mu = std::pow(nu, 1.0 / p);
  std::vector<double> lifted(n, 0.0), cur = y, tmp(n);
  for (int i = 0; i < p; ++i) {
    const double coeff = std::pow(mu, p - 1 - i);
    for (int k = 0; k < n; ++k) lifted[k] += coeff * cur[k];
    if (i + 1 < p) {
      kernels::matvec(a.raw(), cur.data(), tmp.data());
      cur.swap(tmp);
    }
  }
  OrderedVector w = normalize_1(OrderedVector(std::move(lifted)));
  std::vector<double> aw(n);
  kernels::matvec(a.raw(), w.coords().data(), aw.data());
  double final_residual = 0.0;
  for (int i = 0; i < n; ++i) final_residual += std::abs(aw[i] - mu * w[i]);
  return {mu, std::move(w), final_residual, iters};
}

}  // namespace pfc
