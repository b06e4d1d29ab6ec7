#include "pfc/jentzsch.hpp"

#include <cmath>
#include <sstream>

#include "pfc/eigen_oracle.hpp"
#include "pfc/kernels.hpp"
#include "pfc/perron.hpp"
#include "pfc/structure.hpp"

namespace pfc {

Kernel const_kernel(double c) {
  if (c < 0.0) throw InputError("const_kernel: negative constant");
  return {[c](double, double) { return c; }, c > 0.0, "const:" + std::to_string(c)};
}

Kernel poly_kernel(std::vector<double> coeffs) {
  if (coeffs.empty()) throw InputError("poly_kernel: empty coefficient list");
  bool all_nonneg = true;
  for (double c : coeffs)
    if (c < 0.0) all_nonneg = false;
  const bool positive = all_nonneg && coeffs[0] > 0.0;
  std::string desc = "poly:";
  for (size_t i = 0; i < coeffs.size(); ++i)
    desc += (i ? "," : "") + std::to_string(coeffs[i]);
  return {[coeffs](double s, double t) {
            const double st = s * t;
            double acc = 0.0;
            for (size_t m = coeffs.size(); m-- > 0;) acc = acc * st + coeffs[m];
            return acc;
          },
          positive, std::move(desc)};
}

Kernel exp_kernel() {
  return {[](double s, double t) { return std::exp(s * t); }, true, "exp"};
}

Kernel make_named_kernel(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);

  if (name == "exp") return exp_kernel();
  if (name == "const") return const_kernel(args.empty() ? 1.0 : std::stod(args));
  if (name == "poly") {
    if (args.empty()) return poly_kernel({1.0, 1.0});
    std::vector<double> coeffs;
    std::stringstream ss(args);
    std::string tok;
    while (std::getline(ss, tok, ',')) coeffs.push_back(std::stod(tok));
    return poly_kernel(std::move(coeffs));
  }
  throw InputError("make_named_kernel: unknown kernel spec '" + spec + "'");
}

NonnegativeMatrix discretize(const Kernel& kernel, const QuadratureRule& rule) {
  const int n = rule.size();
  RealMatrix m(n);
  kernels::nystrom_fill(m, rule.nodes, rule.weights, kernel.evaluator);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (m(i, j) < 0.0 && kernel.evaluator(rule.nodes[i], rule.nodes[j]) < kNegClamp)
        throw InputError("discretize: negative kernel sample at (s,t) = (" +
                         std::to_string(rule.nodes[i]) + "," + std::to_string(rule.nodes[j]) + ")");
    }
  }
  return NonnegativeMatrix(std::move(m));
}

JentzschReport jentzsch_analyze(const Kernel& kernel, const QuadratureRule& rule) {
  const NonnegativeMatrix m = discretize(kernel, rule);
  const int n = m.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m(i, j) <= 0.0)
        throw InputError("jentzsch_analyze: kernel is not strictly positive at node pair (" +
                         std::to_string(i) + "," + std::to_string(j) + ")");

  const PerronCertificate cert = perron_irreducible(m);
  JentzschReport report;
  report.rho = cert.rho;
  report.eigenfunction = cert.vector.coords();
  report.min_eigenfunction = report.eigenfunction[0];
  for (double v : report.eigenfunction)
    report.min_eigenfunction = std::min(report.min_eigenfunction, v);
  if (n > 1) {
    const auto spec = oracle::spectrum(m.raw());
    report.gap_ratio = std::abs(spec[1]) / cert.rho;
  }
  report.simple = simplicity_check(m, cert.rho).simple;
  return report;
}

SchaeferResult schaefer_check(const NonnegativeMatrix& a) {
  const auto comps = detail::strongly_connected_components(a.raw());
  if (comps.size() == 1) return {true, {}};

  // Zero block mass over (X-S) x S means no support edge enters S, so a
  // violating S is any union of components without incoming condensation
  // edges; take the source component containing the smallest index.
  const int n = a.dim();
  std::vector<int> comp_of(n);
  for (size_t c = 0; c < comps.size(); ++c)
    for (int v : comps[c]) comp_of[v] = static_cast<int>(c);
  std::vector<bool> has_incoming(comps.size(), false);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a(i, j) > 0.0 && comp_of[i] != comp_of[j]) has_incoming[comp_of[j]] = true;
  int best = -1;
  for (size_t c = 0; c < comps.size(); ++c)
    if (!has_incoming[c] && (best < 0 || comps[c].front() < comps[best].front()))
      best = static_cast<int>(c);
  return {false, comps[best]};
}

RefinementStudy refine_study(const Kernel& kernel, const std::vector<int>& sizes) {
  if (sizes.empty()) throw InputError("refine_study: empty size list");
  for (size_t i = 1; i < sizes.size(); ++i)
    if (sizes[i] <= sizes[i - 1]) throw InputError("refine_study: sizes must be increasing");

  RefinementStudy study;
  study.sizes = sizes;
  for (int n : sizes) {
    const auto report = jentzsch_analyze(kernel, gauss_legendre_01(n));
    if (!study.rhos.empty()) study.diffs.push_back(std::abs(report.rho - study.rhos.back()));
    study.rhos.push_back(report.rho);
  }
  return study;
}

}  // namespace pfc
