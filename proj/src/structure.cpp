#include "pfc/structure.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "pfc/kernels.hpp"

namespace pfc {

namespace {

std::vector<std::vector<int>> adjacency(const RealMatrix& a) {
  std::vector<std::vector<int>> adj(a.n);
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j)
      if (a(i, j) > 0.0) adj[i].push_back(j);
  return adj;
}

// BFS levels from vertex 0 following out-edges; -1 for unreachable.
std::vector<int> bfs_levels(const std::vector<std::vector<int>>& adj) {
  std::vector<int> level(adj.size(), -1);
  std::queue<int> q;
  level[0] = 0;
  q.push(0);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj[u])
      if (level[v] < 0) {
        level[v] = level[u] + 1;
        q.push(v);
      }
  }
  return level;
}

}  // namespace

namespace detail {

// Iterative Tarjan; components are emitted sinks-first, so the returned list
// is in reverse topological order of the condensation.
std::vector<std::vector<int>> strongly_connected_components(const RealMatrix& a) {
  const int n = a.n;
  const auto adj = adjacency(a);
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  std::vector<std::vector<int>> comps;
  int next_index = 0;

  struct Frame {
    int v;
    size_t child;
  };
  std::vector<Frame> call;

  for (int root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    call.push_back({root, 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.child < adj[f.v].size()) {
        int w = adj[f.v][f.child++];
        if (index[w] < 0) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        if (low[f.v] == index[f.v]) {
          std::vector<int> c;
          int w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp[w] = static_cast<int>(comps.size());
            c.push_back(w);
          } while (w != f.v);
          std::sort(c.begin(), c.end());
          comps.push_back(std::move(c));
        }
        int v = f.v;
        call.pop_back();
        if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      }
    }
  }
  return comps;
}

}  // namespace detail

IrreducibilityReport is_irreducible(const NonnegativeMatrix& a) {
  const int n = a.dim();
  IrreducibilityReport report;

  const auto comps = detail::strongly_connected_components(a.raw());
  report.irreducible = comps.size() == 1;

  // Boolean cross-check: (I+A)^{n-1} > 0 in saturating arithmetic.
  const auto s = kernels::BoolMatrix::support(a.raw()).with_identity();
  const bool boolean_verdict = kernels::bool_matpow(s, n - 1).all_true();
  report.method_agreement = boolean_verdict == report.irreducible;

  // |P_m| for x = e_0: indices whose component becomes nonzero in (I+A)^m e_0,
  // i.e. vertices reaching 0 within m steps in the support digraph.
  std::vector<std::vector<int>> radj(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a(i, j) > 0.0) radj[j].push_back(i);
  std::vector<int> dist_to_0(n, -1);
  std::queue<int> q;
  dist_to_0[0] = 0;
  q.push(0);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : radj[u])
      if (dist_to_0[v] < 0) {
        dist_to_0[v] = dist_to_0[u] + 1;
        q.push(v);
      }
  }
  report.support_growth.resize(n);
  for (int m = 0; m < n; ++m) {
    int count = 0;
    for (int v = 0; v < n; ++v)
      if (dist_to_0[v] >= 0 && dist_to_0[v] <= m) ++count;
    report.support_growth[m] = count;
  }

  if (!report.irreducible && n >= 2) report.witness = comps.front();  // a sink component
  return report;
}

PrimitivityResult is_primitive(const NonnegativeMatrix& a) {
  const int n = a.dim();
  if (n == 1) {
    if (a(0, 0) > 0.0) return {true, 1};
    return {false, std::nullopt};
  }
  const auto comps = detail::strongly_connected_components(a.raw());
  if (comps.size() != 1) return {false, std::nullopt};
  if (period(a) != 1) return {false, std::nullopt};

  // Smallest k with A^k > 0; the predicate is monotone in k because an
  // irreducible matrix has no zero row, so binary search under the Wielandt
  // bound n^2 - 2n + 2 is exact.
  const long long bound = static_cast<long long>(n) * n - 2LL * n + 2;
  const auto s = kernels::BoolMatrix::support(a.raw());
  if (!kernels::bool_matpow(s, bound).all_true()) return {false, std::nullopt};
  long long lo = 1, hi = bound;
  while (lo < hi) {
    const long long mid = lo + (hi - lo) / 2;
    if (kernels::bool_matpow(s, mid).all_true())
      hi = mid;
    else
      lo = mid + 1;
  }
  return {true, lo};
}

int period(const NonnegativeMatrix& a) {
  const int n = a.dim();
  const auto adj = adjacency(a.raw());
  if (n > 1 && detail::strongly_connected_components(a.raw()).size() != 1)
    throw InputError("period: matrix is reducible");
  if (n == 1) return 1;

  const auto level = bfs_levels(adj);
  long long g = 0;
  for (int u = 0; u < n; ++u)
    for (int v : adj[u]) g = std::gcd(g, static_cast<long long>(level[u]) + 1 - level[v]);
  return g == 0 ? 1 : static_cast<int>(g);
}

CyclicStructure cyclic_normal_form(const NonnegativeMatrix& a) {
  const int n = a.dim();
  CyclicStructure cs;
  cs.period = period(a);  // also validates irreducibility

  const auto level = bfs_levels(adjacency(a.raw()));
  cs.classes.assign(cs.period, {});
  for (int v = 0; v < n; ++v) cs.classes[level[v] % cs.period].push_back(v);
  for (const auto& cls : cs.classes) cs.permutation.insert(cs.permutation.end(), cls.begin(), cls.end());
  return cs;
}

BlockTriangularForm reducible_block_form(const NonnegativeMatrix& a) {
  const int n = a.dim();
  if (n < 2) throw InputError("reducible_block_form: requires n >= 2");
  auto comps = detail::strongly_connected_components(a.raw());
  if (comps.size() == 1) throw InputError("reducible_block_form: matrix is irreducible");

  // Tarjan emits sinks first; reversing gives a topological order in which
  // every edge points into the same or a later block.
  std::reverse(comps.begin(), comps.end());
  BlockTriangularForm form;
  for (const auto& c : comps) {
    form.block_sizes.push_back(static_cast<int>(c.size()));
    form.permutation.insert(form.permutation.end(), c.begin(), c.end());
  }
  return form;
}

}  // namespace pfc
