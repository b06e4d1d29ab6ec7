#pragma once

#include <optional>
#include <vector>

#include "pfc/matrix.hpp"

namespace pfc {

// Outcome of the irreducibility test. support_growth lists |P_m| for
// m = 0..n-1, where P_m is the support of (I+A)^m e_0; method_agreement
// records whether the strong-connectivity verdict matches the boolean test
// (I+A)^{n-1} > 0. For a reducible matrix (n >= 2), witness is a nonempty
// proper index set closed under out-edges of the support digraph.
struct IrreducibilityReport {
  bool irreducible = false;
  bool method_agreement = false;
  std::vector<int> support_growth;
  std::vector<int> witness;
};

struct PrimitivityResult {
  bool primitive = false;
  std::optional<long long> exponent;  // smallest k with A^k > 0
};

// Period m with the ordered cyclic classes and the permutation realizing the
// cyclic block normal form: B(i,j) = A(perm[i], perm[j]) has nonzero entries
// only in blocks (j, j+1 mod m).
struct CyclicStructure {
  int period = 1;
  std::vector<std::vector<int>> classes;
  std::vector<int> permutation;
};

// Permutation bringing a reducible matrix to block upper triangular form,
// with the diagonal block sizes in order.
struct BlockTriangularForm {
  std::vector<int> permutation;
  std::vector<int> block_sizes;
};

IrreducibilityReport is_irreducible(const NonnegativeMatrix& a);

PrimitivityResult is_primitive(const NonnegativeMatrix& a);

// Period of an irreducible matrix via gcd of BFS level defects. Errors on
// reducible input. 1x1 matrices have period 1.
int period(const NonnegativeMatrix& a);

CyclicStructure cyclic_normal_form(const NonnegativeMatrix& a);

BlockTriangularForm reducible_block_form(const NonnegativeMatrix& a);

namespace detail {
// Strongly connected components of the support digraph {(i,j): a_ij > 0},
// returned in reverse topological order (every edge leaves a component with a
// higher list index or stays inside).
std::vector<std::vector<int>> strongly_connected_components(const RealMatrix& a);
}  // namespace detail

}  // namespace pfc
