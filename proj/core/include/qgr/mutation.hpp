#pragma once

#include <vector>

#include "qgr/laurent.hpp"
#include "qgr/quiver.hpp"

namespace qgr {

// Seed of the cluster structure: skew-symmetric exchange matrix plus the
// cluster variables written as Laurent polynomials in the initial cluster.
struct Seed {
  IntMatrix b;
  std::vector<LaurentPoly> x;
};

inline bool operator==(const Seed& a, const Seed& b) { return a.b == b.b && a.x == b.x; }

// b_ij = #arrows(i -> j) - #arrows(j -> i)
IntMatrix exchange_matrix(const Quiver& q);
Seed initial_seed(const Quiver& q);

IntMatrix mutate_matrix(const IntMatrix& b, int k);
Seed mutate(const Seed& s, int k); // k is 0-based
Seed apply_sequence(Seed s, const std::vector<int>& seq);

// Distinct cluster variables collected over all seeds reachable by at most
// depth mutations. BFS deduplicates by exact seed equality (matrix plus
// variable tuple), so symmetric revisits are re-entered but harmless.
std::vector<LaurentPoly> enumerate_cluster_variables(const Quiver& q, int depth);

// Monomials of total degree <= bound in the variables of one reached
// cluster, collected over all reachable seeds; includes 1.
std::vector<LaurentPoly> cluster_monomials(const Quiver& q, int depth, int bound);

// Rewrite elem, a Laurent polynomial in the initial cluster, in terms of the
// cluster reached by seq. Runs the reversed sequence from a formal seed
// carrying the mutated matrix, which expresses the initial variables in the
// target cluster, then substitutes. Exactness of the final division is the
// Laurent phenomenon at work; DivisionError here means elem was not in the
// cluster algebra.
LaurentPoly expand_in_cluster(const Quiver& q, const LaurentPoly& elem,
                              const std::vector<int>& seq);

} // namespace qgr
