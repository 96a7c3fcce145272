#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qgr/character.hpp"
#include "qgr/dimvec.hpp"
#include "qgr/laurent.hpp"
#include "qgr/tube.hpp"

namespace qgr {

// One generator from a basis listing: its Laurent polynomial in the initial
// cluster, a construction label, and den = denominator_vector(value).
struct BasisElement {
  LaurentPoly value;
  std::string label;
  DimVector den;
};

// The three listings share the cluster-monomial part and differ in how the
// defect-zero layers above the imaginary root are filled: powers of the
// generic variable for g, first-kind Chebyshev values for b, second-kind for c.
struct BasisSets {
  std::vector<BasisElement> b, g, c;
};

// Outcome of one identity check.
struct Report {
  std::string identity;
  std::vector<std::pair<std::string, std::string>> params;
  LaurentPoly lhs, rhs;
  bool pass = false;
};

// {"identity": ..., "params": {...}, "lhs": <poly>, "rhs": <poly>, "pass": ...}
// Integer-looking param values are emitted as JSON numbers, the rest as strings.
std::string report_to_json(const Report& r);

// Indecomposable rigid regular modules: exceptional-tube points of
// quasi-length below the tube rank, in (tube, length, socle) order.
std::vector<TubePoint> rigid_tube_points(const TubeFamily& tf);

// Multisets of rigid tube points, pairwise extension-free in both directions,
// with total dimension vector <= bound componentwise. Includes the empty
// multiset. Extension vanishing is decided on realized modules at two primes.
std::vector<std::vector<TubePoint>> rigid_regular_multisets(CharacterContext& ctx,
                                                            const DimVector& bound);

// Basis listings over the denominator box [-den_bound, den_bound]: every
// cluster monomial of a seed within `depth` mutations whose den lies in the
// box, plus one defect-zero element per l >= 1 and rigid regular multiset
// with l*delta + dim R <= den_bound.
BasisSets basis_sets(CharacterContext& ctx, const DimVector& den_bound, int depth);

// Defect-zero basis element of denominator l*delta + dim R_0^{(k)}, computed
// three ways: X_{R_0^{(k)}} F_l(X_delta), the character difference
// X_{R_0^{(lp+k)}} - X_{R_{k+1}^{(lp-k-2)}}, and the transverse character of
// R_0^{(lp+k)}. Throws Error if the routes disagree.
BasisElement b_element_defect_zero(CharacterContext& ctx, int tube, int l, int k);

// F_l(X_delta) = X_{R_i^{(lp)}} - X_{R_{i+1}^{(lp-2)}} for every socle i.
std::vector<Report> verify_difference_property(CharacterContext& ctx, int tube, int l);

// X_{R_j^{(m)}} X_{R_0^{(n)}} =
//   X_{R_0^{(m+j+kp)}} X_{R_j^{(n-j-kp)}} + X_{R_0^{(j+kp-1)}} X_{R_{n+1}^{(m+j+kp-n-1)}}
// under 0 < j+kp <= n and m >= n-j-kp; quasi-lengths <= 0 on the right read
// as 0 and 1 per the character conventions.
Report verify_multiplication_formula(CharacterContext& ctx, int tube, int m, int n, int j,
                                     int k);

// X_{R_0^{(lp-1)}} X_{R_1^{(p-1)}} = X_{R_0^{(p-1)}} X_{R_1^{(lp-1)}}, p >= 2.
Report verify_key_identity(CharacterContext& ctx, int tube, int l);

// Pairs basis elements with transverse characters of cluster-category
// objects: each defect-zero element against a band point tensored with its
// rigid part (extension-freeness re-checked on modules), initial cluster
// monomials against shifted projectives, and transverse characters of
// exceptional points of quasi-length a multiple of the rank against the
// generated set.
std::vector<Report> geometrization_check(CharacterContext& ctx, const DimVector& den_bound,
                                         int depth);

// Re-expands elem in the cluster reached by seq (0-based vertices) and
// reports whether every coefficient is nonnegative.
Report positivity_spotcheck(CharacterContext& ctx, const LaurentPoly& elem,
                            const std::vector<int>& seq);

} // namespace qgr
