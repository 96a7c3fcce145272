#pragma once

#include <vector>

#include "qgr/error.hpp"

namespace qgr {

// Dense linear algebra over F_p for small p (the interpolation primes stay
// below a few hundred). Entries are kept reduced into [0, p); dimensions are
// tiny (vertex dims <= 8 or so), so everything is plain row-major int.
using FpVec = std::vector<int>;
using FpMat = std::vector<FpVec>; // rows

inline int fp_norm(long long x, int p) {
  int r = static_cast<int>(x % p);
  return r < 0 ? r + p : r;
}

int fp_inv(int a, int p); // throws DomainError at a = 0

FpMat fp_identity(int n);
FpMat fp_mat_mul(const FpMat& a, const FpMat& b, int p);
FpVec fp_apply(const FpMat& m, const FpVec& v, int p);

// Reduced row echelon form. rows() holds the nonzero rows only, so
// rank = rows.size(); pivots are strictly increasing column indices.
struct Rref {
  FpMat rows;
  std::vector<int> pivots;
  int cols = 0;
  int rank() const { return static_cast<int>(rows.size()); }
};

Rref fp_rref(FpMat m, int p);
int fp_rank(FpMat m, int p);

// residue of v after eliminating against r's rows; zero iff v in rowspan
FpVec fp_reduce(const Rref& r, FpVec v, int p);
bool fp_in_span(const Rref& r, const FpVec& v, int p);

// appends v to the span if independent; true when the rank grew.
// Keeps the structure a valid RREF.
bool fp_extend_span(Rref& r, FpVec v, int p);

// basis (as rows) of {x : m x = 0}, x of size cols(m)
FpMat fp_nullspace(const FpMat& m, int rows, int cols, int p);

} // namespace qgr
