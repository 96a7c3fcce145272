#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "qgr/dimvec.hpp"
#include "qgr/error.hpp"

namespace qgr {

using IntMatrix = std::vector<std::vector<long long>>;

// Finite acyclic connected quiver without loops. Vertices are 0-based
// internally; all text/JSON I/O is 1-based.
struct Quiver {
  int n = 0;
  std::vector<std::pair<int, int>> arrows; // (source, target), input order

  Quiver() = default;
  Quiver(int n_, std::vector<std::pair<int, int>> arrows_);

  int arrow_count() const { return static_cast<int>(arrows.size()); }
  int count_arrows(int i, int j) const;

  // vertices sorted so every arrow goes from an earlier position to a later
  // one; exists because the quiver is acyclic
  std::vector<int> topological_order() const;

  Quiver opposite() const;

  bool operator==(const Quiver&) const = default;
};

// parsing; accepts the "vertices:/arrows:" text format or a JSON object
Quiver parse_quiver_text(const std::string& text);
Quiver parse_quiver_json(const std::string& json_text);
Quiver parse_quiver(const std::string& text); // sniffs the format
Quiver load_quiver_file(const std::string& path);
std::string quiver_to_json(const Quiver& q);

// E[i][j] = delta_ij - #arrows(i -> j); Euler form is <a,b> = a^T E b
IntMatrix euler_matrix(const Quiver& q);
long long euler_form(const Quiver& q, const DimVector& a, const DimVector& b);
long long tits_form(const Quiver& q, const DimVector& d);

enum class AffineFamily { A, D, E };

struct AffineType {
  AffineFamily family;
  // A: (r,s) = arrows clockwise/counterclockwise along the cycle, r >= s.
  // D: subscript n (n+1 vertices). E: subscript 6, 7 or 8.
  int param1 = 0;
  int param2 = 0;
  DimVector delta; // primitive positive radical generator
  std::string label() const;
};

// decides affineness from the radical of the symmetrized Euler form and
// names the underlying extended Dynkin graph; throws FiniteTypeError or
// WildTypeError otherwise
AffineType classify_affine(const Quiver& q);

DimVector delta_vector(const Quiver& q);

// defect <delta, d>; negative on preprojectives, positive on preinjectives,
// zero exactly on the regulars
long long defect(const Quiver& q, const DimVector& d);

// Coxeter transformation c = -E^{-1} E^T acting on column vectors;
// dim(tau M) = c(dim M) for non-projective M. Integer matrix with det +-1.
IntMatrix coxeter_matrix(const Quiver& q);
IntMatrix coxeter_matrix_inverse(const Quiver& q);

// applies c^k, any integer k
DimVector coxeter_transform(const Quiver& q, const DimVector& d, int k = 1);

struct Root {
  DimVector d;
  bool real = false; // real: q(d)=1; imaginary: q(d)=0, d in Z>0 * delta
};

// positive roots d with 0 < d <= bound componentwise, lex sorted
std::vector<Root> enumerate_roots(const Quiver& q, const DimVector& bound);

// matrix helpers shared with the representation layer
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
DimVector mat_apply(const IntMatrix& m, const DimVector& v);
IntMatrix mat_neg(const IntMatrix& m);
IntMatrix mat_transpose(const IntMatrix& m);
IntMatrix mat_identity(int n);

// exact inverse of an integer matrix with det +-1 (throws otherwise)
IntMatrix mat_unimodular_inverse(const IntMatrix& m);

} // namespace qgr
