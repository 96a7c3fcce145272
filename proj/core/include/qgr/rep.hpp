#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qgr/dimvec.hpp"
#include "qgr/error.hpp"
#include "qgr/fp.hpp"
#include "qgr/quiver.hpp"

namespace qgr {

using ZMat = std::vector<std::vector<long long>>;

// Explicit representation over F_p: one matrix per arrow a: i -> j of shape
// dims[j] x dims[i], acting on column vectors.
struct Rep {
  Quiver quiver;
  int p = 2;
  DimVector dims;
  std::vector<FpMat> mats;

  Rep() = default;
  Rep(Quiver q, int p_, DimVector dims_, std::vector<FpMat> mats_);
};

Rep direct_sum(const Rep& a, const Rep& b);

// (dim Hom, dim Ext1); Ext1 via dim Hom - <dim M, dim N> (hereditary)
std::pair<int, int> hom_ext_dims(const Rep& m, const Rep& n);
bool is_rigid(const Rep& m);

// Subspace assignment: per-vertex basis rows in ambient coordinates.
// A subrepresentation additionally satisfies arrow-equivariance.
using Subspace = std::vector<FpMat>;

DimVector subspace_dims(const Subspace& u);
bool is_subrep(const Rep& m, const Subspace& u);

// integer basis rows reduced into F_p
Subspace subspace_mod_p(const std::vector<ZMat>& rows, int p);

// Integer-matrix representation pattern, realizable over any prime field
// whose characteristic does not divide one of the guard values. This is the
// type the interpolation layer works with: the same abstract module sampled
// across primes.
struct RepTemplate {
  Quiver quiver;
  DimVector dims;
  std::vector<ZMat> mats;
  std::vector<long long> nonzero_guard; // band parameters etc.
  std::string key;                      // identity for memo tables

  bool valid_at(long long p) const;
  Rep realize(int p) const;
};

RepTemplate make_template(Quiver q, DimVector dims, std::vector<ZMat> mats,
                          std::vector<long long> guard, std::string key);
RepTemplate rt_zero(const Quiver& q);
RepTemplate rt_simple(const Quiver& q, int vertex);
RepTemplate rt_direct_sum(const RepTemplate& a, const RepTemplate& b);

// opposite-quiver dual: transposed matrices, reversed arrows; dim preserved
RepTemplate rt_dual(const RepTemplate& m);

// {"quiver": {...}, "p": q, "dims": [...], "matrices": {"<arrow index>": [[...]]}}
// Arrow keys are 0-based indices into the quiver's arrow list; missing keys
// mean zero matrices.
Rep rep_from_json(const std::string& json_text);
std::string rep_to_json(const Rep& m);
// same schema, read as an integer pattern (the declared p only validates)
RepTemplate rep_template_from_json(const std::string& json_text);

// Cluster-category object at the level of character data: module summands
// plus shifted projectives P_i[1] (0-based vertex multiset).
struct CQObject {
  std::vector<RepTemplate> summands;
  std::vector<int> shifted_projectives;
};

} // namespace qgr
