#pragma once

#include <string>
#include <vector>

#include "qgr/quiver.hpp"
#include "qgr/rep.hpp"

namespace qgr {

// A point of the regular AR quiver: tube >= 0 picks one of the two cut tubes
// (0 has the larger rank), tube == -1 a homogeneous band tube with parameter
// lambda (lambda_inf for the point at infinity). socle is reduced mod rank.
struct TubePoint {
  int tube = 0;
  long long lambda = 1;
  bool lambda_inf = false;
  int socle = 0;
  int len = 1; // quasi-length, >= 0

  static TubePoint regular(int tube, int socle, int len) {
    TubePoint t;
    t.tube = tube;
    t.socle = socle;
    t.len = len;
    return t;
  }
  static TubePoint band(long long lambda, bool inf, int len) {
    TubePoint t;
    t.tube = -1;
    t.lambda = lambda;
    t.lambda_inf = inf;
    t.len = len;
    return t;
  }
};

// Regular modules of an affine quiver of type A~(r,s). The two exceptional
// tubes arise by cutting the cycle at the arrows of one direction: the arcs
// left over are the quasi-simple string modules. Quasi-length l modules wind
// l consecutive arcs together. Labels satisfy tau R_i = R_{i-1}, which pins
// the cyclic order; R_0 is the arc with lex-greatest dimension vector.
class TubeFamily {
 public:
  explicit TubeFamily(const Quiver& q);

  const Quiver& quiver() const { return q_; }
  const DimVector& delta() const { return delta_; }

  int rank(int tube) const;
  int rank_of(const TubePoint& t) const { return t.tube < 0 ? 1 : rank(t.tube); }
  DimVector quasi_simple_dim(int tube, int i) const;
  DimVector point_dims(const TubePoint& t) const;

  RepTemplate regular(int tube, int i, int l) const;
  RepTemplate band(long long lambda, bool inf, int l) const;
  RepTemplate realize(const TubePoint& t) const;

  // parameters whose band matrices do not give a module in a homogeneous
  // tube (they land in an exceptional tube instead)
  bool lambda_degenerate(long long lambda, bool inf) const;

  // basis rows (one 0/1 integer matrix per vertex) of the canonical
  // quasi-length-j submodule in the coordinates of realize(t); quotient has
  // the dimension vector of R_{socle+j}^{(len-j)}
  std::vector<ZMat> chain_basis(const TubePoint& t, int j) const;

  TubePoint ar_translate(const TubePoint& t, int steps) const;
  std::string point_key(const TubePoint& t) const;

 private:
  struct Arc {
    std::vector<int> vertices;
    std::vector<int> internal_arrows;
    int out_arrow = -1; // cut arrow leaving this arc, lands in label - 1
    DimVector dims;
  };
  struct Layout {
    // pos[t][v] = coordinate of piece t's copy at vertex v, or -1
    std::vector<std::vector<int>> pos;
    DimVector dims;
  };

  Layout layout(int tube, int i, int l) const;
  int norm_socle(int tube, int i) const;

  Quiver q_;
  DimVector delta_;
  // arcs_[tube][i] = arc of R_i in that tube
  std::vector<std::vector<Arc>> arcs_;
  int lambda_arrow_ = -1; // band slot carrying the Jordan block J(lambda)
  int inf_arrow_ = -1;    // band slot carrying J(0) for lambda = infinity
  bool kronecker_ = false;
};

} // namespace qgr
