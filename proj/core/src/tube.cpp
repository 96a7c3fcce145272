#include "qgr/tube.hpp"

#include <algorithm>
#include <set>

namespace qgr {

namespace {

// reduce into [0, m)
int imod(long long x, int m) {
  long long r = x % m;
  if (r < 0) r += m;
  return (int)r;
}

} // namespace

TubeFamily::TubeFamily(const Quiver& q) : q_(q) {
  AffineType type = classify_affine(q);
  if (type.family != AffineFamily::A)
    throw DomainError("tube constructors support type A~ only, got " + type.label());
  delta_ = type.delta;
  const int n = q_.n;

  std::vector<std::vector<int>> inc(n);
  for (size_t a = 0; a < q_.arrows.size(); ++a) {
    inc[q_.arrows[a].first].push_back((int)a);
    inc[q_.arrows[a].second].push_back((int)a);
  }
  for (int v = 0; v < n; ++v)
    if (inc[v].size() != 2) throw DomainError("type A~ quiver is not a single cycle");

  // walk the cycle once, starting along arrow 0
  std::vector<std::pair<int, bool>> steps; // (arrow, points along walk)
  int cur = q_.arrows[0].first, prev = -1;
  while ((int)steps.size() < n) {
    int a;
    if (steps.empty()) {
      a = 0;
    } else {
      a = inc[cur][0] == prev ? inc[cur][1] : inc[cur][0];
    }
    bool along = q_.arrows[a].first == cur;
    cur = along ? q_.arrows[a].second : q_.arrows[a].first;
    steps.emplace_back(a, along);
    prev = a;
  }
  if (cur != q_.arrows[0].first) throw DomainError("type A~ quiver is not a single cycle");

  int along_count = 0;
  for (auto& [a, f] : steps) along_count += f ? 1 : 0;
  if (2 * along_count < n) {
    std::reverse(steps.begin(), steps.end());
    for (auto& [a, f] : steps) f = !f;
    along_count = n - along_count;
  }

  std::vector<int> cw, ccw;
  for (auto& [a, f] : steps) (f ? cw : ccw).push_back(a);
  if ((int)cw.size() != type.param1 || (int)ccw.size() != type.param2)
    throw DomainError("cycle walk disagrees with affine label");

  if (n == 2) {
    kronecker_ = true;
    lambda_arrow_ = 1;
    inf_arrow_ = 0;
  } else {
    lambda_arrow_ = cw.back();
    inf_arrow_ = ccw.front();
  }

  // cut tube construction: remove one direction's arrows, the leftover arcs
  // are the quasi-simples; the removed arrows connect arc R_{i+1} to arc R_i
  arcs_.resize(2);
  for (int tube = 0; tube < 2; ++tube) {
    const std::vector<int>& cut = tube == 0 ? cw : ccw;
    std::set<int> cutset(cut.begin(), cut.end());

    std::vector<int> arc_of(n, -1);
    std::vector<Arc> arcs;
    for (int v0 = 0; v0 < n; ++v0) {
      if (arc_of[v0] >= 0) continue;
      Arc arc;
      std::vector<int> stack{v0};
      arc_of[v0] = (int)arcs.size();
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        arc.vertices.push_back(v);
        for (int a : inc[v]) {
          if (cutset.count(a)) continue;
          int w = q_.arrows[a].first == v ? q_.arrows[a].second : q_.arrows[a].first;
          if (arc_of[w] < 0) {
            arc_of[w] = (int)arcs.size();
            stack.push_back(w);
          }
        }
      }
      for (size_t a = 0; a < q_.arrows.size(); ++a)
        if (!cutset.count((int)a) && arc_of[q_.arrows[a].first] == (int)arcs.size())
          arc.internal_arrows.push_back((int)a);
      arc.dims.assign(n, 0);
      for (int v : arc.vertices) arc.dims[v] = 1;
      arcs.push_back(std::move(arc));
    }
    if (arcs.size() != cut.size()) throw DomainError("arc count mismatch in tube construction");

    std::vector<int> succ(arcs.size(), -1);
    for (int a : cut) {
      int s = arc_of[q_.arrows[a].first];
      if (arcs[s].out_arrow >= 0) throw DomainError("arc has two outgoing cut arrows");
      arcs[s].out_arrow = a;
      succ[s] = arc_of[q_.arrows[a].second];
    }
    std::vector<int> pred(arcs.size(), -1);
    for (size_t s = 0; s < arcs.size(); ++s) pred[succ[s]] = (int)s;

    int r0 = 0;
    for (size_t s = 1; s < arcs.size(); ++s)
      if (arcs[s].dims > arcs[r0].dims) r0 = (int)s;

    std::vector<Arc> ordered;
    int at = r0;
    for (size_t i = 0; i < arcs.size(); ++i) {
      ordered.push_back(arcs[at]);
      at = pred[at];
    }
    if (at != r0) throw DomainError("cut arrows do not form a single cycle on arcs");
    arcs_[tube] = std::move(ordered);

    // labels must realize the AR translate: c(dim R_i) = dim R_{i-1}
    int p = (int)arcs_[tube].size();
    for (int i = 0; i < p; ++i) {
      DimVector tr = coxeter_transform(q_, arcs_[tube][i].dims, 1);
      if (tr != arcs_[tube][imod(i - 1, p)].dims)
        throw DomainError("tube labeling inconsistent with AR translate");
    }
  }
}

int TubeFamily::rank(int tube) const {
  if (tube < 0 || tube > 1) throw DomainError("tube index must be 0 or 1");
  return (int)arcs_[tube].size();
}

int TubeFamily::norm_socle(int tube, int i) const { return imod(i, rank(tube)); }

DimVector TubeFamily::quasi_simple_dim(int tube, int i) const {
  return arcs_[tube][norm_socle(tube, i)].dims;
}

TubeFamily::Layout TubeFamily::layout(int tube, int i, int l) const {
  const int p = rank(tube);
  Layout lay;
  lay.pos.assign(l, std::vector<int>(q_.n, -1));
  lay.dims.assign(q_.n, 0);
  for (int t = 0; t < l; ++t) {
    const Arc& arc = arcs_[tube][imod(i + l - 1 - t, p)];
    for (int v : arc.vertices) lay.pos[t][v] = lay.dims[v]++;
  }
  return lay;
}

DimVector TubeFamily::point_dims(const TubePoint& t) const {
  if (t.len <= 0) return DimVector(q_.n, 0);
  if (t.tube < 0) return DimVector(q_.n, t.len);
  return layout(t.tube, norm_socle(t.tube, t.socle), t.len).dims;
}

RepTemplate TubeFamily::regular(int tube, int i, int l) const {
  if (l < 0) throw DomainError("negative quasi-length");
  i = norm_socle(tube, i);
  std::string key = "T" + std::to_string(tube) + ":R" + std::to_string(i) + ":" +
                    std::to_string(l);
  if (l == 0) {
    std::vector<ZMat> mats(q_.arrows.size());
    return make_template(q_, DimVector(q_.n, 0), std::move(mats), {}, std::move(key));
  }
  const int p = rank(tube);
  Layout lay = layout(tube, i, l);
  std::vector<ZMat> mats(q_.arrows.size());
  for (size_t a = 0; a < q_.arrows.size(); ++a) {
    auto [s, w] = q_.arrows[a];
    mats[a].assign(lay.dims[w], std::vector<long long>(lay.dims[s], 0));
  }
  // piece t carries arc(i + l - 1 - t); within a piece the arc arrows act as
  // the identity between copies, and the arc's outgoing cut arrow maps piece
  // t onto piece t+1, which is exactly the next arc down the labels
  for (int t = 0; t < l; ++t) {
    const Arc& arc = arcs_[tube][imod(i + l - 1 - t, p)];
    for (int a : arc.internal_arrows) {
      auto [s, w] = q_.arrows[a];
      mats[a][lay.pos[t][w]][lay.pos[t][s]] = 1;
    }
    if (t + 1 < l) {
      int c = arc.out_arrow;
      auto [s, w] = q_.arrows[c];
      mats[c][lay.pos[t + 1][w]][lay.pos[t][s]] = 1;
    }
  }
  return make_template(q_, lay.dims, std::move(mats), {}, std::move(key));
}

bool TubeFamily::lambda_degenerate(long long lambda, bool inf) const {
  if (kronecker_) return false;
  return inf || lambda == 0;
}

RepTemplate TubeFamily::band(long long lambda, bool inf, int l) const {
  if (l < 0) throw DomainError("negative quasi-length");
  if (lambda_degenerate(lambda, inf))
    throw DomainError("band parameter lies in the degenerate set; the module "
                      "is a point of an exceptional tube");
  std::string key = "B:" + (inf ? std::string("inf") : std::to_string(lambda)) + ":" +
                    std::to_string(l);
  if (l == 0) {
    std::vector<ZMat> mats(q_.arrows.size());
    return make_template(q_, DimVector(q_.n, 0), std::move(mats), {}, std::move(key));
  }
  int slot = inf ? inf_arrow_ : lambda_arrow_;
  long long diag = inf ? 0 : lambda;
  std::vector<ZMat> mats(q_.arrows.size());
  for (size_t a = 0; a < q_.arrows.size(); ++a) {
    ZMat m(l, std::vector<long long>(l, 0));
    for (int r = 0; r < l; ++r) {
      m[r][r] = (int)a == slot ? diag : 1;
      if ((int)a == slot && r + 1 < l) m[r][r + 1] = 1;
    }
    mats[a] = std::move(m);
  }
  std::vector<long long> guard;
  if (!inf && lambda != 0) guard.push_back(lambda);
  return make_template(q_, DimVector(q_.n, l), std::move(mats), std::move(guard),
                       std::move(key));
}

RepTemplate TubeFamily::realize(const TubePoint& t) const {
  if (t.tube < 0) return band(t.lambda, t.lambda_inf, t.len);
  return regular(t.tube, t.socle, t.len);
}

std::vector<ZMat> TubeFamily::chain_basis(const TubePoint& t, int j) const {
  if (j < 0 || j > t.len) throw DomainError("chain index out of range");
  std::vector<ZMat> rows(q_.n);
  if (t.tube < 0) {
    // Jordan chain: leading coordinates
    for (int v = 0; v < q_.n; ++v) {
      rows[v].assign(j, std::vector<long long>(t.len, 0));
      for (int r = 0; r < j; ++r) rows[v][r][r] = 1;
    }
    return rows;
  }
  int i = norm_socle(t.tube, t.socle);
  Layout lay = layout(t.tube, i, t.len);
  // the trailing j pieces form the canonical submodule R_i^{(j)}
  for (int v = 0; v < q_.n; ++v) {
    for (int tt = t.len - j; tt < t.len; ++tt) {
      if (lay.pos[tt][v] < 0) continue;
      std::vector<long long> row(lay.dims[v], 0);
      row[lay.pos[tt][v]] = 1;
      rows[v].push_back(std::move(row));
    }
  }
  return rows;
}

TubePoint TubeFamily::ar_translate(const TubePoint& t, int steps) const {
  TubePoint out = t;
  if (t.tube >= 0) out.socle = imod((long long)t.socle - steps, rank(t.tube));
  return out;
}

std::string TubeFamily::point_key(const TubePoint& t) const {
  if (t.tube < 0)
    return "B:" + (t.lambda_inf ? std::string("inf") : std::to_string(t.lambda)) + ":" +
           std::to_string(t.len);
  return "T" + std::to_string(t.tube) + ":R" +
         std::to_string(norm_socle(t.tube, t.socle)) + ":" + std::to_string(t.len);
}

} // namespace qgr
