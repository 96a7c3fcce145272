#include "qgr/rep.hpp"

#include <algorithm>
#include <map>

#include "json.hpp"

namespace qgr {

namespace {

void check_shapes(const Quiver& q, const DimVector& dims, size_t nmats) {
  if ((int)dims.size() != q.n) throw ValidationError("rep: dims size != vertex count");
  for (int d : dims)
    if (d < 0) throw ValidationError("rep: negative dimension");
  if (nmats != q.arrows.size()) throw ValidationError("rep: matrix count != arrow count");
}

} // namespace

Rep::Rep(Quiver q, int p_, DimVector dims_, std::vector<FpMat> mats_)
    : quiver(std::move(q)), p(p_), dims(std::move(dims_)), mats(std::move(mats_)) {
  if (p < 2) throw ValidationError("rep: p must be a prime >= 2");
  check_shapes(quiver, dims, mats.size());
  for (size_t a = 0; a < mats.size(); ++a) {
    int rows = dims[quiver.arrows[a].second], cols = dims[quiver.arrows[a].first];
    if ((int)mats[a].size() != rows)
      throw ValidationError("rep: matrix row count mismatch on arrow " + std::to_string(a));
    for (auto& r : mats[a]) {
      if ((int)r.size() != cols)
        throw ValidationError("rep: matrix column count mismatch on arrow " + std::to_string(a));
      for (int& x : r) x = fp_norm(x, p);
    }
  }
}

Rep direct_sum(const Rep& a, const Rep& b) {
  if (!(a.quiver == b.quiver) || a.p != b.p)
    throw ValidationError("direct_sum: mismatched quiver or prime");
  DimVector dims = dv_add(a.dims, b.dims);
  std::vector<FpMat> mats(a.mats.size());
  for (size_t k = 0; k < a.mats.size(); ++k) {
    auto [src, tgt] = a.quiver.arrows[k];
    FpMat m(dims[tgt], FpVec(dims[src], 0));
    for (int i = 0; i < a.dims[tgt]; ++i)
      for (int j = 0; j < a.dims[src]; ++j) m[i][j] = a.mats[k][i][j];
    for (int i = 0; i < b.dims[tgt]; ++i)
      for (int j = 0; j < b.dims[src]; ++j) m[a.dims[tgt] + i][a.dims[src] + j] = b.mats[k][i][j];
    mats[k] = std::move(m);
  }
  return Rep(a.quiver, a.p, std::move(dims), std::move(mats));
}

// Hom(M,N) = kernel of phi |-> (phi_{t(a)} M_a - N_a phi_{s(a)})_a where the
// unknowns are the per-vertex matrices phi_v of shape nN_v x nM_v.
std::pair<int, int> hom_ext_dims(const Rep& m, const Rep& n) {
  if (!(m.quiver == n.quiver) || m.p != n.p)
    throw ValidationError("hom_ext_dims: mismatched quiver or prime");
  const Quiver& q = m.quiver;
  const int p = m.p;

  std::vector<int> off(q.n + 1, 0);
  for (int v = 0; v < q.n; ++v) off[v + 1] = off[v] + n.dims[v] * m.dims[v];
  int unknowns = off[q.n];

  FpMat sys;
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    auto [u, w] = q.arrows[a];
    // equation block: rows indexed by (r, c) with r < nN_w, c < nM_u
    for (int r = 0; r < n.dims[w]; ++r)
      for (int c = 0; c < m.dims[u]; ++c) {
        FpVec row(unknowns, 0);
        for (int j = 0; j < n.dims[u]; ++j) {
          // - N_a[r][j] * phi_u[j][c]
          int idx = off[u] + j * m.dims[u] + c;
          row[idx] = fp_norm(row[idx] - n.mats[a][r][j], p);
        }
        for (int j = 0; j < m.dims[w]; ++j) {
          // + phi_w[r][j] * M_a[j][c]
          int idx = off[w] + r * m.dims[w] + j;
          row[idx] = fp_norm(row[idx] + m.mats[a][j][c], p);
        }
        bool nonzero = false;
        for (int x : row)
          if (x) { nonzero = true; break; }
        if (nonzero) sys.push_back(std::move(row));
      }
  }
  int rank = fp_rank(sys, p);
  int hom = unknowns - rank;
  long long form = euler_form(q, m.dims, n.dims);
  long long ext = hom - form;
  if (ext < 0) throw DomainError("hom_ext_dims: negative Ext dimension, non-hereditary input?");
  return {hom, (int)ext};
}

bool is_rigid(const Rep& m) { return hom_ext_dims(m, m).second == 0; }

DimVector subspace_dims(const Subspace& u) {
  DimVector d(u.size());
  for (size_t v = 0; v < u.size(); ++v) d[v] = (int)u[v].size();
  return d;
}

Subspace subspace_mod_p(const std::vector<ZMat>& rows, int p) {
  Subspace s(rows.size());
  for (size_t v = 0; v < rows.size(); ++v) {
    s[v].resize(rows[v].size());
    for (size_t r = 0; r < rows[v].size(); ++r) {
      s[v][r].resize(rows[v][r].size());
      for (size_t c = 0; c < rows[v][r].size(); ++c) s[v][r][c] = fp_norm(rows[v][r][c], p);
    }
  }
  return s;
}

bool is_subrep(const Rep& m, const Subspace& u) {
  if ((int)u.size() != m.quiver.n) return false;
  const int p = m.p;
  std::vector<Rref> spans(m.quiver.n);
  for (int v = 0; v < m.quiver.n; ++v) {
    spans[v].cols = m.dims[v];
    for (const auto& row : u[v]) {
      if ((int)row.size() != m.dims[v]) return false;
      fp_extend_span(spans[v], row, p);
    }
    if (spans[v].rank() != (int)u[v].size()) return false; // not a basis
  }
  for (size_t a = 0; a < m.quiver.arrows.size(); ++a) {
    auto [src, tgt] = m.quiver.arrows[a];
    for (const auto& row : u[src]) {
      FpVec img = fp_apply(m.mats[a], row, p);
      if (!fp_in_span(spans[tgt], img, p)) return false;
    }
  }
  return true;
}

bool RepTemplate::valid_at(long long p) const {
  if (p < 2) return false;
  for (long long g : nonzero_guard)
    if (g % p == 0) return false;
  return true;
}

Rep RepTemplate::realize(int p) const {
  if (!valid_at(p))
    throw DomainError("template " + key + " degenerates at p=" + std::to_string(p));
  std::vector<FpMat> mats(this->mats.size());
  for (size_t a = 0; a < this->mats.size(); ++a) {
    FpMat m(this->mats[a].size());
    for (size_t i = 0; i < this->mats[a].size(); ++i) {
      m[i].resize(this->mats[a][i].size());
      for (size_t j = 0; j < this->mats[a][i].size(); ++j)
        m[i][j] = fp_norm(this->mats[a][i][j], p);
    }
    mats[a] = std::move(m);
  }
  return Rep(quiver, p, dims, std::move(mats));
}

RepTemplate make_template(Quiver q, DimVector dims, std::vector<ZMat> mats,
                          std::vector<long long> guard, std::string key) {
  check_shapes(q, dims, mats.size());
  for (size_t a = 0; a < mats.size(); ++a) {
    int rows = dims[q.arrows[a].second], cols = dims[q.arrows[a].first];
    if ((int)mats[a].size() != rows)
      throw ValidationError("template: matrix row count mismatch on arrow " + std::to_string(a));
    for (auto& r : mats[a])
      if ((int)r.size() != cols)
        throw ValidationError("template: matrix column count mismatch on arrow " +
                              std::to_string(a));
  }
  RepTemplate t;
  t.quiver = std::move(q);
  t.dims = std::move(dims);
  t.mats = std::move(mats);
  t.nonzero_guard = std::move(guard);
  t.key = std::move(key);
  return t;
}

RepTemplate rt_zero(const Quiver& q) {
  std::vector<ZMat> mats(q.arrows.size());
  return make_template(q, DimVector(q.n, 0), std::move(mats), {}, "zero");
}

RepTemplate rt_simple(const Quiver& q, int vertex) {
  if (vertex < 0 || vertex >= q.n) throw ValidationError("rt_simple: vertex out of range");
  DimVector dims(q.n, 0);
  dims[vertex] = 1;
  std::vector<ZMat> mats(q.arrows.size());
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    auto [s, t] = q.arrows[a];
    mats[a].assign(dims[t], std::vector<long long>(dims[s], 0));
  }
  return make_template(q, std::move(dims), std::move(mats), {},
                       "S" + std::to_string(vertex));
}

RepTemplate rt_direct_sum(const RepTemplate& a, const RepTemplate& b) {
  if (!(a.quiver == b.quiver)) throw ValidationError("rt_direct_sum: mismatched quivers");
  DimVector dims = dv_add(a.dims, b.dims);
  std::vector<ZMat> mats(a.mats.size());
  for (size_t k = 0; k < a.mats.size(); ++k) {
    auto [src, tgt] = a.quiver.arrows[k];
    ZMat m(dims[tgt], std::vector<long long>(dims[src], 0));
    for (int i = 0; i < a.dims[tgt]; ++i)
      for (int j = 0; j < a.dims[src]; ++j) m[i][j] = a.mats[k][i][j];
    for (int i = 0; i < b.dims[tgt]; ++i)
      for (int j = 0; j < b.dims[src]; ++j) m[a.dims[tgt] + i][a.dims[src] + j] = b.mats[k][i][j];
    mats[k] = std::move(m);
  }
  std::vector<long long> guard = a.nonzero_guard;
  guard.insert(guard.end(), b.nonzero_guard.begin(), b.nonzero_guard.end());
  return make_template(a.quiver, std::move(dims), std::move(mats), std::move(guard),
                       "(" + a.key + ")+(" + b.key + ")");
}

RepTemplate rt_dual(const RepTemplate& m) {
  Quiver op = m.quiver.opposite();
  std::vector<ZMat> mats(m.mats.size());
  for (size_t a = 0; a < m.mats.size(); ++a) {
    // shapes come from dims, not the matrix: a zero-dimensional end loses
    // the other extent when inferred from an empty matrix
    auto [s, t] = m.quiver.arrows[a];
    const ZMat& src = m.mats[a];
    ZMat tr(m.dims[s], std::vector<long long>(m.dims[t], 0));
    for (size_t i = 0; i < src.size(); ++i)
      for (size_t j = 0; j < src[i].size(); ++j) tr[j][i] = src[i][j];
    mats[a] = std::move(tr);
  }
  return make_template(std::move(op), m.dims, std::move(mats), m.nonzero_guard,
                       "D(" + m.key + ")");
}

namespace {

using nlohmann::json;

json rep_json_object(const Quiver& q, int p, const DimVector& dims,
                     const std::vector<ZMat>& mats) {
  json j;
  j["quiver"] = json::parse(quiver_to_json(q));
  j["p"] = p;
  j["dims"] = dims;
  json mm = json::object();
  for (size_t a = 0; a < mats.size(); ++a) mm[std::to_string(a)] = mats[a];
  j["matrices"] = mm;
  return j;
}

struct ParsedRep {
  Quiver q{1, {}};
  int p = 0;
  DimVector dims;
  std::vector<ZMat> mats;
};

ParsedRep parse_rep_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("rep json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("quiver") || !j.contains("dims"))
    throw ParseError("rep json: need object with quiver, dims");
  ParsedRep r;
  r.q = parse_quiver_json(j["quiver"].dump());
  if (j.contains("p")) {
    if (!j["p"].is_number_integer()) throw ParseError("rep json: p must be an integer");
    r.p = j["p"].get<int>();
  }
  if (!j["dims"].is_array()) throw ParseError("rep json: dims must be an array");
  r.dims = j["dims"].get<DimVector>();
  if ((int)r.dims.size() != r.q.n) throw ParseError("rep json: dims size != vertex count");
  r.mats.resize(r.q.arrows.size());
  for (size_t a = 0; a < r.mats.size(); ++a) {
    auto [s, t] = r.q.arrows[a];
    r.mats[a].assign(r.dims[t], std::vector<long long>(r.dims[s], 0));
  }
  if (j.contains("matrices")) {
    if (!j["matrices"].is_object()) throw ParseError("rep json: matrices must be an object");
    for (auto& [key, val] : j["matrices"].items()) {
      size_t a = 0;
      try {
        a = std::stoul(key);
      } catch (...) {
        throw ParseError("rep json: bad arrow key '" + key + "'");
      }
      if (a >= r.mats.size()) throw ParseError("rep json: arrow key out of range: " + key);
      ZMat m;
      try {
        m = val.get<ZMat>();
      } catch (const json::exception&) {
        throw ParseError("rep json: matrix for arrow " + key + " is not a 2d integer array");
      }
      auto [s, t] = r.q.arrows[a];
      if ((int)m.size() != r.dims[t])
        throw ParseError("rep json: matrix for arrow " + key + " has wrong row count");
      for (auto& row : m)
        if ((int)row.size() != r.dims[s])
          throw ParseError("rep json: matrix for arrow " + key + " has wrong column count");
      r.mats[a] = std::move(m);
    }
  }
  return r;
}

} // namespace

Rep rep_from_json(const std::string& text) {
  ParsedRep r = parse_rep_json(text);
  if (r.p < 2) throw ParseError("rep json: missing or invalid prime p");
  std::vector<FpMat> mats(r.mats.size());
  for (size_t a = 0; a < r.mats.size(); ++a) {
    FpMat m(r.mats[a].size());
    for (size_t i = 0; i < r.mats[a].size(); ++i) {
      m[i].resize(r.mats[a][i].size());
      for (size_t j = 0; j < r.mats[a][i].size(); ++j)
        m[i][j] = fp_norm(r.mats[a][i][j], r.p);
    }
    mats[a] = std::move(m);
  }
  return Rep(std::move(r.q), r.p, std::move(r.dims), std::move(mats));
}

std::string rep_to_json(const Rep& m) {
  std::vector<ZMat> mats(m.mats.size());
  for (size_t a = 0; a < m.mats.size(); ++a) {
    mats[a].resize(m.mats[a].size());
    for (size_t i = 0; i < m.mats[a].size(); ++i)
      mats[a][i].assign(m.mats[a][i].begin(), m.mats[a][i].end());
  }
  return rep_json_object(m.quiver, m.p, m.dims, mats).dump();
}

RepTemplate rep_template_from_json(const std::string& text) {
  ParsedRep r = parse_rep_json(text);
  return make_template(std::move(r.q), std::move(r.dims), std::move(r.mats), {},
                       "json:" + std::to_string(std::hash<std::string>{}(text)));
}

} // namespace qgr
