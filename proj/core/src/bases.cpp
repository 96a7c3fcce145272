#include "qgr/bases.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "qgr/chebyshev.hpp"
#include "qgr/error.hpp"
#include "qgr/mutation.hpp"
#include "qgr/rep.hpp"

namespace qgr {

namespace {

bool integer_like(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

// first band parameter that stays in a homogeneous tube
long long generic_lambda(const TubeFamily& tf) {
  for (long long lam = 0;; ++lam)
    if (!tf.lambda_degenerate(lam, false)) return lam;
}

// extension-free in both directions, decided on realized modules; two primes
// guard against an accidental characteristic-dependent rank drop
bool ext_orthogonal(const RepTemplate& a, const RepTemplate& b) {
  int seen = -1;
  for (int p : {2, 3, 5}) {
    if (!a.valid_at(p) || !b.valid_at(p)) continue;
    Rep ra = a.realize(p), rb = b.realize(p);
    int e = hom_ext_dims(ra, rb).second + hom_ext_dims(rb, ra).second;
    if (seen >= 0 && (e > 0) != (seen > 0))
      throw Error("extension dimensions depend on the prime");
    seen = e;
    if (p >= 3) break;
  }
  if (seen < 0) throw Error("no usable prime for the extension check");
  return seen == 0;
}

LaurentPoly product_character(CharacterContext& ctx, const std::vector<TubePoint>& pts) {
  LaurentPoly r = LaurentPoly::constant(ctx.quiver().n, 1);
  for (const TubePoint& t : pts) r *= ctx.character(t);
  return r;
}

std::string multiset_label(const TubeFamily& tf, const std::vector<TubePoint>& pts) {
  if (pts.empty()) return "";
  std::string s;
  for (const TubePoint& t : pts) {
    s += s.empty() ? " * X[" : " + ";
    s += tf.point_key(t);
  }
  return s + "]";
}

// exact inverse of the n x n denominator matrix of one seed; cluster
// denominators are linearly independent, so singularity is a bug trap
std::vector<std::vector<Rat>> rational_inverse(const std::vector<std::vector<Rat>>& m) {
  size_t n = m.size();
  std::vector<std::vector<Rat>> a = m, inv(n, std::vector<Rat>(n, 0));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) throw Error("cluster denominator vectors are dependent");
    std::swap(a[piv], a[c]);
    std::swap(inv[piv], inv[c]);
    Rat d = a[c][c];
    for (size_t j = 0; j < n; ++j) {
      a[c][j] /= d;
      inv[c][j] /= d;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rat f = a[r][c];
      for (size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

// all seeds within depth mutations, deduplicated by exact equality
std::vector<Seed> reachable_seeds(const Quiver& q, int depth) {
  std::vector<Seed> seen = {initial_seed(q)};
  size_t lo = 0;
  for (int d = 0; d < depth; ++d) {
    size_t hi = seen.size();
    for (size_t s = lo; s < hi; ++s)
      for (int k = 0; k < q.n; ++k) {
        Seed nxt = mutate(seen[s], k);
        if (std::find(seen.begin(), seen.end(), nxt) == seen.end()) seen.push_back(nxt);
      }
    lo = hi;
    if (lo == seen.size()) break;
  }
  return seen;
}

std::string variable_token(const LaurentPoly& x) {
  DimVector d = denominator_vector(x);
  for (size_t i = 0; i < d.size(); ++i) {
    DimVector unit(d.size(), 0);
    unit[i] = -1;
    if (d == unit) return "u" + std::to_string(i + 1);
  }
  return "x" + dv_to_string(d);
}

// cluster monomials with denominator vector in [-bound, bound], keyed by
// their text form so the same monomial met in two seeds collapses
void collect_cluster_monomials(const Quiver& q, const DimVector& bound, int depth,
                               std::map<std::string, BasisElement>& out) {
  int n = q.n;
  for (const Seed& s : reachable_seeds(q, depth)) {
    std::vector<DimVector> dens(n);
    std::vector<std::vector<Rat>> dmat(n, std::vector<Rat>(n));
    for (int j = 0; j < n; ++j) {
      dens[j] = denominator_vector(s.x[j]);
      for (int i = 0; i < n; ++i) dmat[i][j] = dens[j][i];
    }
    auto inv = rational_inverse(dmat);
    DimVector d = dv_scale(-1, bound);
    for (bool more = true; more;) {
      using boost::multiprecision::denominator;
      using boost::multiprecision::numerator;
      std::vector<long long> a(n);
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) {
        Rat v = 0;
        for (int j = 0; j < n; ++j) v += inv[i][j] * d[j];
        if (denominator(v) != 1 || v < 0)
          ok = false;
        else if (numerator(v) > 64)
          throw Error("cluster monomial exponent out of range for the box");
        else
          a[i] = static_cast<long long>(numerator(v));
      }
      if (ok) {
        LaurentPoly m = LaurentPoly::constant(n, 1);
        std::string label;
        for (int j = 0; j < n; ++j) {
          if (!a[j]) continue;
          m *= s.x[j].pow(static_cast<int>(a[j]));
          if (!label.empty()) label += "*";
          label += variable_token(s.x[j]);
          if (a[j] > 1) label += "^" + std::to_string(a[j]);
        }
        if (label.empty()) label = "1";
        if (denominator_vector(m) != d) throw Error("cluster monomial denominator mismatch");
        out.emplace(to_string(m), BasisElement{m, "cluster monomial " + label, d});
      }
      more = false;
      for (int i = 0; i < n; ++i) {
        if (d[i] < bound[i]) {
          ++d[i];
          more = true;
          break;
        }
        d[i] = -bound[i];
      }
    }
  }
}

void sort_elements(std::vector<BasisElement>& v) {
  std::sort(v.begin(), v.end(), [](const BasisElement& a, const BasisElement& b) {
    return a.den != b.den ? a.den < b.den : a.label < b.label;
  });
}

} // namespace

std::string report_to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["identity"] = r.identity;
  auto ps = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.params) {
    if (integer_like(v))
      ps[k] = std::stoll(v);
    else
      ps[k] = v;
  }
  j["params"] = ps;
  j["lhs"] = nlohmann::ordered_json::parse(laurent_to_json(r.lhs));
  j["rhs"] = nlohmann::ordered_json::parse(laurent_to_json(r.rhs));
  j["pass"] = r.pass;
  return j.dump();
}

std::vector<TubePoint> rigid_tube_points(const TubeFamily& tf) {
  std::vector<TubePoint> pts;
  for (int t : {0, 1}) {
    int p = tf.rank(t);
    for (int l = 1; l < p; ++l)
      for (int i = 0; i < p; ++i) pts.push_back(TubePoint::regular(t, i, l));
  }
  return pts;
}

std::vector<std::vector<TubePoint>> rigid_regular_multisets(CharacterContext& ctx,
                                                            const DimVector& bound) {
  const TubeFamily& tf = ctx.tubes();
  if (!dv_nonneg(bound)) return {};
  std::vector<TubePoint> pts = rigid_tube_points(tf);
  size_t n = pts.size();
  std::vector<RepTemplate> reals;
  reals.reserve(n);
  for (const TubePoint& t : pts) reals.push_back(tf.realize(t));
  std::vector<std::vector<char>> ok(n, std::vector<char>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j)
      ok[i][j] = ok[j][i] = (i == j) ? 1 : ext_orthogonal(reals[i], reals[j]);

  std::vector<std::vector<TubePoint>> out;
  std::vector<size_t> cur;
  DimVector used(bound.size(), 0);
  auto rec = [&](auto&& self, size_t from) -> void {
    std::vector<TubePoint> ms;
    for (size_t i : cur) ms.push_back(pts[i]);
    out.push_back(std::move(ms));
    for (size_t i = from; i < n; ++i) {
      DimVector nd = dv_add(used, tf.point_dims(pts[i]));
      if (!dv_leq(nd, bound)) continue;
      bool comp = true;
      for (size_t j : cur) comp = comp && ok[j][i];
      if (!comp) continue;
      cur.push_back(i);
      std::swap(used, nd);
      self(self, i);
      std::swap(used, nd);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

BasisSets basis_sets(CharacterContext& ctx, const DimVector& den_bound, int depth) {
  const Quiver& q = ctx.quiver();
  if (static_cast<int>(den_bound.size()) != q.n)
    throw ValidationError("denominator bound has the wrong length");
  if (!dv_nonneg(den_bound)) throw ValidationError("denominator bound must be nonnegative");
  const TubeFamily& tf = ctx.tubes();
  const DimVector& delta = tf.delta();

  std::map<std::string, BasisElement> mono;
  collect_cluster_monomials(q, den_bound, depth, mono);

  BasisSets sets;
  for (const auto& [key, el] : mono) {
    sets.b.push_back(el);
    sets.g.push_back(el);
    sets.c.push_back(el);
  }

  LaurentPoly xd = ctx.generic_variable();
  for (int l = 1; dv_leq(dv_scale(l, delta), den_bound); ++l) {
    DimVector room = dv_sub(den_bound, dv_scale(l, delta));
    for (const auto& ms : rigid_regular_multisets(ctx, room)) {
      LaurentPoly xr = product_character(ctx, ms);
      DimVector den = dv_scale(l, delta);
      for (const TubePoint& t : ms) den = dv_add(den, tf.point_dims(t));
      std::string tail = multiset_label(tf, ms);
      std::string ls = std::to_string(l);
      BasisElement be{cheb_first(l, xd) * xr, "F_" + ls + "(Xd)" + tail, den};
      BasisElement ge{xd.pow(l) * xr, "Xd^" + ls + tail, den};
      BasisElement ce{cheb_second(l, xd) * xr, "S_" + ls + "(Xd)" + tail, den};
      if (denominator_vector(be.value) != den || denominator_vector(ge.value) != den ||
          denominator_vector(ce.value) != den)
        throw Error("defect-zero element denominator mismatch");
      sets.b.push_back(std::move(be));
      sets.g.push_back(std::move(ge));
      sets.c.push_back(std::move(ce));
    }
  }
  sort_elements(sets.b);
  sort_elements(sets.g);
  sort_elements(sets.c);
  return sets;
}

BasisElement b_element_defect_zero(CharacterContext& ctx, int tube, int l, int k) {
  const TubeFamily& tf = ctx.tubes();
  int p = tf.rank(tube);
  if (l < 0) throw ValidationError("quasi-length multiplier must be >= 0");
  if (k < 0 || k >= p) throw ValidationError("quasi-socle offset must lie in [0, rank)");
  LaurentPoly base = ctx.tube_character(tube, 0, k);
  LaurentPoly viaf = l == 0 ? base : base * cheb_first(l, ctx.generic_variable());
  LaurentPoly diff = ctx.tube_character(tube, 0, l * p + k) -
                     ctx.tube_character(tube, k + 1, l * p - k - 2);
  if (viaf != diff) throw Error("defect-zero element: product and difference routes disagree");
  if (l * p + k > 0) {
    LaurentPoly tr = ctx.transverse_character(TubePoint::regular(tube, 0, l * p + k));
    if (tr != viaf)
      throw Error("defect-zero element: transverse route disagrees");
  }
  DimVector den = dv_scale(l, tf.delta());
  if (k > 0) den = dv_add(den, tf.point_dims(TubePoint::regular(tube, 0, k)));
  std::string label =
      l == 0 ? "X[" + tf.point_key(TubePoint::regular(tube, 0, k)) + "]"
             : "F_" + std::to_string(l) + "(Xd)" +
                   (k ? " * X[" + tf.point_key(TubePoint::regular(tube, 0, k)) + "]" : "");
  if (denominator_vector(viaf) != den) throw Error("defect-zero element denominator mismatch");
  return {viaf, label, den};
}

std::vector<Report> verify_difference_property(CharacterContext& ctx, int tube, int l) {
  if (l < 1) throw ValidationError("difference property needs l >= 1");
  const TubeFamily& tf = ctx.tubes();
  int p = tf.rank(tube);
  LaurentPoly lhs = cheb_first(l, ctx.generic_variable());
  std::vector<Report> out;
  for (int i = 0; i < p; ++i) {
    LaurentPoly rhs =
        ctx.tube_character(tube, i, l * p) - ctx.tube_character(tube, i + 1, l * p - 2);
    out.push_back({"difference-property",
                   {{"tube", std::to_string(tube)},
                    {"l", std::to_string(l)},
                    {"socle", std::to_string(i)}},
                   lhs,
                   rhs,
                   lhs == rhs});
  }
  return out;
}

Report verify_multiplication_formula(CharacterContext& ctx, int tube, int m, int n, int j,
                                     int k) {
  const TubeFamily& tf = ctx.tubes();
  int p = tf.rank(tube);
  int shift = j + k * p;
  if (m < 1 || n < 1 || j < 0 || j >= p || k < 0)
    throw ValidationError("multiplication formula: parameters out of range");
  if (!(0 < shift && shift <= n && m >= n - shift))
    throw ValidationError("multiplication formula hypothesis violated");
  LaurentPoly lhs = ctx.tube_character(tube, j, m) * ctx.tube_character(tube, 0, n);
  LaurentPoly rhs = ctx.tube_character(tube, 0, m + shift) * ctx.tube_character(tube, j, n - shift) +
                    ctx.tube_character(tube, 0, shift - 1) *
                        ctx.tube_character(tube, n + 1, m + shift - n - 1);
  return {"tube-multiplication",
          {{"tube", std::to_string(tube)},
           {"m", std::to_string(m)},
           {"n", std::to_string(n)},
           {"j", std::to_string(j)},
           {"k", std::to_string(k)}},
          lhs,
          rhs,
          lhs == rhs};
}

Report verify_key_identity(CharacterContext& ctx, int tube, int l) {
  const TubeFamily& tf = ctx.tubes();
  int p = tf.rank(tube);
  if (p < 2) throw ValidationError("key identity needs an exceptional tube");
  if (l < 1) throw ValidationError("key identity needs l >= 1");
  LaurentPoly lhs = ctx.tube_character(tube, 0, l * p - 1) * ctx.tube_character(tube, 1, p - 1);
  LaurentPoly rhs = ctx.tube_character(tube, 0, p - 1) * ctx.tube_character(tube, 1, l * p - 1);
  return {"key-identity",
          {{"tube", std::to_string(tube)}, {"l", std::to_string(l)}},
          lhs,
          rhs,
          lhs == rhs};
}

std::vector<Report> geometrization_check(CharacterContext& ctx, const DimVector& den_bound,
                                         int depth) {
  const Quiver& q = ctx.quiver();
  const TubeFamily& tf = ctx.tubes();
  const DimVector& delta = tf.delta();
  std::vector<Report> out;
  BasisSets sets = basis_sets(ctx, den_bound, depth);

  std::set<std::string> generated;
  for (const BasisElement& el : sets.b) generated.insert(to_string(el.value));

  long long lam = generic_lambda(tf);

  // defect-zero layers: element = transverse character of a homogeneous band
  // point times the rigid part, with extension-freeness confirmed on modules
  for (int l = 1; dv_leq(dv_scale(l, delta), den_bound); ++l) {
    DimVector room = dv_sub(den_bound, dv_scale(l, delta));
    LaurentPoly trb = ctx.transverse_character(TubePoint::band(lam, false, l));
    RepTemplate band = tf.band(lam, false, l);
    for (const auto& ms : rigid_regular_multisets(ctx, room)) {
      bool orth = true;
      for (const TubePoint& t : ms) orth = orth && ext_orthogonal(band, tf.realize(t));
      LaurentPoly lhs = trb * product_character(ctx, ms);
      LaurentPoly rhs = cheb_first(l, ctx.generic_variable()) * product_character(ctx, ms);
      out.push_back({"geometrization",
                     {{"pair", "B:" + std::to_string(lam) + ":" + std::to_string(l) +
                                   multiset_label(tf, ms)},
                      {"l", std::to_string(l)}},
                     lhs,
                     rhs,
                     orth && lhs == rhs && generated.count(to_string(lhs)) > 0});
    }
  }

  // initial cluster monomials against shifted projectives
  DimVector a(q.n, 0);
  for (bool more = true; more;) {
    CQObject obj;
    LaurentPoly mono = LaurentPoly::constant(q.n, 1);
    for (int i = 0; i < q.n; ++i)
      for (int c = 0; c < a[i]; ++c) {
        obj.shifted_projectives.push_back(i);
        mono *= LaurentPoly::variable(q.n, i);
      }
    LaurentPoly lhs = ctx.cc_character(obj);
    out.push_back({"geometrization",
                   {{"pair", "shifted projectives " + dv_to_string(a)}},
                   lhs,
                   mono,
                   lhs == mono && generated.count(to_string(lhs)) > 0});
    more = false;
    for (int i = 0; i < q.n; ++i) {
      if (a[i] < den_bound[i]) {
        ++a[i];
        more = true;
        break;
      }
      a[i] = 0;
    }
  }

  // transverse characters of exceptional points of quasi-length l*p land on
  // the same defect-zero elements, independent of tube and socle
  for (int t : {0, 1}) {
    int p = tf.rank(t);
    for (int l = 1; l <= 2 && dv_leq(dv_scale(l, delta), den_bound); ++l)
      for (int i = 0; i < p; ++i) {
        LaurentPoly tr = ctx.transverse_character(TubePoint::regular(t, i, l * p));
        LaurentPoly expect = cheb_first(l, ctx.generic_variable());
        out.push_back({"geometrization",
                       {{"pair", tf.point_key(TubePoint::regular(t, i, l * p))},
                        {"l", std::to_string(l)}},
                       tr,
                       expect,
                       tr == expect && generated.count(to_string(tr)) > 0});
      }
  }
  return out;
}

Report positivity_spotcheck(CharacterContext& ctx, const LaurentPoly& elem,
                            const std::vector<int>& seq) {
  LaurentPoly expanded = expand_in_cluster(ctx.quiver(), elem, seq);
  std::string s;
  for (size_t i = 0; i < seq.size(); ++i) s += (i ? "," : "") + std::to_string(seq[i] + 1);
  return {"positivity",
          {{"cluster", s.empty() ? "initial" : s}},
          expanded,
          elem,
          is_nonnegative(expanded)};
}

} // namespace qgr
