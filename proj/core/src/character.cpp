#include "qgr/character.hpp"

#include <algorithm>

#include "qgr/grassmannian.hpp"

namespace qgr {

namespace {

// enumeration step budget for one whole-histogram sweep; beyond it the
// per-stratum targeted mode takes over
constexpr unsigned long long kBudget = 60000000ull;

bool is_prime(int x) {
  if (x < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= x; ++d)
    if (x % d == 0) return false;
  return true;
}

// exact polynomial through (xs, ys) by divided differences, coefficients
// ascending
std::vector<Rat> newton_fit(const std::vector<int>& xs, const std::vector<Int>& ys) {
  size_t n = xs.size();
  std::vector<Rat> dd(n);
  for (size_t i = 0; i < n; ++i) dd[i] = Rat(ys[i]);
  for (size_t j = 1; j < n; ++j)
    for (size_t i = n; i-- > j;) dd[i] = (dd[i] - dd[i - 1]) / Rat(xs[i] - xs[i - j]);
  std::vector<Rat> poly{dd[n - 1]};
  for (size_t i = n - 1; i-- > 0;) {
    std::vector<Rat> nx(poly.size() + 1, Rat(0));
    for (size_t k = 0; k < poly.size(); ++k) {
      nx[k + 1] += poly[k];
      nx[k] -= Rat(xs[i]) * poly[k];
    }
    nx[0] += dd[i];
    poly = std::move(nx);
  }
  return poly;
}

Rat eval_poly(const std::vector<Rat>& c, long long x) {
  Rat r(0);
  for (size_t i = c.size(); i-- > 0;) r = r * x + c[i];
  return r;
}

std::vector<char> has_out_arrow(const Quiver& q) {
  std::vector<char> out(q.n, 0);
  for (auto& [s, t] : q.arrows) out[s] = 1;
  return out;
}

// log_p-scale proxies for the sweep cost: only non-sink vertices enumerate
long long box_exponent(const Quiver& q, const DimVector& d) {
  auto en = has_out_arrow(q);
  long long s = 0;
  for (int v = 0; v < q.n; ++v)
    if (en[v]) s += static_cast<long long>(d[v] / 2) * (d[v] - d[v] / 2);
  return s;
}

long long stratum_cost(const Quiver& q, const DimVector& d, const DimVector& e) {
  auto en = has_out_arrow(q);
  long long s = 0;
  for (int v = 0; v < q.n; ++v)
    if (en[v]) s += static_cast<long long>(e[v]) * (d[v] - e[v]);
  return s;
}

template <class F>
void sweep_box(const DimVector& d, F&& f) {
  DimVector e(d.size(), 0);
  while (true) {
    f(e);
    size_t t = 0;
    for (; t < d.size(); ++t) {
      if (++e[t] <= d[t]) break;
      e[t] = 0;
    }
    if (t == d.size()) break;
  }
}

} // namespace

CharacterContext::CharacterContext(const Quiver& q) : q_(q), emat_(euler_matrix(q)) {}

const TubeFamily& CharacterContext::tubes() {
  std::lock_guard lk(mu_);
  if (!tubes_) tubes_.emplace(q_);
  return *tubes_;
}

std::vector<int> CharacterContext::primes_for(const RepTemplate& m, size_t count) const {
  std::vector<int> ps;
  for (int p = 2; ps.size() < count; ++p)
    if (is_prime(p) && m.valid_at(p)) ps.push_back(p);
  return ps;
}

LaurentPoly CharacterContext::stratum_monomial(const DimVector& d, const DimVector& e) const {
  int n = q_.n;
  LaurentPoly::Exp a(n, 0);
  for (int i = 0; i < n; ++i) {
    long long v = 0;
    for (int j = 0; j < n; ++j) v -= e[j] * emat_[j][i] + emat_[i][j] * (d[j] - e[j]);
    a[i] = static_cast<int>(v);
  }
  return LaurentPoly::monomial(a, 1);
}

std::shared_ptr<const std::map<DimVector, Int>> CharacterContext::peek_hist(
    const std::string& key) {
  std::lock_guard lk(mu_);
  auto it = hist_.find(key);
  return it == hist_.end() ? nullptr : it->second;
}

std::shared_ptr<const std::map<DimVector, Int>> CharacterContext::get_hist(
    const RepTemplate& m, const RepTemplate& md, int p) {
  std::string key = m.key + "|h" + std::to_string(p);
  {
    std::lock_guard lk(mu_);
    if (hist_tried_.count(key)) return hist_[key];
    // subspace counts grow with the field, so an aborted sweep at a smaller
    // prime rules this one out too
    auto fl = hist_floor_.find(m.key);
    if (fl != hist_floor_.end() && p >= fl->second) {
      hist_tried_[key] = 1;
      return hist_[key] = nullptr;
    }
  }
  bool use_dual = box_exponent(md.quiver, md.dims) < box_exponent(m.quiver, m.dims);
  const RepTemplate& side = use_dual ? md : m;
  auto got = count_all_subreps(side.realize(p), nullptr, nullptr, kBudget);
  std::shared_ptr<const std::map<DimVector, Int>> res;
  if (got) {
    if (use_dual) {
      auto remap = std::make_shared<std::map<DimVector, Int>>();
      for (auto& [e, c] : *got) (*remap)[dv_sub(m.dims, e)] = c;
      res = remap;
    } else {
      res = std::make_shared<const std::map<DimVector, Int>>(std::move(*got));
    }
  }
  std::lock_guard lk(mu_);
  hist_tried_[key] = 1;
  hist_[key] = res;
  if (!res) {
    auto fl = hist_floor_.find(m.key);
    if (fl == hist_floor_.end() || p < fl->second) hist_floor_[m.key] = p;
  }
  return res;
}

Int CharacterContext::get_count(const RepTemplate& m, const RepTemplate& md, int p,
                                const DimVector& e) {
  auto h = get_hist(m, md, p);
  if (h) {
    auto it = h->find(e);
    return it == h->end() ? Int(0) : it->second;
  }
  std::string key = m.key + "|c" + std::to_string(p) + "|" + dv_to_string(e);
  {
    std::lock_guard lk(mu_);
    auto it = cnt_.find(key);
    if (it != cnt_.end()) return it->second;
  }
  DimVector ed = dv_sub(m.dims, e);
  bool use_dual = stratum_cost(md.quiver, md.dims, ed) < stratum_cost(m.quiver, m.dims, e);
  Int c = use_dual ? count_subreps(md.realize(p), ed) : count_subreps(m.realize(p), e);
  std::lock_guard lk(mu_);
  cnt_[key] = c;
  return c;
}

std::map<DimVector, long long> CharacterContext::chi_of(const RepTemplate& m, bool rigid) {
  std::string mkey = m.key + (rigid ? "|chi_r" : "|chi_g");
  {
    std::lock_guard lk(mu_);
    auto it = chi_.find(mkey);
    if (it != chi_.end()) return it->second;
  }
  if (!(m.quiver == q_)) throw ValidationError("template belongs to a different quiver");
  const DimVector& d = m.dims;
  const int n = q_.n;
  auto bound = [&](const DimVector& e) -> long long {
    if (rigid) return euler_form(q_, e, dv_sub(d, e));
    long long s = 0;
    for (int v = 0; v < n; ++v) s += static_cast<long long>(e[v]) * (d[v] - e[v]);
    return s;
  };
  long long maxb = 0;
  sweep_box(d, [&](const DimVector& e) { maxb = std::max(maxb, bound(e)); });
  auto primes = primes_for(m, static_cast<size_t>(maxb) + 2);
  RepTemplate md = rt_dual(m);
  if (rigid && !is_rigid(m.realize(primes[0])))
    throw ValidationError("rigid interpolation requested for a non-rigid module");
  std::map<DimVector, long long> chi;
  sweep_box(d, [&](const DimVector& e) {
    long long b = bound(e);
    if (b < 0) {
      // smooth dimension negative: the stratum must be empty outright
      if (get_count(m, md, primes[0], e) != 0)
        throw Error("stratum with negative expected dimension has points");
      return;
    }
    size_t npts = static_cast<size_t>(b) + 1;
    std::vector<int> xs(primes.begin(), primes.begin() + npts);
    std::vector<Int> ys;
    for (int p : xs) ys.push_back(get_count(m, md, p, e));
    auto poly = newton_fit(xs, ys);
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    for (auto& c : poly)
      if (denominator(c) != 1) throw Error("stratum count is not an integer polynomial");
    // spare samples beyond the fit: one forced for rigid strata, otherwise
    // whatever histograms other strata have already paid for
    for (size_t i = npts; i < primes.size(); ++i) {
      Int have;
      bool got = false;
      if (rigid && i == npts) {
        have = get_count(m, md, primes[i], e);
        got = true;
      } else if (auto h = peek_hist(m.key + "|h" + std::to_string(primes[i]))) {
        auto it = h->find(e);
        have = it == h->end() ? Int(0) : it->second;
        got = true;
      }
      if (got && Rat(have) != eval_poly(poly, primes[i]))
        throw Error("stratum count disagrees with the interpolated polynomial");
    }
    Rat at_one = eval_poly(poly, 1);
    Int ci = numerator(at_one);
    if (ci != 0) {
      if (boost::multiprecision::abs(ci) > (Int(1) << 60))
        throw Error("Euler characteristic out of range");
      chi[e] = ci.convert_to<long long>();
    }
  });
  std::lock_guard lk(mu_);
  chi_[mkey] = chi;
  return chi;
}

std::map<DimVector, long long> CharacterContext::euler_characteristics(const RepTemplate& m,
                                                                       bool rigid) {
  return chi_of(m, rigid);
}

LaurentPoly CharacterContext::cc_character(const RepTemplate& m, bool rigid) {
  std::string key = "cc|" + m.key + (rigid ? "|r" : "|g");
  {
    std::lock_guard lk(mu_);
    auto it = char_.find(key);
    if (it != char_.end()) return it->second;
  }
  auto chi = chi_of(m, rigid);
  LaurentPoly x = LaurentPoly::zero(q_.n);
  for (auto& [e, c] : chi) x += stratum_monomial(m.dims, e) * Int(c);
  std::lock_guard lk(mu_);
  char_[key] = x;
  return x;
}

LaurentPoly CharacterContext::cc_character(const CQObject& obj) {
  LaurentPoly r = LaurentPoly::constant(q_.n, 1);
  for (int i : obj.shifted_projectives) {
    if (i < 0 || i >= q_.n) throw ValidationError("shifted projective index out of range");
    r *= LaurentPoly::variable(q_.n, i);
  }
  for (const auto& s : obj.summands) r *= cc_character(s, false);
  return r;
}

LaurentPoly CharacterContext::tube_character(int tube, int i, int l) {
  if (l < 0) return LaurentPoly::zero(q_.n);
  if (l == 0) return LaurentPoly::constant(q_.n, 1);
  const TubeFamily& tf = tubes();
  bool rg = l < tf.rank(tube);
  return cc_character(tf.regular(tube, i, l), rg);
}

LaurentPoly CharacterContext::band_character(long long lambda, bool inf, int l) {
  if (l < 0) return LaurentPoly::zero(q_.n);
  if (l == 0) return LaurentPoly::constant(q_.n, 1);
  return cc_character(tubes().band(lambda, inf, l), false);
}

LaurentPoly CharacterContext::character(const TubePoint& t) {
  if (t.tube < 0) return band_character(t.lambda, t.lambda_inf, t.len);
  return tube_character(t.tube, t.socle, t.len);
}

std::map<DimVector, long long> CharacterContext::transverse_euler(const TubePoint& t) {
  const TubeFamily& tf = tubes();
  int rk = tf.rank_of(t);
  if (t.len == 0) return {{DimVector(q_.n, 0), 1}};
  if (t.tube >= 0 && t.len < rk) return chi_of(tf.realize(t), true);
  RepTemplate mt = tf.realize(t);
  auto gr = chi_of(mt, false);
  // t.len = l*rk + k: the removed region sits between the canonical chain
  // submodules of quasi-lengths k+1 and l*rk - 1
  int k = t.len % rk;
  int qlen = t.len - 2 * k - 2;
  TubePoint upt = t;
  upt.len = k + 1;
  DimVector du = tf.point_dims(upt);
  TubePoint qt = t;
  qt.len = std::max(qlen, 0);
  if (t.tube >= 0) qt.socle = (t.socle + k + 1) % rk;
  std::map<DimVector, long long> between;
  if (qlen == 0) {
    between[du] = 1;
  } else if (qlen > 0) {
    for (auto& [e, c] : chi_of(tf.realize(qt), false)) between[dv_add(e, du)] = c;
  }
  if (qlen >= 0) {
    // the discarded region must be the quotient's Grassmannian on the nose;
    // checked by a chain-constrained count at the smallest usable prime
    int p0 = primes_for(mt, 1)[0];
    Subspace u = subspace_mod_p(tf.chain_basis(t, k + 1), p0);
    Subspace w = subspace_mod_p(tf.chain_basis(t, t.len - k - 1), p0);
    auto direct = count_all_subreps(mt.realize(p0), &u, &w);
    std::map<DimVector, Int> expect;
    if (qlen == 0) {
      expect[du] = 1;
    } else {
      auto qcnt = count_all_subreps(tf.realize(qt).realize(p0));
      for (auto& [e, c] : *qcnt) expect[dv_add(e, du)] = c;
    }
    if (!direct || *direct != expect)
      throw Error("chain-constrained counts disagree with the quotient");
  }
  std::map<DimVector, long long> tr = gr;
  for (auto& [e, c] : between) {
    long long g = (tr.count(e) ? tr[e] : 0) - c;
    if (g == 0)
      tr.erase(e);
    else
      tr[e] = g;
  }
  return tr;
}

LaurentPoly CharacterContext::transverse_character(const TubePoint& t) {
  std::string key = "tr|" + tubes().point_key(t);
  {
    std::lock_guard lk(mu_);
    auto it = char_.find(key);
    if (it != char_.end()) return it->second;
  }
  auto te = transverse_euler(t);
  DimVector d = tubes().point_dims(t);
  LaurentPoly x = LaurentPoly::zero(q_.n);
  for (auto& [e, c] : te) x += stratum_monomial(d, e) * Int(c);
  std::lock_guard lk(mu_);
  char_[key] = x;
  return x;
}

LaurentPoly CharacterContext::generic_variable() {
  {
    std::lock_guard lk(mu_);
    if (xdelta_) return *xdelta_;
  }
  const TubeFamily& tf = tubes();
  std::vector<long long> params;
  for (long long l = 1; params.size() < 2; ++l)
    if (!tf.lambda_degenerate(l, false)) params.push_back(l);
  LaurentPoly a = band_character(params[0], false, 1);
  LaurentPoly b = band_character(params[1], false, 1);
  if (!(a == b)) throw Error("generic band character depends on the parameter");
  std::lock_guard lk(mu_);
  xdelta_ = a;
  return a;
}

} // namespace qgr
