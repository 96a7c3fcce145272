#include "qgr/grassmannian.hpp"

#include <algorithm>
#include <utility>

namespace qgr {

Int gaussian_binomial(int n, int k, long long q) {
  if (n < 0 || k < 0 || k > n) return 0;
  std::vector<Int> pw(k + 1);
  pw[0] = 1;
  for (int j = 1; j <= k; ++j) pw[j] = pw[j - 1] * q;
  // row update of [n choose k]_q = [n-1 choose k-1]_q + q^k [n-1 choose k]_q
  std::vector<Int> g(k + 1, Int(0));
  g[0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = std::min(i, k); j >= 1; --j) g[j] = g[j - 1] + pw[j] * g[j];
  return g[k];
}

namespace {

// same recurrence in checked 64-bit; the leaf loops stay in machine words
struct GaussTable {
  std::vector<std::vector<unsigned long long>> g;

  GaussTable(int maxn, long long q) {
    g.assign(maxn + 1, {});
    for (int n = 0; n <= maxn; ++n) {
      g[n].assign(n + 1, 0);
      g[n][0] = 1;
      for (int k = 1; k <= n; ++k) {
        unsigned long long qk = 1, t1 = 0, t2 = 0;
        for (int t = 0; t < k; ++t)
          if (__builtin_mul_overflow(qk, static_cast<unsigned long long>(q), &qk))
            throw DomainError("stratum too large: subspace count overflows");
        unsigned long long hi = k <= n - 1 ? g[n - 1][k] : 0;
        if (__builtin_mul_overflow(qk, hi, &t1) ||
            __builtin_add_overflow(t1, g[n - 1][k - 1], &t2))
          throw DomainError("stratum too large: subspace count overflows");
        g[n][k] = t2;
      }
    }
  }
};

// every full-rank k x m reduced row echelon matrix over F_p, one callback
// each; returning false aborts
template <class F>
bool for_each_rref(int m, int k, int p, F&& fn) {
  if (k == 0) {
    FpMat none;
    return fn(none);
  }
  if (k > m) return true;
  std::vector<int> piv(k);
  for (int i = 0; i < k; ++i) piv[i] = i;
  while (true) {
    FpMat s(k, FpVec(m, 0));
    std::vector<char> is_piv(m, 0);
    for (int i = 0; i < k; ++i) {
      s[i][piv[i]] = 1;
      is_piv[piv[i]] = 1;
    }
    std::vector<std::pair<int, int>> free_pos;
    for (int i = 0; i < k; ++i)
      for (int j = piv[i] + 1; j < m; ++j)
        if (!is_piv[j]) free_pos.emplace_back(i, j);
    while (true) {
      if (!fn(s)) return false;
      size_t t = 0;
      for (; t < free_pos.size(); ++t) {
        auto [i, j] = free_pos[t];
        if (++s[i][j] < p) break;
        s[i][j] = 0;
      }
      if (t == free_pos.size()) break;
    }
    int i = k - 1;
    while (i >= 0 && piv[i] == m - k + i) --i;
    if (i < 0) break;
    ++piv[i];
    for (int j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
  return true;
}

// Sweeps subspace choices at non-sink vertices in topological order, keeping
// at each vertex the span forced by the lower constraint and by the arrow
// images of choices already made. Sinks are never enumerated: any dimension
// between the forced span and the upper space contributes a Gaussian
// binomial factor.
struct Engine {
  const Rep& m;
  int n, p;
  bool has_upper;
  const DimVector* target = nullptr; // per-e mode when set
  unsigned long long budget = ~0ull;
  unsigned long long steps = 0;
  bool aborted = false;

  std::vector<std::vector<int>> out; // arrow indices by source vertex
  std::vector<char> is_sink;
  std::vector<int> enum_order, sinks;
  std::vector<Rref> wspan; // only with an upper constraint
  std::vector<int> wrank;
  std::vector<Rref> forced;
  std::vector<int> cur_rank;
  GaussTable gauss;

  Int single = 0;
  std::vector<Int> buckets;
  std::vector<long long> stride;

  Engine(const Rep& mm, const Subspace* lower, const Subspace* upper)
      : m(mm), n(mm.quiver.n), p(mm.p),
        gauss(*std::max_element(mm.dims.begin(), mm.dims.end()), mm.p) {
    has_upper = upper != nullptr;
    out.assign(n, {});
    for (int a = 0; a < m.quiver.arrow_count(); ++a)
      out[m.quiver.arrows[a].first].push_back(a);
    is_sink.assign(n, 0);
    for (int v = 0; v < n; ++v) is_sink[v] = out[v].empty() ? 1 : 0;
    for (int v : m.quiver.topological_order())
      if (!is_sink[v]) enum_order.push_back(v);
    for (int v = 0; v < n; ++v)
      if (is_sink[v]) sinks.push_back(v);
    wspan.resize(n);
    wrank.assign(n, 0);
    forced.resize(n);
    for (int v = 0; v < n; ++v) {
      wrank[v] = m.dims[v];
      if (has_upper) {
        wspan[v] = fp_rref((*upper)[v], p);
        wrank[v] = wspan[v].rank();
      }
      if (lower)
        forced[v] = fp_rref((*lower)[v], p);
      else
        forced[v] = Rref{{}, {}, m.dims[v]};
    }
    cur_rank.assign(n, 0);
  }

  void init_histogram() {
    stride.assign(n, 1);
    for (int v = n - 2; v >= 0; --v) stride[v] = stride[v + 1] * (m.dims[v + 1] + 1);
    buckets.assign(stride[0] * (m.dims[0] + 1), Int(0));
  }

  void leaf() {
    std::vector<int> low(sinks.size()), room(sinks.size());
    for (size_t i = 0; i < sinks.size(); ++i) {
      low[i] = forced[sinks[i]].rank();
      room[i] = wrank[sinks[i]] - low[i];
      if (room[i] < 0) throw Error("constraint subspaces are inconsistent");
    }
    if (target) {
      unsigned long long prod = 1, next = 0;
      bool big = false;
      Int bigp;
      for (size_t i = 0; i < sinks.size(); ++i) {
        int j = (*target)[sinks[i]] - low[i];
        if (j < 0 || j > room[i]) return;
        unsigned long long f = gauss.g[room[i]][j];
        if (!big && __builtin_mul_overflow(prod, f, &next)) {
          big = true;
          bigp = Int(prod) * f;
        } else if (!big) {
          prod = next;
        } else {
          bigp *= f;
        }
      }
      single += big ? bigp : Int(prod);
      return;
    }
    long long base = 0;
    for (int v : enum_order) base += static_cast<long long>(cur_rank[v]) * stride[v];
    std::vector<int> j(sinks.size(), 0);
    while (true) {
      unsigned long long prod = 1, next = 0;
      bool big = false;
      Int bigp;
      long long idx = base;
      for (size_t i = 0; i < sinks.size(); ++i) {
        idx += static_cast<long long>(low[i] + j[i]) * stride[sinks[i]];
        unsigned long long f = gauss.g[room[i]][j[i]];
        if (!big && __builtin_mul_overflow(prod, f, &next)) {
          big = true;
          bigp = Int(prod) * f;
        } else if (!big) {
          prod = next;
        } else {
          bigp *= f;
        }
      }
      if (big)
        buckets[idx] += bigp;
      else
        buckets[idx] += prod;
      size_t t = 0;
      for (; t < j.size(); ++t) {
        if (++j[t] <= room[t]) break;
        j[t] = 0;
      }
      if (t == j.size()) break;
    }
  }

  void run(size_t idx) {
    if (aborted) return;
    if (idx == enum_order.size()) {
      leaf();
      return;
    }
    int v = enum_order[idx];
    const Rref L = forced[v];
    int l = L.rank();
    // basis of the room left at v: inside the upper space, over the forced one
    std::vector<FpVec> basis;
    if (has_upper) {
      Rref tmp = L;
      for (const FpVec& row : wspan[v].rows) {
        FpVec r = fp_reduce(tmp, row, p);
        if (std::any_of(r.begin(), r.end(), [](int x) { return x != 0; })) {
          basis.push_back(r);
          fp_extend_span(tmp, std::move(r), p);
        }
      }
      if (l + static_cast<int>(basis.size()) != wrank[v])
        throw Error("constraint subspaces are inconsistent");
    } else {
      std::vector<char> piv(m.dims[v], 0);
      for (int c : L.pivots) piv[c] = 1;
      for (int c = 0; c < m.dims[v]; ++c)
        if (!piv[c]) {
          FpVec e(m.dims[v], 0);
          e[c] = 1;
          basis.push_back(std::move(e));
        }
    }
    int mfree = static_cast<int>(basis.size());
    std::vector<std::vector<FpVec>> bimg(out[v].size());
    for (size_t t = 0; t < out[v].size(); ++t)
      for (const FpVec& b : basis)
        bimg[t].push_back(fp_apply(m.mats[out[v][t]], b, p));
    std::vector<int> succ;
    for (int a : out[v]) succ.push_back(m.quiver.arrows[a].second);
    std::sort(succ.begin(), succ.end());
    succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
    std::vector<Rref> save0;
    for (int w : succ) save0.push_back(forced[w]);
    // the forced part of the vertex maps into every successor regardless of
    // the choice below, so push those images once
    for (int a : out[v]) {
      int w = m.quiver.arrows[a].second;
      for (const FpVec& row : L.rows) fp_extend_span(forced[w], fp_apply(m.mats[a], row, p), p);
    }
    int klo = 0, khi = mfree;
    bool dead = false;
    if (target) {
      klo = khi = (*target)[v] - l;
      if (klo < 0 || klo > mfree) dead = true;
      if (!dead)
        for (int w : succ)
          if (forced[w].rank() > (*target)[w]) dead = true;
    }
    if (!dead) {
      std::vector<Rref> save1;
      for (int w : succ) save1.push_back(forced[w]);
      for (int k = klo; k <= khi && !aborted; ++k) {
        for_each_rref(mfree, k, p, [&](const FpMat& s) {
          if (++steps > budget) {
            aborted = true;
            return false;
          }
          for (size_t t = 0; t < out[v].size(); ++t) {
            int w = m.quiver.arrows[out[v][t]].second;
            for (int i = 0; i < k; ++i) {
              FpVec img(m.dims[w], 0);
              for (int jj = 0; jj < mfree; ++jj) {
                int c = s[i][jj];
                if (!c) continue;
                const FpVec& bj = bimg[t][jj];
                for (int r = 0; r < m.dims[w]; ++r) img[r] = (img[r] + c * bj[r]) % p;
              }
              fp_extend_span(forced[w], std::move(img), p);
            }
          }
          bool skip = false;
          if (target)
            for (int w : succ)
              if (forced[w].rank() > (*target)[w]) {
                skip = true;
                break;
              }
          if (!skip) {
            cur_rank[v] = l + k;
            run(idx + 1);
          }
          for (size_t si = 0; si < succ.size(); ++si) forced[succ[si]] = save1[si];
          return !aborted;
        });
      }
    }
    for (size_t si = 0; si < succ.size(); ++si) forced[succ[si]] = save0[si];
  }
};

void check_constraints(const Rep& m, const Subspace* lower, const Subspace* upper) {
  if (lower && !is_subrep(m, *lower))
    throw ValidationError("lower constraint is not a subrepresentation");
  if (upper && !is_subrep(m, *upper))
    throw ValidationError("upper constraint is not a subrepresentation");
  if (lower && upper)
    for (int v = 0; v < m.quiver.n; ++v) {
      Rref w = fp_rref((*upper)[v], m.p);
      for (const FpVec& row : (*lower)[v])
        if (!fp_in_span(w, row, m.p))
          throw ValidationError("lower constraint is not inside the upper one");
    }
}

} // namespace

Int count_subreps(const Rep& m, const DimVector& e, const Subspace* lower,
                  const Subspace* upper) {
  if (static_cast<int>(e.size()) != m.quiver.n)
    throw ValidationError("dimension vector size mismatch");
  for (int v = 0; v < m.quiver.n; ++v)
    if (e[v] < 0 || e[v] > m.dims[v]) return 0;
  check_constraints(m, lower, upper);
  Engine eng(m, lower, upper);
  eng.target = &e;
  eng.run(0);
  return eng.single;
}

std::optional<std::map<DimVector, Int>> count_all_subreps(const Rep& m,
                                                          const Subspace* lower,
                                                          const Subspace* upper,
                                                          unsigned long long budget) {
  check_constraints(m, lower, upper);
  Engine eng(m, lower, upper);
  eng.budget = budget;
  eng.init_histogram();
  eng.run(0);
  if (eng.aborted) return std::nullopt;
  std::map<DimVector, Int> out;
  DimVector e(m.quiver.n, 0);
  for (size_t idx = 0; idx < eng.buckets.size(); ++idx) {
    if (eng.buckets[idx] != 0) {
      long long rem = static_cast<long long>(idx);
      for (int v = 0; v < m.quiver.n; ++v) {
        e[v] = static_cast<int>(rem / eng.stride[v]);
        rem %= eng.stride[v];
      }
      out[e] = eng.buckets[idx];
    }
  }
  return out;
}

} // namespace qgr
