#include "qgr/fp.hpp"

#include <algorithm>

namespace qgr {

int fp_inv(int a, int p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) throw DomainError("inverse of zero");
  // extended euclid
  int t = 0, newt = 1, r = p, newr = a;
  while (newr != 0) {
    int q = r / newr;
    int tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  return t < 0 ? t + p : t;
}

FpMat fp_identity(int n) {
  FpMat m(n, FpVec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

FpMat fp_mat_mul(const FpMat& a, const FpMat& b, int p) {
  int n = static_cast<int>(a.size());
  int k = static_cast<int>(b.size());
  int m = k ? static_cast<int>(b[0].size()) : 0;
  FpMat r(n, FpVec(m, 0));
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < k; ++l) {
      int av = a[i][l];
      if (!av) continue;
      for (int j = 0; j < m; ++j)
        r[i][j] = static_cast<int>((r[i][j] + static_cast<long long>(av) * b[l][j]) % p);
    }
  return r;
}

FpVec fp_apply(const FpMat& m, const FpVec& v, int p) {
  FpVec r(m.size(), 0);
  for (size_t i = 0; i < m.size(); ++i) {
    long long acc = 0;
    for (size_t j = 0; j < v.size(); ++j) acc += static_cast<long long>(m[i][j]) * v[j];
    r[i] = static_cast<int>(acc % p);
  }
  return r;
}

bool fp_extend_span(Rref& r, FpVec v, int p) {
  if (r.cols == 0 && !v.empty()) r.cols = static_cast<int>(v.size());
  for (size_t i = 0; i < r.rows.size(); ++i) {
    int c = r.pivots[i];
    int f = v[c];
    if (!f) continue;
    const FpVec& row = r.rows[i];
    for (int j = c; j < r.cols; ++j) {
      int x = static_cast<int>((v[j] - static_cast<long long>(f) * row[j]) % p);
      v[j] = x < 0 ? x + p : x;
    }
  }
  int piv = -1;
  for (int j = 0; j < r.cols; ++j)
    if (v[j]) {
      piv = j;
      break;
    }
  if (piv < 0) return false;
  int inv = fp_inv(v[piv], p);
  if (inv != 1)
    for (int j = piv; j < r.cols; ++j)
      v[j] = static_cast<int>(static_cast<long long>(v[j]) * inv % p);
  // clear the new pivot column in the old rows so the structure stays RREF
  for (size_t i = 0; i < r.rows.size(); ++i) {
    int f = r.rows[i][piv];
    if (!f) continue;
    FpVec& row = r.rows[i];
    for (int j = piv; j < r.cols; ++j) {
      int x = static_cast<int>((row[j] - static_cast<long long>(f) * v[j]) % p);
      row[j] = x < 0 ? x + p : x;
    }
  }
  auto pos = std::upper_bound(r.pivots.begin(), r.pivots.end(), piv) - r.pivots.begin();
  r.pivots.insert(r.pivots.begin() + pos, piv);
  r.rows.insert(r.rows.begin() + pos, std::move(v));
  return true;
}

Rref fp_rref(FpMat m, int p) {
  Rref out;
  out.cols = m.empty() ? 0 : static_cast<int>(m[0].size());
  for (auto& row : m) fp_extend_span(out, std::move(row), p);
  return out;
}

int fp_rank(FpMat m, int p) { return fp_rref(std::move(m), p).rank(); }

FpVec fp_reduce(const Rref& r, FpVec v, int p) {
  for (size_t i = 0; i < r.rows.size(); ++i) {
    int c = r.pivots[i];
    int f = v[c];
    if (!f) continue;
    const FpVec& row = r.rows[i];
    for (int j = c; j < r.cols; ++j) {
      int x = static_cast<int>((v[j] - static_cast<long long>(f) * row[j]) % p);
      v[j] = x < 0 ? x + p : x;
    }
  }
  return v;
}

bool fp_in_span(const Rref& r, const FpVec& v, int p) {
  FpVec res = fp_reduce(r, v, p);
  return std::all_of(res.begin(), res.end(), [](int x) { return x == 0; });
}

FpMat fp_nullspace(const FpMat& m, int rows, int cols, int p) {
  FpMat work = m;
  work.resize(rows, FpVec(cols, 0));
  Rref r = fp_rref(std::move(work), p);
  r.cols = cols;
  std::vector<char> is_pivot(cols, 0);
  for (int c : r.pivots) is_pivot[c] = 1;
  FpMat basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    FpVec x(cols, 0);
    x[free] = 1;
    for (int i = 0; i < r.rank(); ++i) {
      int val = r.rows[i][free];
      x[r.pivots[i]] = val == 0 ? 0 : p - val;
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

} // namespace qgr
