#pragma once

#include <vector>

#include "qgr/error.hpp"
#include "qgr/laurent.hpp"

namespace qgr {

// Chebyshev-style operators evaluated in any commutative ring; the caller
// passes the ring's 1 so no constructor protocol is imposed on T.

// normalized first kind: F_0 = 2, F_1 = x, F_l = x F_{l-1} - F_{l-2}
template <class T>
T cheb_first(int l, const T& x, const T& one) {
  if (l < 0) throw DomainError("cheb_first needs l >= 0");
  if (l == 0) return one + one;
  T prev = one + one; // F_0
  T cur = x;          // F_1
  for (int i = 2; i <= l; ++i) {
    T nxt = x * cur - prev;
    prev = cur;
    cur = nxt;
  }
  return cur;
}

// second kind with the S_{-1} = 0 convention: S_0 = 1, S_l = x S_{l-1} - S_{l-2}
template <class T>
T cheb_second(int l, const T& x, const T& one) {
  if (l < -1) throw DomainError("cheb_second needs l >= -1");
  T prev = one - one; // S_{-1}
  T cur = one;        // S_0
  if (l == -1) return prev;
  for (int i = 1; i <= l; ++i) {
    T nxt = x * cur - prev;
    prev = cur;
    cur = nxt;
  }
  return cur;
}

// generalized: P_0 = 1, P_l(x_1..x_l) = x_l P_{l-1}(x_1..x_{l-1}) - P_{l-2}(x_1..x_{l-2})
template <class T>
T cheb_generalized(const std::vector<T>& xs, const T& one) {
  T p_prev = one - one; // P_{-1}, so the l = 1 step needs no special case
  T p_cur = one;        // P_0
  for (size_t l = 1; l <= xs.size(); ++l) {
    T nxt = xs[l - 1] * p_cur - p_prev;
    p_prev = p_cur;
    p_cur = nxt;
  }
  return p_cur;
}

inline long long cheb_first(int l, long long x) { return cheb_first<long long>(l, x, 1); }
inline long long cheb_second(int l, long long x) { return cheb_second<long long>(l, x, 1); }

inline LaurentPoly cheb_first(int l, const LaurentPoly& x) {
  return cheb_first(l, x, LaurentPoly::constant(x.vars(), 1));
}
inline LaurentPoly cheb_second(int l, const LaurentPoly& x) {
  return cheb_second(l, x, LaurentPoly::constant(x.vars(), 1));
}
inline LaurentPoly cheb_generalized(const std::vector<LaurentPoly>& xs, int nvars) {
  return cheb_generalized(xs, LaurentPoly::constant(nvars, 1));
}

} // namespace qgr
