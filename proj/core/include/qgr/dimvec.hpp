#pragma once

#include <cassert>
#include <numeric>
#include <string>
#include <vector>

namespace qgr {

// Dimension vectors are small (entries bounded by a few hundred at most),
// so plain int components suffice; overflow-sensitive bilinear forms are
// computed in long long.
using DimVector = std::vector<int>;

inline DimVector dv_add(const DimVector& a, const DimVector& b) {
  assert(a.size() == b.size());
  DimVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline DimVector dv_sub(const DimVector& a, const DimVector& b) {
  assert(a.size() == b.size());
  DimVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline DimVector dv_scale(int c, const DimVector& a) {
  DimVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

// componentwise a <= b
inline bool dv_leq(const DimVector& a, const DimVector& b) {
  assert(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline bool dv_is_zero(const DimVector& a) {
  for (int x : a)
    if (x != 0) return false;
  return true;
}

inline bool dv_nonneg(const DimVector& a) {
  for (int x : a)
    if (x < 0) return false;
  return true;
}

inline int dv_total(const DimVector& a) {
  int s = 0;
  for (int x : a) s += x;
  return s;
}

inline std::string dv_to_string(const DimVector& a) {
  std::string s = "(";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  s += ")";
  return s;
}

} // namespace qgr
