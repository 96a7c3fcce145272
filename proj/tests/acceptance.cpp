// Acceptance gate: twelve checks, one pass/fail line each, exit 0 only when
// every one passes. Wall-clock caps apply where noted.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "qgr/bases.hpp"
#include "qgr/character.hpp"
#include "qgr/chebyshev.hpp"
#include "qgr/error.hpp"
#include "qgr/laurent.hpp"
#include "qgr/mutation.hpp"
#include "qgr/quiver.hpp"
#include "qgr/rep.hpp"
#include "qgr/tube.hpp"

using namespace qgr;

namespace {

Quiver kronecker() { return Quiver(2, {{0, 1}, {0, 1}}); }
Quiver a21() { return Quiver(3, {{0, 1}, {1, 2}, {0, 2}}); }
Quiver a31() { return Quiver(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }

// -------- 1: quasi-length 2 strata over the double arrow ------------------

bool crit1(std::string& note) {
  CharacterContext ctx(kronecker());
  std::map<DimVector, long long> gr{{{0, 0}, 1}, {{0, 1}, 2}, {{0, 2}, 1},
                                    {{1, 1}, 1}, {{1, 2}, 2}, {{2, 2}, 1}};
  auto tr = gr;
  tr.erase({1, 1});
  for (TubePoint t : {TubePoint::band(0, false, 2), TubePoint::band(1, false, 2),
                      TubePoint::band(0, true, 2)}) {
    if (ctx.euler_characteristics(ctx.tubes().realize(t)) != gr) {
      note = "Gr strata mismatch";
      return false;
    }
    if (ctx.transverse_euler(t) != tr) {
      note = "Tr strata mismatch";
      return false;
    }
  }
  return true;
}

// -------- 2: dimension-delta strata on three vertices ----------------------

bool crit2(std::string& note) {
  CharacterContext ctx(a21());
  std::map<DimVector, long long> base{
      {{0, 0, 0}, 1}, {{0, 0, 1}, 1}, {{0, 1, 1}, 1}, {{1, 1, 1}, 1}};
  auto plus = [&](DimVector e) {
    auto m = base;
    m[e] = 1;
    return m;
  };
  struct Row {
    TubePoint t;
    std::map<DimVector, long long> gr, tr;
  };
  std::vector<Row> rows{
      {TubePoint::band(1, false, 1), base, base},
      {TubePoint::regular(0, 1, 2), plus({0, 1, 0}), base},
      {TubePoint::regular(0, 0, 2), plus({1, 0, 1}), base},
      {TubePoint::regular(1, 0, 1), base, base},
  };
  for (auto& r : rows) {
    if (ctx.euler_characteristics(ctx.tubes().realize(r.t)) != r.gr) {
      note = "Gr strata mismatch";
      return false;
    }
    if (ctx.transverse_euler(r.t) != r.tr) {
      note = "Tr strata mismatch";
      return false;
    }
  }
  return true;
}

// -------- 3: transverse layer equalities -----------------------------------

bool crit3(std::string& note) {
  CharacterContext kc(kronecker());
  LaurentPoly kxd = kc.generic_variable();
  for (TubePoint t : {TubePoint::band(0, false, 2), TubePoint::band(1, false, 2),
                      TubePoint::band(0, true, 2)}) {
    LaurentPoly theta = kc.transverse_character(t);
    if (theta != kc.character(t) - LaurentPoly::constant(2, 1)) {
      note = "transverse character is not X - 1 at quasi-length 2";
      return false;
    }
    if (theta != cheb_first(2, kxd)) {
      note = "transverse character is not F_2 of the generic variable";
      return false;
    }
  }
  CharacterContext ac(a21());
  LaurentPoly axd = ac.generic_variable();
  for (TubePoint t : {TubePoint::band(1, false, 1), TubePoint::regular(0, 1, 2),
                      TubePoint::regular(0, 0, 2), TubePoint::regular(1, 0, 1)}) {
    if (ac.transverse_character(t) != axd) {
      note = "transverse character depends on the tube";
      return false;
    }
  }
  return true;
}

// -------- 4: defect-zero difference identity --------------------------------

bool difference_instance(CharacterContext& ctx, int tube, int l, int k) {
  int p = ctx.tubes().rank(tube);
  LaurentPoly lhs = ctx.tube_character(tube, 0, k) * cheb_first(l, ctx.generic_variable());
  LaurentPoly rhs =
      ctx.tube_character(tube, 0, l * p + k) - ctx.tube_character(tube, k + 1, l * p - k - 2);
  return lhs == rhs;
}

bool crit4(std::string& note) {
  CharacterContext ac(a21());
  for (int l = 1; l <= 3; ++l)
    for (int k = 0; k <= 1; ++k)
      if (!difference_instance(ac, 0, l, k)) {
        note = "rank 2: l=" + std::to_string(l) + " k=" + std::to_string(k);
        return false;
      }
  CharacterContext bc(a31());
  for (int l = 1; l <= 2; ++l)
    for (int k = 0; k <= 2; ++k)
      if (!difference_instance(bc, 0, l, k)) {
        note = "rank 3: l=" + std::to_string(l) + " k=" + std::to_string(k);
        return false;
      }
  return true;
}

// -------- 5: quasi-length exchange identity ---------------------------------

bool crit5(std::string& note) {
  CharacterContext ac(a21());
  CharacterContext bc(a31());
  struct Inst {
    CharacterContext* ctx;
    int l;
  };
  for (Inst i : {Inst{&ac, 2}, Inst{&ac, 3}, Inst{&bc, 2}}) {
    Report r = verify_key_identity(*i.ctx, 0, i.l);
    if (!r.pass) {
      note = "p=" + std::to_string(i.ctx->tubes().rank(0)) + " l=" + std::to_string(i.l);
      return false;
    }
  }
  return true;
}

// -------- 6: tube multiplication instances ----------------------------------

bool crit6(std::string& note) {
  struct Inst {
    int m, n, j, k;
  };
  std::map<std::string, std::pair<Quiver, std::vector<Inst>>> plan{
      {"p=1",
       {kronecker(), {{1, 1, 0, 1}, {2, 1, 0, 1}, {2, 2, 0, 1}, {2, 2, 0, 2}, {3, 2, 0, 1}}}},
      {"p=2",
       {a21(), {{1, 1, 1, 0}, {2, 2, 0, 1}, {2, 2, 1, 0}, {3, 2, 1, 0}, {2, 3, 1, 1}}}},
      {"p=3",
       {a31(), {{1, 1, 1, 0}, {2, 2, 1, 0}, {2, 2, 2, 0}, {3, 2, 1, 0}, {1, 3, 0, 1}}}},
  };
  for (auto& [name, qp] : plan) {
    CharacterContext ctx(qp.first);
    for (auto& i : qp.second) {
      Report r = verify_multiplication_formula(ctx, 0, i.m, i.n, i.j, i.k);
      if (!r.pass) {
        note = name + " (" + std::to_string(i.m) + "," + std::to_string(i.n) + "," +
               std::to_string(i.j) + "," + std::to_string(i.k) + ")";
        return false;
      }
    }
  }
  return true;
}

// -------- 7: Chebyshev identities -------------------------------------------

// dense determinant by first-row expansion; independent of the recurrence
long long det_dense(const std::vector<std::vector<long long>>& m) {
  size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  long long acc = 0;
  for (size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<long long>> minor(n - 1, std::vector<long long>(n - 1));
    for (size_t i = 1; i < n; ++i) {
      size_t cc = 0;
      for (size_t j = 0; j < n; ++j) {
        if (j == c) continue;
        minor[i - 1][cc++] = m[i][j];
      }
    }
    long long term = m[0][c] * det_dense(minor);
    acc += (c % 2 == 0) ? term : -term;
  }
  return acc;
}

bool crit7(std::string& note) {
  LaurentPoly t = LaurentPoly::variable(1, 0);
  LaurentPoly x = t + LaurentPoly::monomial({-1}, 1);
  for (int l = 0; l <= 12; ++l)
    if (cheb_first(l, x) != LaurentPoly::monomial({l}, 1) + LaurentPoly::monomial({-l}, 1)) {
      note = "F_l(t + 1/t) != t^l + t^-l at l=" + std::to_string(l);
      return false;
    }
  LaurentPoly y = LaurentPoly::variable(1, 0);
  for (int l = 1; l <= 10; ++l)
    if (cheb_first(l, y) != cheb_second(l, y) - cheb_second(l - 2, y)) {
      note = "F_l != S_l - S_{l-2} at l=" + std::to_string(l);
      return false;
    }
  std::mt19937 rng(271828);
  std::uniform_int_distribution<int> dist(-5, 5);
  for (int l = 1; l <= 8; ++l)
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<long long> xs(l);
      for (auto& v : xs) v = dist(rng);
      std::vector<std::vector<long long>> tri(l, std::vector<long long>(l, 0));
      for (int i = 0; i < l; ++i) {
        tri[i][i] = xs[i];
        if (i + 1 < l) tri[i][i + 1] = tri[i + 1][i] = 1;
      }
      if (cheb_generalized(xs, 1LL) != det_dense(tri)) {
        note = "P_l != tridiagonal determinant at l=" + std::to_string(l);
        return false;
      }
      std::vector<long long> rev(xs.rbegin(), xs.rend());
      if (cheb_generalized(xs, 1LL) != cheb_generalized(rev, 1LL)) {
        note = "P_l not symmetric under reversal at l=" + std::to_string(l);
        return false;
      }
    }
  return true;
}

// -------- 8: denominator vectors are dimension vectors ----------------------

bool crit8(std::string& note) {
  for (const Quiver& q : {kronecker(), a21()}) {
    CharacterContext ctx(q);
    const TubeFamily& tf = ctx.tubes();
    std::vector<TubePoint> pts;
    for (int tube = 0; tube <= 1; ++tube)
      for (int socle = 0; socle < tf.rank(tube); ++socle)
        for (int l = 1; l <= 4; ++l) pts.push_back(TubePoint::regular(tube, socle, l));
    for (int l = 1; l <= 4; ++l) pts.push_back(TubePoint::band(1, false, l));
    for (const TubePoint& t : pts)
      if (denominator_vector(ctx.character(t)) != tf.point_dims(t)) {
        note = "den(X) != dim at " + tf.point_key(t);
        return false;
      }
  }
  return true;
}

// -------- 9: mutation cross-check on the double arrow -----------------------

// the rigid indecomposables off the tubes, by dimension vector (n,n+1) or
// (n+1,n); identity blocks shifted one slot apart
RepTemplate kronecker_rigid(const Quiver& q, const DimVector& d) {
  int rows = d[1], cols = d[0];
  ZMat a(rows, std::vector<long long>(cols, 0)), b = a;
  for (int i = 0; i < rows && i < cols; ++i) a[i][i] = 1;
  if (rows > cols) // (n,n+1): second arrow shifts down
    for (int i = 0; i < cols; ++i) b[i + 1][i] = 1;
  else // (n+1,n): second arrow shifts right
    for (int i = 0; i < rows; ++i) b[i][i + 1] = 1;
  return make_template(q, d, {a, b}, {}, "accept:rigid:" + dv_to_string(d));
}

bool crit9(std::string& note) {
  Quiver q = kronecker();
  CharacterContext ctx(q);
  auto vars = enumerate_cluster_variables(q, 6);
  std::map<DimVector, LaurentPoly> by_den;
  for (auto& v : vars) {
    DimVector den = denominator_vector(v);
    if (by_den.count(den)) {
      note = "two variables share den " + dv_to_string(den);
      return false;
    }
    by_den.emplace(den, v);
  }
  if (by_den.count({-1, 0}) == 0 || by_den.at({-1, 0}) != LaurentPoly::variable(2, 0) ||
      by_den.count({0, -1}) == 0 || by_den.at({0, -1}) != LaurentPoly::variable(2, 1)) {
    note = "initial variables missing";
    return false;
  }
  by_den.erase({-1, 0});
  by_den.erase({0, -1});
  if (by_den.size() < 12) {
    note = "expected at least 12 non-initial variables at depth 6";
    return false;
  }
  for (auto& [den, v] : by_den) {
    if (den[0] != den[1] + 1 && den[1] != den[0] + 1) {
      note = "unexpected den " + dv_to_string(den);
      return false;
    }
    if (ctx.cc_character(kronecker_rigid(q, den), true) != v) {
      note = "character mismatch at den " + dv_to_string(den);
      return false;
    }
  }
  return true;
}

// -------- 10: band parameter independence -----------------------------------

bool crit10(std::string& note) {
  for (const Quiver& q : {kronecker(), a21()}) {
    CharacterContext ctx(q);
    LaurentPoly x1 = ctx.band_character(1, false, 1);
    for (long long lam : {2LL, 3LL})
      if (ctx.band_character(lam, false, 1) != x1) {
        note = "band character varies with the parameter";
        return false;
      }
    if (ctx.generic_variable() != x1) {
      note = "generic variable disagrees with the parameter-1 band";
      return false;
    }
  }
  return true;
}

// -------- 11: basis denominator structure -----------------------------------

bool crit11(std::string& note) {
  struct Plan {
    Quiver q;
    DimVector bound;
  };
  for (Plan plan : {Plan{kronecker(), {3, 3}}, Plan{a21(), {3, 3, 3}}}) {
    CharacterContext ctx(plan.q);
    BasisSets bs = basis_sets(ctx, plan.bound, 6);
    std::multiset<DimVector> dens[3];
    const std::vector<BasisElement>* sets[3] = {&bs.b, &bs.g, &bs.c};
    for (int s = 0; s < 3; ++s) {
      for (auto& e : *sets[s]) dens[s].insert(e.den);
      std::set<DimVector> uniq(dens[s].begin(), dens[s].end());
      if (uniq.size() != dens[s].size()) {
        note = "repeated den inside one listing";
        return false;
      }
    }
    if (dens[0] != dens[1] || dens[1] != dens[2]) {
      note = "den multisets differ across listings";
      return false;
    }
    if (bs.b.empty()) {
      note = "empty listing";
      return false;
    }
  }
  return true;
}

// -------- 12: positivity spot checks ----------------------------------------

bool crit12(std::string& note) {
  CharacterContext kc(kronecker());
  LaurentPoly b2 = b_element_defect_zero(kc, 0, 2, 0).value;
  for (auto& seq : std::vector<std::vector<int>>{{0}, {0, 1}})
    if (!positivity_spotcheck(kc, b2, seq).pass) {
      note = "level-2 element not positive on two vertices";
      return false;
    }
  CharacterContext ac(a21());
  LaurentPoly e = ac.generic_variable() * ac.tube_character(0, 0, 1);
  for (auto& seq : std::vector<std::vector<int>>{{0}, {0, 1}})
    if (!positivity_spotcheck(ac, e, seq).pass) {
      note = "generic times quasi-simple not positive on three vertices";
      return false;
    }
  return true;
}

struct Criterion {
  const char* name;
  double cap_seconds; // 0 = uncapped
  bool (*run)(std::string&);
};

} // namespace

int main() {
  const Criterion criteria[] = {
      {"quasi-length 2 strata, double arrow", 10, crit1},
      {"dimension-delta strata, three vertices", 10, crit2},
      {"transverse layer equalities", 0, crit3},
      {"defect-zero difference identity", 120, crit4},
      {"quasi-length exchange identity", 0, crit5},
      {"tube multiplication instances", 0, crit6},
      {"Chebyshev identities", 0, crit7},
      {"denominator vectors are dimension vectors", 0, crit8},
      {"mutation cross-check, double arrow", 0, crit9},
      {"band parameter independence", 0, crit10},
      {"basis denominator structure", 0, crit11},
      {"positivity spot checks", 0, crit12},
  };
  int passed = 0, idx = 0;
  for (const Criterion& c : criteria) {
    ++idx;
    std::string note;
    bool ok = false;
    auto start = std::chrono::steady_clock::now();
    try {
      ok = c.run(note);
    } catch (const std::exception& e) {
      note = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && c.cap_seconds > 0 && secs > c.cap_seconds) {
      ok = false;
      note = "exceeded " + std::to_string(static_cast<int>(c.cap_seconds)) + "s cap";
    }
    std::printf("criterion %2d (%s): %s (%.1fs)%s%s\n", idx, c.name, ok ? "PASS" : "FAIL", secs,
                note.empty() ? "" : " ", note.c_str());
    std::fflush(stdout);
    passed += ok ? 1 : 0;
  }
  std::printf("%d/12 criteria passed\n", passed);
  return passed == 12 ? 0 : 1;
}
