#include <map>

#include "doctest.h"
#include "oracles.hpp"
#include "qgr/grassmannian.hpp"
#include "qgr/tube.hpp"

using namespace qgr;

namespace {

Quiver kronecker() { return Quiver(2, {{0, 1}, {0, 1}}); }
Quiver a21() { return Quiver(3, {{0, 1}, {1, 2}, {0, 2}}); }

// box sweep through the per-e entry point, zero counts dropped
std::map<DimVector, Int> counts_by_e(const Rep& m, const Subspace* lo = nullptr,
                                     const Subspace* up = nullptr) {
  std::map<DimVector, Int> out;
  DimVector e(m.quiver.n, 0);
  while (true) {
    Int c = count_subreps(m, e, lo, up);
    if (c != 0) out[e] = c;
    int t = 0;
    for (; t < m.quiver.n; ++t) {
      if (++e[t] <= m.dims[t]) break;
      e[t] = 0;
    }
    if (t == m.quiver.n) break;
  }
  return out;
}

void check_against_brute(const Rep& m, const Subspace* lo = nullptr,
                         const Subspace* up = nullptr) {
  auto brute = oracle::brute_count_subreps(m, lo, up);
  auto mine = counts_by_e(m, lo, up);
  REQUIRE(mine.size() == brute.size());
  for (auto& [e, c] : brute) CHECK(mine.at(e) == Int(c));
  auto hist = count_all_subreps(m, lo, up);
  REQUIRE(hist.has_value());
  CHECK(*hist == mine);
}

} // namespace

TEST_CASE("gaussian binomial") {
  for (long long q : {2ll, 3ll, 5ll, 31ll})
    for (int n = 0; n <= 6; ++n)
      for (int k = 0; k <= n; ++k) CHECK(gaussian_binomial(n, k, q) == oracle::gauss_binomial(n, k, q));
  CHECK(gaussian_binomial(5, 2, 1) == 10); // q = 1 degenerates to binomials
  CHECK(gaussian_binomial(4, -1, 3) == 0);
  CHECK(gaussian_binomial(3, 4, 3) == 0);
  CHECK(gaussian_binomial(4, 2, 3) == 130);
}

TEST_CASE("single vertex counts are Gaussian binomials") {
  Quiver q(1, {});
  for (int p : {2, 3}) {
    Rep m(q, p, {3}, {});
    for (int e = 0; e <= 3; ++e) CHECK(count_subreps(m, {e}) == gaussian_binomial(3, e, p));
    check_against_brute(m);
  }
}

TEST_CASE("zero maps factor into independent Grassmannians") {
  ZMat z2{{0, 0}, {0, 0}};
  auto t = make_template(kronecker(), {2, 2}, {z2, z2}, {}, "zero22");
  for (int p : {2, 3}) {
    Rep m = t.realize(p);
    for (int e0 = 0; e0 <= 2; ++e0)
      for (int e1 = 0; e1 <= 2; ++e1)
        CHECK(count_subreps(m, {e0, e1}) ==
              gaussian_binomial(2, e0, p) * gaussian_binomial(2, e1, p));
    check_against_brute(m);
  }
}

TEST_CASE("path quiver maps") {
  Quiver a2(2, {{0, 1}});
  for (int p : {2, 3}) {
    check_against_brute(Rep(a2, p, {2, 2}, {{{1, 0}, {0, 1}}}));
    check_against_brute(Rep(a2, p, {2, 2}, {{{1, 0}, {0, 0}}}));
    check_against_brute(Rep(a2, p, {2, 1}, {{{1, 1}}}));
  }
}

TEST_CASE("multiple sinks and sources") {
  Quiver out_star(3, {{0, 1}, {0, 2}});
  Quiver in_star(3, {{0, 2}, {1, 2}});
  for (int p : {2, 3}) {
    check_against_brute(Rep(out_star, p, {2, 1, 1}, {{{1, 0}}, {{0, 1}}}));
    check_against_brute(Rep(in_star, p, {1, 1, 2}, {{{1}, {0}}, {{1}, {1}}}));
  }
}

TEST_CASE("Kronecker modules match the brute count") {
  TubeFamily tf(kronecker());
  for (int p : {2, 3}) {
    check_against_brute(tf.band(1, false, 2).realize(p));
    check_against_brute(Rep(kronecker(), p, {1, 2}, {{{1}, {0}}, {{0}, {1}}}));
  }
  check_against_brute(tf.band(1, true, 2).realize(3));
}

TEST_CASE("exceptional tube points match the brute count") {
  TubeFamily tf(a21());
  for (int p : {2, 3, 5}) check_against_brute(tf.regular(0, 0, 2).realize(p));
  for (int p : {2, 3}) {
    check_against_brute(tf.regular(0, 0, 3).realize(p));
    check_against_brute(tf.regular(0, 1, 3).realize(p));
    check_against_brute(tf.regular(1, 0, 1).realize(p));
  }
}

TEST_CASE("chain constrained counts follow the quotient") {
  // counting N with U <= N <= W inside R^(len) equals counting N/U inside
  // W/U, whose class is again a tube point
  TubeFamily kr(kronecker());
  TubePoint b3 = TubePoint::band(1, false, 3);
  for (int p : {2, 3}) {
    Rep m = kr.band(1, false, 3).realize(p);
    Subspace u = subspace_mod_p(kr.chain_basis(b3, 1), p);
    Subspace w = subspace_mod_p(kr.chain_basis(b3, 2), p);
    check_against_brute(m, &u, &w);
    Rep quot = kr.band(1, false, 1).realize(p);
    DimVector du = subspace_dims(u);
    for (int e0 = 0; e0 <= 3; ++e0)
      for (int e1 = 0; e1 <= 3; ++e1) {
        DimVector e{e0, e1};
        DimVector shifted{e0 - du[0], e1 - du[1]};
        Int direct = count_subreps(m, e, &u, &w);
        Int via_quot = (shifted[0] < 0 || shifted[1] < 0) ? Int(0) : count_subreps(quot, shifted);
        CHECK(direct == via_quot);
      }
  }
  TubeFamily tf(a21());
  TubePoint r3 = TubePoint::regular(0, 0, 3);
  for (int p : {2, 3}) {
    Rep m = tf.regular(0, 0, 3).realize(p);
    Subspace u = subspace_mod_p(tf.chain_basis(r3, 1), p);
    Subspace w = subspace_mod_p(tf.chain_basis(r3, 2), p);
    check_against_brute(m, &u, &w);
    check_against_brute(m, &u, nullptr);
    check_against_brute(m, nullptr, &w);
  }
}

TEST_CASE("counts dualize") {
  TubeFamily tf(a21());
  TubeFamily kr(kronecker());
  std::vector<RepTemplate> mods = {
      tf.regular(0, 0, 2), tf.regular(0, 1, 3), kr.band(1, false, 2),
      make_template(kronecker(), {1, 2}, {{{1}, {0}}, {{0}, {1}}}, {}, "pp12")};
  for (const auto& t : mods) {
    RepTemplate dt = rt_dual(t);
    for (int p : {2, 3}) {
      auto a = count_all_subreps(t.realize(p));
      auto b = count_all_subreps(dt.realize(p));
      REQUIRE(a.has_value());
      REQUIRE(b.has_value());
      REQUIRE(a->size() == b->size());
      for (auto& [e, c] : *a) CHECK(b->at(dv_sub(t.dims, e)) == c);
    }
  }
}

TEST_CASE("budget aborts the sweep") {
  TubeFamily kr(kronecker());
  Rep m = kr.band(1, false, 2).realize(3);
  CHECK(count_all_subreps(m, nullptr, nullptr, 2) == std::nullopt);
  CHECK(count_all_subreps(m, nullptr, nullptr).has_value());
}

TEST_CASE("constraint validation") {
  TubeFamily kr(kronecker());
  TubePoint b2 = TubePoint::band(1, false, 2);
  Rep m = kr.band(1, false, 2).realize(2);
  Subspace bad(2);
  bad[0] = {{1, 0}};
  bad[1] = {};
  CHECK_THROWS_AS(count_subreps(m, {1, 0}, &bad, nullptr), ValidationError);
  Subspace u = subspace_mod_p(kr.chain_basis(b2, 2), 2);
  Subspace w = subspace_mod_p(kr.chain_basis(b2, 1), 2);
  CHECK_THROWS_AS(count_subreps(m, {1, 1}, &u, &w), ValidationError);
  CHECK_THROWS_AS(count_subreps(m, {1, 1, 1}), ValidationError);
}

TEST_CASE("histogram equals the per-dimension counts on larger points") {
  TubeFamily tf(a21());
  for (int p : {5, 7}) {
    Rep m = tf.regular(0, 0, 4).realize(p);
    auto hist = count_all_subreps(m);
    REQUIRE(hist.has_value());
    CHECK(*hist == counts_by_e(m));
  }
}
