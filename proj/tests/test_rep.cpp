#include <set>

#include "doctest.h"
#include "qgr/rep.hpp"
#include "qgr/tube.hpp"

using namespace qgr;

namespace {

Quiver kronecker() { return Quiver(2, {{0, 1}, {0, 1}}); }
Quiver a21() { return Quiver(3, {{0, 1}, {1, 2}, {0, 2}}); }
Quiver a31() { return Quiver(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }

Rep simple(const Quiver& q, int v, int p) { return rt_simple(q, v).realize(p); }

} // namespace

TEST_CASE("rep validation") {
  Quiver q = kronecker();
  CHECK_THROWS_AS(Rep(q, 5, {1}, {}), ValidationError);
  CHECK_THROWS_AS(Rep(q, 5, {1, 1}, {{{1}}}), ValidationError);
  CHECK_THROWS_AS(Rep(q, 5, {1, 1}, {{{1}}, {{1}, {0}}}), ValidationError);
  CHECK_THROWS_AS(Rep(q, 1, {1, 1}, {{{1}}, {{1}}}), ValidationError);
  // entries normalize mod p
  Rep m(q, 5, {1, 1}, {{{7}}, {{-1}}});
  CHECK(m.mats[0][0][0] == 2);
  CHECK(m.mats[1][0][0] == 4);
}

TEST_CASE("hom and ext on Kronecker simples") {
  Quiver q = kronecker();
  Rep s0 = simple(q, 0, 5), s1 = simple(q, 1, 5);
  CHECK(hom_ext_dims(s0, s0) == std::pair<int, int>{1, 0});
  CHECK(hom_ext_dims(s1, s1) == std::pair<int, int>{1, 0});
  CHECK(hom_ext_dims(s0, s1) == std::pair<int, int>{0, 2});
  CHECK(hom_ext_dims(s1, s0) == std::pair<int, int>{0, 0});
  CHECK(is_rigid(s0));
  CHECK(is_rigid(s1));
}

TEST_CASE("hom respects explicit morphism structure") {
  // preprojective (1,2): A = (1,0)^T, B = (0,1)^T; rigid with End = k
  Quiver q = kronecker();
  Rep m(q, 7, {1, 2}, {{{1}, {0}}, {{0}, {1}}});
  CHECK(hom_ext_dims(m, m) == std::pair<int, int>{1, 0});
  Rep s1 = simple(q, 1, 7);
  // the sink simple embeds as the socle k^2, nothing maps out onto it
  CHECK(hom_ext_dims(m, s1).first == 0);
  CHECK(hom_ext_dims(s1, m).first == 2);
}

TEST_CASE("direct sum blocks and additivity") {
  Quiver q = kronecker();
  Rep m(q, 5, {1, 2}, {{{1}, {0}}, {{0}, {1}}});
  Rep s = direct_sum(m, simple(q, 0, 5));
  CHECK(s.dims == DimVector{2, 2});
  CHECK(s.mats[0] == FpMat{{1, 0}, {0, 0}});
  CHECK(s.mats[1] == FpMat{{0, 0}, {1, 0}});
  // hom is additive in both arguments
  auto h = [&](const Rep& a, const Rep& b) { return hom_ext_dims(a, b).first; };
  Rep s0 = simple(q, 0, 5);
  CHECK(h(s, s) == h(m, m) + h(m, s0) + h(s0, m) + h(s0, s0));
  CHECK(h(s, s) == 3);
}

TEST_CASE("tube family shape") {
  TubeFamily kr(kronecker()), t21(a21()), t31(a31());
  CHECK(kr.rank(0) == 1);
  CHECK(kr.rank(1) == 1);
  CHECK(t21.rank(0) == 2);
  CHECK(t21.rank(1) == 1);
  CHECK(t31.rank(0) == 3);
  CHECK(t31.rank(1) == 1);
  CHECK(kr.delta() == DimVector{1, 1});
  CHECK(t21.delta() == DimVector{1, 1, 1});

  CHECK_THROWS_AS(TubeFamily(Quiver(2, {{0, 1}})), FiniteTypeError);
  // D~4 star is affine but has no cycle
  CHECK_THROWS_AS(TubeFamily(Quiver(5, {{1, 0}, {2, 0}, {3, 0}, {4, 0}})), DomainError);
}

TEST_CASE("quasi-simples sum to delta and match frozen dims") {
  TubeFamily t21(a21()), t31(a31());
  CHECK(t21.quasi_simple_dim(0, 0) == DimVector{1, 0, 1});
  CHECK(t21.quasi_simple_dim(0, 1) == DimVector{0, 1, 0});
  CHECK(t21.quasi_simple_dim(1, 0) == DimVector{1, 1, 1});
  CHECK(t31.quasi_simple_dim(0, 0) == DimVector{1, 0, 0, 1});
  CHECK(t31.quasi_simple_dim(0, 1) == DimVector{0, 0, 1, 0});
  CHECK(t31.quasi_simple_dim(0, 2) == DimVector{0, 1, 0, 0});
  for (auto* t : {&t21, &t31})
    for (int tube = 0; tube < 2; ++tube) {
      DimVector sum(t->quiver().n, 0);
      for (int i = 0; i < t->rank(tube); ++i) sum = dv_add(sum, t->quasi_simple_dim(tube, i));
      CHECK(sum == t->delta());
    }
}

TEST_CASE("frozen regular matrices on the three-vertex cycle") {
  TubeFamily t(a21());
  RepTemplate r0 = t.regular(0, 0, 1);
  CHECK(r0.dims == DimVector{1, 0, 1});
  CHECK(r0.mats[2] == ZMat{{1}});
  RepTemplate r02 = t.regular(0, 0, 2);
  CHECK(r02.dims == DimVector{1, 1, 1});
  CHECK(r02.mats[0] == ZMat{{0}});
  CHECK(r02.mats[1] == ZMat{{1}});
  CHECK(r02.mats[2] == ZMat{{1}});
  RepTemplate r12 = t.regular(0, 1, 2); // the lambda = 0 degeneration
  CHECK(r12.dims == DimVector{1, 1, 1});
  CHECK(r12.mats[0] == ZMat{{1}});
  CHECK(r12.mats[1] == ZMat{{0}});
  CHECK(r12.mats[2] == ZMat{{1}});
  RepTemplate minf = t.regular(1, 0, 1); // the lambda = infinity degeneration
  CHECK(minf.dims == DimVector{1, 1, 1});
  CHECK(minf.mats[0] == ZMat{{1}});
  CHECK(minf.mats[1] == ZMat{{1}});
  CHECK(minf.mats[2] == ZMat{{0}});
}

TEST_CASE("band matrices") {
  TubeFamily kr(kronecker()), t21(a21());
  RepTemplate m5 = kr.band(5, false, 1);
  CHECK(m5.mats[0] == ZMat{{1}});
  CHECK(m5.mats[1] == ZMat{{5}});
  CHECK(m5.nonzero_guard == std::vector<long long>{5});
  CHECK(m5.valid_at(2));
  CHECK(m5.valid_at(3));
  CHECK(!m5.valid_at(5));
  CHECK_THROWS_AS(m5.realize(5), DomainError);

  RepTemplate m0 = kr.band(0, false, 1);
  CHECK(m0.mats[0] == ZMat{{1}});
  CHECK(m0.mats[1] == ZMat{{0}});
  CHECK(m0.nonzero_guard.empty());

  RepTemplate minf2 = kr.band(0, true, 2);
  CHECK(minf2.mats[0] == ZMat{{0, 1}, {0, 0}});
  CHECK(minf2.mats[1] == ZMat{{1, 0}, {0, 1}});

  RepTemplate b7 = t21.band(7, false, 1);
  CHECK(b7.dims == DimVector{1, 1, 1});
  CHECK(b7.mats[0] == ZMat{{1}});
  CHECK(b7.mats[1] == ZMat{{7}});
  CHECK(b7.mats[2] == ZMat{{1}});

  CHECK(!kr.lambda_degenerate(0, false));
  CHECK(!kr.lambda_degenerate(0, true));
  CHECK(t21.lambda_degenerate(0, false));
  CHECK(t21.lambda_degenerate(0, true));
  CHECK(!t21.lambda_degenerate(3, false));
  CHECK_THROWS_AS(t21.band(0, false, 1), DomainError);
  CHECK_THROWS_AS(t21.band(0, true, 1), DomainError);
}

TEST_CASE("tube orbit hom/ext facts") {
  TubeFamily t21(a21()), t31(a31());
  const int p = 5;
  // rank 2 tube: End k, no cross homs, extensions in both directions
  Rep r0 = t21.regular(0, 0, 1).realize(p), r1 = t21.regular(0, 1, 1).realize(p);
  CHECK(hom_ext_dims(r0, r0) == std::pair<int, int>{1, 0});
  CHECK(hom_ext_dims(r1, r1) == std::pair<int, int>{1, 0});
  CHECK(hom_ext_dims(r0, r1) == std::pair<int, int>{0, 1});
  CHECK(hom_ext_dims(r1, r0) == std::pair<int, int>{0, 1});
  // rank 3 tube: Ext(R_j, R_{j-1}) = 1, other direction vanishes
  std::vector<Rep> r;
  for (int i = 0; i < 3; ++i) r.push_back(t31.regular(0, i, 1).realize(p));
  for (int i = 0; i < 3; ++i) {
    CHECK(hom_ext_dims(r[i], r[i]) == std::pair<int, int>{1, 0});
    CHECK(hom_ext_dims(r[i], r[(i + 2) % 3]) == std::pair<int, int>{0, 1});
    CHECK(hom_ext_dims(r[i], r[(i + 1) % 3]) == std::pair<int, int>{0, 0});
  }
}

TEST_CASE("endomorphism dimension grows with windings") {
  TubeFamily t21(a21());
  const int p = 5;
  for (int l = 1; l <= 6; ++l) {
    Rep m = t21.regular(0, 0, l).realize(p);
    CHECK(hom_ext_dims(m, m).first == 1 + (l - 1) / 2);
    Rep h = t21.regular(1, 0, l <= 3 ? l : 3).realize(p);
    if (l <= 3) CHECK(hom_ext_dims(h, h).first == l);
  }
  TubeFamily kr(kronecker());
  for (int l = 1; l <= 3; ++l) {
    Rep m = kr.regular(0, 0, l).realize(p);
    CHECK(hom_ext_dims(m, m).first == l);
    Rep b = kr.band(1, false, l).realize(p);
    CHECK(hom_ext_dims(b, b).first == l);
  }
}

TEST_CASE("rigidity of short regulars") {
  TubeFamily t31(a31());
  const int p = 3;
  // quasi-length < rank is rigid, length = rank is not
  for (int i = 0; i < 3; ++i)
    for (int l = 1; l <= 2; ++l) CHECK(is_rigid(t31.regular(0, i, l).realize(p)));
  CHECK(!is_rigid(t31.regular(0, 0, 3).realize(p)));
  CHECK(!is_rigid(t31.regular(1, 0, 1).realize(p)));
}

TEST_CASE("cut tube of rank one matches the band degeneration up to iso") {
  TubeFamily kr(kronecker());
  const int p = 3;
  for (int l = 1; l <= 3; ++l) {
    Rep cut = kr.regular(0, 0, l).realize(p);
    Rep band = kr.band(0, true, l).realize(p);
    CHECK(hom_ext_dims(cut, band).first == l);
    CHECK(hom_ext_dims(band, cut).first == l);
    CHECK(hom_ext_dims(cut, cut).first == l);
  }
}

TEST_CASE("point dims, translate, and Coxeter agree") {
  TubeFamily t31(a31());
  for (int tube = 0; tube < 2; ++tube)
    for (int i = 0; i < t31.rank(tube); ++i)
      for (int l = 1; l <= 5; ++l) {
        TubePoint pt = TubePoint::regular(tube, i, l);
        DimVector d = t31.point_dims(pt);
        CHECK(d == t31.realize(pt).dims);
        CHECK(t31.point_dims(t31.ar_translate(pt, 1)) ==
              coxeter_transform(t31.quiver(), d, 1));
        CHECK(t31.point_dims(t31.ar_translate(pt, -1)) ==
              coxeter_transform(t31.quiver(), d, -1));
      }
  CHECK(t31.point_dims(TubePoint::regular(0, 0, 0)) == DimVector{0, 0, 0, 0});
}

TEST_CASE("canonical chain is a filtration by submodules") {
  TubeFamily t21(a21());
  const int p = 3;
  for (int i = 0; i < 2; ++i)
    for (int l = 1; l <= 5; ++l) {
      TubePoint pt = TubePoint::regular(0, i, l);
      Rep m = t21.realize(pt).realize(p);
      for (int j = 0; j <= l; ++j) {
        auto zb = t21.chain_basis(pt, j);
        Subspace u(zb.size());
        for (size_t v = 0; v < zb.size(); ++v) {
          for (auto& row : zb[v]) {
            FpVec r(row.size());
            for (size_t c = 0; c < row.size(); ++c) r[c] = fp_norm(row[c], p);
            u[v].push_back(std::move(r));
          }
        }
        CHECK(is_subrep(m, u));
        CHECK(subspace_dims(u) == t21.point_dims(TubePoint::regular(0, i, j)));
        // quotient dims match the AR-theoretic prediction
        CHECK(dv_sub(m.dims, subspace_dims(u)) ==
              t21.point_dims(TubePoint::regular(0, i + j, l - j)));
      }
    }
  // band chains
  TubeFamily kr(kronecker());
  TubePoint b = TubePoint::band(1, false, 3);
  Rep m = kr.realize(b).realize(p);
  for (int j = 0; j <= 3; ++j) {
    auto zb = kr.chain_basis(b, j);
    Subspace u(zb.size());
    for (size_t v = 0; v < zb.size(); ++v)
      for (auto& row : zb[v]) u[v].push_back(FpVec(row.begin(), row.end()));
    CHECK(is_subrep(m, u));
    CHECK(subspace_dims(u) == DimVector{j, j});
  }
}

TEST_CASE("subrep check rejects non-invariant subspaces") {
  TubeFamily t21(a21());
  Rep m = t21.regular(0, 0, 2).realize(3); // dims (1,1,1), maps (0,1,1)
  Subspace bad(3);
  bad[0] = {{1}}; // just the vertex-0 line; arrow 2 maps it out
  CHECK(!is_subrep(m, bad));
  Subspace good(3);
  good[0] = {};
  good[1] = {};
  good[2] = {{1}};
  CHECK(is_subrep(m, good));
}

TEST_CASE("rep json round trip") {
  TubeFamily t21(a21());
  Rep m = t21.regular(0, 0, 3).realize(5);
  Rep back = rep_from_json(rep_to_json(m));
  CHECK(back.quiver == m.quiver);
  CHECK(back.p == m.p);
  CHECK(back.dims == m.dims);
  CHECK(back.mats == m.mats);

  std::string bad1 = R"({"quiver":{"vertices":2,"arrows":[[1,2],[1,2]]},"dims":[1,1]})";
  CHECK_THROWS_AS(rep_from_json(bad1), ParseError); // no prime
  RepTemplate t = rep_template_from_json(bad1);     // template form is fine
  CHECK(t.dims == DimVector{1, 1});
  CHECK(t.mats[0] == ZMat{{0}});

  std::string bad2 =
      R"({"quiver":{"vertices":2,"arrows":[[1,2]]},"p":3,"dims":[1,1],"matrices":{"1":[[1]]}})";
  CHECK_THROWS_AS(rep_from_json(bad2), ParseError); // arrow key out of range
  std::string bad3 =
      R"({"quiver":{"vertices":2,"arrows":[[1,2]]},"p":3,"dims":[2,1],"matrices":{"0":[[1]]}})";
  CHECK_THROWS_AS(rep_from_json(bad3), ParseError); // wrong shape
}

TEST_CASE("duality preserves endo data") {
  TubeFamily t21(a21());
  RepTemplate m = t21.regular(0, 0, 3);
  RepTemplate d = rt_dual(m);
  CHECK(d.quiver == t21.quiver().opposite());
  CHECK(d.dims == m.dims);
  Rep mr = m.realize(7), dr = d.realize(7);
  CHECK(hom_ext_dims(dr, dr) == hom_ext_dims(mr, mr));
  // double dual gives back the original matrices
  RepTemplate dd = rt_dual(d);
  CHECK(dd.quiver == m.quiver);
  CHECK(dd.mats == m.mats);
}

TEST_CASE("template direct sum realizes to the rep direct sum") {
  TubeFamily kr(kronecker());
  RepTemplate a = kr.band(2, false, 1), b = kr.regular(0, 0, 1);
  RepTemplate s = rt_direct_sum(a, b);
  CHECK(s.dims == DimVector{2, 2});
  Rep sr = s.realize(7);
  Rep ref = direct_sum(a.realize(7), b.realize(7));
  CHECK(sr.mats == ref.mats);
  CHECK(s.nonzero_guard == std::vector<long long>{2});
}
