#include "qgr/mutation.hpp"

#include <cstdlib>
#include <deque>
#include <set>

namespace qgr {

namespace {

bool laurent_before(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.vars() != b.vars()) return a.vars() < b.vars();
  return a.terms() < b.terms();
}

struct SeedBefore {
  bool operator()(const Seed& a, const Seed& b) const {
    if (a.b != b.b) return a.b < b.b;
    for (size_t i = 0; i < a.x.size(); ++i) {
      if (!(a.x[i] == b.x[i])) return laurent_before(a.x[i], b.x[i]);
    }
    return false;
  }
};

struct LaurentBefore {
  bool operator()(const LaurentPoly& a, const LaurentPoly& b) const {
    return laurent_before(a, b);
  }
};

void check_vertex(const IntMatrix& b, int k) {
  if (k < 0 || k >= (int)b.size())
    throw ValidationError("mutation vertex out of range: " + std::to_string(k));
}

} // namespace

IntMatrix exchange_matrix(const Quiver& q) {
  IntMatrix b(q.n, std::vector<long long>(q.n, 0));
  for (auto [s, t] : q.arrows) {
    b[s][t] += 1;
    b[t][s] -= 1;
  }
  return b;
}

Seed initial_seed(const Quiver& q) {
  Seed s;
  s.b = exchange_matrix(q);
  for (int i = 0; i < q.n; ++i) s.x.push_back(LaurentPoly::variable(q.n, i));
  return s;
}

IntMatrix mutate_matrix(const IntMatrix& b, int k) {
  check_vertex(b, k);
  int n = (int)b.size();
  IntMatrix out(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == k || j == k)
        out[i][j] = -b[i][j];
      else
        out[i][j] = b[i][j] + (std::abs(b[i][k]) * b[k][j] + b[i][k] * std::abs(b[k][j])) / 2;
    }
  return out;
}

Seed mutate(const Seed& s, int k) {
  check_vertex(s.b, k);
  int n = (int)s.b.size();
  int nvars = s.x.empty() ? 0 : s.x[0].vars();
  LaurentPoly plus = LaurentPoly::constant(nvars, 1), minus = plus;
  for (int i = 0; i < n; ++i) {
    if (s.b[i][k] > 0) plus *= s.x[i].pow((int)s.b[i][k]);
    if (s.b[i][k] < 0) minus *= s.x[i].pow((int)-s.b[i][k]);
  }
  Seed out;
  out.b = mutate_matrix(s.b, k);
  out.x = s.x;
  out.x[k] = exact_divide(plus + minus, s.x[k]);
  return out;
}

Seed apply_sequence(Seed s, const std::vector<int>& seq) {
  for (int k : seq) s = mutate(s, k);
  return s;
}

namespace {

template <typename Visit>
void bfs_seeds(const Quiver& q, int depth, Visit&& visit) {
  Seed s0 = initial_seed(q);
  std::set<Seed, SeedBefore> seen{s0};
  std::deque<std::pair<Seed, int>> queue{{s0, 0}};
  while (!queue.empty()) {
    auto [s, d] = std::move(queue.front());
    queue.pop_front();
    visit(s);
    if (d == depth) continue;
    for (int k = 0; k < q.n; ++k) {
      Seed next = mutate(s, k);
      if (seen.insert(next).second) queue.emplace_back(std::move(next), d + 1);
    }
  }
}

} // namespace

std::vector<LaurentPoly> enumerate_cluster_variables(const Quiver& q, int depth) {
  if (depth < 0) throw ValidationError("depth must be nonnegative");
  std::set<LaurentPoly, LaurentBefore> vars;
  bfs_seeds(q, depth, [&](const Seed& s) { vars.insert(s.x.begin(), s.x.end()); });
  return {vars.begin(), vars.end()};
}

std::vector<LaurentPoly> cluster_monomials(const Quiver& q, int depth, int bound) {
  if (depth < 0 || bound < 0) throw ValidationError("depth and bound must be nonnegative");
  std::set<LaurentPoly, LaurentBefore> monomials;
  bfs_seeds(q, depth, [&](const Seed& s) {
    // all products x_1^{a_1} ... x_n^{a_n} with sum a_i <= bound
    std::vector<LaurentPoly> stack{LaurentPoly::constant(q.n, 1)};
    std::vector<std::pair<int, int>> frames{{0, bound}}; // (next var, budget)
    while (!stack.empty()) {
      LaurentPoly cur = std::move(stack.back());
      auto [i, budget] = frames.back();
      stack.pop_back();
      frames.pop_back();
      if (i == q.n) {
        monomials.insert(std::move(cur));
        continue;
      }
      LaurentPoly acc = cur;
      for (int a = 0; a <= budget; ++a) {
        stack.push_back(acc);
        frames.emplace_back(i + 1, budget - a);
        if (a < budget) acc *= s.x[i];
      }
    }
  });
  return {monomials.begin(), monomials.end()};
}

LaurentPoly expand_in_cluster(const Quiver& q, const LaurentPoly& elem,
                              const std::vector<int>& seq) {
  if (elem.vars() != q.n) throw ValidationError("element has wrong variable count");
  IntMatrix b = exchange_matrix(q);
  for (int k : seq) b = mutate_matrix(b, k);
  Seed formal;
  formal.b = std::move(b);
  for (int i = 0; i < q.n; ++i) formal.x.push_back(LaurentPoly::variable(q.n, i));
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) formal = mutate(formal, *it);
  // formal.x[i] is now the i-th initial variable written in the target cluster
  return substitute(elem, formal.x);
}

} // namespace qgr
