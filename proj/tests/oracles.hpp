#pragma once

// Test-only oracles, independent of the library code paths they check.

#include <algorithm>
#include <numeric>
#include <vector>

#include "semind/cert.hpp"
#include "semind/graph.hpp"
#include "semind/rational.hpp"
#include "semind/rng.hpp"

namespace oracles {

using semind::Flag;
using semind::Graph;
using semind::Rational;

// Plain permutation search for isomorphism.
inline bool brute_isomorphic(const Graph& a, const Graph& b) {
  if (a.n != b.n) return false;
  std::vector<int> perm(a.n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < a.n && ok; ++u)
      for (int w = u + 1; w < a.n && ok; ++w)
        if (a.adjacent(u, w) != b.adjacent(perm[u], perm[w])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Number of isomorphism classes of order-n graphs by orbit counting over
// the symmetric group: (1/n!) * sum over permutations of 2^(pair orbits).
inline long long burnside_class_count(int n) {
  if (n == 0) return 1;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  long long total = 0, perms = 0;
  do {
    ++perms;
    // count orbits of vertex pairs under the permutation
    std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
    int orbits = 0;
    for (int u = 0; u < n; ++u)
      for (int w = u + 1; w < n; ++w) {
        if (seen[u][w]) continue;
        ++orbits;
        int a = u, b = w;
        while (true) {
          seen[std::min(a, b)][std::max(a, b)] = true;
          a = perm[a];
          b = perm[b];
          if (std::min(a, b) == u && std::max(a, b) == w) break;
          if (seen[std::min(a, b)][std::max(a, b)]) break;
        }
      }
    total += 1LL << orbits;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total / perms;
}

// Exact arithmetic in Q(sqrt(d)).
struct Quad {
  Rational a, b;  // a + b sqrt(d)
  long d = 57;

  Quad operator+(const Quad& o) const { return {a + o.a, b + o.b, d}; }
  Quad operator-(const Quad& o) const { return {a - o.a, b - o.b, d}; }
  Quad operator*(const Quad& o) const {
    return {a * o.a + Rational(d) * b * o.b, a * o.b + b * o.a, d};
  }
  bool operator==(const Quad& o) const { return a == o.a && b == o.b && d == o.d; }
};

// Maximum product of s nonnegative integers summing to n, by enumeration.
inline long long max_product_compositions(int s, int n) {
  if (s == 1) return n;
  long long best = 0;
  for (int first = 0; first <= n; ++first)
    best = std::max(best, first * max_product_compositions(s - 1, n - first));
  return best;
}

// The event probability that pair_density_coeff aggregates per class,
// evaluated directly on a host graph G: uniform injection of the type,
// uniform ordered split of the remaining n - t vertices.
inline Rational direct_split_probability(const Flag& f1, const Flag& f2,
                                         const Graph& G) {
  using namespace semind;
  const int t = static_cast<int>(f1.roots.size());
  Graph sigma = flag_type(f1);
  const std::string key1 = flag_key(f1), key2 = flag_key(f2);
  const int k1 = f1.graph.n;
  const int n = G.n;

  long long hits = 0, total = 0;
  std::vector<int> theta(t);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth < t) {
      for (int v = 0; v < n; ++v) {
        if (used[v]) continue;
        used[v] = true;
        theta[depth] = v;
        self(self, depth + 1);
        used[v] = false;
      }
      return;
    }
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
      if (!used[v]) rest.push_back(v);
    bool type_ok = true;
    for (int i = 0; i < t && type_ok; ++i)
      for (int j = i + 1; j < t && type_ok; ++j)
        if (G.adjacent(theta[i], theta[j]) != sigma.adjacent(i, j))
          type_ok = false;
    const int na = k1 - t;
    const int nb = f2.graph.n - t;
    const int nrest = static_cast<int>(rest.size());
    std::vector<int> roots(t);
    std::iota(roots.begin(), roots.end(), 0);
    // ordered pairs of disjoint subsets (A, B) of the leftover vertices
    for (std::uint32_t amask = 0; amask < (1u << nrest); ++amask) {
      if (__builtin_popcount(amask) != na) continue;
      for (std::uint32_t bmask = 0; bmask < (1u << nrest); ++bmask) {
        if (__builtin_popcount(bmask) != nb || (amask & bmask)) continue;
        ++total;
        if (!type_ok) continue;
        std::vector<int> A = theta, B = theta;
        for (int v = 0; v < nrest; ++v) {
          if ((amask >> v) & 1u) A.push_back(rest[v]);
          if ((bmask >> v) & 1u) B.push_back(rest[v]);
        }
        if (flag_key({induced_subgraph(G, A), roots}) == key1 &&
            flag_key({induced_subgraph(G, B), roots}) == key2)
          ++hits;
      }
    }
  };
  rec(rec, 0);
  return semind::rat_i64(hits, total);
}

// Adjacency-only graph without the 32-vertex cap, for the finite-n rooted
// evaluations of certificate blocks.
struct BigGraph {
  int n = 0;
  std::vector<std::vector<bool>> adj;

  explicit BigGraph(int order) : n(order), adj(order, std::vector<bool>(order)) {}
  void add_edge(int u, int w) { adj[u][w] = adj[w][u] = true; }
  bool adjacent(int u, int w) const { return adj[u][w]; }
};

inline BigGraph seeded_big_graph(int n, std::uint64_t seed, std::uint64_t task) {
  BigGraph g(n);
  std::uint64_t draw = 0;
  for (int u = 0; u < n; ++u)
    for (int w = u + 1; w < n; ++w)
      if (semind::counter_draw(seed, task, draw++) & 1ULL) g.add_edge(u, w);
  return g;
}

}  // namespace oracles
