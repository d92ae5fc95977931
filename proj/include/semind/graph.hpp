#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semind/rational.hpp"

namespace semind {

constexpr int kMaxVertices = 32;

// Simple undirected graph on at most 32 vertices, one adjacency mask per
// vertex. Immutable by convention: edits return new graphs.
struct Graph {
  int n = 0;
  std::array<std::uint32_t, kMaxVertices> adj{};

  bool adjacent(int u, int w) const { return (adj[u] >> w) & 1u; }
  int degree(int u) const { return __builtin_popcount(adj[u]); }
  std::uint32_t vertex_mask() const {
    return n == 32 ? 0xffffffffu : ((1u << n) - 1u);
  }
  long long edge_count() const;

  void add_edge(int u, int w);
  void remove_edge(int u, int w);

  bool operator==(const Graph& o) const;
};

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges);
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph complement(const Graph& g);
Graph induced_subgraph(const Graph& g, const std::vector<int>& verts);
Graph relabel(const Graph& g, const std::vector<int>& perm);  // v -> perm[v]
Graph disjoint_union(const Graph& a, const Graph& b);

// Flip the adjacency of one pair.
Graph flip_edge(const Graph& g, int u, int w);
// Make w a clone of u: the new neighbourhood of w is adj(u) \ {w}.
Graph clone_onto(const Graph& g, int u, int w);

// graph6, header-less variant, n <= 62.
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& s);

// Canonical relabeling of a graph together with its graph6 string. Two
// graphs are isomorphic iff their keys compare equal.
struct CanonicalKey {
  Graph graph;
  std::string g6;

  bool operator==(const CanonicalKey& o) const { return g6 == o.g6; }
  bool operator<(const CanonicalKey& o) const { return g6 < o.g6; }
};

// Minimum-adjacency-string canonical form. Returns the key; if perm_out is
// non-null it receives a relabeling map old->new realizing the key.
CanonicalKey canonical_form(const Graph& g, std::vector<int>* perm_out = nullptr);

// Isomorph-free exhaustive list of graphs of order n, sorted by canonical
// key. The cap exists because the class count explodes; 9 -> 274,668.
std::vector<Graph> enumerate_graphs(int n, int cap = 9);

// Number of kappa-subsets of V(g) inducing f, and the induced density
// P(f,g)/C(n,kappa).
long long induced_count(const Graph& f, const Graph& g);
Rational induced_density(const Graph& f, const Graph& g);

// Counts of induced kappa-subsets of g per isomorphism class, indexed like
// `classes` (= enumerate_graphs(kappa)). Backbone of the density sums.
std::vector<long long> induced_counts_by_class(const Graph& g, int kappa,
                                               const std::vector<Graph>& classes);
const std::vector<int>& classify_table(int kappa, const std::vector<Graph>& classes);

// Part partition (decreasing sizes) iff g is complete multipartite,
// equivalently iff g has no induced one-edge 3-vertex subgraph.
std::optional<std::vector<std::vector<int>>> complete_multipartite_parts(const Graph& g);
std::vector<int> part_sizes(const std::vector<std::vector<int>>& parts);

long long binomial(int n, int k);
long long falling_power(long long n, int k);

}  // namespace semind
