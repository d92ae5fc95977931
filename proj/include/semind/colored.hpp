#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "semind/graph.hpp"
#include "semind/rational.hpp"

namespace semind {

// Pattern with disjoint red and blue edge sets. An embedding into a graph G
// is an injection sending red edges to edges and blue edges to non-edges.
struct TwoColoredGraph {
  int kappa = 0;
  std::array<std::uint32_t, kMaxVertices> red{};
  std::array<std::uint32_t, kMaxVertices> blue{};

  bool red_edge(int u, int w) const { return (red[u] >> w) & 1u; }
  bool blue_edge(int u, int w) const { return (blue[u] >> w) & 1u; }
  std::vector<std::pair<int, int>> red_edges() const;
  std::vector<std::pair<int, int>> blue_edges() const;
};

TwoColoredGraph make_colored(int kappa,
                             const std::vector<std::pair<int, int>>& red,
                             const std::vector<std::pair<int, int>>& blue);

// Swap the two colours.
TwoColoredGraph swap_colors(const TwoColoredGraph& h);

// The 18 four-vertex patterns H_0..H_17 of the semi-inducibility table.
TwoColoredGraph builtin_h(int index);
constexpr int kBuiltinCount = 18;

// Exact number of embeddings of h into g.
long long count_embeddings(const TwoColoredGraph& h, const Graph& g);

// Embedding density: count / n^(kappa).
Rational embedding_density(const TwoColoredGraph& h, const Graph& g);

// Number of embeddings whose image contains the vertex u.
long long per_vertex_count(const TwoColoredGraph& h, const Graph& g, int u);

}  // namespace semind
