#include "semind/colored.hpp"

#include <algorithm>
#include <stdexcept>

namespace semind {

std::vector<std::pair<int, int>> TwoColoredGraph::red_edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < kappa; ++u)
    for (int w = u + 1; w < kappa; ++w)
      if (red_edge(u, w)) out.emplace_back(u, w);
  return out;
}

std::vector<std::pair<int, int>> TwoColoredGraph::blue_edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < kappa; ++u)
    for (int w = u + 1; w < kappa; ++w)
      if (blue_edge(u, w)) out.emplace_back(u, w);
  return out;
}

TwoColoredGraph make_colored(int kappa,
                             const std::vector<std::pair<int, int>>& red,
                             const std::vector<std::pair<int, int>>& blue) {
  if (kappa < 0 || kappa > kMaxVertices) throw std::invalid_argument("bad order");
  TwoColoredGraph h;
  h.kappa = kappa;
  auto set = [&](std::array<std::uint32_t, kMaxVertices>& side, int u, int w) {
    if (u < 0 || u >= kappa || w < 0 || w >= kappa || u == w)
      throw std::invalid_argument("bad pattern edge");
    side[u] |= 1u << w;
    side[w] |= 1u << u;
  };
  for (auto [u, w] : red) set(h.red, u, w);
  for (auto [u, w] : blue) set(h.blue, u, w);
  for (int u = 0; u < kappa; ++u)
    if (h.red[u] & h.blue[u])
      throw std::invalid_argument("red and blue edge sets must be disjoint");
  return h;
}

TwoColoredGraph swap_colors(const TwoColoredGraph& h) {
  TwoColoredGraph s = h;
  std::swap(s.red, s.blue);
  return s;
}

TwoColoredGraph builtin_h(int index) {
  using E = std::vector<std::pair<int, int>>;
  static const struct {
    E red, blue;
  } table[kBuiltinCount] = {
      {{{0, 1}}, {{2, 3}}},                                  // H0
      {{{0, 1}}, {{0, 2}, {0, 3}}},                          // H1
      {{{0, 1}}, {{1, 2}, {0, 3}}},                          // H2
      {{{1, 2}}, {{0, 1}, {0, 3}}},                          // H3
      {{{0, 2}, {0, 3}, {1, 2}}, {{0, 1}}},                  // H4
      {{{0, 1}, {0, 2}, {0, 3}}, {{2, 3}}},                  // H5
      {{{1, 2}}, {{0, 2}, {0, 3}, {2, 3}}},                  // H6
      {{{0, 3}}, {{3, 2}, {1, 2}, {1, 0}}},                  // H7
      {{{3, 2}, {0, 3}, {1, 2}, {1, 0}}, {{0, 2}}},          // H8
      {{{0, 1}, {0, 2}, {1, 2}, {2, 3}}, {{0, 3}}},          // H9
      {{{0, 1}, {1, 2}}, {{0, 2}, {0, 3}}},                  // H10
      {{{0, 2}, {0, 3}}, {{0, 1}, {2, 3}}},                  // H11
      {{{0, 1}, {0, 3}}, {{1, 2}, {2, 3}}},                  // H12
      {{{0, 1}, {2, 3}}, {{0, 3}, {1, 2}}},                  // H13
      {{{0, 2}, {1, 2}, {2, 3}}, {{0, 1}, {0, 3}}},          // H14
      {{{0, 2}, {0, 3}}, {{0, 1}, {1, 2}, {2, 3}}},          // H15
      {{{0, 3}, {2, 3}}, {{0, 2}, {0, 1}, {1, 2}}},          // H16
      {{{0, 2}, {0, 3}, {1, 2}}, {{0, 1}, {2, 3}}},          // H17
  };
  if (index < 0 || index >= kBuiltinCount)
    throw std::out_of_range("builtin pattern index must be 0..17");
  return make_colored(4, table[index].red, table[index].blue);
}

namespace {

// Order the pattern vertices so each new one sees as many constraints to the
// already placed ones as possible; trims the search early.
std::vector<int> embedding_order(const TwoColoredGraph& h) {
  std::vector<int> order;
  std::uint32_t placed = 0;
  for (int step = 0; step < h.kappa; ++step) {
    int best = -1, best_score = -1;
    for (int v = 0; v < h.kappa; ++v) {
      if ((placed >> v) & 1u) continue;
      int score = __builtin_popcount((h.red[v] | h.blue[v]) & placed);
      if (score > best_score) {
        best = v;
        best_score = score;
      }
    }
    order.push_back(best);
    placed |= 1u << best;
  }
  return order;
}

long long count_embeddings_impl(const TwoColoredGraph& h, const Graph& g,
                                const std::vector<int>& order, int forced_pos,
                                int forced_vertex) {
  const int kappa = h.kappa;
  if (kappa == 0) return 1;
  std::uint32_t all = g.vertex_mask();
  // candidate masks per level; image[level] is the chosen g-vertex
  std::array<std::uint32_t, 8> cand{};
  std::array<int, 8> image{};
  std::array<std::uint32_t, 8> used{};

  long long total = 0;
  int level = 0;
  used[0] = 0;
  cand[0] = forced_pos == 0 ? (1u << forced_vertex) : all;
  if (kappa == 1) return __builtin_popcount(cand[0]);
  while (level >= 0) {
    std::uint32_t& c = cand[level];
    if (c == 0) {
      --level;
      continue;
    }
    int v = __builtin_ctz(c);
    c &= c - 1;
    image[level] = v;
    int next = level + 1;
    int hv = order[next];
    std::uint32_t mask = all & ~(used[level] | (1u << v));
    for (int i = 0; i <= level; ++i) {
      int hu = order[i];
      int gu = image[i];
      if (h.red_edge(hu, hv)) mask &= g.adj[gu];
      if (h.blue_edge(hu, hv)) mask &= ~g.adj[gu];
    }
    if (forced_pos == next) mask &= 1u << forced_vertex;
    if (next == kappa - 1) {
      total += __builtin_popcount(mask);
      continue;
    }
    used[next] = used[level] | (1u << v);
    cand[next] = mask;
    ++level;
  }
  return total;
}

}  // namespace

long long count_embeddings(const TwoColoredGraph& h, const Graph& g) {
  if (g.n < h.kappa) throw std::invalid_argument("host smaller than pattern");
  if (h.kappa > 8) throw std::invalid_argument("pattern order cap is 8");
  return count_embeddings_impl(h, g, embedding_order(h), -1, -1);
}

Rational embedding_density(const TwoColoredGraph& h, const Graph& g) {
  return rat_i64(count_embeddings(h, g), falling_power(g.n, h.kappa));
}

long long per_vertex_count(const TwoColoredGraph& h, const Graph& g, int u) {
  if (u < 0 || u >= g.n) throw std::out_of_range("vertex index out of range");
  if (g.n < h.kappa) throw std::invalid_argument("host smaller than pattern");
  auto order = embedding_order(h);
  long long total = 0;
  for (int pos = 0; pos < h.kappa; ++pos)
    total += count_embeddings_impl(h, g, order, pos, u);
  return total;
}

}  // namespace semind
