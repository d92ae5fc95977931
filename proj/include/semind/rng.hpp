#pragma once

#include <cstdint>

#include "semind/graph.hpp"

namespace semind {

// Counter-based generator: every draw is a pure function of
// (seed, task, draw), so parallel sweeps are schedule-independent.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t counter_draw(std::uint64_t seed, std::uint64_t task,
                                  std::uint64_t draw) {
  return mix64(mix64(seed ^ 0x8e9d3f4a1c5b7e2dULL) ^ mix64(task) ^
               (draw * 0xd1342543de82ef95ULL));
}

// G(n, 1/2) keyed by (seed, task).
inline Graph random_graph(int n, std::uint64_t seed, std::uint64_t task) {
  Graph g = empty_graph(n);
  std::uint64_t draw = 0;
  for (int u = 0; u < n; ++u)
    for (int w = u + 1; w < n; ++w)
      if (counter_draw(seed, task, draw++) & 1ULL) g.add_edge(u, w);
  return g;
}

// G(n, p) keyed by (seed, task).
inline Graph random_graph_p(int n, double p, std::uint64_t seed,
                            std::uint64_t task) {
  Graph g = empty_graph(n);
  std::uint64_t threshold =
      p >= 1.0 ? ~0ULL : static_cast<std::uint64_t>(p * 18446744073709551616.0);
  std::uint64_t draw = 0;
  for (int u = 0; u < n; ++u)
    for (int w = u + 1; w < n; ++w)
      if (counter_draw(seed, task, draw++) < threshold) g.add_edge(u, w);
  return g;
}

}  // namespace semind
