#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "semind/gamma.hpp"
#include "semind/graph.hpp"

namespace semind {

// Shape test for the clone inequality: the red graph must be complete
// multipartite and, inside every red part, the blue neighbourhoods of any
// two vertices (restricted to the part) must be nested.
struct ShapeVerdict {
  bool applies = false;
  std::vector<std::vector<int>> red_parts;
  // per-part vertex order with nondecreasing blue neighbourhoods, when the
  // verdict holds
  std::vector<std::vector<int>> nesting_chains;
  std::optional<std::pair<int, int>> violating_pair;
};

ShapeVerdict shape_check(const TwoColoredGraph& h);

// lambda(G_{wu}) + lambda(G_{uw}) - 2 lambda(G) for a non-adjacent pair;
// nonnegative margins at every pair are what the shape test certifies.
Rational strong_symm_margin(const GammaFunction& gamma, const Graph& g, int u,
                            int w);

struct SymmetrizeResult {
  Graph graph;
  Rational lambda_before;
  Rational lambda_after;
  int steps = 0;           // clone operations applied
  bool monotone = true;    // no step decreased the objective
};

// Clone-by-clone reduction to a complete multipartite graph. When
// require_monotone is set (the shape test passed), any decreasing step is an
// invariant breach and throws; otherwise decreases are recorded.
SymmetrizeResult symmetrize(const GammaFunction& gamma, const Graph& g,
                            bool require_monotone = false);

}  // namespace semind
