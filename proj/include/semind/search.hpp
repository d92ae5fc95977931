#pragma once

#include <string>
#include <vector>

#include "semind/colored.hpp"
#include "semind/graph.hpp"
#include "semind/rational.hpp"

namespace semind {

// Exhaustive maximum of the embedding count over all order-n graphs, with
// the complete list of extremal graphs as sorted canonical graph6 strings.
struct SearchResult {
  int n = 0;
  int kappa = 0;
  long long max_count = 0;
  Rational max_density;
  std::vector<std::string> extremal;
};

SearchResult brute_force_max(const TwoColoredGraph& h, int n, int cap = 9);

// Same search over a caller-supplied isomorph-free list (the list is assumed
// sorted by canonical key, as enumerate_graphs returns it).
SearchResult brute_force_max_over(const TwoColoredGraph& h, int n,
                                  const std::vector<Graph>& classes);

}  // namespace semind
