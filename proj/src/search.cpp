#include "semind/search.hpp"

#include <algorithm>
#include <stdexcept>

#include "semind/parallel.hpp"

namespace semind {

SearchResult brute_force_max_over(const TwoColoredGraph& h, int n,
                                  const std::vector<Graph>& classes) {
  if (n < h.kappa) throw std::invalid_argument("order below pattern size");

  struct Local {
    long long best = -1;
    std::vector<std::string> extremal;
  };
  auto locals = parallel_chunks<Local>(
      classes.size(), [&](std::size_t begin, std::size_t end) {
        Local loc;
        for (std::size_t i = begin; i < end; ++i) {
          long long c = count_embeddings(h, classes[i]);
          if (c > loc.best) {
            loc.best = c;
            loc.extremal.clear();
          }
          if (c == loc.best) loc.extremal.push_back(to_graph6(classes[i]));
        }
        return loc;
      });

  SearchResult result;
  result.n = n;
  result.kappa = h.kappa;
  long long best = -1;
  for (const Local& loc : locals) best = std::max(best, loc.best);
  for (const Local& loc : locals)
    if (loc.best == best)
      result.extremal.insert(result.extremal.end(), loc.extremal.begin(),
                             loc.extremal.end());
  std::sort(result.extremal.begin(), result.extremal.end());
  result.max_count = best;
  result.max_density = rat_i64(best, falling_power(n, h.kappa));
  return result;
}

SearchResult brute_force_max(const TwoColoredGraph& h, int n, int cap) {
  if (n > cap) throw std::invalid_argument("search order above cap");
  return brute_force_max_over(h, n, enumerate_graphs(n, cap));
}

}  // namespace semind
