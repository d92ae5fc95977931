#include "semind/symmetrize.hpp"

#include <algorithm>
#include <stdexcept>

namespace semind {

ShapeVerdict shape_check(const TwoColoredGraph& h) {
  ShapeVerdict verdict;
  Graph red = empty_graph(h.kappa);
  for (auto [u, w] : h.red_edges()) red.add_edge(u, w);
  auto parts = complete_multipartite_parts(red);
  if (!parts) return verdict;
  verdict.red_parts = *parts;

  for (const auto& part : verdict.red_parts) {
    std::uint32_t part_mask = 0;
    for (int v : part) part_mask |= 1u << v;
    for (std::size_t a = 0; a < part.size(); ++a)
      for (std::size_t b = a + 1; b < part.size(); ++b) {
        int u = part[a], w = part[b];
        std::uint32_t scope = part_mask & ~((1u << u) | (1u << w));
        std::uint32_t bu = h.blue[u] & scope;
        std::uint32_t bw = h.blue[w] & scope;
        if ((bu & ~bw) != 0 && (bw & ~bu) != 0) {
          verdict.violating_pair = {u, w};
          return verdict;
        }
      }
    std::vector<int> chain = part;
    std::sort(chain.begin(), chain.end(), [&](int u, int w) {
      int cu = __builtin_popcount(h.blue[u] & part_mask);
      int cw = __builtin_popcount(h.blue[w] & part_mask);
      if (cu != cw) return cu < cw;
      return u < w;
    });
    verdict.nesting_chains.push_back(chain);
  }
  verdict.applies = true;
  return verdict;
}

Rational strong_symm_margin(const GammaFunction& gamma, const Graph& g, int u,
                            int w) {
  if (u == w || u < 0 || w < 0 || u >= g.n || w >= g.n)
    throw std::invalid_argument("need two distinct vertices");
  if (g.adjacent(u, w))
    throw std::invalid_argument("margin is defined on non-adjacent pairs");
  Rational base = lambda_gamma(gamma, g);
  Rational a = lambda_gamma(gamma, clone_onto(g, u, w));  // w copies u
  Rational b = lambda_gamma(gamma, clone_onto(g, w, u));  // u copies w
  return a + b - 2 * base;
}

namespace {

bool clones(const Graph& g, int a, int b) {
  if (g.adjacent(a, b)) return false;
  std::uint32_t drop = (1u << a) | (1u << b);
  return ((g.adj[a] ^ g.adj[b]) & ~drop) == 0;
}

}  // namespace

SymmetrizeResult symmetrize(const GammaFunction& gamma, const Graph& g,
                            bool require_monotone) {
  SymmetrizeResult result;
  result.lambda_before = lambda_gamma(gamma, g);
  Graph cur = g;
  Rational lam = result.lambda_before;

  // Per vertex i, clear every pair that keeps {0..i} from being complete
  // partite. A "join" makes i a clone of the chosen j (one step, only safe
  // while {0..i-1} is still untouched for this i). Otherwise j's whole
  // clone class is absorbed onto i one clone at a time; under the clone
  // inequality a decreasing absorb step forces the opposite (strictly
  // increasing) join, which re-anchors i and restarts the absorption.
  // Joins strictly increase the objective after the first absorb, and every
  // absorb step shrinks the candidate set, so the loop terminates.
  for (int i = 1; i < g.n; ++i) {
    bool absorbing = false;
    while (true) {
      int j = -1;
      for (int t = 0; t < i; ++t)
        if (!cur.adjacent(t, i) && !clones(cur, t, i)) {
          j = t;
          break;
        }
      if (j < 0) break;

      if (!absorbing) {
        Graph join = clone_onto(cur, j, i);
        Rational lam_join = lambda_gamma(gamma, join);
        if (lam_join >= lam) {
          cur = join;
          lam = lam_join;
          ++result.steps;
          break;  // i sits inside j's part now
        }
        absorbing = true;
      }

      Graph absorb = clone_onto(cur, i, j);
      Rational lam_absorb = lambda_gamma(gamma, absorb);
      if (lam_absorb >= lam || !require_monotone) {
        if (lam_absorb < lam) result.monotone = false;
        cur = absorb;
        lam = lam_absorb;
        ++result.steps;
        continue;
      }
      // the clone inequality promises the opposite direction then gains
      Graph join = clone_onto(cur, j, i);
      Rational lam_join = lambda_gamma(gamma, join);
      if (lam_join <= lam)
        throw std::logic_error(
            "symmetrize: both clone directions decreased under a passed "
            "shape check");
      cur = join;
      lam = lam_join;
      ++result.steps;
    }
  }

  if (!complete_multipartite_parts(cur))
    throw std::logic_error("symmetrize: output is not complete multipartite");
  result.graph = cur;
  result.lambda_after = lam;
  if (result.lambda_after < result.lambda_before) result.monotone = false;
  return result;
}

}  // namespace semind
