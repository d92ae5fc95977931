#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "semind/colored.hpp"
#include "semind/gamma.hpp"
#include "semind/parallel.hpp"
#include "semind/rng.hpp"
#include "semind/search.hpp"

using namespace semind;

namespace {

Graph k3_plus_point() {
  return make_graph(4, {{0, 1}, {0, 2}, {1, 2}});
}

Graph c4() { return make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }

}  // namespace

TEST_CASE("builtin pattern registry") {
  TwoColoredGraph h0 = builtin_h(0);
  CHECK(h0.red_edges() == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(h0.blue_edges() == std::vector<std::pair<int, int>>{{2, 3}});

  TwoColoredGraph h5 = builtin_h(5);
  CHECK(h5.red_edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}});
  CHECK(h5.blue_edges() == std::vector<std::pair<int, int>>{{2, 3}});

  TwoColoredGraph h3 = builtin_h(3);
  CHECK(h3.red_edges() == std::vector<std::pair<int, int>>{{1, 2}});
  CHECK(h3.blue_edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 3}});

  CHECK_THROWS_AS(builtin_h(18), std::out_of_range);
  CHECK_THROWS_AS(builtin_h(-1), std::out_of_range);
  for (int i = 0; i < kBuiltinCount; ++i) {
    TwoColoredGraph h = builtin_h(i);
    CHECK(h.kappa == 4);
    CHECK(!h.red_edges().empty());
    CHECK(!h.blue_edges().empty());
  }
}

TEST_CASE("embedding counts") {
  CHECK(count_embeddings(builtin_h(0), complete_graph(4)) == 0);
  CHECK(count_embeddings(builtin_h(0), k3_plus_point()) == 12);
  CHECK(count_embeddings(builtin_h(0), c4()) == 0);
  CHECK_THROWS_AS(count_embeddings(builtin_h(0), complete_graph(3)),
                  std::invalid_argument);
}

TEST_CASE("colour swap against the complement") {
  for (int i = 0; i < kBuiltinCount; ++i) {
    TwoColoredGraph h = builtin_h(i);
    TwoColoredGraph swapped = swap_colors(h);
    for (int n = 4; n <= 6; ++n)
      for (const Graph& g : enumerate_graphs(n))
        CHECK(count_embeddings(h, g) == count_embeddings(swapped, complement(g)));
  }
}

TEST_CASE("embedding count is isomorphism-invariant") {
  TwoColoredGraph h = builtin_h(9);
  Graph g = random_graph(9, 17, 0);
  long long base = count_embeddings(h, g);
  for (int t = 0; t < 50; ++t) {
    std::vector<int> perm(g.n);
    for (int i = 0; i < g.n; ++i) perm[i] = i;
    for (int i = g.n - 1; i > 0; --i)
      std::swap(perm[i], perm[counter_draw(19, t, i) % (i + 1)]);
    CHECK(count_embeddings(h, relabel(g, perm)) == base);
  }
}

TEST_CASE("gamma from a pattern") {
  GammaFunction g0 = gamma_from_h(builtin_h(0));
  CHECK(g0.value_of(complete_graph(4)) == 0);
  CHECK(g0.value_of(k3_plus_point()) == Rational(1, 2));

  // a pattern with no blue edges gives gamma(K_kappa) = 1
  TwoColoredGraph all_red = make_colored(
      4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, {});
  CHECK(gamma_from_h(all_red).value_of(complete_graph(4)) == 1);
}

TEST_CASE("lambda_gamma") {
  GammaFunction g0 = gamma_from_h(builtin_h(0));
  CHECK(lambda_gamma(g0, c4()) == 0);

  GammaFunction ones = make_gamma(4, std::vector<Rational>(11, Rational(1)));
  CHECK(lambda_gamma(ones, random_graph(8, 23, 1)) == 1);

  // agreement with the embedding density, here on a 6-vertex blow-up
  GammaFunction g4 = gamma_from_h(builtin_h(4));
  Graph t222 = make_graph(6, {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3},
                              {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 4}, {3, 5}});
  CHECK(lambda_gamma(g4, t222) == embedding_density(builtin_h(4), t222));
}

TEST_CASE("lambda_gamma equals the embedding density on every host") {
  for (int i : {0, 4, 11, 15}) {
    TwoColoredGraph h = builtin_h(i);
    GammaFunction gamma = gamma_from_h(h);
    for (int n = 4; n <= 6; ++n)
      for (const Graph& g : enumerate_graphs(n))
        CHECK(lambda_gamma(gamma, g) == embedding_density(h, g));
    for (int n = 7; n <= 8; ++n)
      for (int t = 0; t < 25; ++t) {
        Graph g = random_graph(n, 29, t);
        CHECK(lambda_gamma(gamma, g) == embedding_density(h, g));
      }
  }
}

TEST_CASE("brute-force search") {
  SearchResult r04 = brute_force_max(builtin_h(0), 4);
  CHECK(r04.max_count == 12);
  CHECK(r04.extremal.size() == 2);

  CHECK(brute_force_max(builtin_h(0), 5).max_count == 48);
  CHECK(brute_force_max(builtin_h(1), 7).max_count == 168);
  CHECK_THROWS_AS(brute_force_max(builtin_h(0), 10), std::invalid_argument);
}

TEST_CASE("search is deterministic across worker counts") {
  set_worker_count(1);
  SearchResult one = brute_force_max(builtin_h(15), 6);
  set_worker_count(4);
  SearchResult four = brute_force_max(builtin_h(15), 6);
  set_worker_count(0);
  CHECK(one.max_count == four.max_count);
  CHECK(one.extremal == four.extremal);
}

TEST_CASE("normalized maximum is nonincreasing in the order") {
  for (int i = 0; i < kBuiltinCount; ++i) {
    Rational prev = -1;
    for (int n = 4; n <= 7; ++n) {
      Rational lam = brute_force_max(builtin_h(i), n).max_density;
      if (prev >= 0) CHECK(lam <= prev);
      prev = lam;
    }
  }
}

TEST_CASE("per-vertex counts") {
  TwoColoredGraph h0 = builtin_h(0);
  CHECK(per_vertex_count(h0, k3_plus_point(), 3) == 12);

  long long sum = 0;
  for (int u = 0; u < 4; ++u) sum += per_vertex_count(h0, c4(), u);
  CHECK(sum == 0);

  CHECK(per_vertex_count(builtin_h(5), empty_graph(6), 0) == 0);

  for (int t = 0; t < 10; ++t) {
    Graph g = random_graph(7, 31, t);
    long long total = 0;
    for (int u = 0; u < g.n; ++u) total += per_vertex_count(h0, g, u);
    CHECK(total == 4 * count_embeddings(h0, g));
  }
  CHECK_THROWS_AS(per_vertex_count(h0, c4(), 9), std::out_of_range);
}
