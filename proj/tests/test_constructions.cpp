#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numeric>

#include "oracles.hpp"
#include "semind/colored.hpp"
#include "semind/constructions.hpp"
#include "semind/exact.hpp"
#include "semind/rng.hpp"

using namespace semind;

TEST_CASE("maximum balanced products") {
  CHECK(pi_s(3, 8) == 18);
  CHECK(pi_s(3, 21) == 343);  // 12k-3 at k = 2
  CHECK(pi_s(2, 7) == 12);
  CHECK_THROWS_AS(pi_s(0, 5), std::invalid_argument);
  for (int s = 1; s <= 3; ++s)
    for (int n = 0; n <= 30; ++n)
      CHECK(pi_s(s, n) == oracles::max_product_compositions(s, n));
}

TEST_CASE("turan graphs") {
  CHECK(oracles::brute_isomorphic(turan(3, 6), multipartite({2, 2, 2})));
  auto parts = complete_multipartite_parts(turan(2, 5));
  REQUIRE(parts.has_value());
  CHECK(part_sizes(*parts) == std::vector<int>{3, 2});

  // the three-part bound: valid at every n, approached by the balanced
  // Turan graphs (it is not attained at finite n; the chain behind it
  // drops lower-order terms)
  double prev_ratio = 0;
  for (int n : {6, 9, 12, 15, 18, 21, 24, 27, 30}) {
    long long count = count_embeddings(builtin_h(4), turan(3, n));
    long long bound = predicted_value(PredictedFamily::H4Upper, n).lower;
    CHECK(count <= bound);
    double ratio = static_cast<double>(count) / static_cast<double>(bound);
    CHECK(ratio > prev_ratio);
    prev_ratio = ratio;
  }
  CHECK(prev_ratio > 0.9);
}

TEST_CASE("quasi-cliques") {
  CHECK(oracles::brute_isomorphic(
      quasi_clique(5, 6),
      disjoint_union(complete_graph(4), empty_graph(1))));
  CHECK(quasi_clique(7, 0) == empty_graph(7));
  CHECK(oracles::brute_isomorphic(
      quasi_clique(4, 3),
      disjoint_union(complete_graph(3), empty_graph(1))));

  for (int n : {5, 7, 9})
    for (long long e = 0; e <= binomial(n, 2); ++e)
      CHECK(quasi_clique(n, e).edge_count() == e);
}

TEST_CASE("quasi-cliques maximize the degree-square sum at fixed size") {
  auto degsq = [](const Graph& g) {
    long long s = 0;
    for (int u = 0; u < g.n; ++u) s += 1LL * g.degree(u) * g.degree(u);
    return s;
  };
  for (int t = 0; t < 60; ++t) {
    Graph g = random_graph(8, 41, t);
    long long e = g.edge_count();
    CHECK(degsq(quasi_clique(8, e)) >= degsq(g));
  }
}

TEST_CASE("bipartite circulants") {
  Graph c6 = make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  CHECK(oracles::brute_isomorphic(bipartite_circulant(3, 2), c6));
  CHECK(bipartite_circulant(4, 0) == empty_graph(8));

  Graph b43 = bipartite_circulant(4, 3);
  CHECK(triangle_count(b43) == 0);
  for (int d : degree_list(b43)) CHECK(d == 3);

  for (int m = 1; 2 * m <= 32; ++m)
    for (int d = 0; d <= m; ++d) {
      Graph g = bipartite_circulant(m, d);
      CHECK(triangle_count(g) == 0);
      for (int deg : degree_list(g)) CHECK(deg == d);
    }
}

TEST_CASE("odd circulants") {
  Graph c9;
  c9.n = 9;
  c9 = empty_graph(9);
  for (int i = 0; i < 9; ++i) c9.add_edge(i, (i + 1) % 9);
  CHECK(oracles::brute_isomorphic(circulant_r(4, 1), c9));

  Graph r52 = circulant_r(5, 2);
  CHECK(r52.n == 11);
  CHECK(triangle_count(r52) == 0);
  for (int d : degree_list(r52)) CHECK(d == 4);

  CHECK_THROWS_AS(circulant_r(4, 2), std::invalid_argument);  // 3k >= m+2

  for (int m = 1; 2 * m + 1 <= 32; ++m)
    for (int k = 1; 3 * k < m + 2; ++k) {
      Graph g = circulant_r(m, k);
      CHECK(triangle_count(g) == 0);
      for (int deg : degree_list(g)) CHECK(deg == 2 * k);
    }
}

TEST_CASE("special builds for the two leftover residues") {
  CHECK_THROWS_AS(h15_special(8), std::invalid_argument);

  Graph g7 = h15_special(7);  // k = 1
  CHECK(triangle_count(g7) == 0);
  int deg2 = 0, deg3 = 0;
  for (int d : degree_list(g7)) {
    if (d == 2) ++deg2;
    if (d == 3) ++deg3;
  }
  CHECK(deg2 + deg3 == 7);
  CHECK(deg3 == 2);  // 2k + 2a with a = 0

  Graph g10 = h15_special(10);  // k = 1, other residue
  CHECK(triangle_count(g10) == 0);
  for (int d : degree_list(g10)) CHECK((d == 3 || d == 4));

  for (int n : {7, 13, 19, 10, 16, 22}) {
    Graph g = h15_special(n);
    CHECK(g.n == n);
    CHECK(triangle_count(g) == 0);
  }
}

TEST_CASE("complete bipartite profile hosts") {
  for (int a = 0; a <= 10; ++a)
    CHECK(count_embeddings(builtin_h(6), h6_augmented(10, a)) ==
          h6_poly_p_n(10, a));
  CHECK(h6_augmented(6, 0) == empty_graph(6));
  CHECK(count_embeddings(builtin_h(6), h6_augmented(6, 0)) == 0);
}

TEST_CASE("split witness for the open pattern") {
  H3Witness w = h3_witness(30, 0.3983, 0.2816);
  CHECK(w.graph.n == 30);
  double lam = rat_double(embedding_density(builtin_h(3), w.graph));
  CHECK(std::fabs(lam - 0.150083) < 0.02);
}

TEST_CASE("proportional complete partite graphs") {
  CHECK(oracles::brute_isomorphic(
      g_nx(8, {Rational(1, 2), Rational(1, 2)}), turan(2, 8)));

  auto parts = complete_multipartite_parts(g_nx(9, {Rational(1, 2)}));
  REQUIRE(parts.has_value());
  CHECK(part_sizes(*parts) == std::vector<int>{4, 1, 1, 1, 1, 1});

  for (int t = 0; t < 20; ++t) {
    int n = 6 + static_cast<int>(counter_draw(43, t, 0) % 20);
    Rational x1 = rat(1 + static_cast<long>(counter_draw(43, t, 1) % 5), 10);
    Rational x2 = rat(1 + static_cast<long>(counter_draw(43, t, 2) % 3), 10);
    if (x2 > x1) std::swap(x1, x2);
    CHECK(complete_multipartite_parts(g_nx(n, {x1, x2})).has_value());
  }
  CHECK_THROWS_AS(g_nx(8, {Rational(1, 4), Rational(1, 2)}),
                  std::invalid_argument);
}

TEST_CASE("regular circulant helper") {
  RegularCirculant r = regular_circulant(9, 3);
  CHECK(r.adjusted);  // 9*3 is odd
  CHECK(r.degree == 2);
  for (int d : degree_list(r.graph)) CHECK(d == 2);

  RegularCirculant r2 = regular_circulant(10, 3);
  CHECK_FALSE(r2.adjusted);
  for (int d : degree_list(r2.graph)) CHECK(d == 3);
}
