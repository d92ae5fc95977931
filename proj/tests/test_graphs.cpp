#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "oracles.hpp"
#include "semind/graph.hpp"
#include "semind/rng.hpp"

using namespace semind;

TEST_CASE("graph6 round trip") {
  for (int n = 0; n <= 12; ++n)
    for (int t = 0; t < 20; ++t) {
      Graph g = random_graph(n, 7, n * 100 + t);
      CHECK(from_graph6(to_graph6(g)) == g);
    }
}

TEST_CASE("canonical form is isomorphism-invariant") {
  Graph c5 = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  std::string key = canonical_form(c5).g6;
  std::vector<int> perm = {2, 4, 1, 0, 3};
  CHECK(canonical_form(relabel(c5, perm)).g6 == key);

  // the two labelings of the 3-edge path
  Graph p4a = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  Graph p4b = make_graph(4, {{0, 2}, {2, 1}, {1, 3}});
  CHECK(canonical_form(p4a).g6 == canonical_form(p4b).g6);

  // idempotence
  Graph k3 = complete_graph(3);
  CanonicalKey once = canonical_form(k3);
  CHECK(canonical_form(once.graph).g6 == once.g6);
}

TEST_CASE("canonical keys agree with brute-force isomorphism") {
  auto f5 = enumerate_graphs(5);
  for (std::size_t a = 0; a < f5.size(); ++a)
    for (std::size_t b = a + 1; b < f5.size(); ++b)
      CHECK_FALSE(oracles::brute_isomorphic(f5[a], f5[b]));

  for (int t = 0; t < 40; ++t) {
    Graph g = random_graph(6, 11, t);
    std::vector<int> perm(6);
    for (int i = 0; i < 6; ++i) perm[i] = i;
    for (int i = 5; i > 0; --i)
      std::swap(perm[i], perm[counter_draw(3, t, i) % (i + 1)]);
    Graph h = relabel(g, perm);
    CHECK(oracles::brute_isomorphic(g, h));
    CHECK(canonical_form(g).g6 == canonical_form(h).g6);
  }
}

TEST_CASE("enumeration matches the orbit-counting oracle") {
  CHECK(enumerate_graphs(0).size() == 1);
  for (int n = 1; n <= 8; ++n)
    CHECK(static_cast<long long>(enumerate_graphs(n).size()) ==
          oracles::burnside_class_count(n));
  CHECK_THROWS_AS(enumerate_graphs(10), std::invalid_argument);
}

TEST_CASE("enumeration is isomorph-free, exhaustive and key-sorted") {
  auto f6 = enumerate_graphs(6);
  std::set<std::string> keys;
  std::string prev;
  for (const Graph& g : f6) {
    std::string key = to_graph6(g);
    CHECK(canonical_form(g).g6 == key);  // stored in canonical form
    CHECK(key > prev);
    prev = key;
    keys.insert(key);
  }
  CHECK(keys.size() == f6.size());
  for (int t = 0; t < 200; ++t)
    CHECK(keys.count(canonical_form(random_graph(6, 5, t)).g6) == 1);
}

TEST_CASE("induced densities") {
  Graph k2 = complete_graph(2), k3 = complete_graph(3);
  CHECK(induced_density(k2, k3) == 1);

  Graph c5 = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  CHECK(induced_density(k2, c5) == Rational(1, 2));

  Graph op3 = make_graph(3, {{0, 1}});
  Graph t223 = make_graph(7, {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6},
                              {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6},
                              {2, 4}, {2, 5}, {2, 6}, {3, 4}, {3, 5}, {3, 6}});
  CHECK(complete_multipartite_parts(t223).has_value());
  CHECK(induced_density(op3, t223) == 0);
}

TEST_CASE("densities over one order sum to one") {
  for (int kappa = 2; kappa <= 4; ++kappa) {
    auto classes = enumerate_graphs(kappa);
    for (int t = 0; t < 10; ++t) {
      Graph g = random_graph(4 + t % 5, 13, t);
      if (g.n < kappa) continue;
      Rational total = 0;
      for (const Graph& f : classes) total += induced_density(f, g);
      CHECK(total == 1);
    }
  }
}

TEST_CASE("edits") {
  Graph k2 = complete_graph(2);
  CHECK(flip_edge(k2, 0, 1) == empty_graph(2));
  CHECK_THROWS_AS(flip_edge(k2, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(flip_edge(k2, 0, 5), std::out_of_range);

  for (const Graph& g : enumerate_graphs(6))
    CHECK(complement(complement(g)) == g);

  // vertex 2 is already a clone of 0 in the 4-cycle
  Graph c4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(clone_onto(c4, 0, 2) == c4);
}

TEST_CASE("complete multipartite detection") {
  Graph c4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  auto parts = complete_multipartite_parts(c4);
  REQUIRE(parts.has_value());
  CHECK(part_sizes(*parts) == std::vector<int>{2, 2});

  CHECK_FALSE(complete_multipartite_parts(make_graph(4, {{0, 1}})).has_value());

  auto k5 = complete_multipartite_parts(complete_graph(5));
  REQUIRE(k5.has_value());
  CHECK(part_sizes(*k5) == std::vector<int>{1, 1, 1, 1, 1});

  // present exactly when the one-edge 3-vertex pattern has density zero
  Graph op3 = make_graph(3, {{0, 1}});
  for (const Graph& g : enumerate_graphs(5))
    CHECK(complete_multipartite_parts(g).has_value() ==
          (induced_density(op3, g) == 0));
}
