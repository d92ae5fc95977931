#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "semind/constructions.hpp"
#include "semind/exact.hpp"
#include "semind/rng.hpp"
#include "semind/search.hpp"

using namespace semind;

TEST_CASE("closed forms at small orders") {
  CHECK(predicted_value(PredictedFamily::H0, 4).lower == 12);
  CHECK(predicted_value(PredictedFamily::H0, 5).lower == 48);

  // brute force is the oracle for the corrected mod-6 case constants
  CHECK(predicted_value(PredictedFamily::H1, 6).lower == 72);
  CHECK(brute_force_max(builtin_h(1), 6).max_count == 72);
  CHECK(predicted_value(PredictedFamily::H1, 7).lower == 168);

  CHECK(predicted_value(PredictedFamily::H15, 9).lower == 160);
  Prediction p7 = predicted_value(PredictedFamily::H15, 7);
  CHECK_FALSE(p7.exact());
  CHECK(p7.lower == 7 * pi_s(3, 6) - 8);
  CHECK(p7.upper == 7 * pi_s(3, 6));

  CHECK_THROWS_AS(predicted_value(PredictedFamily::H0, 3), std::invalid_argument);
}

TEST_CASE("identity residuals vanish on fixed hosts") {
  Graph c4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(identity_residual(IdentityFamily::H0DegSq, c4) == 0);

  // both sides computed independently on the complete graph
  CHECK(count_embeddings(builtin_h(15), complete_graph(4)) == 0);
  CHECK(h15_defect(complete_graph(4)).total == 4);
  CHECK(identity_residual(IdentityFamily::H15Defect, complete_graph(4)) == 0);

  Graph pet = regular_circulant(10, 3).graph;  // 3-regular on 10 vertices
  CHECK(identity_residual(IdentityFamily::H1Sum, pet) == 0);
}

TEST_CASE("identity residuals vanish on seeded sweeps") {
  for (int t = 0; t < 120; ++t) {
    int n = 4 + static_cast<int>(counter_draw(1, t, 0) % 9);
    Graph g = random_graph(n, 1, t + 1);
    CHECK(identity_residual(IdentityFamily::H0DegSq, g) == 0);
    CHECK(identity_residual(IdentityFamily::H1Sum, g) == 0);
    CHECK(identity_residual(IdentityFamily::H15Defect, g) == 0);
  }
}

TEST_CASE("defect calculus") {
  DefectReport c6 = h15_defect(bipartite_circulant(3, 2));
  CHECK(c6.total == 0);

  DefectReport k4 = h15_defect(complete_graph(4));
  for (long long d : k4.vertex_defects) CHECK(d == 1);
  // adjacent pair in K4: d0 = d1 = 3, t = 2
  long long expect = pi_s(2, 4 - 1 - 3) - (3 - 1 - 2) * (4 - 3 - 3 + 2);
  CHECK(k4.pair_defects.at({0, 1}) == expect);

  DefectReport empty = h15_defect(empty_graph(6));
  for (long long d : empty.vertex_defects) CHECK(d == pi_s(3, 5));
  CHECK(empty.pair_defects.empty());

  // every entry nonnegative on a seeded sweep
  for (int t = 0; t < 50; ++t) {
    Graph g = random_graph(4 + t % 8, 3, t);
    DefectReport rep = h15_defect(g);
    for (long long d : rep.vertex_defects) CHECK(d >= 0);
    for (const auto& [pair, d] : rep.pair_defects) CHECK(d >= 0);
  }
}

TEST_CASE("special builds attain the bound minus their defect") {
  for (int n : {7, 13, 10, 16}) {
    Graph g = h15_special(n);
    long long defect = h15_defect(g).total;
    CHECK(defect == h15_special_defect(n));
    CHECK(count_embeddings(builtin_h(15), g) ==
          static_cast<long long>(n) * pi_s(3, n - 1) - defect);
  }
}

TEST_CASE("bipartite profile polynomials") {
  H6Profile p100 = h6_profile(100);
  CHECK(std::fabs(p100.argmax - 50 - std::sqrt(300.0) / 2) <= 2);

  CHECK(h6_p(Rational(0), Rational(1)) == Rational(1, 2));
  CHECK(h6_p(Rational(1), Rational(0)) == Rational(1, 2));
  CHECK(h6_p(Rational(0), Rational(0)) == Rational(1, 2));
  CHECK(h6_q(Rational(1, 2), Rational(1, 2)) == Rational(1, 8));

  // box maximum of q is 1/8 (scan evidence)
  double best = 0;
  for (int i = 0; i <= 64; ++i)
    for (int j = 0; j <= 64 - i; ++j)
      best = std::max(best, h6_q(i / 64.0, j / 64.0));
  CHECK(std::fabs(best - 0.125) < 1e-9);
}

TEST_CASE("three-part upper bound holds at small orders") {
  for (int n = 4; n <= 7; ++n) {
    long long bound = predicted_value(PredictedFamily::H4Upper, n).lower;
    long long best = 0;
    for (const Graph& g : enumerate_graphs(n)) {
      long long c = count_embeddings(builtin_h(4), g);
      CHECK(c <= bound);
      best = std::max(best, c);
    }
    // the bound is asymptotic: strict at small n even for the maximizer
    CHECK(best < bound);
  }
}

TEST_CASE("split-construction profile") {
  H3Profile p = h3_profile();
  CHECK(p.converged);
  CHECK(std::fabs(p.value - 0.150083407311578) < 1e-9);
  CHECK(std::fabs(p.beta - 0.39829918) < 1e-7);
  CHECK(std::fabs(p.gamma - 0.28158008) < 1e-7);
  CHECK(std::fabs(p.residual_beta_quintic) < 1e-9);
  CHECK(std::fabs(p.residual_gamma_quartic) < 1e-9);
}

TEST_CASE("square-discriminant branch") {
  H0SquareReport r5 = h0_square_branch(5);
  CHECK_FALSE(r5.square);

  H0SquareReport r6 = h0_square_branch(6);
  CHECK(r6.square);
  CHECK(r6.k0 == 4);
  CHECK(r6.family_size == 10);
  CHECK(r6.family_checked);
  CHECK(r6.family_verified);

  CHECK(first_h0_square_instance(5, 10000) == 6);
  CHECK(first_h0_square_instance(7, 10000) > 7);
}

TEST_CASE("five-part optimum profile in exact field arithmetic") {
  // evaluate the blow-up polynomial at alpha = (13 - sqrt57)/56 in Q(sqrt57)
  using oracles::Quad;
  Quad alpha{Rational(13, 56), Rational(-1, 56), 57};
  Quad last{Rational(1) - 4 * alpha.a, -4 * alpha.b, 57};
  std::vector<Quad> x(5, alpha);
  x[4] = last;

  HomSet homs = homomorphisms(builtin_h(5), complete_graph(5));
  Quad total{Rational(0), Rational(0), 57};
  for (const auto& f : homs.maps) {
    Quad term{Rational(1), Rational(0), 57};
    for (int i = 0; i < homs.kappa; ++i) term = term * x[f[i]];
    total = total + term;
  }
  CHECK(total == Quad{Rational(7879, 43904), Rational(-171, 43904), 57});

  H5Report rep = h5_report();
  CHECK(rep.opt.converged);
  CHECK(std::fabs(rep.opt.value - rep.value_expected) < 1e-9);
  CHECK(rep.alpha_error < 1e-7);
  CHECK(rep.constants_discrepant);
}
