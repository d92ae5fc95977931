#pragma once

#include <map>
#include <string>
#include <vector>

#include "semind/colored.hpp"
#include "semind/graph.hpp"
#include "semind/rational.hpp"

namespace semind {

// Weight function on the isomorphism classes of kappa-vertex graphs. The
// objective it induces on a larger graph G is
//   lambda_gamma(G) = sum_F gamma(F) * p(F, G).
struct GammaFunction {
  int kappa = 0;
  std::vector<Graph> classes;       // enumerate_graphs(kappa), sorted
  std::vector<Rational> values;     // parallel to classes
  std::map<std::string, int> index; // canonical g6 -> position

  const Rational& value_of(const Graph& f) const;
};

GammaFunction make_gamma(int kappa, const std::vector<Rational>& values);

// gamma(F) = embedding density of h in F, for every F of order kappa.
GammaFunction gamma_from_h(const TwoColoredGraph& h);

Rational lambda_gamma(const GammaFunction& gamma, const Graph& g);

}  // namespace semind
