#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "semind/colored.hpp"
#include "semind/graph.hpp"
#include "semind/rational.hpp"

namespace semind {

// Part-assignment maps V(H) -> V(B): red edges land on base edges, blue
// edges on base non-edges or on a single part.
struct HomSet {
  int kappa = 0;
  int m = 0;
  std::vector<std::array<std::int8_t, 8>> maps;
};

HomSet homomorphisms(const TwoColoredGraph& h, const Graph& base);

// Base graph with a weight vector on the simplex; the blow-up limit object.
struct WeightedBase {
  Graph base;
  std::vector<Rational> x;
};

Rational blowup_density(const TwoColoredGraph& h, const WeightedBase& wb);
double blowup_density(const TwoColoredGraph& h, const Graph& base,
                      const std::vector<double>& x);
double blowup_density(const HomSet& homs, const std::vector<double>& x);

// Finite blow-up: vertex i of the base becomes an independent block of
// sizes[i] clones.
Graph blowup_graph(const Graph& base, const std::vector<int>& sizes);

struct OptimizeResult {
  std::vector<double> x;
  double value = 0;
  double kkt_residual = 0;
  int starts = 0;
  bool converged = false;
};

// Multi-start projected-gradient ascent of the blow-up density over the
// simplex. Heuristic: the best local optimum found, deterministically.
OptimizeResult optimize_on_base(const TwoColoredGraph& h, const Graph& base,
                                double tol = 1e-12);

// n^2-order drop of the objective when one blow-up pair at parts (u, w) is
// flipped in an x-weighted blow-up of the base; u == w means two clones
// inside one part. Positive at every pair certifies flip-averseness at x.
Rational flip_averse_margin(const TwoColoredGraph& h, const Graph& base,
                            const std::vector<Rational>& x, int u, int w);

// Strictness machinery: B' doubles every base vertex (parts {i, i+m}), B''
// adds vertex 2m adjacent to the original vertices [m]. The polynomial
// p(x, y) is the normalized count of embeddings through one new vertex
// attached y-fractionally to the parts.
struct StrictnessInstance {
  TwoColoredGraph h;
  Graph base;               // B on [m]
  Graph clone_blowup;       // B'
  Graph extended;           // B''
  std::vector<Rational> x;  // optimal weights
  // maps V(H) -> V(B'') sending exactly one vertex to 2m; entries equal to
  // 2m are skipped when the z-monomial is evaluated
  std::vector<std::array<std::int8_t, 8>> homs_through;
};

StrictnessInstance make_strictness_instance(const TwoColoredGraph& h,
                                            const Graph& base,
                                            const std::vector<Rational>& x);

Rational strictness_eval(const StrictnessInstance& inst,
                         const std::vector<Rational>& y);
double strictness_eval_d(const StrictnessInstance& inst,
                         const std::vector<double>& y);

struct StrictnessMaximizer {
  std::vector<double> y;
  double value = 0;
  double indicator_distance = 0;  // to the nearest base-adjacency row
  int nearest_vertex = -1;
};

struct StrictnessReport {
  double max_value = 0;
  std::vector<StrictnessMaximizer> maximizers;
  bool strict_consistent = false;  // numeric evidence, not a proof
};

StrictnessReport strictness_scan(const StrictnessInstance& inst,
                                 int grid_resolution = 64,
                                 double tol = 1e-6);

}  // namespace semind
