#pragma once

#include <vector>

#include "semind/graph.hpp"
#include "semind/rational.hpp"

namespace semind {

// Maximum product of s non-negative integers summing to n.
long long pi_s(int s, long long n);

Graph multipartite(const std::vector<int>& sizes);
// Complete m-partite graph on [n] with almost equal parts.
Graph turan(int m, int n);

// Clique K_{k+1} minus a star, padded with isolated vertices; exactly e
// edges, where k is maximal with C(k,2) < e.
Graph quasi_clique(int n, long long e);

// Bipartite circulant on 2m vertices: i in one part and j in the other are
// adjacent iff (i + j) mod m < d. Triangle-free, d-regular.
Graph bipartite_circulant(int m, int d);

// Circulant on 2m+1 vertices joining each residue to the diametrally
// opposite interval of size 2k; requires 3k < m + 2, which makes it
// triangle-free. 2k-regular.
Graph circulant_r(int m, int k);

struct RegularCirculant {
  Graph graph;
  int degree = 0;      // realized degree
  bool adjusted = false;  // an odd d*n product forced degree d-1
};

// d-regular circulant on n vertices via symmetric offsets; when n*d is odd
// no d-regular graph exists and the degree is lowered by one.
RegularCirculant regular_circulant(int n, int d);

// Lower-bound builds for the two residues where the triangle-free bound is
// not exactly attained; n must be 1 or 4 mod 6 (and 4 <= n <= 31).
Graph h15_special(int n);

// Closed form of the defect total of h15_special(n), for the audits.
long long h15_special_defect(int n);

// Complete bipartite K_{a, n-a}.
Graph h6_augmented(int n, int a);

// Disjoint union of an (almost) gamma*n-regular circulant on beta*n
// vertices and a clique on the rest.
struct H3Witness {
  Graph graph;
  int regular_part_order = 0;
  int degree = 0;
  bool degree_adjusted = false;
};
H3Witness h3_witness(int n, double beta, double gamma);

// Complete partite graph G_{n,x} for a finite nonincreasing weight
// sequence. When the weights sum to 1 the parts are proportional within 1;
// otherwise parts are floor(x_i n) for x_i n >= 2 and the remaining
// vertices become universal singletons.
Graph g_nx(int n, const std::vector<Rational>& x);

// Structural audit used by the CLI and the construction tests.
long long triangle_count(const Graph& g);
std::vector<int> degree_list(const Graph& g);

}  // namespace semind
