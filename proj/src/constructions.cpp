#include "semind/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace semind {

long long pi_s(int s, long long n) {
  if (s < 1) throw std::invalid_argument("pi_s needs s >= 1");
  if (n < 0) throw std::invalid_argument("pi_s needs n >= 0");
  long long prod = 1;
  for (int i = 0; i < s; ++i) prod *= (n + i) / s;
  return prod;
}

Graph multipartite(const std::vector<int>& sizes) {
  int total = std::accumulate(sizes.begin(), sizes.end(), 0);
  if (total > kMaxVertices) throw std::invalid_argument("order above 32");
  std::vector<int> part_of;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < 0) throw std::invalid_argument("negative part size");
    for (int c = 0; c < sizes[i]; ++c) part_of.push_back(static_cast<int>(i));
  }
  Graph g = empty_graph(total);
  for (int a = 0; a < total; ++a)
    for (int b = a + 1; b < total; ++b)
      if (part_of[a] != part_of[b]) g.add_edge(a, b);
  return g;
}

Graph turan(int m, int n) {
  if (m < 1) throw std::invalid_argument("turan needs m >= 1");
  std::vector<int> sizes(m);
  for (int i = 0; i < m; ++i) sizes[i] = (n + i) / m;
  return multipartite(sizes);
}

Graph quasi_clique(int n, long long e) {
  if (n < 0 || n > kMaxVertices) throw std::invalid_argument("bad order");
  if (e < 0 || e > binomial(n, 2)) throw std::invalid_argument("bad edge count");
  if (e == 0) return empty_graph(n);
  int k = 0;
  while (binomial(k + 1, 2) < e) ++k;  // max k with C(k,2) < e
  Graph g = empty_graph(n);
  for (int a = 0; a <= k; ++a)
    for (int b = a + 1; b <= k; ++b) g.add_edge(a, b);
  long long removals = binomial(k + 1, 2) - e;  // star at vertex k
  for (long long r = 0; r < removals; ++r) g.remove_edge(k, static_cast<int>(r));
  return g;
}

Graph bipartite_circulant(int m, int d) {
  if (m < 1 || d < 0 || d > m) throw std::invalid_argument("need 0 <= d <= m");
  if (2 * m > kMaxVertices) throw std::invalid_argument("order above 32");
  Graph g = empty_graph(2 * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if ((i + j) % m < d) g.add_edge(i, m + j);
  return g;
}

Graph circulant_r(int m, int k) {
  if (m < 1 || k < 1) throw std::invalid_argument("need positive m, k");
  if (3 * k >= m + 2) throw std::invalid_argument("circulant_r needs 3k < m+2");
  int n = 2 * m + 1;
  if (n > kMaxVertices) throw std::invalid_argument("order above 32");
  Graph g = empty_graph(n);
  for (int u = 0; u < n; ++u)
    for (int w = u + 1; w < n; ++w) {
      int diff = (w - u) % n;
      int folded = std::min(diff, n - diff);
      if (folded >= m + 1 - k && folded <= m + k) g.add_edge(u, w);
    }
  return g;
}

RegularCirculant regular_circulant(int n, int d) {
  if (n < 1 || d < 0 || d >= n) throw std::invalid_argument("bad degree");
  RegularCirculant out;
  out.degree = d;
  if (d % 2 == 1 && n % 2 == 1) {
    out.degree = d - 1;
    out.adjusted = true;
  }
  Graph g = empty_graph(n);
  int half = out.degree / 2;
  for (int u = 0; u < n; ++u) {
    for (int off = 1; off <= half; ++off) g.adj[u] |= 1u << ((u + off) % n);
    if (out.degree % 2 == 1) g.adj[u] |= 1u << ((u + n / 2) % n);
  }
  // symmetrize the offset rows
  for (int u = 0; u < n; ++u)
    for (int w = 0; w < n; ++w)
      if ((g.adj[u] >> w) & 1u) g.adj[w] |= 1u << u;
  out.graph = g;
  return out;
}

namespace {

// n = 6k+1: bipartite 2k-regular circulant on parts U, W of size 3k, plus a
// matching of size floor(k/2) into W and one vertex attached to 2k of W.
Graph h15_build_6k1(int k) {
  int n = 6 * k + 1;
  int m = 3 * k;
  int a = k / 2;
  Graph g = empty_graph(n);
  // sums in [k-1, 2k-2] mod 3k are the non-edges across U x W
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int s = (i + j) % m;
      if (!(s >= k - 1 && s <= 2 * k - 2)) g.add_edge(i, m + j);
    }
  // matching u_i -- w_{k-1-i}, constant pair sum k-1 (a non-edge sum)
  for (int i = 0; i < a; ++i) g.add_edge(i, m + (k - 1 - i));
  // the odd vertex, attached to w_k .. w_{3k-1}
  for (int j = k; j < m; ++j) g.add_edge(2 * m, m + j);
  return g;
}

// n = 6k+4: two complete bipartite graphs joined by two bipartite
// circulant overlays; degrees 2k+1 and 2k+2 only.
Graph h15_build_6k4(int k) {
  int half = 3 * k + 2;
  int a = (half + 1) / 2;
  int b = half - a;
  int n = 2 * half;
  // blocks: U0 = [0,a), U1 = [a, a+b), W0 = [half, half+b), W1 = [half+b, n)
  Graph g = empty_graph(n);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  for (int i = 0; i < b; ++i)
    for (int j = 0; j < a; ++j) g.add_edge(half + i, half + b + j);
  // B_{a, a-k} between U0 and W1
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < a; ++j)
      if ((i + j) % a < a - k) g.add_edge(i, half + b + j);
  // B_{b, 2k+1-a} between U1 and W0
  for (int i = 0; i < b; ++i)
    for (int j = 0; j < b; ++j)
      if ((i + j) % b < 2 * k + 1 - a) g.add_edge(a + i, half + j);
  return g;
}

}  // namespace

Graph h15_special(int n) {
  if (n < 4 || n > 31) throw std::invalid_argument("h15_special needs 4 <= n <= 31");
  if (n % 6 == 1) return h15_build_6k1((n - 1) / 6);
  if (n % 6 == 4) return h15_build_6k4((n - 4) / 6);
  throw std::invalid_argument("h15_special needs n = 1 or 4 mod 6");
}

long long h15_special_defect(int n) {
  if (n % 6 == 1) {
    long long k = (n - 1) / 6, a = k / 2;
    return (2 * k + 2 * a) * 2 * k + 2 * (k - a) * (2 * k - a);
  }
  if (n % 6 == 4) {
    long long k = (n - 4) / 6, a = (3 * k + 2 + 1) / 2;
    return 2 * a * (2 * k + 1) + 2 * (3 * k + 2 - a) * (2 * k + 1 - a);
  }
  throw std::invalid_argument("defect form only for n = 1 or 4 mod 6");
}

Graph h6_augmented(int n, int a) {
  if (a < 0 || a > n) throw std::invalid_argument("part size out of range");
  return multipartite({a, n - a});
}

H3Witness h3_witness(int n, double beta, double gamma) {
  if (n < 2 || n > kMaxVertices) throw std::invalid_argument("bad order");
  if (!(beta >= 0 && beta <= 1 && gamma >= 0 && gamma <= beta))
    throw std::invalid_argument("need 0 <= gamma <= beta <= 1");
  int nb = static_cast<int>(std::floor(beta * n));
  int degree = static_cast<int>(std::floor(gamma * n));
  if (degree >= nb) degree = std::max(0, nb - 1);
  RegularCirculant reg = regular_circulant(std::max(nb, 1), degree);
  H3Witness out;
  out.graph = disjoint_union(reg.graph, complete_graph(n - std::max(nb, 1)));
  out.regular_part_order = std::max(nb, 1);
  out.degree = reg.degree;
  out.degree_adjusted = reg.adjusted;
  return out;
}

Graph g_nx(int n, const std::vector<Rational>& x) {
  Rational sum = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < 0) throw std::invalid_argument("negative weight");
    if (i + 1 < x.size() && x[i] < x[i + 1])
      throw std::invalid_argument("weights must be nonincreasing");
    sum += x[i];
  }
  if (sum > 1) throw std::invalid_argument("weights exceed 1");

  std::vector<int> sizes;
  if (sum == 1) {
    // proportional partition, each part within 1 of x_i * n
    std::vector<Rational> frac;
    int used = 0;
    for (const Rational& xi : x) {
      Rational exact = xi * n;
      mpz_class fl = exact.get_num() / exact.get_den();
      sizes.push_back(static_cast<int>(fl.get_si()));
      frac.push_back(exact - Rational(fl));
      used += sizes.back();
    }
    std::vector<std::size_t> order(x.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return frac[a] > frac[b]; });
    for (std::size_t t = 0; used < n; ++t) {
      if (frac[order[t]] > 0) {
        ++sizes[order[t]];
        ++used;
      }
    }
  } else {
    int used = 0;
    for (const Rational& xi : x) {
      Rational exact = xi * n;
      if (exact >= 2) {
        mpz_class fl = exact.get_num() / exact.get_den();
        sizes.push_back(static_cast<int>(fl.get_si()));
        used += sizes.back();
      }
    }
    for (; used < n; ++used) sizes.push_back(1);  // universal singletons
  }
  return multipartite(sizes);
}

long long triangle_count(const Graph& g) {
  long long total = 0;
  for (int u = 0; u < g.n; ++u)
    for (int w = u + 1; w < g.n; ++w)
      if (g.adjacent(u, w))
        total += __builtin_popcount(g.adj[u] & g.adj[w] &
                                    ~((2u << w) - 1u));  // third vertex above w
  return total;
}

std::vector<int> degree_list(const Graph& g) {
  std::vector<int> degs(g.n);
  for (int u = 0; u < g.n; ++u) degs[u] = g.degree(u);
  return degs;
}

}  // namespace semind
