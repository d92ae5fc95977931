#include "semind/graph.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_set>

#include "semind/parallel.hpp"

namespace semind {

namespace {

int g_workers = 0;

void check_vertex(const Graph& g, int u) {
  if (u < 0 || u >= g.n) throw std::out_of_range("vertex index out of range");
}

}  // namespace

int worker_count() {
  if (g_workers > 0) return g_workers;
  if (const char* env = std::getenv("SEMIND_THREADS")) {
    int k = std::atoi(env);
    if (k > 0) return k;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

void set_worker_count(int k) { g_workers = k; }

long long Graph::edge_count() const {
  long long total = 0;
  for (int u = 0; u < n; ++u) total += degree(u);
  return total / 2;
}

void Graph::add_edge(int u, int w) {
  check_vertex(*this, u);
  check_vertex(*this, w);
  if (u == w) throw std::invalid_argument("self-loop");
  adj[u] |= 1u << w;
  adj[w] |= 1u << u;
}

void Graph::remove_edge(int u, int w) {
  check_vertex(*this, u);
  check_vertex(*this, w);
  adj[u] &= ~(1u << w);
  adj[w] &= ~(1u << u);
}

bool Graph::operator==(const Graph& o) const {
  if (n != o.n) return false;
  for (int u = 0; u < n; ++u)
    if (adj[u] != o.adj[u]) return false;
  return true;
}

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0 || n > kMaxVertices) throw std::invalid_argument("bad order");
  Graph g;
  g.n = n;
  for (auto [u, w] : edges) g.add_edge(u, w);
  return g;
}

Graph complete_graph(int n) {
  Graph g;
  g.n = n;
  std::uint32_t all = g.vertex_mask();
  for (int u = 0; u < n; ++u) g.adj[u] = all & ~(1u << u);
  return g;
}

Graph empty_graph(int n) {
  Graph g;
  g.n = n;
  return g;
}

Graph complement(const Graph& g) {
  Graph c;
  c.n = g.n;
  std::uint32_t all = g.vertex_mask();
  for (int u = 0; u < g.n; ++u) c.adj[u] = (all & ~g.adj[u]) & ~(1u << u);
  return c;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
  Graph s;
  s.n = static_cast<int>(verts.size());
  for (int a = 0; a < s.n; ++a)
    for (int b = a + 1; b < s.n; ++b)
      if (g.adjacent(verts[a], verts[b])) s.add_edge(a, b);
  return s;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  Graph r;
  r.n = g.n;
  for (int u = 0; u < g.n; ++u)
    for (int w = u + 1; w < g.n; ++w)
      if (g.adjacent(u, w)) r.add_edge(perm[u], perm[w]);
  return r;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  if (a.n + b.n > kMaxVertices) throw std::invalid_argument("union too large");
  Graph g = empty_graph(a.n + b.n);
  for (int u = 0; u < a.n; ++u)
    for (int w = u + 1; w < a.n; ++w)
      if (a.adjacent(u, w)) g.add_edge(u, w);
  for (int u = 0; u < b.n; ++u)
    for (int w = u + 1; w < b.n; ++w)
      if (b.adjacent(u, w)) g.add_edge(a.n + u, a.n + w);
  return g;
}

Graph flip_edge(const Graph& g, int u, int w) {
  check_vertex(g, u);
  check_vertex(g, w);
  if (u == w) throw std::invalid_argument("flip needs distinct vertices");
  Graph r = g;
  r.adj[u] ^= 1u << w;
  r.adj[w] ^= 1u << u;
  return r;
}

Graph clone_onto(const Graph& g, int u, int w) {
  check_vertex(g, u);
  check_vertex(g, w);
  if (u == w) throw std::invalid_argument("clone needs distinct vertices");
  Graph r = g;
  std::uint32_t nb = g.adj[u] & ~(1u << w);
  for (int v = 0; v < g.n; ++v) r.adj[v] &= ~(1u << w);
  r.adj[w] = nb;
  for (int v = 0; v < g.n; ++v)
    if ((nb >> v) & 1u) r.adj[v] |= 1u << w;
  return r;
}

std::string to_graph6(const Graph& g) {
  if (g.n > 62) throw std::invalid_argument("graph6 supports n <= 62 here");
  std::string out;
  out.push_back(static_cast<char>(63 + g.n));
  int bitpos = 0;
  char cur = 0;
  for (int j = 1; j < g.n; ++j) {
    for (int i = 0; i < j; ++i) {
      cur = static_cast<char>(cur << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bitpos == 6) {
        out.push_back(static_cast<char>(63 + cur));
        bitpos = 0;
        cur = 0;
      }
    }
  }
  if (bitpos > 0) {
    cur = static_cast<char>(cur << (6 - bitpos));
    out.push_back(static_cast<char>(63 + cur));
  }
  return out;
}

Graph from_graph6(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty graph6 string");
  int n = s[0] - 63;
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("graph6 order out of supported range");
  Graph g = empty_graph(n);
  std::size_t pos = 1;
  int bitpos = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (pos >= s.size()) throw std::invalid_argument("graph6 string truncated");
      int byte = s[pos] - 63;
      if (byte < 0 || byte > 63) throw std::invalid_argument("bad graph6 byte");
      int bit = (byte >> (5 - bitpos)) & 1;
      if (bit) g.add_edge(i, j);
      if (++bitpos == 6) {
        bitpos = 0;
        ++pos;
      }
    }
  }
  return g;
}

namespace {

struct Partial {
  std::array<std::uint8_t, kMaxVertices> perm;  // position -> original vertex
  std::uint32_t used = 0;
};

// True when swapping u and w is an automorphism, so only one of them needs
// to be tried as the next placed vertex.
bool interchangeable(const Graph& g, int u, int w) {
  std::uint32_t drop = (1u << u) | (1u << w);
  return ((g.adj[u] ^ g.adj[w]) & ~drop) == 0;
}

}  // namespace

CanonicalKey canonical_form(const Graph& g, std::vector<int>* perm_out) {
  if (g.n == 0) {
    CanonicalKey key{g, to_graph6(g)};
    if (perm_out) perm_out->clear();
    return key;
  }

  // Keep every partial labeling realizing the lexicographically least
  // column bitstring seen so far; ties are what make this exhaustive.
  std::vector<Partial> frontier(1);
  std::vector<std::uint32_t> best_cols(g.n, 0);
  std::vector<Partial> next;
  std::vector<std::pair<std::uint32_t, Partial>> scored;

  for (int level = 0; level < g.n; ++level) {
    scored.clear();
    std::uint32_t best = 0xffffffffu;
    for (const Partial& p : frontier) {
      for (int u = 0; u < g.n; ++u) {
        if ((p.used >> u) & 1u) continue;
        bool skip = false;
        for (int v = 0; v < u && !skip; ++v)
          if (!((p.used >> v) & 1u) && interchangeable(g, v, u)) skip = true;
        if (skip) continue;
        std::uint32_t col = 0;
        for (int i = 0; i < level; ++i)
          col |= static_cast<std::uint32_t>(g.adjacent(u, p.perm[i])) << i;
        if (col > best) continue;
        if (col < best) {
          best = col;
          scored.clear();
        }
        Partial q = p;
        q.perm[level] = static_cast<std::uint8_t>(u);
        q.used |= 1u << u;
        scored.emplace_back(col, q);
      }
    }
    best_cols[level] = best;
    next.clear();
    next.reserve(scored.size());
    for (auto& [col, q] : scored) next.push_back(q);
    frontier.swap(next);
  }

  const Partial& winner = frontier.front();
  std::vector<int> old_to_new(g.n);
  for (int pos = 0; pos < g.n; ++pos) old_to_new[winner.perm[pos]] = pos;
  Graph canon = relabel(g, old_to_new);
  if (perm_out) *perm_out = old_to_new;
  return CanonicalKey{canon, to_graph6(canon)};
}

namespace {
std::mutex g_enum_mutex;
std::map<int, std::vector<Graph>> g_enum_cache;
}  // namespace

std::vector<Graph> enumerate_graphs(int n, int cap) {
  if (n < 0) throw std::invalid_argument("negative order");
  if (n > cap) throw std::invalid_argument("enumeration order above cap");
  if (n == 0) return {empty_graph(0)};
  std::vector<std::string> level = {to_graph6(empty_graph(1))};
  int start = 2;
  {
    std::lock_guard<std::mutex> lock(g_enum_mutex);
    auto it = g_enum_cache.find(n);
    if (it != g_enum_cache.end()) return it->second;
    for (int k = n - 1; k >= 2; --k) {
      auto lower = g_enum_cache.find(k);
      if (lower == g_enum_cache.end()) continue;
      level.clear();
      for (const Graph& g : lower->second) level.push_back(to_graph6(g));
      start = k + 1;
      break;
    }
  }
  for (int k = start; k <= n; ++k) {
    std::vector<Graph> parents;
    parents.reserve(level.size());
    for (const auto& s : level) parents.push_back(from_graph6(s));

    std::uint32_t attachments = 1u << (k - 1);
    auto locals = parallel_chunks<std::unordered_set<std::string>>(
        parents.size(), [&](std::size_t begin, std::size_t end) {
          std::unordered_set<std::string> seen;
          for (std::size_t idx = begin; idx < end; ++idx) {
            Graph child = parents[idx];
            child.n = k;
            for (std::uint32_t mask = 0; mask < attachments; ++mask) {
              child.adj[k - 1] = mask;
              for (int v = 0; v < k - 1; ++v) {
                if ((mask >> v) & 1u)
                  child.adj[v] |= 1u << (k - 1);
                else
                  child.adj[v] &= ~(1u << (k - 1));
              }
              seen.insert(canonical_form(child).g6);
            }
          }
          return seen;
        });

    std::unordered_set<std::string> merged;
    for (auto& s : locals) merged.merge(s);
    level.assign(merged.begin(), merged.end());
    std::sort(level.begin(), level.end());
  }

  std::vector<Graph> out;
  out.reserve(level.size());
  for (const auto& s : level) out.push_back(from_graph6(s));
  {
    std::lock_guard<std::mutex> lock(g_enum_mutex);
    g_enum_cache.emplace(n, out);
  }
  return out;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

long long falling_power(long long n, int k) {
  long long r = 1;
  for (int i = 0; i < k; ++i) r *= n - i;
  return r;
}

namespace {

// bits of the upper triangle of the subgraph induced by verts, in the same
// column-major order graph6 uses; used as an index into a classify table.
std::uint32_t subset_bits(const Graph& g, const int* verts, int kappa) {
  std::uint32_t bits = 0;
  int pos = 0;
  for (int j = 1; j < kappa; ++j)
    for (int i = 0; i < j; ++i)
      bits |= static_cast<std::uint32_t>(g.adjacent(verts[i], verts[j])) << pos++;
  return bits;
}

Graph graph_from_bits(std::uint32_t bits, int kappa) {
  Graph g = empty_graph(kappa);
  int pos = 0;
  for (int j = 1; j < kappa; ++j)
    for (int i = 0; i < j; ++i)
      if ((bits >> pos++) & 1u) g.add_edge(i, j);
  return g;
}

std::mutex g_classify_mutex;
std::map<int, std::vector<int>> g_classify_tables;

}  // namespace

// classify_table(kappa)[bits] = index of the isomorphism class in
// enumerate_graphs(kappa). Shared by the density counters.
const std::vector<int>& classify_table(int kappa, const std::vector<Graph>& classes) {
  std::lock_guard<std::mutex> lock(g_classify_mutex);
  auto it = g_classify_tables.find(kappa);
  if (it != g_classify_tables.end()) return it->second;

  std::map<std::string, int> index;
  for (std::size_t i = 0; i < classes.size(); ++i)
    index[to_graph6(classes[i])] = static_cast<int>(i);

  int pairs = kappa * (kappa - 1) / 2;
  std::vector<int> table(1u << pairs);
  for (std::uint32_t bits = 0; bits < table.size(); ++bits)
    table[bits] = index.at(canonical_form(graph_from_bits(bits, kappa)).g6);
  return g_classify_tables.emplace(kappa, std::move(table)).first->second;
}

std::vector<long long> induced_counts_by_class(const Graph& g, int kappa,
                                               const std::vector<Graph>& classes) {
  if (kappa > g.n) throw std::invalid_argument("pattern larger than host");
  const std::vector<int>& table = classify_table(kappa, classes);
  std::vector<long long> counts(classes.size(), 0);

  int verts[8];
  for (int i = 0; i < kappa; ++i) verts[i] = i;
  while (true) {
    ++counts[table[subset_bits(g, verts, kappa)]];
    int i = kappa - 1;
    while (i >= 0 && verts[i] == g.n - kappa + i) --i;
    if (i < 0) break;
    ++verts[i];
    for (int j = i + 1; j < kappa; ++j) verts[j] = verts[j - 1] + 1;
  }
  return counts;
}

long long induced_count(const Graph& f, const Graph& g) {
  if (f.n > g.n) throw std::invalid_argument("pattern larger than host");
  if (f.n > 8) throw std::invalid_argument("induced_count pattern cap is 8");
  auto classes = enumerate_graphs(f.n, 9);
  auto counts = induced_counts_by_class(g, f.n, classes);
  std::string key = canonical_form(f).g6;
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (to_graph6(classes[i]) == key) return counts[i];
  throw std::logic_error("pattern class not found");
}

Rational induced_density(const Graph& f, const Graph& g) {
  return rat_i64(induced_count(f, g), binomial(g.n, f.n));
}

std::optional<std::vector<std::vector<int>>> complete_multipartite_parts(const Graph& g) {
  std::uint32_t all = g.vertex_mask();
  std::vector<std::vector<int>> parts;
  std::uint32_t assigned = 0;
  for (int u = 0; u < g.n; ++u) {
    if ((assigned >> u) & 1u) continue;
    std::uint32_t part = all & ~g.adj[u];  // u plus its non-neighbours
    for (int w = 0; w < g.n; ++w)
      if ((part >> w) & 1u && (all & ~g.adj[w]) != part) return std::nullopt;
    std::vector<int> members;
    for (int w = 0; w < g.n; ++w)
      if ((part >> w) & 1u) members.push_back(w);
    parts.push_back(std::move(members));
    assigned |= part;
  }
  std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  return parts;
}

std::vector<int> part_sizes(const std::vector<std::vector<int>>& parts) {
  std::vector<int> sizes;
  sizes.reserve(parts.size());
  for (const auto& p : parts) sizes.push_back(static_cast<int>(p.size()));
  return sizes;
}

}  // namespace semind
