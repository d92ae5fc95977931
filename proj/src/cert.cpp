#include "semind/cert.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "json.hpp"

namespace semind {

Flag make_flag(const Graph& g, const std::vector<int>& roots) {
  std::uint32_t seen = 0;
  for (int r : roots) {
    if (r < 0 || r >= g.n) throw std::invalid_argument("root out of range");
    if ((seen >> r) & 1u) throw std::invalid_argument("roots must be distinct");
    seen |= 1u << r;
  }
  return Flag{g, roots};
}

Graph flag_type(const Flag& f) {
  return induced_subgraph(f.graph, f.roots);
}

Flag normalize_flag(const Flag& f) {
  const int t = static_cast<int>(f.roots.size());
  std::vector<int> old_to_new(f.graph.n, -1);
  for (int i = 0; i < t; ++i) old_to_new[f.roots[i]] = i;
  int next = t;
  for (int v = 0; v < f.graph.n; ++v)
    if (old_to_new[v] < 0) old_to_new[v] = next++;
  Flag out;
  out.graph = relabel(f.graph, old_to_new);
  out.roots.resize(t);
  std::iota(out.roots.begin(), out.roots.end(), 0);
  return out;
}

std::string flag_key(const Flag& f) {
  Flag norm = normalize_flag(f);
  const int n = norm.graph.n;
  const int t = static_cast<int>(norm.roots.size());
  // minimize over permutations of the non-root vertices only
  std::vector<int> tail(n - t);
  std::iota(tail.begin(), tail.end(), t);
  std::string best;
  do {
    std::vector<int> old_to_new(n);
    for (int i = 0; i < t; ++i) old_to_new[i] = i;
    for (int pos = 0; pos < n - t; ++pos) old_to_new[tail[pos]] = t + pos;
    std::string g6 = to_graph6(relabel(norm.graph, old_to_new));
    if (best.empty() || g6 < best) best = g6;
  } while (std::next_permutation(tail.begin(), tail.end()));
  return best + "|" + std::to_string(t);
}

std::vector<Flag> enumerate_flags(const Graph& sigma, int k) {
  const int t = sigma.n;
  if (k < t) throw std::invalid_argument("flag size below type size");
  if (k > 4) throw std::invalid_argument("flag size cap is 4");
  int extra = k - t;
  int bits = t * extra + extra * (extra - 1) / 2;
  std::map<std::string, Flag> seen;
  for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
    Graph g = empty_graph(k);
    for (int u = 0; u < t; ++u)
      for (int w = u + 1; w < t; ++w)
        if (sigma.adjacent(u, w)) g.add_edge(u, w);
    int pos = 0;
    for (int e = 0; e < extra; ++e)
      for (int r = 0; r < t; ++r)
        if ((mask >> pos++) & 1u) g.add_edge(t + e, r);
    for (int e = 0; e < extra; ++e)
      for (int e2 = e + 1; e2 < extra; ++e2)
        if ((mask >> pos++) & 1u) g.add_edge(t + e, t + e2);
    std::vector<int> roots(t);
    std::iota(roots.begin(), roots.end(), 0);
    Flag f{g, roots};
    seen.emplace(flag_key(f), f);
  }
  std::vector<Flag> out;
  out.reserve(seen.size());
  for (auto& [key, f] : seen) out.push_back(f);
  return out;
}

namespace {

bool theta_induces_type(const Graph& F, const Graph& sigma,
                        const std::vector<int>& theta) {
  for (int i = 0; i < sigma.n; ++i)
    for (int j = i + 1; j < sigma.n; ++j)
      if (F.adjacent(theta[i], theta[j]) != sigma.adjacent(i, j)) return false;
  return true;
}

std::string side_key(const Graph& F, const std::vector<int>& theta,
                     const std::vector<int>& side) {
  std::vector<int> verts = theta;
  verts.insert(verts.end(), side.begin(), side.end());
  Graph g = induced_subgraph(F, verts);
  std::vector<int> roots(theta.size());
  std::iota(roots.begin(), roots.end(), 0);
  return flag_key(Flag{g, roots});
}

}  // namespace

Rational pair_density_coeff(const Flag& f1, const Flag& f2, const Graph& F) {
  const int t = static_cast<int>(f1.roots.size());
  if (static_cast<int>(f2.roots.size()) != t)
    throw std::invalid_argument("flags have different type sizes");
  Graph sigma = flag_type(f1);
  if (!(flag_type(f2) == sigma))
    throw std::invalid_argument("flags have different types");
  const int k1 = f1.graph.n, k2 = f2.graph.n;
  if (F.n != k1 + k2 - t)
    throw std::invalid_argument("host order must be k1 + k2 - t");

  const std::string key1 = flag_key(f1);
  const std::string key2 = flag_key(f2);
  const int n = F.n;

  long long hits = 0;
  // ordered injections theta: [t] -> V(F)
  std::vector<int> theta(t);
  std::vector<bool> used(n, false);

  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == t) {
      if (!theta_induces_type(F, sigma, theta)) return;
      std::vector<int> rest;
      for (int v = 0; v < n; ++v)
        if (!used[v]) rest.push_back(v);
      const int na = k1 - t;
      const int nrest = static_cast<int>(rest.size());
      // all subsets A of `rest` of size na, B the complement
      std::vector<int> idx(na);
      std::iota(idx.begin(), idx.end(), 0);
      while (true) {
        std::vector<int> A, B;
        std::size_t p = 0;
        for (int v = 0; v < nrest; ++v) {
          if (p < idx.size() && idx[p] == v) {
            A.push_back(rest[v]);
            ++p;
          } else {
            B.push_back(rest[v]);
          }
        }
        if (side_key(F, theta, A) == key1 && side_key(F, theta, B) == key2)
          ++hits;
        int i = na - 1;
        while (i >= 0 && idx[i] == nrest - na + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < na; ++j) idx[j] = idx[j - 1] + 1;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      theta[depth] = v;
      self(self, depth + 1);
      used[v] = false;
    }
  };
  rec(rec, 0);

  long long denom = falling_power(n, t) * binomial(n - t, k1 - t);
  return rat_i64(hits, denom);
}

std::vector<Rational> expand_block(const CertBlock& block,
                                   const std::vector<Graph>& classes) {
  const std::size_t d = block.flags.size();
  if (block.Q.size() != d)
    throw std::invalid_argument("Q dimension does not match the flag basis");
  for (const auto& row : block.Q)
    if (row.size() != d) throw std::invalid_argument("Q is not square");

  std::vector<Rational> out;
  out.reserve(classes.size());
  for (const Graph& F : classes) {
    Rational total = 0;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        if (block.Q[i][j] == 0) continue;
        total += block.Q[i][j] *
                 pair_density_coeff(block.flags[i], block.flags[j], F);
      }
    out.push_back(total);
  }
  return out;
}

PsdResult check_psd(const std::vector<std::vector<Rational>>& Q) {
  const int d = static_cast<int>(Q.size());
  for (int i = 0; i < d; ++i) {
    if (static_cast<int>(Q[i].size()) != d)
      throw std::invalid_argument("matrix is not square");
    for (int j = 0; j < d; ++j)
      if (Q[i][j] != Q[j][i])
        throw std::invalid_argument("matrix is not symmetric");
  }

  PsdResult result;
  std::vector<std::vector<Rational>> S = Q;
  // rows of M are the residual directions: S[i][j] = M_i Q M_j^T
  std::vector<std::vector<Rational>> M(d, std::vector<Rational>(d, 0));
  for (int i = 0; i < d; ++i) M[i][i] = 1;
  std::vector<bool> done(d, false);

  for (int step = 0; step < d; ++step) {
    int pivot = -1;
    for (int i = 0; i < d; ++i) {
      if (done[i] || S[i][i] <= 0) continue;
      if (pivot < 0 || S[i][i] > S[pivot][pivot]) pivot = i;
    }
    if (pivot < 0) break;
    result.pivots.push_back(S[pivot][pivot]);
    done[pivot] = true;
    std::vector<Rational> col(d);
    for (int i = 0; i < d; ++i) col[i] = S[i][pivot];
    for (int i = 0; i < d; ++i) {
      if (done[i] || col[i] == 0) continue;
      Rational c = col[i] / col[pivot];
      for (int j = 0; j < d; ++j) {
        if (!done[j]) S[i][j] -= c * col[j];
        M[i][j] -= c * M[pivot][j];
      }
      S[i][pivot] = 0;
      S[pivot][i] = 0;
    }
  }

  // whatever remains must be identically zero
  for (int i = 0; i < d; ++i) {
    if (done[i]) continue;
    if (S[i][i] < 0) {
      result.witness = M[i];
      result.witness_value = S[i][i];
      return result;
    }
  }
  for (int i = 0; i < d; ++i) {
    if (done[i]) continue;
    for (int j = 0; j < d; ++j) {
      if (done[j] || j == i) continue;
      if (S[i][j] != 0) {
        // diagonal is zero here, so v = m_i - sign * m_j dips negative
        int sign = S[i][j] > 0 ? 1 : -1;
        result.witness.resize(d);
        for (int c = 0; c < d; ++c)
          result.witness[c] = M[i][c] - Rational(sign) * M[j][c];
        result.witness_value = -2 * Rational(sign) * S[i][j];
        return result;
      }
    }
  }
  result.psd = true;
  return result;
}

namespace {

const GammaFunction& resolve_gamma(const Certificate& cert,
                                   std::optional<GammaFunction>& storage) {
  if (cert.gamma_map) return *cert.gamma_map;
  if (!cert.h_index)
    throw std::invalid_argument("certificate carries neither gamma nor h_index");
  storage = gamma_from_h(builtin_h(*cert.h_index));
  return *storage;
}

}  // namespace

VerifyReport verify_certificate(const Certificate& cert) {
  if (cert.N > 5)
    throw std::invalid_argument(
        "certificates with N > 5 are out of verification scope");
  std::optional<GammaFunction> storage;
  const GammaFunction& gamma = resolve_gamma(cert, storage);
  if (gamma.kappa > cert.N)
    throw std::invalid_argument("gamma order exceeds certificate N");

  VerifyReport report;
  report.pass = true;

  for (const CertBlock& block : cert.blocks) {
    const int t = block.sigma.n;
    if (block.flags.empty())
      throw std::invalid_argument("block with empty flag basis");
    int k = block.flags.front().graph.n;
    for (const Flag& f : block.flags) {
      if (f.graph.n != k)
        throw std::invalid_argument("mixed flag sizes in one block");
      if (!(flag_type(f) == block.sigma))
        throw std::invalid_argument("flag type does not match block sigma");
    }
    if (2 * k - t != cert.N)
      throw std::invalid_argument("block size 2k - t does not match N");
    report.block_psd.push_back(check_psd(block.Q));
    if (!report.block_psd.back().psd) {
      report.pass = false;
      report.violations.push_back("block matrix is not PSD");
    }
  }

  std::vector<Graph> all = enumerate_graphs(cert.N);
  std::vector<Graph> classes;
  for (const Graph& f : all) {
    if (cert.theory == CertTheory::CompletePartite &&
        !complete_multipartite_parts(f))
      continue;
    classes.push_back(f);
  }

  std::vector<std::vector<Rational>> expansions;
  for (const CertBlock& block : cert.blocks)
    expansions.push_back(expand_block(block, classes));

  for (std::size_t c = 0; c < classes.size(); ++c) {
    const Graph& F = classes[c];
    Rational residual = cert.u - lambda_gamma(gamma, F);
    for (const auto& exp : expansions) residual -= exp[c];
    std::string key = to_graph6(F);
    report.class_keys.push_back(key);
    report.residuals.push_back(residual);
    auto it = cert.slacks.find(key);
    if (it == cert.slacks.end()) {
      report.pass = false;
      report.violations.push_back("missing slack for class " + key);
      continue;
    }
    if (it->second != residual) {
      report.pass = false;
      report.violations.push_back("slack mismatch at class " + key +
                                  ": listed " + rat_str(it->second) +
                                  ", derived " + rat_str(residual));
    }
    if (it->second < 0) {
      report.pass = false;
      report.violations.push_back("negative slack at class " + key + ": " +
                                  rat_str(it->second));
    }
  }
  return report;
}

Certificate make_h11_certificate() {
  Certificate cert;
  cert.u = Rational(1, 8);
  cert.N = 4;
  cert.theory = CertTheory::All;
  cert.h_index = 11;

  Graph edge = make_graph(2, {{0, 1}});
  Graph nonedge = empty_graph(2);

  CertBlock degree_block;
  degree_block.sigma = edge;
  degree_block.flags = {
      make_flag(make_graph(3, {{0, 1}, {0, 2}}), {0, 1}),  // pendant at root 0
      make_flag(make_graph(3, {{0, 1}, {1, 2}}), {0, 1}),  // pendant at root 1
  };
  Rational a(3, 8);
  degree_block.Q = {{a, -a}, {-a, a}};

  CertBlock codegree_block;
  codegree_block.sigma = nonedge;
  codegree_block.flags = {
      make_flag(make_graph(3, {{0, 2}, {1, 2}}), {0, 1}),  // common neighbour
      make_flag(empty_graph(3), {0, 1}),                   // common non-neighbour
  };
  Rational b(1, 8);
  codegree_block.Q = {{b, -b}, {-b, b}};

  cert.blocks = {degree_block, codegree_block};

  // derive the slacks so the identity is tight by construction
  GammaFunction gamma = gamma_from_h(builtin_h(11));
  std::vector<Graph> classes = enumerate_graphs(4);
  std::vector<std::vector<Rational>> expansions;
  for (const CertBlock& block : cert.blocks)
    expansions.push_back(expand_block(block, classes));
  for (std::size_t c = 0; c < classes.size(); ++c) {
    Rational residual = cert.u - lambda_gamma(gamma, classes[c]);
    for (const auto& exp : expansions) residual -= exp[c];
    cert.slacks[to_graph6(classes[c])] = residual;
  }
  return cert;
}

std::string theory_name(CertTheory t) {
  return t == CertTheory::All ? "all" : "complete-partite";
}

CertTheory parse_theory(const std::string& name) {
  if (name == "all") return CertTheory::All;
  if (name == "complete-partite" || name == "complete_partite")
    return CertTheory::CompletePartite;
  throw std::invalid_argument("unknown theory: " + name);
}

namespace {

nlohmann::json flag_to_json(const Flag& f) {
  return {{"g6", to_graph6(f.graph)}, {"roots", f.roots}};
}

Flag flag_from_json(const nlohmann::json& j) {
  return make_flag(from_graph6(j.at("g6").get<std::string>()),
                   j.at("roots").get<std::vector<int>>());
}

}  // namespace

std::string certificate_to_json(const Certificate& cert) {
  nlohmann::json j;
  j["u"] = rat_str(cert.u);
  j["N"] = cert.N;
  j["theory"] = theory_name(cert.theory);
  j["h_index"] = cert.h_index ? nlohmann::json(*cert.h_index)
                              : nlohmann::json(nullptr);
  if (cert.gamma_map) {
    nlohmann::json g;
    for (std::size_t i = 0; i < cert.gamma_map->classes.size(); ++i)
      g[to_graph6(cert.gamma_map->classes[i])] =
          rat_str(cert.gamma_map->values[i]);
    j["gamma"] = g;
  } else {
    j["gamma"] = nullptr;
  }
  j["blocks"] = nlohmann::json::array();
  for (const CertBlock& block : cert.blocks) {
    nlohmann::json b;
    std::vector<int> roots(block.sigma.n);
    std::iota(roots.begin(), roots.end(), 0);
    b["sigma"] = {{"g6", to_graph6(block.sigma)}, {"roots", roots}};
    b["flags"] = nlohmann::json::array();
    for (const Flag& f : block.flags) b["flags"].push_back(flag_to_json(f));
    b["Q"] = nlohmann::json::array();
    for (const auto& row : block.Q) {
      nlohmann::json r = nlohmann::json::array();
      for (const Rational& v : row) r.push_back(rat_str(v));
      b["Q"].push_back(r);
    }
    j["blocks"].push_back(b);
  }
  nlohmann::json s;
  for (const auto& [key, val] : cert.slacks) s[key] = rat_str(val);
  j["slacks"] = s;
  return j.dump(2);
}

Certificate certificate_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Certificate cert;
  cert.u = parse_rational(j.at("u").get<std::string>());
  cert.N = j.at("N").get<int>();
  cert.theory = parse_theory(j.at("theory").get<std::string>());
  if (!j.at("h_index").is_null()) cert.h_index = j["h_index"].get<int>();
  if (!j.at("gamma").is_null()) {
    int kappa = 0;
    std::map<std::string, Rational> table;
    for (auto it = j["gamma"].begin(); it != j["gamma"].end(); ++it) {
      Graph f = from_graph6(it.key());
      kappa = f.n;
      table[canonical_form(f).g6] = parse_rational(it.value().get<std::string>());
    }
    std::vector<Graph> classes = enumerate_graphs(kappa);
    std::vector<Rational> values;
    for (const Graph& f : classes) {
      auto it = table.find(to_graph6(f));
      if (it == table.end())
        throw std::invalid_argument("gamma table is missing a class");
      values.push_back(it->second);
    }
    cert.gamma_map = make_gamma(kappa, values);
  }
  for (const auto& b : j.at("blocks")) {
    CertBlock block;
    block.sigma = from_graph6(b.at("sigma").at("g6").get<std::string>());
    for (const auto& f : b.at("flags")) block.flags.push_back(flag_from_json(f));
    for (const auto& row : b.at("Q")) {
      std::vector<Rational> r;
      for (const auto& v : row) r.push_back(parse_rational(v.get<std::string>()));
      block.Q.push_back(r);
    }
    cert.blocks.push_back(block);
  }
  for (auto it = j.at("slacks").begin(); it != j.at("slacks").end(); ++it)
    cert.slacks[it.key()] = parse_rational(it.value().get<std::string>());
  return cert;
}

}  // namespace semind
