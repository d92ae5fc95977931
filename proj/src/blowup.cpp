#include "semind/blowup.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "semind/parallel.hpp"
#include "semind/rng.hpp"

namespace semind {

namespace {

// blue edges may collapse to one part; red edges need a base edge
bool hom_ok(const TwoColoredGraph& h, const Graph& base,
            const std::array<std::int8_t, 8>& f) {
  for (int u = 0; u < h.kappa; ++u)
    for (int w = u + 1; w < h.kappa; ++w) {
      if (h.red_edge(u, w) && !base.adjacent(f[u], f[w])) return false;
      if (h.blue_edge(u, w) && f[u] != f[w] && base.adjacent(f[u], f[w]))
        return false;
    }
  return true;
}

}  // namespace

HomSet homomorphisms(const TwoColoredGraph& h, const Graph& base) {
  if (h.kappa > 8) throw std::invalid_argument("pattern order cap is 8");
  HomSet hs;
  hs.kappa = h.kappa;
  hs.m = base.n;
  if (base.n == 0) return hs;
  std::array<std::int8_t, 8> f{};
  while (true) {
    if (hom_ok(h, base, f)) hs.maps.push_back(f);
    int i = 0;
    while (i < h.kappa && ++f[i] == base.n) f[i++] = 0;
    if (i == h.kappa) break;
  }
  return hs;
}

Rational blowup_density(const TwoColoredGraph& h, const WeightedBase& wb) {
  if (static_cast<int>(wb.x.size()) != wb.base.n)
    throw std::invalid_argument("weight vector size mismatch");
  HomSet hs = homomorphisms(h, wb.base);
  Rational total = 0;
  for (const auto& f : hs.maps) {
    Rational term = 1;
    for (int i = 0; i < hs.kappa; ++i) term *= wb.x[f[i]];
    total += term;
  }
  return total;
}

double blowup_density(const HomSet& hs, const std::vector<double>& x) {
  double total = 0;
  for (const auto& f : hs.maps) {
    double term = 1;
    for (int i = 0; i < hs.kappa; ++i) term *= x[f[i]];
    total += term;
  }
  return total;
}

double blowup_density(const TwoColoredGraph& h, const Graph& base,
                      const std::vector<double>& x) {
  return blowup_density(homomorphisms(h, base), x);
}

Graph blowup_graph(const Graph& base, const std::vector<int>& sizes) {
  if (static_cast<int>(sizes.size()) != base.n)
    throw std::invalid_argument("sizes must match base order");
  int total = std::accumulate(sizes.begin(), sizes.end(), 0);
  if (total > kMaxVertices) throw std::invalid_argument("blow-up too large");
  std::vector<int> part_of;
  for (int i = 0; i < base.n; ++i)
    for (int c = 0; c < sizes[i]; ++c) part_of.push_back(i);
  Graph g = empty_graph(total);
  for (int a = 0; a < total; ++a)
    for (int b = a + 1; b < total; ++b)
      if (base.adjacent(part_of[a], part_of[b])) g.add_edge(a, b);
  return g;
}

namespace {

void gradient(const HomSet& hs, const std::vector<double>& x,
              std::vector<double>& grad) {
  std::fill(grad.begin(), grad.end(), 0.0);
  for (const auto& f : hs.maps) {
    for (int i = 0; i < hs.kappa; ++i) {
      double term = 1;
      for (int l = 0; l < hs.kappa; ++l)
        if (l != i) term *= x[f[l]];
      grad[f[i]] += term;
    }
  }
}

std::vector<double> project_simplex(std::vector<double> v) {
  std::vector<double> u = v;
  std::sort(u.begin(), u.end(), std::greater<>());
  double cum = 0, theta = 0;
  int rho = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    cum += u[i];
    double t = (cum - 1.0) / static_cast<double>(i + 1);
    if (u[i] - t > 0) {
      rho = static_cast<int>(i + 1);
      theta = t;
    }
  }
  (void)rho;
  for (double& vi : v) vi = std::max(0.0, vi - theta);
  return v;
}

double gp_norm(const HomSet& hs, const std::vector<double>& x) {
  std::vector<double> g(x.size());
  gradient(hs, x, g);
  std::vector<double> step(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) step[i] = x[i] + g[i];
  std::vector<double> proj = project_simplex(step);
  double norm = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double d = proj[i] - x[i];
    norm += d * d;
  }
  return std::sqrt(norm);
}

// Equalize the gradient over the support (KKT system for the simplex);
// quadratic convergence once projected gradient has located the support.
bool kkt_polish(const HomSet& hs, std::vector<double>& x, double tol) {
  const int m = static_cast<int>(x.size());
  for (int iter = 0; iter < 60; ++iter) {
    std::vector<int> support;
    for (int i = 0; i < m; ++i)
      if (x[i] > 1e-11) support.push_back(i);
    int s = static_cast<int>(support.size());
    if (s == 0) return false;

    std::vector<double> grad(m);
    gradient(hs, x, grad);

    // Hessian restricted to the support
    std::vector<std::vector<double>> hess(s, std::vector<double>(s, 0.0));
    for (const auto& f : hs.maps) {
      for (int i = 0; i < hs.kappa; ++i)
        for (int j = 0; j < hs.kappa; ++j) {
          if (i == j) continue;
          double term = 1;
          for (int l = 0; l < hs.kappa; ++l)
            if (l != i && l != j) term *= x[f[l]];
          int a = -1, b = -1;
          for (int t = 0; t < s; ++t) {
            if (support[t] == f[i]) a = t;
            if (support[t] == f[j]) b = t;
          }
          if (a >= 0 && b >= 0) hess[a][b] += term;
        }
    }

    // Newton step for grad_i = mu on the support, sum x = 1:
    // [H  -1; 1^T 0] [dx; dmu] = [-grad_support; 0]
    int dim = s + 1;
    std::vector<std::vector<double>> mat(dim, std::vector<double>(dim, 0.0));
    std::vector<double> rhs(dim, 0.0);
    for (int a = 0; a < s; ++a) {
      for (int b = 0; b < s; ++b) mat[a][b] = hess[a][b];
      mat[a][s] = -1.0;
      mat[s][a] = 1.0;
      rhs[a] = -grad[support[a]];
    }
    // gaussian elimination with partial pivoting
    for (int col = 0; col < dim; ++col) {
      int piv = col;
      for (int r = col + 1; r < dim; ++r)
        if (std::fabs(mat[r][col]) > std::fabs(mat[piv][col])) piv = r;
      if (std::fabs(mat[piv][col]) < 1e-14) return false;
      std::swap(mat[col], mat[piv]);
      std::swap(rhs[col], rhs[piv]);
      for (int r = 0; r < dim; ++r) {
        if (r == col) continue;
        double fac = mat[r][col] / mat[col][col];
        for (int c = col; c < dim; ++c) mat[r][c] -= fac * mat[col][c];
        rhs[r] -= fac * rhs[col];
      }
    }
    double step_norm = 0;
    for (int a = 0; a < s; ++a) {
      double dx = rhs[a] / mat[a][a];
      x[support[a]] += dx;
      step_norm += dx * dx;
    }
    for (int i = 0; i < m; ++i)
      if (x[i] < 0) return false;  // support guess was wrong; let PG resume
    if (std::sqrt(step_norm) < 1e-14) break;
  }
  return gp_norm(hs, x) < tol;
}

struct LocalBest {
  std::vector<double> x;
  double value = -1;
  double residual = 1;
  bool converged = false;
};

LocalBest ascend(const HomSet& hs, std::vector<double> x, double tol) {
  const int m = static_cast<int>(x.size());
  std::vector<double> grad(m), trial(m);
  double value = blowup_density(hs, x);
  for (int iter = 0; iter < 4000; ++iter) {
    gradient(hs, x, grad);
    double step = 1.0;
    bool moved = false;
    while (step > 1e-16) {
      for (int i = 0; i < m; ++i) trial[i] = x[i] + step * grad[i];
      std::vector<double> proj = project_simplex(trial);
      double v = blowup_density(hs, proj);
      if (v > value + 1e-18) {
        x = proj;
        value = v;
        moved = true;
        break;
      }
      step *= 0.5;
    }
    if (!moved) break;
    if (gp_norm(hs, x) < 1e-9) break;  // close enough to hand to Newton
  }
  LocalBest out;
  out.converged = kkt_polish(hs, x, tol);
  out.x = x;
  out.value = blowup_density(hs, x);
  out.residual = gp_norm(hs, x);
  return out;
}

void grid_starts(int m, int ticks, std::vector<std::vector<double>>& starts) {
  std::vector<int> comp(m, 0);
  comp[0] = ticks;
  while (true) {
    std::vector<double> x(m);
    for (int i = 0; i < m; ++i) x[i] = static_cast<double>(comp[i]) / ticks;
    starts.push_back(x);
    // next composition of `ticks` into m parts
    int i = m - 2;
    while (i >= 0 && comp[i] == 0) --i;
    if (i < 0) break;
    --comp[i];
    int rest = comp[m - 1] + 1;
    comp[m - 1] = 0;
    comp[i + 1] = rest;
    for (int j = i + 2; j < m; ++j) {
      comp[i + 1] += comp[j];
      comp[j] = 0;
    }
  }
}

std::vector<std::vector<int>> base_automorphisms(const Graph& base) {
  std::vector<int> perm(base.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> auts;
  do {
    bool aut = true;
    for (int u = 0; u < base.n && aut; ++u)
      for (int w = u + 1; w < base.n && aut; ++w)
        if (base.adjacent(u, w) != base.adjacent(perm[u], perm[w])) aut = false;
    if (aut) auts.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return auts;
}

// A maximum can sit on a quartically flat plateau (the degree-4 objective
// resolves offsets of size eps only at eps^4), so coordinates cannot be
// pinned numerically there. When the found point is numerically close to a
// symmetric one under base automorphisms, move to the orbit average as long
// as the objective does not drop.
std::vector<double> symmetry_snap(const HomSet& hs,
                                  const std::vector<std::vector<int>>& auts,
                                  std::vector<double> x) {
  double value = blowup_density(hs, x);
  for (int round = 0; round < 2; ++round) {
    std::vector<double> sum(x.size(), 0.0);
    int used = 0;
    for (const auto& perm : auts) {
      double dist = 0;
      for (std::size_t i = 0; i < x.size(); ++i)
        dist = std::max(dist, std::fabs(x[perm[i]] - x[i]));
      if (dist > 1e-3) continue;
      for (std::size_t i = 0; i < x.size(); ++i) sum[i] += x[perm[i]];
      ++used;
    }
    std::vector<double> avg(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) avg[i] = sum[i] / used;
    if (blowup_density(hs, avg) >= value - 1e-12) x = avg;
  }
  return x;
}

// Among the base's automorphism images of x, pick the lexicographically
// largest so reported optima are reproducible (sorted descending on K_m).
std::vector<double> canonicalize_by_base(
    const std::vector<std::vector<int>>& auts, const std::vector<double>& x) {
  std::vector<double> best = x;
  for (const auto& perm : auts) {
    std::vector<double> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[perm[i]];
    if (y > best) best = y;
  }
  return best;
}

}  // namespace

OptimizeResult optimize_on_base(const TwoColoredGraph& h, const Graph& base,
                                double tol) {
  if (base.n > 8) throw std::invalid_argument("base order cap is 8");
  HomSet hs = homomorphisms(h, base);

  std::vector<std::vector<double>> starts;
  if (base.n <= 5) {
    grid_starts(base.n, 20, starts);
  } else {
    grid_starts(base.n, 4, starts);
    for (int t = 0; t < 256; ++t) {
      std::vector<double> x(base.n);
      double sum = 0;
      for (int i = 0; i < base.n; ++i) {
        x[i] = -std::log(
            (counter_draw(0x626c6f77, t, i) >> 11) * 0x1.0p-53 + 1e-300);
        sum += x[i];
      }
      for (double& v : x) v /= sum;
      starts.push_back(x);
    }
  }

  // total order (value, then lexicographic x) keeps the reported optimum
  // independent of chunking and worker count
  auto better = [](const LocalBest& a, const LocalBest& b) {
    if (a.value != b.value) return a.value > b.value;
    return a.x > b.x;
  };
  auto locals = parallel_chunks<LocalBest>(
      starts.size(), [&](std::size_t begin, std::size_t end) {
        LocalBest best;
        for (std::size_t i = begin; i < end; ++i) {
          LocalBest cand = ascend(hs, starts[i], tol);
          if (best.value < 0 || better(cand, best)) best = cand;
        }
        return best;
      });

  LocalBest best;
  for (const LocalBest& loc : locals)
    if (best.value < 0 || better(loc, best)) best = loc;

  auto auts = base_automorphisms(base);
  OptimizeResult result;
  result.x = canonicalize_by_base(auts, symmetry_snap(hs, auts, best.x));
  result.value = blowup_density(hs, result.x);
  result.kkt_residual = gp_norm(hs, result.x);
  result.starts = static_cast<int>(starts.size());
  result.converged = best.converged && result.kkt_residual < tol;
  return result;
}

namespace {

// adjacency of a generic part-a clone towards a marked vertex in part p
bool clone_sees_marked(const Graph& base, int a, int p) {
  return a != p && base.adjacent(a, p);
}

Rational flip_side_sum(const TwoColoredGraph& h, const Graph& base,
                       const std::vector<Rational>& x, int i, int j, int u,
                       int w, bool marked_adjacent) {
  const int kappa = h.kappa;
  std::vector<int> others;
  for (int v = 0; v < kappa; ++v)
    if (v != i && v != j) others.push_back(v);

  // the marked pair itself
  if (h.red_edge(i, j) && !marked_adjacent) return 0;
  if (h.blue_edge(i, j) && marked_adjacent) return 0;

  Rational total = 0;
  std::vector<int> f(others.size(), 0);
  while (true) {
    bool ok = true;
    for (std::size_t a = 0; a < others.size() && ok; ++a) {
      int v = others[a];
      // towards the marked vertices
      if (h.red_edge(v, i) && !clone_sees_marked(base, f[a], u)) ok = false;
      if (h.blue_edge(v, i) && clone_sees_marked(base, f[a], u)) ok = false;
      if (h.red_edge(v, j) && !clone_sees_marked(base, f[a], w)) ok = false;
      if (h.blue_edge(v, j) && clone_sees_marked(base, f[a], w)) ok = false;
      for (std::size_t b = a + 1; b < others.size() && ok; ++b) {
        int v2 = others[b];
        if (h.red_edge(v, v2) && !base.adjacent(f[a], f[b])) ok = false;
        if (h.blue_edge(v, v2) && f[a] != f[b] && base.adjacent(f[a], f[b]))
          ok = false;
      }
    }
    if (ok) {
      Rational term = 1;
      for (std::size_t a = 0; a < others.size(); ++a) term *= x[f[a]];
      total += term;
    }
    std::size_t d = 0;
    while (d < f.size() && ++f[d] == base.n) f[d++] = 0;
    if (d == f.size()) break;
  }
  return total;
}

}  // namespace

Rational flip_averse_margin(const TwoColoredGraph& h, const Graph& base,
                            const std::vector<Rational>& x, int u, int w) {
  if (static_cast<int>(x.size()) != base.n)
    throw std::invalid_argument("weight vector size mismatch");
  if (u < 0 || u >= base.n || w < 0 || w >= base.n)
    throw std::out_of_range("part index out of range");
  bool before = u != w && base.adjacent(u, w);
  Rational margin = 0;
  for (int i = 0; i < h.kappa; ++i)
    for (int j = 0; j < h.kappa; ++j) {
      if (i == j) continue;
      margin += flip_side_sum(h, base, x, i, j, u, w, before);
      margin -= flip_side_sum(h, base, x, i, j, u, w, !before);
    }
  return margin;
}

StrictnessInstance make_strictness_instance(const TwoColoredGraph& h,
                                            const Graph& base,
                                            const std::vector<Rational>& x) {
  if (static_cast<int>(x.size()) != base.n)
    throw std::invalid_argument("weight vector size mismatch");
  const int m = base.n;
  if (2 * m + 1 > kMaxVertices)
    throw std::invalid_argument("base too large for the doubled graph");

  StrictnessInstance inst;
  inst.h = h;
  inst.base = base;
  inst.x = x;

  Graph bp = empty_graph(2 * m);
  for (int a = 0; a < 2 * m; ++a)
    for (int b = a + 1; b < 2 * m; ++b)
      if (base.adjacent(a % m, b % m)) bp.add_edge(a, b);
  inst.clone_blowup = bp;

  Graph bpp = empty_graph(2 * m + 1);
  for (int a = 0; a < 2 * m; ++a)
    for (int b = a + 1; b < 2 * m; ++b)
      if (bp.adjacent(a, b)) bpp.add_edge(a, b);
  for (int a = 0; a < m; ++a) bpp.add_edge(a, 2 * m);
  inst.extended = bpp;

  // homs into B'' hitting 2m exactly once
  std::array<std::int8_t, 8> f{};
  const int nb = 2 * m + 1;
  while (true) {
    int hits = 0;
    for (int i = 0; i < h.kappa; ++i)
      if (f[i] == 2 * m) ++hits;
    if (hits == 1 && hom_ok(h, bpp, f)) inst.homs_through.push_back(f);
    int i = 0;
    while (i < h.kappa && ++f[i] == nb) f[i++] = 0;
    if (i == h.kappa) break;
  }
  return inst;
}

Rational strictness_eval(const StrictnessInstance& inst,
                         const std::vector<Rational>& y) {
  const int m = inst.base.n;
  if (static_cast<int>(y.size()) != m)
    throw std::invalid_argument("y size mismatch");
  for (const Rational& v : y)
    if (v < 0 || v > 1) throw std::invalid_argument("y outside the unit box");
  std::vector<Rational> z(2 * m);
  for (int i = 0; i < m; ++i) {
    z[i] = y[i] * inst.x[i];
    z[i + m] = (Rational(1) - y[i]) * inst.x[i];
  }
  Rational total = 0;
  for (const auto& f : inst.homs_through) {
    Rational term = 1;
    for (int i = 0; i < inst.h.kappa; ++i)
      if (f[i] != 2 * m) term *= z[f[i]];
    total += term;
  }
  return total;
}

double strictness_eval_d(const StrictnessInstance& inst,
                         const std::vector<double>& y) {
  const int m = inst.base.n;
  std::vector<double> z(2 * m);
  for (int i = 0; i < m; ++i) {
    double xi = rat_double(inst.x[i]);
    z[i] = y[i] * xi;
    z[i + m] = (1.0 - y[i]) * xi;
  }
  double total = 0;
  for (const auto& f : inst.homs_through) {
    double term = 1;
    for (int i = 0; i < inst.h.kappa; ++i)
      if (f[i] != 2 * m) term *= z[f[i]];
    total += term;
  }
  return total;
}

namespace {

void strictness_gradient(const StrictnessInstance& inst,
                         const std::vector<double>& y,
                         std::vector<double>& grad) {
  const int m = inst.base.n;
  std::vector<double> z(2 * m), xd(m);
  for (int i = 0; i < m; ++i) {
    xd[i] = rat_double(inst.x[i]);
    z[i] = y[i] * xd[i];
    z[i + m] = (1.0 - y[i]) * xd[i];
  }
  std::fill(grad.begin(), grad.end(), 0.0);
  for (const auto& f : inst.homs_through) {
    for (int i = 0; i < inst.h.kappa; ++i) {
      if (f[i] == 2 * m) continue;
      double term = 1;
      for (int l = 0; l < inst.h.kappa; ++l)
        if (l != i && f[l] != 2 * m) term *= z[f[l]];
      int part = f[i] % m;
      grad[part] += (f[i] < m ? xd[part] : -xd[part]) * term;
    }
  }
}

std::vector<double> box_ascend(const StrictnessInstance& inst,
                               std::vector<double> y) {
  const int m = inst.base.n;
  std::vector<double> grad(m), trial(m);
  double value = strictness_eval_d(inst, y);
  for (int iter = 0; iter < 3000; ++iter) {
    strictness_gradient(inst, y, grad);
    double step = 0.5;
    bool moved = false;
    while (step > 1e-17) {
      for (int i = 0; i < m; ++i)
        trial[i] = std::clamp(y[i] + step * grad[i], 0.0, 1.0);
      double v = strictness_eval_d(inst, trial);
      if (v > value + 1e-18) {
        y = trial;
        value = v;
        moved = true;
        break;
      }
      step *= 0.5;
    }
    if (!moved) break;
  }
  return y;
}

}  // namespace

StrictnessReport strictness_scan(const StrictnessInstance& inst,
                                 int grid_resolution, double tol) {
  const int m = inst.base.n;
  if (m > 5) throw std::invalid_argument("strictness scan cap is m <= 5");
  int res = grid_resolution;
  if (m == 4) res = std::min(res, 16);
  if (m == 5) res = std::min(res, 8);

  long long points = 1;
  for (int i = 0; i < m; ++i) points *= res + 1;

  auto grid_point = [&](std::size_t idx) {
    std::vector<double> y(m);
    for (int i = 0; i < m; ++i) {
      y[i] = static_cast<double>(idx % (res + 1)) / res;
      idx /= res + 1;
    }
    return y;
  };

  // pass 1: evaluate the whole grid, keep candidates near the grid maximum
  struct GridLocal {
    double best = -1;
    std::vector<std::size_t> near;
  };
  const double slack = 0.05;
  auto locals = parallel_chunks<GridLocal>(
      static_cast<std::size_t>(points),
      [&](std::size_t begin, std::size_t end) {
        GridLocal loc;
        for (std::size_t idx = begin; idx < end; ++idx) {
          double v = strictness_eval_d(inst, grid_point(idx));
          if (v > loc.best) loc.best = v;
          if (v > loc.best - slack) loc.near.push_back(idx);
        }
        return loc;
      });
  double grid_best = -1;
  for (const auto& loc : locals) grid_best = std::max(grid_best, loc.best);
  std::vector<std::pair<double, std::size_t>> scored;
  for (const auto& loc : locals)
    for (std::size_t idx : loc.near) {
      double v = strictness_eval_d(inst, grid_point(idx));
      if (v > grid_best - slack) scored.emplace_back(v, idx);
    }
  std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  if (scored.size() > 256) scored.resize(256);
  std::vector<std::size_t> candidates;
  for (const auto& [v, idx] : scored) candidates.push_back(idx);

  // pass 2: local ascent from the candidates
  auto polished = parallel_chunks<std::vector<StrictnessMaximizer>>(
      candidates.size(), [&](std::size_t begin, std::size_t end) {
        std::vector<StrictnessMaximizer> out;
        for (std::size_t i = begin; i < end; ++i) {
          StrictnessMaximizer sm;
          sm.y = box_ascend(inst, grid_point(candidates[i]));
          sm.value = strictness_eval_d(inst, sm.y);
          out.push_back(sm);
        }
        return out;
      });

  double max_value = -1;
  for (const auto& chunk : polished)
    for (const auto& sm : chunk) max_value = std::max(max_value, sm.value);

  // cluster maximizers and measure distance to the adjacency indicator rows
  StrictnessReport report;
  report.max_value = max_value;
  for (const auto& chunk : polished) {
    for (const auto& sm : chunk) {
      if (sm.value < max_value - 1e-9) continue;
      bool duplicate = false;
      for (const auto& kept : report.maximizers) {
        double dist = 0;
        for (int i = 0; i < m; ++i)
          dist = std::max(dist, std::fabs(kept.y[i] - sm.y[i]));
        if (dist < 1e-5) {
          duplicate = true;
          break;
        }
      }
      if (duplicate) continue;
      StrictnessMaximizer out = sm;
      out.indicator_distance = 1e18;
      for (int v = 0; v < m; ++v) {
        double dist = 0;
        for (int i = 0; i < m; ++i) {
          double ind = inst.base.adjacent(v, i) ? 1.0 : 0.0;
          dist = std::max(dist, std::fabs(sm.y[i] - ind));
        }
        if (dist < out.indicator_distance) {
          out.indicator_distance = dist;
          out.nearest_vertex = v;
        }
      }
      report.maximizers.push_back(out);
    }
  }
  std::sort(report.maximizers.begin(), report.maximizers.end(),
            [](const StrictnessMaximizer& a, const StrictnessMaximizer& b) {
              return a.y < b.y;
            });
  report.strict_consistent = true;
  for (const auto& sm : report.maximizers)
    if (sm.indicator_distance > tol) report.strict_consistent = false;
  return report;
}

}  // namespace semind
