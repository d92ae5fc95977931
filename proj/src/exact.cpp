#include "semind/exact.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "semind/constructions.hpp"
#include "semind/search.hpp"

namespace semind {

namespace {

long long isqrt_ll(long long v) {
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

long long h0_formula(int n, long long k0) {
  long long e = k0 * (k0 + 1) / 2;
  long long pairs = binomial(n, 2);
  return 4 * e * (pairs - e) - 4 * (k0 + 1) * k0 * (n - 1 - k0);
}

long long h0_k0(int n) {
  long long disc = 2LL * n * n - 10LL * n + 13;
  return (3 + isqrt_ll(disc)) / 2;
}

}  // namespace

PredictedFamily parse_predicted_family(const std::string& name) {
  if (name == "h0" || name == "H0") return PredictedFamily::H0;
  if (name == "h1" || name == "H1") return PredictedFamily::H1;
  if (name == "h15" || name == "H15") return PredictedFamily::H15;
  if (name == "h4-upper" || name == "H4_upper") return PredictedFamily::H4Upper;
  if (name == "h6-bipartite" || name == "H6_bipartite")
    return PredictedFamily::H6Bipartite;
  throw std::invalid_argument("unknown predicted family: " + name);
}

IdentityFamily parse_identity_family(const std::string& name) {
  if (name == "h0" || name == "h0-degsq") return IdentityFamily::H0DegSq;
  if (name == "h1" || name == "h1-sum") return IdentityFamily::H1Sum;
  if (name == "h15" || name == "h15-defect") return IdentityFamily::H15Defect;
  throw std::invalid_argument("unknown identity family: " + name);
}

Prediction predicted_value(PredictedFamily family, int n) {
  if (n < 4) throw std::invalid_argument("predictions need n >= 4");
  Prediction p;
  p.family = family;
  p.n = n;
  switch (family) {
    case PredictedFamily::H0: {
      long long k0 = h0_k0(n);
      p.lower = p.upper = h0_formula(n, k0);
      long long disc = 2LL * n * n - 10LL * n + 13;
      long long s = isqrt_ll(disc);
      if (n == 4)
        p.extremal_description = "base case: exactly two extremal graphs";
      else if (s * s == disc)
        p.extremal_description =
            "square case: at least 2(k0+1) extremal graphs, quasi-cliques "
            "QC(n, C(k0,2)+l) for l = 0..k0 and complements";
      else
        p.extremal_description =
            "quasi-clique QC(n, C(k0+1,2)) and its complement only";
      break;
    }
    case PredictedFamily::H1: {
      long long pi = pi_s(3, 2LL * n - 3);
      long long twice = static_cast<long long>(n) * pi;
      long long k = n / 6;
      switch (n % 6) {
        case 1:
        case 2:
        case 4:
          p.extremal_description = "floor(n/3)-regular graphs";
          break;
        case 0:
          twice -= n * (4 * k - 1);
          p.extremal_description = "every degree 2k-1 or 2k (n = 6k)";
          break;
        case 3:
          twice -= n * (4 * k + 1);
          p.extremal_description = "every degree 2k or 2k+1 (n = 6k+3)";
          break;
        case 5:
          twice -= 8 * k + 4;
          p.extremal_description =
              "n-1 vertices of degree 2k+1 and one of degree 2k+2 (n = 6k+5)";
          break;
      }
      if (twice % 2 != 0) throw std::logic_error("H1 closed form must be even");
      p.lower = p.upper = twice / 2;
      break;
    }
    case PredictedFamily::H15: {
      long long bound = static_cast<long long>(n) * pi_s(3, n - 1);
      long long k = n / 6;
      switch (n % 6) {
        case 0:
        case 2:
        case 5:
          p.lower = p.upper = bound;
          p.extremal_description = "ceil(n/3)-regular triangle-free graphs";
          break;
        case 3:
          p.lower = p.upper = bound - 2 * k;
          p.extremal_description =
              "triangle-free, n-1 vertices of degree 2k+1, one of degree "
              "2k or 2k+2 (n = 6k+3)";
          break;
        default:  // 1 or 4 mod 6: construction lower bound, pi_3 upper bound
          p.lower = bound - h15_special_defect(n);
          p.upper = bound;
          p.extremal_description =
              "bounds only: special build below, n*pi_3(n-1) above";
          break;
      }
      break;
    }
    case PredictedFamily::H4Upper: {
      long long twice = static_cast<long long>(n) * pi_s(3, 2LL * n - 2);
      if (twice % 2 != 0) throw std::logic_error("H4 bound must be even");
      p.lower = p.upper = twice / 2;
      p.extremal_description =
          "upper bound n*pi_3(2n-2)/2; equality at the 3-part Turan graph "
          "when 3 | n";
      break;
    }
    case PredictedFamily::H6Bipartite: {
      H6Profile prof = h6_profile(n);
      p.lower = p.upper = prof.value;
      p.extremal_description =
          "complete bipartite K_{a,n-a} with a = " + std::to_string(prof.argmax);
      break;
    }
  }
  return p;
}

long long identity_residual(IdentityFamily family, const Graph& g) {
  const int n = g.n;
  if (n < 4) throw std::invalid_argument("identity families need n >= 4");
  switch (family) {
    case IdentityFamily::H0DegSq: {
      long long lhs = count_embeddings(builtin_h(0), g);
      long long e = g.edge_count();
      long long sum = 0;
      for (int u = 0; u < n; ++u) {
        long long d = g.degree(u);
        sum += d * (n - 1 - d);
      }
      long long rhs = 4 * e * (binomial(n, 2) - e) - 4 * sum;
      return lhs - rhs;
    }
    case IdentityFamily::H1Sum: {
      long long lhs = count_embeddings(builtin_h(1), g);
      long long pi = pi_s(3, 2LL * n - 3);
      long long twice = 0;
      for (int u = 0; u < n; ++u) {
        long long d = g.degree(u);
        long long defect = pi - 2 * d * (n - 1 - d) * (n - 2 - d);
        twice += pi - defect;
      }
      if (twice % 2 != 0) throw std::logic_error("H1 identity sum must be even");
      return lhs - twice / 2;
    }
    case IdentityFamily::H15Defect: {
      long long lhs = count_embeddings(builtin_h(15), g);
      long long rhs = static_cast<long long>(n) * pi_s(3, n - 1) -
                      h15_defect(g).total;
      return lhs - rhs;
    }
  }
  throw std::logic_error("unreachable");
}

DefectReport h15_defect(const Graph& g) {
  const int n = g.n;
  if (n < 4) throw std::invalid_argument("defect calculus needs n >= 4");
  DefectReport report;
  report.vertex_defects.resize(n);
  long long pi3 = pi_s(3, n - 1);
  for (int u1 = 0; u1 < n; ++u1) {
    long long d1 = g.degree(u1);
    report.vertex_defects[u1] = pi3 - d1 * pi_s(2, n - 1 - d1);
    report.total += report.vertex_defects[u1];
    for (int u0 = 0; u0 < n; ++u0) {
      if (!g.adjacent(u0, u1)) continue;
      long long d0 = g.degree(u0);
      long long t = __builtin_popcount(g.adj[u0] & g.adj[u1]);
      long long pd = pi_s(2, n - 1 - d1) - (d0 - 1 - t) * (n - d0 - d1 + t);
      report.pair_defects[{u0, u1}] = pd;
      report.total += pd;
    }
  }
  return report;
}

long long h6_poly_p_n(int n, int a) {
  return falling_power(a, 3) * (n - a) + a * falling_power(n - a, 3);
}

H6Profile h6_profile(int n) {
  if (n < 4) throw std::invalid_argument("profile needs n >= 4");
  // P_n(a) = P_n(n-a); report the representative above n/2
  H6Profile best{0, -1};
  for (int a = 0; a <= n; ++a) {
    long long v = h6_poly_p_n(n, a);
    if (v >= best.value) best = {a, v};
  }
  return best;
}

double h6_q(double x0, double x1) {
  double rest = 1 - x0 - x1;
  return x0 * x1 * (1 - 2 * x0 * x1 + rest * rest);
}

double h6_p(double x, double y) {
  return (x * x * x + x * x * y + x * y * y + y * y * y) / 8 - x * y / 2 -
         x / 8 - y / 8 + 0.5;
}

Rational h6_q(const Rational& x0, const Rational& x1) {
  Rational rest = Rational(1) - x0 - x1;
  return x0 * x1 * (Rational(1) - 2 * x0 * x1 + rest * rest);
}

Rational h6_p(const Rational& x, const Rational& y) {
  return (x * x * x + x * x * y + x * y * y + y * y * y) / 8 - x * y / 2 -
         x / 8 - y / 8 + Rational(1, 2);
}

// Density of the split construction: a clique on a (1-beta) fraction next
// to a regular block on a beta fraction whose degree is gamma times the
// block size. Expanded form of the three pair-placement products.
double h3_density(double b, double c) {
  double b2 = b * b, b3 = b2 * b, b4 = b3 * b;
  return b - 2 * b2 + b3 - c * b2 + 4 * c * b3 - 2 * c * b4 - c * c * b3 -
         c * c * b4 + c * c * c * b4;
}

namespace {

void h3_grad(double b, double c, double& db, double& dc) {
  double b2 = b * b, b3 = b2 * b;
  db = 1 - 4 * b + 3 * b2 - 2 * c * b + 12 * c * b2 - 8 * c * b3 -
       3 * c * c * b2 - 4 * c * c * b3 + 4 * c * c * c * b3;
  dc = -b2 + 4 * b3 - 2 * b3 * b - 2 * c * b3 - 2 * c * b3 * b +
       3 * c * c * b3 * b;
}

// Newton on the stationarity system; the objective is a low-degree
// polynomial with an interior nondegenerate maximum, so this converges to
// machine precision.
bool h3_newton(double& b, double& c) {
  for (int iter = 0; iter < 100; ++iter) {
    double b2 = b * b, b3 = b2 * b;
    double gb, gc;
    h3_grad(b, c, gb, gc);
    double hbb = -4 + 6 * b - 2 * c + 24 * c * b - 24 * c * b2 -
                 6 * c * c * b - 12 * c * c * b2 + 12 * c * c * c * b2;
    double hbc = -2 * b + 12 * b2 - 8 * b3 - 6 * c * b2 - 8 * c * b3 +
                 12 * c * c * b3;
    double hcc = -2 * b3 - 2 * b3 * b + 6 * c * b3 * b;
    double det = hbb * hcc - hbc * hbc;
    if (std::fabs(det) < 1e-14) return false;
    double sb = (-gb * hcc + gc * hbc) / det;
    double sc = (-gc * hbb + gb * hbc) / det;
    b += sb;
    c += sc;
    if (!(b > 0 && b < 1 && c > 0 && c < 1)) return false;
    if (std::fabs(sb) + std::fabs(sc) < 1e-15) return true;
  }
  return true;
}

}  // namespace

H3Profile h3_profile(double tol) {
  // coarse scan of the unit box, then Newton polish
  double best_b = 0.4, best_c = 0.25, best_v = -1;
  const int grid = 200;
  for (int i = 0; i <= grid; ++i) {
    double b = static_cast<double>(i) / grid;
    for (int j = 0; j <= grid; ++j) {
      double c = static_cast<double>(j) / grid;
      double v = h3_density(b, c);
      if (v > best_v) {
        best_v = v;
        best_b = b;
        best_c = c;
      }
    }
  }
  H3Profile out;
  double b = best_b, c = best_c;
  out.converged = h3_newton(b, c);
  out.beta = b;
  out.gamma = c;
  out.value = h3_density(b, c);
  out.residual_beta_quintic =
      ((((b - 10.0 / 3) * b + 2521.0 / 576) * b - 407.0 / 144) * b + 43.0 / 48) * b -
      1.0 / 9;
  out.residual_gamma_quartic =
      (((c - 37.0 / 16) * c + 57.0 / 32) * c - 9.0 / 16) * c + 1.0 / 16;
  if (std::fabs(out.value - best_v) > 0.01) out.converged = false;
  (void)tol;
  return out;
}

H0SquareReport h0_square_branch(int n, bool check_brute) {
  if (n < 5) throw std::invalid_argument("square branch needs n >= 5");
  H0SquareReport report;
  report.n = n;
  long long disc = 2LL * n * n - 10LL * n + 13;
  long long s = isqrt_ll(disc);
  report.square = s * s == disc;
  if (!report.square) return report;
  report.k0 = h0_k0(n);
  report.family_size = 2 * (report.k0 + 1);
  if (check_brute && n <= 9) {
    report.family_checked = true;
    long long target = brute_force_max(builtin_h(0), n).max_count;
    report.family_verified = true;
    for (long long l = 0; l <= report.k0; ++l) {
      Graph qc = quasi_clique(n, binomial(static_cast<int>(report.k0), 2) + l);
      if (count_embeddings(builtin_h(0), qc) != target)
        report.family_verified = false;
    }
  }
  return report;
}

long long first_h0_square_instance(long long lo, long long hi) {
  for (long long n = std::max(lo, 5LL); n <= hi; ++n) {
    long long disc = 2 * n * n - 10 * n + 13;
    long long s = isqrt_ll(disc);
    if (s * s == disc) return n;
  }
  return 0;
}

H5Report h5_report() {
  H5Report report;
  report.opt = optimize_on_base(builtin_h(5), complete_graph(5));
  double s57 = std::sqrt(57.0);
  report.alpha_expected = (13.0 - s57) / 56.0;
  report.value_expected = (7879.0 - 171.0 * s57) / 43904.0;

  std::vector<double> expected(5, report.alpha_expected);
  expected[0] = 1 - 4 * report.alpha_expected;  // sorted descending
  double err = 0;
  for (int i = 0; i < 5; ++i)
    err = std::max(err, std::fabs(report.opt.x[i] - expected[i]));
  report.alpha_error = err;

  report.constants_discrepant = true;
  report.notes = {
      "evaluated optimum (7879 - 171*sqrt(57))/43904 ~= 0.1500542",
      "published table entry (171*sqrt(57) + 7879)/43904 ~= 0.2088648 "
      "differs in the sign of the radical",
      "published theorem constant (23637 - 513*sqrt(57))/10976 ~= 1.8006507 "
      "is 12 times the evaluated optimum and exceeds 1",
      "this report keeps the directly evaluated value"};
  return report;
}

}  // namespace semind
