#pragma once

#include <map>
#include <string>
#include <vector>

#include "semind/blowup.hpp"
#include "semind/colored.hpp"
#include "semind/graph.hpp"

namespace semind {

enum class PredictedFamily { H0, H1, H15, H4Upper, H6Bipartite };
enum class IdentityFamily { H0DegSq, H1Sum, H15Defect };

PredictedFamily parse_predicted_family(const std::string& name);
IdentityFamily parse_identity_family(const std::string& name);

// Closed-form value (or bound pair, when only bounds are known) for the
// maximum embedding count at order n.
struct Prediction {
  PredictedFamily family;
  int n = 0;
  long long lower = 0;
  long long upper = 0;
  std::string extremal_description;

  bool exact() const { return lower == upper; }
};

Prediction predicted_value(PredictedFamily family, int n);

// LHS - RHS of the family's counting identity; zero for every graph. The
// left side comes from embedding enumeration, the right side from the
// closed formula, with no shared code between them.
long long identity_residual(IdentityFamily family, const Graph& g);

// Vertex and adjacent-pair defect decomposition whose total measures the
// shortfall from the n*pi_3(n-1) bound.
struct DefectReport {
  std::vector<long long> vertex_defects;                    // by vertex
  std::map<std::pair<int, int>, long long> pair_defects;    // ordered (u0,u1)
  long long total = 0;
};

DefectReport h15_defect(const Graph& g);

// Integer profile of P_n(x) = x^(3)(n-x) + x(n-x)^(3).
struct H6Profile {
  int argmax = 0;
  long long value = 0;
};
H6Profile h6_profile(int n);
long long h6_poly_p_n(int n, int a);

// The two explicit polynomials of the complete-bipartite analysis.
double h6_q(double x0, double x1);
double h6_p(double x, double y);
Rational h6_q(const Rational& x0, const Rational& x1);
Rational h6_p(const Rational& x, const Rational& y);

// Constrained maximization of the three-block density polynomial over
// 0 <= gamma <= beta <= 1, with residuals of the optimizer output in the
// degree-5 and degree-4 root conditions.
struct H3Profile {
  double beta = 0;
  double gamma = 0;
  double value = 0;
  double residual_beta_quintic = 0;
  double residual_gamma_quartic = 0;
  bool converged = false;
};
H3Profile h3_profile(double tol = 1e-9);
double h3_density(double beta, double gamma);

// Square-discriminant branch of the quasi-clique analysis.
struct H0SquareReport {
  int n = 0;
  bool square = false;
  long long k0 = 0;
  long long family_size = 0;      // 2(k0+1) in the square case
  bool family_verified = false;   // brute-force check ran and passed
  bool family_checked = false;    // brute-force check ran at all (n <= 9)
};
H0SquareReport h0_square_branch(int n, bool check_brute = true);
// Smallest n in [lo, hi] with 2n^2 - 10n + 13 a perfect square, or 0.
long long first_h0_square_instance(long long lo, long long hi);

// The K5 optimum profile; the three printed closed-form constants for this
// case disagree with each other, so the report carries the evaluated value
// plus the discrepancy flag.
struct H5Report {
  OptimizeResult opt;
  double alpha_expected = 0;           // (13 - sqrt(57)) / 56
  double value_expected = 0;           // (7879 - 171 sqrt(57)) / 43904
  double alpha_error = 0;              // multiset distance of x* to the profile
  bool constants_discrepant = true;    // the published constants conflict
  std::vector<std::string> notes;
};
H5Report h5_report();

}  // namespace semind
