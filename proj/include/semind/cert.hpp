#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "semind/gamma.hpp"
#include "semind/graph.hpp"
#include "semind/rational.hpp"

namespace semind {

// A flag: a graph with an injective tuple of root vertices; the roots,
// taken in order, induce the block's fully labeled type sigma.
struct Flag {
  Graph graph;
  std::vector<int> roots;
};

Flag make_flag(const Graph& g, const std::vector<int>& roots);
// Root-preserving canonical key: equal keys iff an isomorphism maps roots
// to roots in order.
std::string flag_key(const Flag& f);
// Relabel so the roots are 0..t-1 in order.
Flag normalize_flag(const Flag& f);
// The type induced by the roots.
Graph flag_type(const Flag& f);

// Isomorph-free list of all k-vertex flags over the fully labeled type
// sigma, in deterministic (key-sorted) order.
std::vector<Flag> enumerate_flags(const Graph& sigma, int k);

// Probability that a uniform injection theta of the type into V(F) plus a
// uniform ordered split (A, B) of the rest, |A| = k1 - t, yields the type
// on theta, f1 on theta+A and f2 on theta+B (root-isomorphically). This is
// the exact pair coefficient: summing it against p(F, G) over F in F_N
// reproduces the disjoint-split product density at every finite n.
Rational pair_density_coeff(const Flag& f1, const Flag& f2, const Graph& F);

struct CertBlock {
  Graph sigma;
  std::vector<Flag> flags;
  std::vector<std::vector<Rational>> Q;
};

// Per-class expansion of the block's quadratic form over F_N.
std::vector<Rational> expand_block(const CertBlock& block,
                                   const std::vector<Graph>& classes);

struct PsdResult {
  bool psd = false;
  std::vector<Rational> pivots;
  std::vector<Rational> witness;  // v with v^T Q v < 0 when not PSD
  Rational witness_value;
};

// Exact LDL^T with symmetric (max-diagonal) pivoting.
PsdResult check_psd(const std::vector<std::vector<Rational>>& Q);

enum class CertTheory { All, CompletePartite };

struct Certificate {
  Rational u;
  int N = 0;
  CertTheory theory = CertTheory::All;
  std::optional<int> h_index;              // gamma from a builtin pattern
  std::optional<GammaFunction> gamma_map;  // or an explicit table
  std::vector<CertBlock> blocks;
  std::map<std::string, Rational> slacks;  // canonical g6 -> c_F
};

struct VerifyReport {
  bool pass = false;
  std::vector<PsdResult> block_psd;
  std::vector<std::string> class_keys;     // the (theory-filtered) F_N keys
  std::vector<Rational> residuals;         // u - gamma(F) - sos(F)
  std::vector<std::string> violations;
};

VerifyReport verify_certificate(const Certificate& cert);

// The explicit N=4 certificate for the pattern with two opposite red edges:
// one block over the labeled edge comparing the two pendant flags with
// weight 3/8, one block over the labeled non-edge comparing common
// neighbourhood vs common non-neighbourhood with weight 1/8, at u = 1/8.
Certificate make_h11_certificate();

// JSON round-trip of the certificate file format.
std::string certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const std::string& text);

std::string theory_name(CertTheory t);
CertTheory parse_theory(const std::string& name);

}  // namespace semind
