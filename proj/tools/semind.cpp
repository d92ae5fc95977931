#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "semind/blowup.hpp"
#include "semind/cert.hpp"
#include "semind/colored.hpp"
#include "semind/constructions.hpp"
#include "semind/exact.hpp"
#include "semind/gamma.hpp"
#include "semind/graph.hpp"
#include "semind/parallel.hpp"
#include "semind/rng.hpp"
#include "semind/search.hpp"
#include "semind/symmetrize.hpp"

using nlohmann::json;
using namespace semind;

namespace {

// the patterns are addressed as --h, so help must not own the short -h
CLI::App* subcommand(CLI::App& parent, const std::string& name,
                     const std::string& desc = "") {
  CLI::App* sub = parent.add_subcommand(name, desc);
  sub->set_help_flag("--help", "print help and exit");
  sub->fallthrough();  // --seed/--threads/--json live on the top-level app
  return sub;
}

Graph read_graph_arg(const std::string& g6) {
  if (!g6.empty()) return from_graph6(g6);
  std::string line;
  if (!std::getline(std::cin, line) || line.empty())
    throw std::invalid_argument("expected a graph6 string on stdin");
  return from_graph6(line);
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    out << j.dump(2) << "\n";
  }
}

json optimize_json(const OptimizeResult& r) {
  json x = json::array();
  char buf[32];
  for (double v : r.x) {
    std::snprintf(buf, sizeof buf, "%.15g", v);
    x.push_back(std::string(buf));
  }
  return {{"x_star", x},
          {"value", r.value},
          {"kkt_residual", r.kkt_residual},
          {"starts", r.starts},
          {"converged", r.converged}};
}

Graph parse_base(const std::string& name) {
  if (name.size() >= 2 && (name[0] == 'K' || name[0] == 'k') &&
      std::isdigit(static_cast<unsigned char>(name[1])))
    return complete_graph(std::stoi(name.substr(1)));
  return from_graph6(name);
}

std::vector<Rational> parse_weights(const std::string& csv, int m) {
  std::vector<Rational> x;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) x.push_back(parse_rational(tok));
  if (static_cast<int>(x.size()) != m)
    throw std::invalid_argument("weight count does not match the base order");
  return x;
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

json audit_json(const Graph& g) {
  json j;
  j["n"] = g.n;
  j["edges"] = g.edge_count();
  j["degrees"] = degree_list(g);
  j["triangles"] = triangle_count(g);
  auto parts = complete_multipartite_parts(g);
  if (parts)
    j["complete_multipartite_parts"] = part_sizes(*parts);
  else
    j["complete_multipartite_parts"] = nullptr;
  return j;
}

struct Table1Row {
  int index;
  std::string target;
  std::string method;
  bool pass;
  std::string detail;
};

Table1Row blowup_row(int index, int base_order, const Rational& target) {
  OptimizeResult r = optimize_on_base(builtin_h(index), complete_graph(base_order));
  double err = std::fabs(r.value - rat_double(target));
  char detail[128];
  std::snprintf(detail, sizeof detail, "optimized K%d blow-up value %.12f, |err| = %.2e",
                base_order, r.value, err);
  return {index, rat_str(target), "blow-up optimum", err < 1e-9 && r.converged,
          detail};
}

Table1Row trend_row(int index, PredictedFamily fam, int n, const Rational& target) {
  Prediction p = predicted_value(fam, n);
  double lam = static_cast<double>(p.lower) /
               static_cast<double>(falling_power(n, 4));
  double err = std::fabs(lam - rat_double(target));
  // closed forms differ from the limit by O(1/n)
  double tol = 3.0 / n;
  char detail[128];
  std::snprintf(detail, sizeof detail,
                "closed form at n=%d gives density %.6f, |err| = %.4f (tol %.4f)",
                n, lam, err, tol);
  bool brute_ok = true;
  SearchResult sr = brute_force_max(builtin_h(index), 6);
  Prediction p6 = predicted_value(fam, 6);
  brute_ok = sr.max_count == p6.lower;
  return {index, rat_str(target), "closed form + brute force",
          err < tol && brute_ok, detail};
}

Table1Row quasirandom_row(int index, double p, const Rational& target,
                          std::uint64_t seed) {
  Graph g = random_graph_p(28, p, seed, 1000 + index);
  double lam = rat_double(embedding_density(builtin_h(index), g));
  double err = std::fabs(lam - rat_double(target));
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "seeded G(28, %.4g) sample density %.6f, |err| = %.4f "
                "(evidence only)",
                p, lam, err);
  return {index, rat_str(target), "quasirandom sample", err < 0.02, detail};
}

int run_table1(std::uint64_t seed, const std::string& out_path, bool json_out) {
  std::vector<Table1Row> rows;
  rows.push_back(trend_row(0, PredictedFamily::H0, 20, Rational(1, 4)));
  rows.push_back(trend_row(1, PredictedFamily::H1, 21, Rational(4, 27)));
  rows.push_back(quasirandom_row(2, 1.0 / 3, Rational(4, 27), seed));
  {  // row 3: conjectured window
    H3Profile p = h3_profile();
    bool pass = p.converged && std::fabs(p.value - 0.150083407311578) < 1e-9 &&
                p.value <= 0.1500834091519 + 1e-12;
    char detail[128];
    std::snprintf(detail, sizeof detail,
                  "profile value %.15f inside [lower, upper] window", p.value);
    rows.push_back({3, "0.150083407311578..0.1500834091519",
                    "profile optimization", pass, detail});
  }
  rows.push_back(blowup_row(4, 3, Rational(4, 27)));
  {  // row 5: oracle value, published constants flagged
    H5Report rep = h5_report();
    bool pass = rep.opt.converged &&
                std::fabs(rep.opt.value - rep.value_expected) < 1e-9 &&
                rep.alpha_error < 1e-7;
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "K5 optimum %.12f at alpha %.9f; published constants are "
                  "mutually inconsistent, evaluated value kept",
                  rep.opt.value, rep.opt.x[4]);
    rows.push_back({5, "(7879-171*sqrt(57))/43904", "blow-up optimum", pass,
                    detail});
  }
  rows.push_back(blowup_row(6, 2, Rational(1, 8)));
  rows.push_back(quasirandom_row(7, 0.25, Rational(27, 256), seed));
  rows.push_back(blowup_row(8, 3, Rational(4, 27)));
  rows.push_back(blowup_row(9, 5, Rational(12, 125)));
  rows.push_back(blowup_row(10, 2, Rational(1, 8)));
  rows.push_back(blowup_row(11, 2, Rational(1, 8)));
  rows.push_back(blowup_row(12, 2, Rational(1, 8)));
  rows.push_back(blowup_row(13, 2, Rational(1, 8)));
  rows.push_back(blowup_row(14, 2, Rational(1, 8)));
  rows.push_back(trend_row(15, PredictedFamily::H15, 21, Rational(1, 27)));
  rows.push_back(blowup_row(16, 2, Rational(1, 8)));
  rows.push_back(blowup_row(17, 2, Rational(1, 8)));

  std::sort(rows.begin(), rows.end(),
            [](const Table1Row& a, const Table1Row& b) { return a.index < b.index; });
  bool all = true;
  json j = json::array();
  for (const Table1Row& r : rows) {
    all = all && r.pass;
    j.push_back({{"row", r.index},
                 {"target", r.target},
                 {"method", r.method},
                 {"pass", r.pass},
                 {"detail", r.detail}});
    if (!json_out)
      std::printf("%-4s H%-3d target %-36s %s\n", r.pass ? "PASS" : "FAIL",
                  r.index, r.target.c_str(), r.detail.c_str());
  }
  if (json_out) emit({{"rows", j}, {"all_pass", all}}, out_path);
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"semi-inducibility laboratory for 4-vertex colored patterns"};
  app.set_help_flag("--help", "print help and exit");
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  int threads = 0;
  bool json_out = false;
  std::string out_path;
  app.add_option("--seed", seed, "seed for all randomized sweeps");
  app.add_option("--threads", threads, "worker cap (default: hardware)");
  app.add_flag("--json", json_out, "machine-readable output only");
  app.add_option("-o,--output", out_path, "write the report to a file");

  // count
  auto* count_cmd = subcommand(app, "count", "count embeddings of H into G");
  int h_index = 0;
  std::string g6;
  count_cmd->add_option("--h", h_index, "builtin pattern index 0..17")->required();
  count_cmd->add_option("--g6", g6, "host graph (graph6; default stdin)");

  // brute-max
  auto* brute_cmd = subcommand(app, "brute-max", "exhaustive maximum at order n");
  int brute_n = 4;
  brute_cmd->add_option("--h", h_index, "builtin pattern index")->required();
  brute_cmd->add_option("--n", brute_n, "graph order (<= 9)")->required();

  // blowup
  auto* blow_cmd = subcommand(app, "blowup", "blow-up limit computations");
  blow_cmd->require_subcommand(1);
  std::string base_name = "K3", weights_csv, y_csv;
  int part_u = 0, part_w = 1, grid_res = 64;
  double opt_tol = 1e-12;
  auto* bo = subcommand(*blow_cmd, "optimize", "maximize over the simplex");
  bo->add_option("--h", h_index)->required();
  bo->add_option("--base", base_name, "K<m> or graph6");
  bo->add_option("--tol", opt_tol);
  auto* bd = subcommand(*blow_cmd, "density", "evaluate at rational weights");
  bd->add_option("--h", h_index)->required();
  bd->add_option("--base", base_name);
  bd->add_option("--x", weights_csv, "comma-separated rationals")->required();
  auto* bm = subcommand(*blow_cmd, "margin", "flip-averseness margin");
  bm->add_option("--h", h_index)->required();
  bm->add_option("--base", base_name);
  bm->add_option("--x", weights_csv)->required();
  bm->add_option("--u", part_u);
  bm->add_option("--w", part_w);
  auto* bs = subcommand(*blow_cmd, "strictness", "scan the one-vertex polynomial");
  bs->add_option("--h", h_index)->required();
  bs->add_option("--base", base_name);
  bs->add_option("--x", weights_csv)->required();
  bs->add_option("--grid", grid_res);
  bs->add_option("--y", y_csv, "evaluate at one point instead of scanning");

  // construct
  auto* con_cmd = subcommand(app, "construct", "named construction generators");
  con_cmd->require_subcommand(1);
  std::string sizes_csv = "2,2", x_csv = "1/2,1/2";
  int cm = 3, cn = 6, cd = 2, ck = 1, ca = 0;
  long long cedges = 0;
  double cbeta = 0.39829918, cgamma = 0.28158008;
  bool audit = false;
  con_cmd->add_flag("--audit", audit, "emit a JSON structural report");
  auto* c_multi = subcommand(*con_cmd, "multipartite");
  c_multi->add_option("--sizes", sizes_csv)->required();
  auto* c_turan = subcommand(*con_cmd, "turan");
  c_turan->add_option("--m", cm)->required();
  c_turan->add_option("--n", cn)->required();
  auto* c_qc = subcommand(*con_cmd, "quasi-clique");
  c_qc->add_option("--n", cn)->required();
  c_qc->add_option("--e", cedges)->required();
  auto* c_bc = subcommand(*con_cmd, "bipartite-circulant");
  c_bc->add_option("--m", cm)->required();
  c_bc->add_option("--d", cd)->required();
  auto* c_cr = subcommand(*con_cmd, "circulant");
  c_cr->add_option("--m", cm)->required();
  c_cr->add_option("--k", ck)->required();
  auto* c_h15 = subcommand(*con_cmd, "h15-special");
  c_h15->add_option("--n", cn)->required();
  auto* c_h6 = subcommand(*con_cmd, "h6-augmented");
  c_h6->add_option("--n", cn)->required();
  c_h6->add_option("--a", ca)->required();
  auto* c_h3 = subcommand(*con_cmd, "h3-witness");
  c_h3->add_option("--n", cn)->required();
  c_h3->add_option("--beta", cbeta);
  c_h3->add_option("--gamma", cgamma);
  auto* c_gnx = subcommand(*con_cmd, "gnx");
  c_gnx->add_option("--n", cn)->required();
  c_gnx->add_option("--x", x_csv)->required();

  // exact
  auto* exact_cmd = subcommand(app, "exact", "closed-form predictions and profiles");
  std::string family = "h0";
  int exact_n = 6;
  bool check_brute = false;
  exact_cmd->add_option("family", family,
                        "h0|h1|h15|h4-upper|h6-bipartite|h3|h5|h0-square");
  exact_cmd->add_option("--n", exact_n);
  exact_cmd->add_flag("--check-brute", check_brute, "compare with brute force");

  // identity
  auto* id_cmd = subcommand(app, "identity", "exact counting identity residuals");
  std::string id_family = "h0", id_g6, range = "4..12";
  int id_random = 0;
  id_cmd->add_option("--family", id_family, "h0|h1|h15")->required();
  id_cmd->add_option("--graph6", id_g6, "single graph to check");
  id_cmd->add_option("--random", id_random, "number of seeded random graphs");
  id_cmd->add_option("--n", range, "order range lo..hi for the sweep");

  // symmetrize
  auto* sym_cmd = subcommand(app, "symmetrize", "reduce to complete multipartite");
  int sym_h = 5;
  std::string sym_g6;
  sym_cmd->add_option("--h-index", sym_h)->required();
  sym_cmd->add_option("--graph6", sym_g6, "input graph (default stdin)");

  // cert
  auto* cert_cmd = subcommand(app, "cert", "certificate tools");
  cert_cmd->require_subcommand(1);
  std::string cert_path, cert_theory;
  auto* cv = subcommand(*cert_cmd, "verify", "verify a certificate file");
  cv->add_option("path", cert_path)->required();
  cv->add_option("--theory", cert_theory, "override: all|complete-partite");
  auto* ce = subcommand(*cert_cmd, "example-h11", "emit the explicit N=4 certificate");

  auto* table_cmd = subcommand(app, "table1", "desk-scale reproduction of the constants table");

  CLI11_PARSE(app, argc, argv);
  if (threads > 0) set_worker_count(threads);

  try {
    if (*count_cmd) {
      Graph g = read_graph_arg(g6);
      TwoColoredGraph h = builtin_h(h_index);
      long long c = count_embeddings(h, g);
      emit({{"h", h_index},
            {"n", g.n},
            {"count", c},
            {"lambda", rat_str(embedding_density(h, g))}},
           out_path);
      return 0;
    }
    if (*brute_cmd) {
      SearchResult r = brute_force_max(builtin_h(h_index), brute_n);
      emit({{"h", h_index},
            {"n", r.n},
            {"max", r.max_count},
            {"lambda", rat_str(r.max_density)},
            {"extremal_count", r.extremal.size()},
            {"extremal", r.extremal}},
           out_path);
      return 0;
    }
    if (*blow_cmd) {
      Graph base = parse_base(base_name);
      TwoColoredGraph h = builtin_h(h_index);
      if (*bo) {
        emit(optimize_json(optimize_on_base(h, base, opt_tol)), out_path);
        return 0;
      }
      if (*bd) {
        WeightedBase wb{base, parse_weights(weights_csv, base.n)};
        emit({{"value", rat_str(blowup_density(h, wb))}}, out_path);
        return 0;
      }
      if (*bm) {
        auto x = parse_weights(weights_csv, base.n);
        Rational m = flip_averse_margin(h, base, x, part_u, part_w);
        emit({{"u", part_u},
              {"w", part_w},
              {"margin", rat_str(m)},
              {"flip_averse_at_pair", m > 0}},
             out_path);
        return 0;
      }
      if (*bs) {
        auto x = parse_weights(weights_csv, base.n);
        StrictnessInstance inst = make_strictness_instance(h, base, x);
        if (!y_csv.empty()) {
          auto y = parse_weights(y_csv, base.n);
          emit({{"value", rat_str(strictness_eval(inst, y))}}, out_path);
          return 0;
        }
        StrictnessReport rep = strictness_scan(inst, grid_res);
        json maxers = json::array();
        for (const auto& sm : rep.maximizers)
          maxers.push_back({{"y", sm.y},
                            {"value", sm.value},
                            {"indicator_distance", sm.indicator_distance},
                            {"nearest_vertex", sm.nearest_vertex}});
        emit({{"max_value", rep.max_value},
              {"maximizers", maxers},
              {"strict_consistent", rep.strict_consistent},
              {"verdict", "numeric evidence"}},
             out_path);
        return 0;
      }
    }
    if (*con_cmd) {
      Graph g;
      json extra;
      if (*c_multi) g = multipartite(parse_int_list(sizes_csv));
      if (*c_turan) g = turan(cm, cn);
      if (*c_qc) g = quasi_clique(cn, cedges);
      if (*c_bc) g = bipartite_circulant(cm, cd);
      if (*c_cr) g = circulant_r(cm, ck);
      if (*c_h15) {
        g = h15_special(cn);
        extra["expected_defect_total"] = h15_special_defect(cn);
      }
      if (*c_h6) g = h6_augmented(cn, ca);
      if (*c_h3) {
        H3Witness w = h3_witness(cn, cbeta, cgamma);
        g = w.graph;
        extra["regular_part_order"] = w.regular_part_order;
        extra["degree"] = w.degree;
        extra["degree_adjusted"] = w.degree_adjusted;
      }
      if (*c_gnx) {
        std::vector<Rational> x;
        std::stringstream ss(x_csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) x.push_back(parse_rational(tok));
        g = g_nx(cn, x);
      }
      if (audit || json_out) {
        json j = audit_json(g);
        j["graph6"] = to_graph6(g);
        for (auto& [k, v] : extra.items()) j[k] = v;
        emit(j, out_path);
      } else {
        std::cout << to_graph6(g) << "\n";
      }
      return 0;
    }
    if (*exact_cmd) {
      if (family == "h3") {
        H3Profile p = h3_profile();
        emit({{"beta", p.beta},
              {"gamma", p.gamma},
              {"value", p.value},
              {"residual_beta_quintic", p.residual_beta_quintic},
              {"residual_gamma_quartic", p.residual_gamma_quartic},
              {"converged", p.converged}},
             out_path);
        return p.converged ? 0 : 1;
      }
      if (family == "h5") {
        H5Report rep = h5_report();
        json j = optimize_json(rep.opt);
        j["alpha_expected"] = rep.alpha_expected;
        j["value_expected"] = rep.value_expected;
        j["alpha_error"] = rep.alpha_error;
        j["constants_discrepant"] = rep.constants_discrepant;
        j["notes"] = rep.notes;
        emit(j, out_path);
        return 0;
      }
      if (family == "h0-square") {
        H0SquareReport rep = h0_square_branch(exact_n, check_brute);
        emit({{"n", rep.n},
              {"square", rep.square},
              {"k0", rep.k0},
              {"family_size", rep.family_size},
              {"family_checked", rep.family_checked},
              {"family_verified", rep.family_verified},
              {"first_square_instance_at_most_1e4",
               first_h0_square_instance(5, 10000)}},
             out_path);
        return 0;
      }
      PredictedFamily fam = parse_predicted_family(family);
      Prediction p = predicted_value(fam, exact_n);
      json j{{"family", family},
             {"n", p.n},
             {"lower", p.lower},
             {"upper", p.upper},
             {"exact", p.exact()},
             {"extremal", p.extremal_description}};
      int rc = 0;
      if (check_brute && exact_n <= 9) {
        int idx = fam == PredictedFamily::H0 ? 0 : fam == PredictedFamily::H1 ? 1 : 15;
        if (fam == PredictedFamily::H4Upper || fam == PredictedFamily::H6Bipartite)
          throw std::invalid_argument("--check-brute applies to h0, h1, h15");
        SearchResult r = brute_force_max(builtin_h(idx), exact_n);
        j["brute"] = r.max_count;
        bool ok = p.exact() ? r.max_count == p.lower
                            : (r.max_count >= p.lower && r.max_count <= p.upper);
        j["brute_matches"] = ok;
        rc = ok ? 0 : 1;
      }
      emit(j, out_path);
      return rc;
    }
    if (*id_cmd) {
      IdentityFamily fam = parse_identity_family(id_family);
      json results = json::array();
      bool all_zero = true;
      if (!id_g6.empty()) {
        long long r = identity_residual(fam, from_graph6(id_g6));
        results.push_back({{"graph6", id_g6}, {"residual", r}});
        all_zero = r == 0;
      } else {
        int lo = 4, hi = 12;
        auto dots = range.find("..");
        if (dots != std::string::npos) {
          lo = std::stoi(range.substr(0, dots));
          hi = std::stoi(range.substr(dots + 2));
        }
        int count = id_random > 0 ? id_random : 100;
        for (int t = 0; t < count; ++t) {
          int n = lo + static_cast<int>(counter_draw(seed, t, 0) %
                                        static_cast<std::uint64_t>(hi - lo + 1));
          Graph g = random_graph(n, seed, t + 1);
          long long r = identity_residual(fam, g);
          if (r != 0) {
            all_zero = false;
            results.push_back({{"graph6", to_graph6(g)}, {"residual", r}});
          }
        }
      }
      emit({{"family", id_family},
            {"all_residuals_zero", all_zero},
            {"violations", results}},
           out_path);
      return all_zero ? 0 : 1;
    }
    if (*sym_cmd) {
      Graph g = read_graph_arg(sym_g6);
      GammaFunction gamma = gamma_from_h(builtin_h(sym_h));
      bool guaranteed = shape_check(builtin_h(sym_h)).applies;
      SymmetrizeResult r = symmetrize(gamma, g, guaranteed);
      emit({{"graph6", to_graph6(r.graph)},
            {"lambda_before", rat_str(r.lambda_before)},
            {"lambda_after", rat_str(r.lambda_after)},
            {"steps", r.steps},
            {"monotone", r.monotone},
            {"shape_guaranteed", guaranteed}},
           out_path);
      return 0;
    }
    if (*cert_cmd) {
      if (*ce) {
        Certificate cert = make_h11_certificate();
        std::string text = certificate_to_json(cert);
        if (out_path.empty())
          std::cout << text << "\n";
        else
          std::ofstream(out_path) << text << "\n";
        return 0;
      }
      if (*cv) {
        std::ifstream in(cert_path);
        if (!in) throw std::invalid_argument("cannot open " + cert_path);
        std::stringstream buf;
        buf << in.rdbuf();
        Certificate cert = certificate_from_json(buf.str());
        if (!cert_theory.empty()) cert.theory = parse_theory(cert_theory);
        VerifyReport rep = verify_certificate(cert);
        json psd = json::array();
        for (const auto& p : rep.block_psd) psd.push_back(p.psd);
        json residuals;
        for (std::size_t i = 0; i < rep.class_keys.size(); ++i)
          residuals[rep.class_keys[i]] = rat_str(rep.residuals[i]);
        emit({{"verdict", rep.pass ? "PASS" : "FAIL"},
              {"psd", psd},
              {"residuals", residuals},
              {"violations", rep.violations}},
             out_path);
        return rep.pass ? 0 : 1;
      }
    }
    if (*table_cmd) return run_table1(seed, out_path, json_out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
