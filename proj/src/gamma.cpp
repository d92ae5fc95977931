#include "semind/gamma.hpp"

#include <stdexcept>

namespace semind {

const Rational& GammaFunction::value_of(const Graph& f) const {
  auto it = index.find(canonical_form(f).g6);
  if (it == index.end()) throw std::invalid_argument("graph not in gamma domain");
  return values[it->second];
}

GammaFunction make_gamma(int kappa, const std::vector<Rational>& values) {
  GammaFunction gamma;
  gamma.kappa = kappa;
  gamma.classes = enumerate_graphs(kappa);
  if (values.size() != gamma.classes.size())
    throw std::invalid_argument("gamma must assign a value to every class");
  gamma.values = values;
  for (std::size_t i = 0; i < gamma.classes.size(); ++i)
    gamma.index[to_graph6(gamma.classes[i])] = static_cast<int>(i);
  return gamma;
}

GammaFunction gamma_from_h(const TwoColoredGraph& h) {
  auto classes = enumerate_graphs(h.kappa);
  std::vector<Rational> values;
  values.reserve(classes.size());
  for (const Graph& f : classes) values.push_back(embedding_density(h, f));
  return make_gamma(h.kappa, values);
}

Rational lambda_gamma(const GammaFunction& gamma, const Graph& g) {
  if (g.n < gamma.kappa) throw std::invalid_argument("host smaller than kappa");
  auto counts = induced_counts_by_class(g, gamma.kappa, gamma.classes);
  Rational total = 0;
  for (std::size_t i = 0; i < counts.size(); ++i)
    if (counts[i] != 0) total += gamma.values[i] * rat_i64(counts[i]);
  return total / rat_i64(binomial(g.n, gamma.kappa));
}

}  // namespace semind
