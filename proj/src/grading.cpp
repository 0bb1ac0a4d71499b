#include "exo/grading.hpp"

#include "exo/errors.hpp"
#include "exo/poly_ops.hpp"

#include <algorithm>

namespace exo {

int WeightFunction::weight(std::string_view var) const {
  auto it = weights_.find(var);
  if (it == weights_.end())
    throw VariableError("no weight for variable '" + std::string(var) + "'");
  return it->second;
}

int WeightFunction::monomial_weight(const VarSet& vars, const Exponents& e) const {
  int total = 0;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] != 0)
      total += weight(vars[i]) * e[i];
  return total;
}

WeightFunction presentation_weights(int n, int e, int m) {
  return WeightFunction({{"X", -1}, {"Y", n}, {"Z", n * m + e}, {"S", 0}, {"T", 0}});
}

const VarSet& presentation_vars() {
  static const VarSet vars{"X", "Y", "Z", "S", "T"};
  return vars;
}

MultiPoly HomogeneousDecomposition::reassemble(const VarSet& vars) const {
  MultiPoly sum(vars);
  for (const auto& [deg, part] : components)
    sum += part;
  return sum;
}

HomogeneousDecomposition decompose(const MultiPoly& p, const WeightFunction& w) {
  std::map<int, MultiPoly::TermMap> buckets;
  for (const auto& [e, c] : p.terms())
    buckets[w.monomial_weight(p.vars(), e)].emplace(e, c);
  HomogeneousDecomposition out;
  for (auto& [deg, terms] : buckets)
    out.components.emplace(deg, MultiPoly(p.vars(), std::move(terms)));
  return out;
}

int weight_degree(const MultiPoly& p, const WeightFunction& w) {
  if (p.is_zero())
    throw Error("weight degree of the zero polynomial");
  int best = 0;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    int d = w.monomial_weight(p.vars(), e);
    best = first ? d : std::max(best, d);
    first = false;
  }
  return best;
}

TopComponent top_component(const MultiPoly& p, const WeightFunction& w) {
  if (p.is_zero())
    throw Error("top component of the zero polynomial");
  HomogeneousDecomposition dec = decompose(p, w);
  MultiPoly hat = dec.components.rbegin()->second;
  return {std::move(hat), std::move(dec)};
}

TopIdealReport check_top_ideal_pair(const MultiPoly& p, const MultiPoly& q, const WeightFunction& w) {
  TopIdealReport r{top_component(p, w).hat, top_component(q, w).hat, MultiPoly(p.vars()), false};
  r.gcd = gcd(r.hat_p, r.hat_q);
  r.certified = r.gcd.is_constant() && !r.gcd.is_zero();
  return r;
}

int omega_B(const LaurentPoly& p) {
  auto ord = p.x_order();
  if (!ord)
    throw Error("omega_B of the zero element");
  return -*ord;
}

} // namespace exo
