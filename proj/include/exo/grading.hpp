#pragma once

#include "exo/laurent_poly.hpp"
#include "exo/multi_poly.hpp"

#include <map>
#include <string>

namespace exo {

// Integer weights on variables; the degree of a polynomial is the maximum
// weight over its monomials.
class WeightFunction {
public:
  WeightFunction() = default;
  explicit WeightFunction(std::map<std::string, int, std::less<>> weights)
      : weights_(std::move(weights)) {}

  int weight(std::string_view var) const;
  const std::map<std::string, int, std::less<>>& weights() const { return weights_; }
  // Weight of a monomial of p's variable set; throws if a used variable has no weight.
  int monomial_weight(const VarSet& vars, const Exponents& e) const;

private:
  std::map<std::string, int, std::less<>> weights_;
};

// omega(X, Y, Z, S, T) = (-1, n, nm+e, 0, 0) on the presentation ring.
WeightFunction presentation_weights(int n, int e, int m);
const VarSet& presentation_vars();

struct HomogeneousDecomposition {
  std::map<int, MultiPoly> components; // degree -> nonzero homogeneous part
  MultiPoly reassemble(const VarSet& vars) const;
};

HomogeneousDecomposition decompose(const MultiPoly& p, const WeightFunction& w);

// Throw Error on the zero polynomial.
int weight_degree(const MultiPoly& p, const WeightFunction& w);

struct TopComponent {
  MultiPoly hat;
  HomogeneousDecomposition decomposition;
};
TopComponent top_component(const MultiPoly& p, const WeightFunction& w);

// Sufficient criterion for the ideal of top components of <P, Q> to be
// <hat P, hat Q>: gcd(hat P, hat Q) = 1.
struct TopIdealReport {
  MultiPoly hat_p;
  MultiPoly hat_q;
  MultiPoly gcd;
  bool certified = false;
};
TopIdealReport check_top_ideal_pair(const MultiPoly& p, const MultiPoly& q, const WeightFunction& w);

// Degree function on the Laurent realization: minus the x-adic order.
int omega_B(const LaurentPoly& p);

} // namespace exo
