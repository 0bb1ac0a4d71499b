#pragma once

#include "exo/multi_poly.hpp"

#include <cstddef>
#include <vector>

namespace exo {

// Monomial order over the variable order of a VarSet (first variable is the
// largest). Weighted orders compare the weight first and break ties by lex.
class MonomialOrder {
public:
  enum class Kind { lex, grevlex, weighted };

  static MonomialOrder lex(const VarSet& vars) { return {Kind::lex, vars, {}}; }
  static MonomialOrder grevlex(const VarSet& vars) { return {Kind::grevlex, vars, {}}; }
  // Weights must be non-negative, one per variable.
  static MonomialOrder weighted(const VarSet& vars, std::vector<int> weights);

  Kind kind() const { return kind_; }
  const VarSet& vars() const { return vars_; }
  const std::vector<int>& weights() const { return weights_; }
  // True when every monomial of total degree <= D precedes those of degree > D.
  bool degree_compatible() const;

  // <0, 0, >0 as a is smaller, equal, larger than b.
  int compare(const Exponents& a, const Exponents& b) const;
  bool less(const Exponents& a, const Exponents& b) const { return compare(a, b) < 0; }

private:
  MonomialOrder(Kind kind, VarSet vars, std::vector<int> weights)
      : kind_(kind), vars_(std::move(vars)), weights_(std::move(weights)) {}

  Kind kind_;
  VarSet vars_;
  std::vector<int> weights_;
};

// Reduced, monic Groebner basis sorted by increasing leading monomial.
// Throws Error if every generator is zero.
std::vector<MultiPoly> buchberger(const std::vector<MultiPoly>& gens, const MonomialOrder& order);

// Leading monomial of a nonzero polynomial with respect to `order`.
Exponents leading_monomial(const MultiPoly& p, const MonomialOrder& order);

// An ideal of a polynomial ring together with its reduced basis, computed on
// construction. Values are immutable afterwards.
class Ideal {
public:
  Ideal(std::vector<MultiPoly> generators, const MonomialOrder& order);

  const std::vector<MultiPoly>& generators() const { return generators_; }
  const std::vector<MultiPoly>& basis() const { return basis_; }
  const MonomialOrder& order() const { return order_; }
  const VarSet& vars() const { return order_.vars(); }

  MultiPoly normal_form(const MultiPoly& p) const;
  bool contains(const MultiPoly& p) const { return normal_form(p).is_zero(); }
  bool is_unit() const;
  // Whether the monomial lies in the ideal of leading monomials.
  bool in_leading_ideal(const Exponents& e) const;
  // Number of monomials of total degree <= bound that lie in the leading
  // ideal; equals dim(I ∩ k[x]_{<=bound}) for degree-compatible orders.
  std::size_t leading_monomials_up_to(int total_degree) const;

  // Re-checks the cached basis: generators reduce to zero, all S-polynomials
  // reduce to zero, and the basis is monic and inter-reduced.
  bool verify() const;

private:
  std::vector<MultiPoly> generators_;
  MonomialOrder order_;
  std::vector<MultiPoly> basis_;
  std::vector<Exponents> leads_;
};

MultiPoly normal_form(const MultiPoly& p, const Ideal& ideal);
bool ideal_membership(const MultiPoly& p, const Ideal& ideal);
// Mutual membership of generators; both ideals must share variables and order.
bool ideal_equal(const Ideal& a, const Ideal& b);

// All exponent vectors over `nvars` variables with total degree <= bound,
// in lex order.
std::vector<Exponents> monomials_up_to(std::size_t nvars, int bound);

} // namespace exo
