#pragma once

#include "exo/check.hpp"
#include "exo/domains.hpp"
#include "exo/laurent_poly.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace exo {

// A k-derivation of k[x,1/x,s,t], fixed by the images of x, s and t.
struct Derivation {
  LaurentPoly image_x;
  LaurentPoly image_s;
  LaurentPoly image_t;

  friend Derivation operator+(const Derivation& a, const Derivation& b) {
    return {a.image_x + b.image_x, a.image_s + b.image_s, a.image_t + b.image_t};
  }
  friend bool operator==(const Derivation&, const Derivation&) = default;
};

// D(p) = p_x D(x) + p_s D(s) + p_t D(t); covers D(1/x) = -D(x)/x^2.
LaurentPoly apply(const Derivation& D, const LaurentPoly& p);

struct StandardDerivations {
  Derivation d1; // s -> x^(n+e)
  Derivation d2; // t -> x^(n+e)
  // images of y and z by differentiation, and by the closed formulas
  LaurentPoly d1_y, d1_z, d2_y, d2_z;
  LaurentPoly d1_y_formula, d1_z_formula, d2_y_formula, d2_z_formula;
  bool formulas_hold = false;
};

// Newclass specs only; throws SpecError otherwise.
StandardDerivations standard_derivations(const Domain& domain);

// Least k with D^k(p) = 0; nullopt once k would exceed cap (inconclusive).
// cap must be >= 1.
std::optional<int> nilpotency_index(const Derivation& D, const LaurentPoly& p, int cap = 50);

struct DerivationDegree {
  // max over generators g with D(g) != 0 of omega_B(Dg) - omega_B(g);
  // nullopt for the zero derivation
  std::optional<int> degree;
  // an upper bound for the degree on all of B, via Leibniz
  bool is_upper_bound = true;
  int lemma_bound = 0; // -(n+e), or -n for russell specs
  std::map<std::string, int> per_generator;
};

// Throws Error naming the generator when some D(g) is not in B.
DerivationDegree derivation_degree(const Domain& domain, const Derivation& D);

// D(x), D(s), D(t) in x^(n+e) k[x,s,t]; D(y) in x^e B; D(z) in B.
std::vector<CheckResult> verify_restriction_ideals(const Domain& domain, const Derivation& D);

struct StructureReport {
  bool passed = false;
  Derivation delta; // D = x^(n+e) delta, delta(x) = 0
  std::string failure;
};

// Russell specs use x^n in place of x^(n+e).
StructureReport structure_check(const Domain& domain, const Derivation& D);

} // namespace exo
