#pragma once

#include "exo/laurent_poly.hpp"
#include "exo/multi_poly.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace exo {

using Bindings = std::map<std::string, LaurentPoly, std::less<>>;

// Image of p under the evaluation homomorphism sending each variable to its
// binding. Throws VariableError if a variable occurring in p is unbound.
LaurentPoly substitute(const MultiPoly& p, const Bindings& bindings);

MultiPoly partial_derivative(const MultiPoly& p, std::string_view var);
// var is one of "x", "s", "t".
LaurentPoly partial_derivative(const LaurentPoly& p, std::string_view var);

struct XSlice {
  int order;       // minimal x exponent
  MultiPoly slice; // coefficient of x^order, over (s, t)
};

// nullopt stands for the zero polynomial (order -infinity).
std::optional<XSlice> x_order_and_slice(const LaurentPoly& p);

// h with p = q*h, or nullopt when q does not divide p. q must be nonzero.
std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& q);
std::optional<LaurentPoly> divide_exact(const LaurentPoly& p, const LaurentPoly& q);

// Greatest common divisor, scaled so the lex-leading coefficient is 1.
// gcd(0, 0) is rejected.
MultiPoly gcd(const MultiPoly& p, const MultiPoly& q);

// Scales p so its lex-leading coefficient is 1 (zero stays zero).
MultiPoly make_monic(const MultiPoly& p);

} // namespace exo
