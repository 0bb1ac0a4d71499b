#pragma once

#include "exo/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace exo::detail {

// Appends one term of a sum in the expression grammar. `powers` lists
// (variable, exponent) pairs with nonzero exponents.
void append_term(std::string& out, const Rational& c,
                 const std::vector<std::pair<std::string, int>>& powers, bool first);

} // namespace exo::detail
