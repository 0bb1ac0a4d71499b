#pragma once

#include "exo/laurent_poly.hpp"
#include "exo/multi_poly.hpp"

#include <string_view>
#include <variant>

namespace exo {

// Grammar (whitespace insignificant):
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := coefficient | variable ['^' ['-'] digits] | '(' expr ')' ['^' digits]
// Coefficients are integers or a/b. Negative exponents are accepted only on
// x and only when parsing into the Laurent ring.
MultiPoly parse_multi(std::string_view text, const VarSet& vars);
LaurentPoly parse_laurent(std::string_view text);

// With allow_negative_x the result is a LaurentPoly and `vars` must be a
// subset of {x, s, t}.
std::variant<MultiPoly, LaurentPoly> parse_poly(std::string_view text, const VarSet& vars,
                                                bool allow_negative_x);

} // namespace exo
