#include "exo/rational.hpp"

#include "exo/errors.hpp"
#include "term_format.hpp"

#include <cctype>

namespace exo {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty())
    return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return false;
  return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("malformed rational '" + std::string(text) + "'", 0);
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0)
    throw ParseError("zero denominator in '" + std::string(text) + "'", 0);
  Rational q(n, d);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

namespace detail {

void append_term(std::string& out, const Rational& c,
                 const std::vector<std::pair<std::string, int>>& powers, bool first) {
  bool negative = sgn(c) < 0;
  if (first)
    out += negative ? "-" : "";
  else
    out += negative ? " - " : " + ";
  Rational mag = abs(c);
  bool need_star = false;
  if (powers.empty() || mag != 1) {
    out += mag.get_str();
    need_star = true;
  }
  for (const auto& [name, e] : powers) {
    if (need_star)
      out += '*';
    out += name;
    if (e != 1) {
      out += '^';
      out += std::to_string(e);
    }
    need_star = true;
  }
}

} // namespace detail
} // namespace exo
