#include "exo/parser.hpp"

#include "exo/errors.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace exo {

namespace {

constexpr int kMaxExponent = 100000;

// Exponent vectors here may hold negative entries for the Laurent variable.
using Terms = std::map<std::vector<int>, Rational>;

void accumulate(Terms& acc, const std::vector<int>& e, const Rational& c) {
  auto [it, inserted] = acc.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0)
      acc.erase(it);
  }
}

Terms multiply(const Terms& a, const Terms& b) {
  Terms r;
  std::vector<int> e;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      e.resize(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = ea[i] + eb[i];
      accumulate(r, e, ca * cb);
    }
  return r;
}

class Parser {
public:
  Parser(std::string_view text, const VarSet& vars, std::optional<std::size_t> laurent_var)
      : text_(text), vars_(vars), laurent_var_(laurent_var) {}

  Terms parse() {
    Terms r = expr();
    skip_ws();
    if (pos_ != text_.size())
      fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Terms expr() {
    skip_ws();
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    Terms acc = term();
    if (negate)
      for (auto& [e, c] : acc)
        c = -c;
    for (;;) {
      if (accept('+')) {
        for (const auto& [e, c] : term())
          accumulate(acc, e, c);
      } else if (accept('-')) {
        for (const auto& [e, c] : term())
          accumulate(acc, e, -c);
      } else {
        return acc;
      }
    }
  }

  Terms term() {
    Terms acc = factor();
    while (accept('*'))
      acc = multiply(acc, factor());
    return acc;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  int exponent(bool allow_negative) {
    skip_ws();
    std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    std::string d = digits();
    if (d.empty())
      fail("expected exponent digits");
    if (d.size() > 6 || std::stoi(d) > kMaxExponent)
      fail("exponent too large");
    if (negative && !allow_negative) {
      pos_ = start;
      fail("negative exponent on a non-Laurent variable");
    }
    return negative ? -std::stoi(d) : std::stoi(d);
  }

  Terms factor() {
    skip_ws();
    if (pos_ >= text_.size())
      fail("unexpected end of input");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      std::string den = "1";
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        den = digits();
        if (den.empty())
          fail("expected denominator digits");
      }
      Integer d(den, 10);
      if (d == 0)
        fail("zero denominator");
      Rational q(Integer(num, 10), d);
      q.canonicalize();
      Terms r;
      accumulate(r, std::vector<int>(vars_.size(), 0), q);
      return r;
    }
    if (c == '(') {
      ++pos_;
      Terms inner = expr();
      if (!accept(')'))
        fail("expected ')'");
      if (accept('^')) {
        int k = exponent(false);
        Terms r;
        accumulate(r, std::vector<int>(vars_.size(), 0), 1);
        for (int i = 0; i < k; ++i)
          r = multiply(r, inner);
        return r;
      }
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto idx = vars_.index_of(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      int k = 1;
      if (accept('^'))
        k = exponent(laurent_var_ && *laurent_var_ == *idx);
      std::vector<int> e(vars_.size(), 0);
      e[*idx] = k;
      Terms r;
      accumulate(r, e, 1);
      return r;
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const VarSet& vars_;
  std::optional<std::size_t> laurent_var_;
  std::size_t pos_ = 0;
};

} // namespace

MultiPoly parse_multi(std::string_view text, const VarSet& vars) {
  Terms t = Parser(text, vars, std::nullopt).parse();
  return MultiPoly(vars, MultiPoly::TermMap(t.begin(), t.end()));
}

LaurentPoly parse_laurent(std::string_view text) {
  const VarSet& vars = xst_vars();
  Terms t = Parser(text, vars, std::size_t{0}).parse();
  LaurentPoly::TermMap out;
  for (const auto& [e, c] : t)
    out.emplace(LaurentMonomial{e[0], e[1], e[2]}, c);
  return LaurentPoly(std::move(out));
}

std::variant<MultiPoly, LaurentPoly> parse_poly(std::string_view text, const VarSet& vars,
                                                bool allow_negative_x) {
  if (!allow_negative_x)
    return parse_multi(text, vars);
  for (const auto& name : vars.names())
    if (name != "x" && name != "s" && name != "t")
      throw VariableError("Laurent parsing only supports the variables x, s, t");
  auto x = vars.index_of("x");
  Terms t = Parser(text, vars, x).parse();
  LaurentPoly::TermMap out;
  auto get = [&](const std::vector<int>& e, const char* name) {
    auto i = vars.index_of(name);
    return i ? e[*i] : 0;
  };
  for (const auto& [e, c] : t)
    out.emplace(LaurentMonomial{get(e, "x"), get(e, "s"), get(e, "t")}, c);
  return LaurentPoly(std::move(out));
}

} // namespace exo
