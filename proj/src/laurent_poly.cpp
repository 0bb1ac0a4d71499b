#include "exo/laurent_poly.hpp"

#include "exo/errors.hpp"
#include "term_format.hpp"

#include <algorithm>
#include <utility>

namespace exo {

const VarSet& xst_vars() {
  static const VarSet vars{"x", "s", "t"};
  return vars;
}

const VarSet& st_vars() {
  static const VarSet vars{"s", "t"};
  return vars;
}

LaurentPoly::LaurentPoly(TermMap terms) : terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first.s < 0 || it->first.t < 0)
      throw VariableError("negative exponent on s or t");
    if (sgn(it->second) == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

LaurentPoly::LaurentPoly(const Rational& c) {
  if (sgn(c) != 0)
    terms_.emplace(LaurentMonomial{}, c);
}

LaurentPoly LaurentPoly::monomial(LaurentMonomial m, const Rational& c) {
  TermMap t;
  t.emplace(m, c);
  return LaurentPoly(std::move(t));
}

LaurentPoly LaurentPoly::from_multi(const MultiPoly& p) {
  const VarSet& v = p.vars();
  std::size_t none = v.size();
  std::size_t ix = v.index_of("x").value_or(none);
  std::size_t is = v.index_of("s").value_or(none);
  std::size_t it = v.index_of("t").value_or(none);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (i != ix && i != is && i != it && p.depends_on(i))
      throw VariableError("variable '" + v[i] + "' has no Laurent image");
  TermMap out;
  for (const auto& [e, c] : p.terms()) {
    LaurentMonomial m{ix < none ? e[ix] : 0, is < none ? e[is] : 0, it < none ? e[it] : 0};
    out.emplace(m, c);
  }
  return LaurentPoly(std::move(out));
}

Rational LaurentPoly::coefficient(const LaurentMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> LaurentPoly::x_order() const {
  if (terms_.empty())
    return std::nullopt;
  return terms_.begin()->first.x;
}

std::optional<int> LaurentPoly::x_top() const {
  if (terms_.empty())
    return std::nullopt;
  return terms_.rbegin()->first.x;
}

int LaurentPoly::max_st_degree() const {
  int best = -1;
  for (const auto& [m, c] : terms_)
    best = std::max(best, m.st_degree());
  return best;
}

bool LaurentPoly::is_polynomial() const { return terms_.empty() || terms_.begin()->first.x >= 0; }

MultiPoly LaurentPoly::to_multi() const {
  if (!is_polynomial())
    throw VariableError("Laurent polynomial has a negative power of x");
  MultiPoly::TermMap out;
  for (const auto& [m, c] : terms_)
    out.emplace(Exponents{m.x, m.s, m.t}, c);
  return MultiPoly(xst_vars(), std::move(out));
}

MultiPoly LaurentPoly::x_coefficient(int k) const {
  MultiPoly::TermMap out;
  auto lo = terms_.lower_bound(LaurentMonomial{k, 0, 0});
  for (auto it = lo; it != terms_.end() && it->first.x == k; ++it)
    out.emplace(Exponents{it->first.s, it->first.t}, it->second);
  return MultiPoly(st_vars(), std::move(out));
}

LaurentPoly LaurentPoly::shifted_x(int k) const {
  LaurentPoly r;
  for (const auto& [m, c] : terms_)
    r.terms_.emplace_hint(r.terms_.end(), LaurentMonomial{m.x + k, m.s, m.t}, c);
  return r;
}

LaurentPoly LaurentPoly::below_x(int bound) const {
  LaurentPoly r;
  auto end = terms_.lower_bound(LaurentMonomial{bound, 0, 0});
  r.terms_.insert(terms_.begin(), end);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(*this);
  for (auto& [m, c] : r.terms_)
    c = -c;
  return r;
}

void LaurentPoly::add_scaled(const LaurentPoly& o, const Rational& scale) {
  if (sgn(scale) == 0)
    return;
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, c * scale);
    if (!inserted) {
      it->second += c * scale;
      if (sgn(it->second) == 0)
        terms_.erase(it);
    }
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  add_scaled(o, 1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  add_scaled(o, -1);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      auto [it, inserted] = r.terms_.try_emplace(ma + mb, ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (sgn(it->second) == 0)
          r.terms_.erase(it);
      }
    }
  }
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_)
    v *= c;
  return *this;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty())
    return "0";
  std::string out;
  bool first = true;
  std::vector<std::pair<std::string, int>> powers;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    powers.clear();
    if (it->first.x != 0)
      powers.emplace_back("x", it->first.x);
    if (it->first.s != 0)
      powers.emplace_back("s", it->first.s);
    if (it->first.t != 0)
      powers.emplace_back("t", it->first.t);
    detail::append_term(out, it->second, powers, first);
    first = false;
  }
  return out;
}

LaurentPoly pow(const LaurentPoly& p, unsigned k) {
  LaurentPoly result(1);
  LaurentPoly base = p;
  while (k > 0) {
    if (k & 1u)
      result *= base;
    k >>= 1;
    if (k > 0)
      base *= base;
  }
  return result;
}

} // namespace exo
