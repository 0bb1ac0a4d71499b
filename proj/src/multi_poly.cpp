#include "exo/multi_poly.hpp"

#include "exo/errors.hpp"
#include "term_format.hpp"

#include <algorithm>
#include <utility>

namespace exo {

VarSet::VarSet(std::initializer_list<std::string> names)
    : VarSet(std::vector<std::string>(names)) {}

VarSet::VarSet(std::vector<std::string> names)
    : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {
  for (std::size_t i = 0; i < names_->size(); ++i)
    for (std::size_t j = i + 1; j < names_->size(); ++j)
      if ((*names_)[i] == (*names_)[j])
        throw VariableError("duplicate variable '" + (*names_)[i] + "'");
}

std::optional<std::size_t> VarSet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_->size(); ++i)
    if ((*names_)[i] == name)
      return i;
  return std::nullopt;
}

std::size_t VarSet::require(std::string_view name) const {
  auto i = index_of(name);
  if (!i)
    throw VariableError("unknown variable '" + std::string(name) + "'");
  return *i;
}

MultiPoly::MultiPoly(VarSet vars) : vars_(std::move(vars)) {}

MultiPoly::MultiPoly(VarSet vars, TermMap terms) : vars_(std::move(vars)), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first.size() != vars_.size())
      throw VariableError("exponent vector length does not match variable set");
    for (int e : it->first)
      if (e < 0)
        throw VariableError("negative exponent in polynomial");
    if (sgn(it->second) == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

MultiPoly MultiPoly::constant(const VarSet& vars, const Rational& c) {
  MultiPoly p(vars);
  if (sgn(c) != 0)
    p.terms_.emplace(Exponents(vars.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(const VarSet& vars, std::string_view name, int power) {
  Exponents e(vars.size(), 0);
  e[vars.require(name)] = power;
  return monomial(vars, std::move(e));
}

MultiPoly MultiPoly::monomial(const VarSet& vars, Exponents exps, const Rational& c) {
  TermMap t;
  t.emplace(std::move(exps), c);
  return MultiPoly(vars, std::move(t));
}

bool MultiPoly::is_constant() const {
  if (terms_.empty())
    return true;
  if (terms_.size() > 1)
    return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
}

Rational MultiPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::constant_term() const { return coefficient(Exponents(vars_.size(), 0)); }

int MultiPoly::total_degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int v : e)
      d += v;
    best = std::max(best, d);
  }
  return best;
}

int MultiPoly::degree_in(std::size_t var) const {
  int best = -1;
  for (const auto& [e, c] : terms_)
    best = std::max(best, e[var]);
  return best;
}

bool MultiPoly::depends_on(std::size_t var) const { return degree_in(var) > 0; }

void MultiPoly::check_same_vars(const MultiPoly& o) const {
  if (!(vars_ == o.vars_))
    throw VariableError("variable-set mismatch");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(*this);
  for (auto& [e, c] : r.terms_)
    c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_same_vars(o);
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0)
        terms_.erase(it);
    }
  }
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_same_vars(o);
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, -c);
    if (!inserted) {
      it->second -= c;
      if (sgn(it->second) == 0)
        terms_.erase(it);
    }
  }
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_same_vars(b);
  MultiPoly r(a.vars_);
  Exponents e(a.vars_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = ea[i] + eb[i];
      auto [it, inserted] = r.terms_.try_emplace(e, ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (sgn(it->second) == 0)
          r.terms_.erase(it);
      }
    }
  }
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_)
    v *= c;
  return *this;
}

MultiPoly MultiPoly::coefficient_in(std::size_t var, int k) const {
  MultiPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] != k)
      continue;
    Exponents f = e;
    f[var] = 0;
    r.terms_.emplace(std::move(f), c);
  }
  return r;
}

MultiPoly MultiPoly::shifted(const Exponents& shift) const {
  MultiPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    for (std::size_t i = 0; i < f.size(); ++i)
      f[i] += shift[i];
    r.terms_.emplace_hint(r.terms_.end(), std::move(f), c);
  }
  return r;
}

MultiPoly MultiPoly::rebased(const VarSet& target) const {
  if (target == vars_)
    return *this;
  std::vector<std::size_t> map(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto j = target.index_of(vars_[i]);
    if (!j) {
      if (depends_on(i))
        throw VariableError("variable '" + vars_[i] + "' missing from target variable set");
      map[i] = target.size();
    } else {
      map[i] = *j;
    }
  }
  TermMap out;
  for (const auto& [e, c] : terms_) {
    Exponents f(target.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (map[i] < target.size())
        f[map[i]] = e[i];
    out.emplace(std::move(f), c);
  }
  return MultiPoly(target, std::move(out));
}

std::string MultiPoly::to_string() const {
  if (terms_.empty())
    return "0";
  std::string out;
  bool first = true;
  std::vector<std::pair<std::string, int>> powers;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    powers.clear();
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (it->first[i] != 0)
        powers.emplace_back(vars_[i], it->first[i]);
    detail::append_term(out, it->second, powers, first);
    first = false;
  }
  return out;
}

MultiPoly pow(const MultiPoly& p, unsigned k) {
  MultiPoly result = MultiPoly::constant(p.vars(), 1);
  MultiPoly base = p;
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
