#include "exo/groebner.hpp"

#include "exo/errors.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace exo {

MonomialOrder MonomialOrder::weighted(const VarSet& vars, std::vector<int> weights) {
  if (weights.size() != vars.size())
    throw Error("weighted order needs one weight per variable");
  for (int w : weights)
    if (w < 0)
      throw Error("weighted order needs non-negative weights");
  return {Kind::weighted, vars, std::move(weights)};
}

bool MonomialOrder::degree_compatible() const {
  if (kind_ == Kind::grevlex)
    return true;
  if (kind_ == Kind::weighted)
    return std::all_of(weights_.begin(), weights_.end(), [&](int w) { return w == weights_[0]; }) &&
           !weights_.empty() && weights_[0] > 0;
  return false;
}

int MonomialOrder::compare(const Exponents& a, const Exponents& b) const {
  auto lex = [&]() {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i])
        return a[i] < b[i] ? -1 : 1;
    return 0;
  };
  switch (kind_) {
  case Kind::lex:
    return lex();
  case Kind::grevlex: {
    int da = 0, db = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db)
      return da < db ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i])
        return a[i] > b[i] ? -1 : 1;
    return 0;
  }
  case Kind::weighted: {
    long wa = 0, wb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      wa += static_cast<long>(weights_[i]) * a[i];
      wb += static_cast<long>(weights_[i]) * b[i];
    }
    if (wa != wb)
      return wa < wb ? -1 : 1;
    return lex();
  }
  }
  return 0;
}

namespace {

struct Term {
  Exponents mono;
  Rational coeff;
};

// Terms sorted by strictly decreasing monomial.
using Poly = std::vector<Term>;

Poly to_sorted(const MultiPoly& p, const MonomialOrder& order) {
  Poly out;
  out.reserve(p.size());
  for (const auto& [e, c] : p.terms())
    out.push_back({e, c});
  std::sort(out.begin(), out.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; });
  return out;
}

MultiPoly to_multi(const Poly& p, const VarSet& vars) {
  MultiPoly::TermMap t;
  for (const auto& term : p)
    t.emplace(term.mono, term.coeff);
  return MultiPoly(vars, std::move(t));
}

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i])
      return false;
  return true;
}

Exponents lcm(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = std::max(a[i], b[i]);
  return r;
}

Exponents quotient(const Exponents& num, const Exponents& den) {
  Exponents r(num.size());
  for (std::size_t i = 0; i < num.size(); ++i)
    r[i] = num[i] - den[i];
  return r;
}

bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0)
      return false;
  return true;
}

// (p from index `from`) - c * x^m * g
Poly sub_mul(const Poly& p, std::size_t from, const Rational& c, const Exponents& m, const Poly& g,
             const MonomialOrder& order) {
  Poly out;
  out.reserve(p.size() - from + g.size());
  std::size_t i = from, j = 0;
  Exponents shifted(m.size());
  auto shift = [&](const Exponents& e) {
    for (std::size_t k = 0; k < e.size(); ++k)
      shifted[k] = e[k] + m[k];
  };
  if (j < g.size())
    shift(g[j].mono);
  while (i < p.size() || j < g.size()) {
    int cmp;
    if (i == p.size())
      cmp = -1;
    else if (j == g.size())
      cmp = 1;
    else
      cmp = order.compare(p[i].mono, shifted);
    if (cmp > 0) {
      out.push_back(p[i++]);
    } else if (cmp < 0) {
      out.push_back({shifted, -c * g[j].coeff});
      if (++j < g.size())
        shift(g[j].mono);
    } else {
      Rational v = p[i].coeff - c * g[j].coeff;
      if (sgn(v) != 0)
        out.push_back({shifted, std::move(v)});
      ++i;
      if (++j < g.size())
        shift(g[j].mono);
    }
  }
  return out;
}

const Poly* find_reducer(const Exponents& mono, const std::vector<Poly>& basis, std::size_t skip) {
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (k != skip && !basis[k].empty() && divides(basis[k][0].mono, mono))
      return &basis[k];
  return nullptr;
}

// Full reduction of p by the basis (element `skip` excluded).
Poly reduce(Poly p, const std::vector<Poly>& basis, const MonomialOrder& order,
            std::size_t skip = static_cast<std::size_t>(-1)) {
  Poly rem;
  std::size_t i = 0;
  while (i < p.size()) {
    const Poly* g = find_reducer(p[i].mono, basis, skip);
    if (!g) {
      rem.push_back(p[i++]);
      continue;
    }
    Rational c = p[i].coeff / (*g)[0].coeff;
    Exponents m = quotient(p[i].mono, (*g)[0].mono);
    p = sub_mul(p, i, c, m, *g, order);
    i = 0;
  }
  return rem;
}

void make_monic(Poly& p) {
  if (p.empty() || p[0].coeff == 1)
    return;
  Rational inv = 1 / p[0].coeff;
  for (auto& t : p)
    t.coeff *= inv;
}

Poly s_polynomial(const Poly& f, const Poly& g, const MonomialOrder& order) {
  Exponents l = lcm(f[0].mono, g[0].mono);
  Poly zero;
  Poly a = sub_mul(zero, 0, -1 / f[0].coeff, quotient(l, f[0].mono), f, order);
  return sub_mul(a, 0, 1 / g[0].coeff, quotient(l, g[0].mono), g, order);
}

struct Pair {
  std::size_t i, j;
  Exponents lcm;
};

std::vector<Poly> groebner_sorted(const std::vector<MultiPoly>& gens, const MonomialOrder& order) {
  std::vector<Poly> basis;
  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> pending_set;

  auto add = [&](Poly h) {
    make_monic(h);
    std::size_t k = basis.size();
    for (std::size_t i = 0; i < k; ++i) {
      if (basis[i].empty() || coprime(basis[i][0].mono, h[0].mono))
        continue;
      pending.push_back({i, k, lcm(basis[i][0].mono, h[0].mono)});
      pending_set.insert({i, k});
    }
    basis.push_back(std::move(h));
  };

  for (const auto& g : gens) {
    if (!(g.vars() == order.vars()))
      throw VariableError("generator variable set differs from the monomial order");
    Poly p = reduce(to_sorted(g, order), basis, order);
    if (!p.empty())
      add(std::move(p));
  }
  if (basis.empty())
    throw Error("buchberger: all generators are zero");

  while (!pending.empty()) {
    auto best = std::min_element(pending.begin(), pending.end(), [&](const Pair& a, const Pair& b) {
      return order.compare(a.lcm, b.lcm) < 0;
    });
    Pair pr = *best;
    pending.erase(best);
    pending_set.erase({pr.i, pr.j});

    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j || basis[k].empty() || !divides(basis[k][0].mono, pr.lcm))
        continue;
      auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      chain = !pending_set.count(key(pr.i, k)) && !pending_set.count(key(pr.j, k));
    }
    if (chain)
      continue;

    Poly h = reduce(s_polynomial(basis[pr.i], basis[pr.j], order), basis, order);
    if (!h.empty())
      add(std::move(h));
  }

  // Minimal basis: drop elements whose leading monomial is divisible by
  // another's (ties keep the earlier one).
  std::vector<Poly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < basis.size() && !redundant; ++k) {
      if (k == i || !divides(basis[k][0].mono, basis[i][0].mono))
        continue;
      redundant = basis[k][0].mono != basis[i][0].mono || k < i;
    }
    if (!redundant)
      minimal.push_back(basis[i]);
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    minimal[i] = reduce(minimal[i], minimal, order, i);
    make_monic(minimal[i]);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const Poly& a, const Poly& b) { return order.compare(a[0].mono, b[0].mono) < 0; });
  return minimal;
}

} // namespace

std::vector<MultiPoly> buchberger(const std::vector<MultiPoly>& gens, const MonomialOrder& order) {
  std::vector<MultiPoly> out;
  for (const auto& p : groebner_sorted(gens, order))
    out.push_back(to_multi(p, order.vars()));
  return out;
}

Exponents leading_monomial(const MultiPoly& p, const MonomialOrder& order) {
  if (p.is_zero())
    throw Error("leading monomial of zero");
  const Exponents* best = nullptr;
  for (const auto& [e, c] : p.terms())
    if (!best || order.compare(e, *best) > 0)
      best = &e;
  return *best;
}

Ideal::Ideal(std::vector<MultiPoly> generators, const MonomialOrder& order)
    : generators_(std::move(generators)), order_(order), basis_(buchberger(generators_, order_)) {
  for (const auto& g : basis_)
    leads_.push_back(leading_monomial(g, order_));
}

MultiPoly Ideal::normal_form(const MultiPoly& p) const {
  if (!(p.vars() == order_.vars()))
    throw VariableError("variable-set mismatch");
  std::vector<Poly> sorted;
  sorted.reserve(basis_.size());
  for (const auto& g : basis_)
    sorted.push_back(to_sorted(g, order_));
  return to_multi(reduce(to_sorted(p, order_), sorted, order_), order_.vars());
}

bool Ideal::is_unit() const { return basis_.size() == 1 && basis_[0].is_constant(); }

bool Ideal::in_leading_ideal(const Exponents& e) const {
  for (const auto& l : leads_)
    if (divides(l, e))
      return true;
  return false;
}

std::size_t Ideal::leading_monomials_up_to(int total_degree) const {
  std::size_t count = 0;
  for (const auto& e : monomials_up_to(order_.vars().size(), total_degree))
    if (in_leading_ideal(e))
      ++count;
  return count;
}

bool Ideal::verify() const {
  std::vector<Poly> sorted;
  for (const auto& g : basis_)
    sorted.push_back(to_sorted(g, order_));
  for (const auto& g : generators_)
    if (!reduce(to_sorted(g, order_), sorted, order_).empty())
      return false;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i].empty() || sorted[i][0].coeff != 1)
      return false;
    // inter-reduced: no term of g_i is divisible by another leading monomial
    for (const auto& term : sorted[i])
      for (std::size_t k = 0; k < sorted.size(); ++k)
        if (k != i && divides(sorted[k][0].mono, term.mono))
          return false;
    for (std::size_t j = i + 1; j < sorted.size(); ++j)
      if (!reduce(s_polynomial(sorted[i], sorted[j], order_), sorted, order_).empty())
        return false;
  }
  return true;
}

MultiPoly normal_form(const MultiPoly& p, const Ideal& ideal) { return ideal.normal_form(p); }

bool ideal_membership(const MultiPoly& p, const Ideal& ideal) { return ideal.contains(p); }

bool ideal_equal(const Ideal& a, const Ideal& b) {
  if (!(a.vars() == b.vars()))
    throw VariableError("variable-set mismatch");
  for (const auto& g : a.generators())
    if (!b.contains(g))
      return false;
  for (const auto& g : b.generators())
    if (!a.contains(g))
      return false;
  return true;
}

std::vector<Exponents> monomials_up_to(std::size_t nvars, int bound) {
  std::vector<Exponents> out;
  Exponents cur(nvars, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i == nvars) {
      out.push_back(cur);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      cur[i] = k;
      self(self, i + 1, left - k);
    }
    cur[i] = 0;
  };
  if (bound >= 0)
    rec(rec, 0, bound);
  return out;
}

} // namespace exo
