#include "exo/poly_ops.hpp"

#include "exo/errors.hpp"

#include <utility>
#include <vector>

namespace exo {

LaurentPoly substitute(const MultiPoly& p, const Bindings& bindings) {
  const VarSet& vars = p.vars();
  std::vector<const LaurentPoly*> image(vars.size(), nullptr);
  for (std::size_t i = 0; i < vars.size(); ++i) {
    auto it = bindings.find(vars[i]);
    if (it != bindings.end())
      image[i] = &it->second;
    else if (p.depends_on(i))
      throw VariableError("missing binding for variable '" + vars[i] + "'");
  }
  // powers[i][k] = image[i]^k, grown on demand
  std::vector<std::vector<LaurentPoly>> powers(vars.size());
  auto power = [&](std::size_t i, int k) -> const LaurentPoly& {
    auto& cache = powers[i];
    if (cache.empty())
      cache.emplace_back(1);
    while (static_cast<int>(cache.size()) <= k)
      cache.push_back(cache.back() * *image[i]);
    return cache[k];
  };
  LaurentPoly result;
  for (const auto& [e, c] : p.terms()) {
    LaurentPoly term(c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0)
        term *= power(i, e[i]);
    result += term;
  }
  return result;
}

MultiPoly partial_derivative(const MultiPoly& p, std::string_view var) {
  std::size_t v = p.vars().require(var);
  MultiPoly::TermMap out;
  for (const auto& [e, c] : p.terms()) {
    if (e[v] == 0)
      continue;
    Exponents f = e;
    f[v] -= 1;
    out.emplace(std::move(f), c * e[v]);
  }
  return MultiPoly(p.vars(), std::move(out));
}

LaurentPoly partial_derivative(const LaurentPoly& p, std::string_view var) {
  int which = var == "x" ? 0 : var == "s" ? 1 : var == "t" ? 2 : -1;
  if (which < 0)
    throw VariableError("unknown variable '" + std::string(var) + "'");
  LaurentPoly::TermMap out;
  for (const auto& [m, c] : p.terms()) {
    LaurentMonomial d = m;
    int k = which == 0 ? m.x : which == 1 ? m.s : m.t;
    if (k == 0)
      continue;
    (which == 0 ? d.x : which == 1 ? d.s : d.t) -= 1;
    out.emplace(d, c * k);
  }
  return LaurentPoly(std::move(out));
}

std::optional<XSlice> x_order_and_slice(const LaurentPoly& p) {
  auto ord = p.x_order();
  if (!ord)
    return std::nullopt;
  return XSlice{*ord, p.x_coefficient(*ord)};
}

std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& q) {
  if (q.is_zero())
    throw Error("division by the zero polynomial");
  if (!(p.vars() == q.vars()))
    throw VariableError("variable-set mismatch");
  MultiPoly quotient(p.vars());
  if (p.is_zero())
    return quotient;
  const auto& [lq, cq] = q.leading_term();
  MultiPoly rem = p;
  Exponents shift(lq.size());
  while (!rem.is_zero()) {
    const auto& [lr, cr] = rem.leading_term();
    for (std::size_t i = 0; i < lq.size(); ++i) {
      shift[i] = lr[i] - lq[i];
      if (shift[i] < 0)
        return std::nullopt;
    }
    Rational c = cr / cq;
    quotient += MultiPoly::monomial(p.vars(), shift, c);
    rem -= q.shifted(shift) * c;
  }
  if (!(quotient * q == p))
    throw Error("internal error: exact division check failed");
  return quotient;
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& p, const LaurentPoly& q) {
  if (q.is_zero())
    throw Error("division by the zero polynomial");
  if (p.is_zero())
    return LaurentPoly();
  int op = *p.x_order();
  int oq = *q.x_order();
  auto h = divide_exact(p.shifted_x(-op).to_multi(), q.shifted_x(-oq).to_multi());
  if (!h)
    return std::nullopt;
  return LaurentPoly::from_multi(*h).shifted_x(op - oq);
}

MultiPoly make_monic(const MultiPoly& p) {
  if (p.is_zero())
    return p;
  Rational inv = 1 / p.leading_term().second;
  return p * inv;
}

namespace {

std::optional<std::size_t> main_variable(const MultiPoly& p, const MultiPoly& q) {
  for (std::size_t i = 0; i < p.vars().size(); ++i)
    if (p.depends_on(i) || q.depends_on(i))
      return i;
  return std::nullopt;
}

MultiPoly gcd_rec(const MultiPoly& p, const MultiPoly& q);

// gcd of the coefficients of p viewed as a polynomial in var
MultiPoly content(const MultiPoly& p, std::size_t var) {
  MultiPoly g(p.vars());
  for (int k = p.degree_in(var); k >= 0; --k) {
    MultiPoly c = p.coefficient_in(var, k);
    if (c.is_zero())
      continue;
    g = gcd_rec(g, c);
    if (g.is_constant())
      return MultiPoly::constant(p.vars(), 1);
  }
  return g;
}

MultiPoly primitive_part(const MultiPoly& p, std::size_t var) {
  if (p.is_zero())
    return p;
  return *divide_exact(p, content(p, var));
}

MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, std::size_t var) {
  int db = b.degree_in(var);
  MultiPoly lb = b.coefficient_in(var, db);
  MultiPoly r = a;
  Exponents shift(a.vars().size(), 0);
  while (!r.is_zero() && r.degree_in(var) >= db) {
    int dr = r.degree_in(var);
    MultiPoly lr = r.coefficient_in(var, dr);
    shift[var] = dr - db;
    r = lb * r - lr * b.shifted(shift);
  }
  return r;
}

MultiPoly gcd_rec(const MultiPoly& p, const MultiPoly& q) {
  if (p.is_zero())
    return make_monic(q);
  if (q.is_zero())
    return make_monic(p);
  auto v = main_variable(p, q);
  if (!v)
    return MultiPoly::constant(p.vars(), 1);
  std::size_t var = *v;
  if (!q.depends_on(var))
    return gcd_rec(content(p, var), q);
  if (!p.depends_on(var))
    return gcd_rec(p, content(q, var));

  MultiPoly cp = content(p, var);
  MultiPoly cq = content(q, var);
  MultiPoly c = gcd_rec(cp, cq);
  MultiPoly a = *divide_exact(p, cp);
  MultiPoly b = *divide_exact(q, cq);
  if (a.degree_in(var) < b.degree_in(var))
    std::swap(a, b);
  MultiPoly g(p.vars());
  for (;;) {
    MultiPoly r = pseudo_remainder(a, b, var);
    if (r.is_zero()) {
      g = b;
      break;
    }
    if (r.degree_in(var) == 0) {
      g = MultiPoly::constant(p.vars(), 1);
      break;
    }
    a = std::move(b);
    b = primitive_part(r, var);
  }
  return make_monic(c * primitive_part(g, var));
}

} // namespace

MultiPoly gcd(const MultiPoly& p, const MultiPoly& q) {
  if (!(p.vars() == q.vars()))
    throw VariableError("variable-set mismatch");
  if (p.is_zero() && q.is_zero())
    throw Error("gcd(0, 0) is undefined");
  return gcd_rec(p, q);
}

} // namespace exo
