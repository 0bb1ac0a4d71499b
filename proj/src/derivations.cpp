#include "exo/derivations.hpp"

#include "exo/errors.hpp"
#include "exo/grading.hpp"
#include "exo/poly_ops.hpp"

namespace exo {

namespace {

int shift_exponent(const DomainSpec& spec) { return spec.n() + (spec.is_newclass() ? spec.e() : 0); }

// In x^k k[x,s,t]?
bool in_x_power_ideal(const LaurentPoly& p, int k) { return p.is_zero() || *p.x_order() >= k; }

std::string name_of(const char* what, const LaurentPoly& p) { return std::string(what) + " = " + p.to_string(); }

} // namespace

LaurentPoly apply(const Derivation& D, const LaurentPoly& p) {
  LaurentPoly out;
  if (!D.image_x.is_zero())
    out += partial_derivative(p, "x") * D.image_x;
  if (!D.image_s.is_zero())
    out += partial_derivative(p, "s") * D.image_s;
  if (!D.image_t.is_zero())
    out += partial_derivative(p, "t") * D.image_t;
  return out;
}

StandardDerivations standard_derivations(const Domain& domain) {
  const DomainSpec& spec = domain.spec;
  if (!spec.is_newclass())
    throw SpecError("standard derivations are defined for newclass specs");
  const int n = spec.n(), e = spec.e(), m = spec.m(), d = spec.d(), r = spec.r();
  StandardDerivations out;
  LaurentPoly lead = LaurentPoly::x_power(n + e);
  out.d1 = {LaurentPoly(), lead, LaurentPoly()};
  out.d2 = {LaurentPoly(), LaurentPoly(), lead};
  out.d1_y = apply(out.d1, domain.y);
  out.d1_z = apply(out.d1, domain.z);
  out.d2_y = apply(out.d2, domain.y);
  out.d2_z = apply(out.d2, domain.z);

  LaurentPoly x = LaurentPoly::x_power(1);
  LaurentPoly q = LaurentPoly::from_multi(spec.Q());
  // d s^(d-1) + x Q_s and r t^(r-1) + x Q_t
  LaurentPoly ds = LaurentPoly::monomial({0, d - 1, 0}, d) + x * partial_derivative(q, "s");
  LaurentPoly dt = LaurentPoly::monomial({0, 0, r - 1}, r) + x * partial_derivative(q, "t");
  LaurentPoly ym1 = pow(domain.y, m - 1) * Rational(m);
  out.d1_y_formula = LaurentPoly::x_power(e) * ds;
  out.d1_z_formula = ym1 * ds - LaurentPoly::x_power(n);
  out.d2_y_formula = LaurentPoly::x_power(e) * dt;
  out.d2_z_formula = ym1 * dt;
  out.formulas_hold = out.d1_y == out.d1_y_formula && out.d1_z == out.d1_z_formula &&
                      out.d2_y == out.d2_y_formula && out.d2_z == out.d2_z_formula;
  return out;
}

std::optional<int> nilpotency_index(const Derivation& D, const LaurentPoly& p, int cap) {
  if (cap < 1)
    throw Error("nilpotency cap must be >= 1");
  LaurentPoly cur = p;
  for (int k = 0; k <= cap; ++k) {
    if (cur.is_zero())
      return k;
    if (k < cap)
      cur = apply(D, cur);
  }
  return std::nullopt;
}

DerivationDegree derivation_degree(const Domain& domain, const Derivation& D) {
  DerivationDegree out;
  out.lemma_bound = -shift_exponent(domain.spec);
  for (const auto& [name, g] : domain.generators()) {
    LaurentPoly image = apply(D, g);
    if (!is_member(domain, image))
      throw Error("derivation does not map " + name + " into B: D(" + name + ") = " + image.to_string());
    if (image.is_zero())
      continue;
    int deg = omega_B(image) - omega_B(g);
    out.per_generator[name] = deg;
    if (!out.degree || deg > *out.degree)
      out.degree = deg;
  }
  return out;
}

std::vector<CheckResult> verify_restriction_ideals(const Domain& domain, const Derivation& D) {
  const char* lemma = "Cor LND-restricts-to";
  const DomainSpec& spec = domain.spec;
  const int k = shift_exponent(spec);
  const int e = spec.is_newclass() ? spec.e() : 0;
  std::vector<CheckResult> out;
  const std::string ideal = "x^" + std::to_string(k) + " k[x,s,t]";
  auto base_check = [&](const char* var, const LaurentPoly& image) {
    CheckResult c{std::string("D(") + var + ") in " + ideal, lemma, in_x_power_ideal(image, k), "", ""};
    if (!c.passed)
      c.witness = image.to_string();
    c.detail = name_of((std::string("D(") + var + ")").c_str(), image);
    out.push_back(std::move(c));
  };
  base_check("x", D.image_x);
  base_check("s", D.image_s);
  base_check("t", D.image_t);

  LaurentPoly dy = apply(D, domain.y);
  auto res = membership(domain, dy.shifted_x(-e));
  CheckResult cy{"D(y) in x^" + std::to_string(e) + " B", lemma, res.member, "", name_of("D(y)", dy)};
  if (!res.member)
    cy.witness = dy.to_string();
  out.push_back(std::move(cy));

  if (spec.is_newclass()) {
    LaurentPoly dz = apply(D, domain.z);
    bool ok = is_member(domain, dz);
    out.push_back({"D(z) in B", lemma, ok, ok ? "" : dz.to_string(), name_of("D(z)", dz)});
  }
  return out;
}

StructureReport structure_check(const Domain& domain, const Derivation& D) {
  StructureReport out;
  const int k = shift_exponent(domain.spec);
  if (!D.image_x.is_zero()) {
    out.failure = "D(x) = " + D.image_x.to_string() + " is not zero";
    return out;
  }
  auto lower = [&](const LaurentPoly& image, const char* var) -> std::optional<LaurentPoly> {
    LaurentPoly q = image.shifted_x(-k);
    if (!q.is_polynomial()) {
      out.failure = std::string("D(") + var + ") = " + image.to_string() + " is not divisible by x^" +
                    std::to_string(k) + " in k[x,s,t]";
      return std::nullopt;
    }
    return q;
  };
  auto ds = lower(D.image_s, "s");
  if (!ds)
    return out;
  auto dt = lower(D.image_t, "t");
  if (!dt)
    return out;
  out.delta = {LaurentPoly(), *ds, *dt};
  out.passed = true;
  return out;
}

} // namespace exo
