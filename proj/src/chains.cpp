#include "exo/chains.hpp"

#include "exo/errors.hpp"
#include "exo/poly_ops.hpp"

#include <algorithm>

namespace exo {

const char* const item2_note =
    "item (2) read with N = n*m0 + n0, matching its generator list ending in x^(n*m0+n0)";

namespace {

const char* const contraction_lemma = "Lemma The-contraction-of-I_N";
const char* const chain_lemma = "Lemma k[x,s,t][I_N/x_N]";

MultiPoly xpow(int k) { return MultiPoly::monomial(xst_vars(), {k, 0, 0}, 1); }

const MonomialOrder& xst_grevlex() {
  static const MonomialOrder o = MonomialOrder::grevlex(xst_vars());
  return o;
}

bool in_member(const std::optional<Domain>& pred, const LaurentPoly& p) {
  return pred ? is_member(*pred, p) : p.is_polynomial();
}

std::string short_label(const std::optional<DomainSpec>& spec) {
  if (!spec)
    return "k[x,s,t]";
  if (!spec->is_newclass())
    return "R(" + std::to_string(spec->n()) + ",F)";
  return "B(" + std::to_string(spec->n()) + "," + std::to_string(spec->e()) + ",Q)";
}

std::vector<MultiPoly> step_generators(const DomainSpec& spec, int N) {
  if (N == 0)
    return {MultiPoly::constant(xst_vars(), 1)};
  return paper_contraction_generators(spec, N);
}

std::optional<DomainSpec> predicted_member(const DomainSpec& spec, int N) {
  if (N == 0)
    return std::nullopt;
  if (!spec.is_newclass())
    return DomainSpec::russell(N, spec.F());
  const int n = spec.n(), m = spec.m();
  if (N < n)
    return DomainSpec::russell(N, spec.F());
  if (N <= n * m)
    return DomainSpec::russell(n, spec.F());
  return DomainSpec::newclass(n, N - n * m, m, spec.d(), spec.r(), spec.Q());
}

} // namespace

std::vector<MultiPoly> paper_contraction_generators(const DomainSpec& spec, int N) {
  const int n = spec.n();
  const int top = spec.top_order();
  if (N < 1 || N > top)
    throw Error("contraction step N = " + std::to_string(N) + " outside 1.." + std::to_string(top));
  const MultiPoly& F = spec.F();
  if (!spec.is_newclass() || N <= n)
    return {F, xpow(N)};
  const int m = spec.m();
  std::vector<MultiPoly> out;
  if (N <= n * m) {
    int m0 = (N - 1) / n, n0 = N - n * m0;
    out.push_back(pow(F, static_cast<unsigned>(m0 + 1)));
    for (int k = 0; k < m0; ++k)
      out.push_back(xpow(k * n + n0) * pow(F, static_cast<unsigned>(m0 - k)));
  } else {
    int e0 = N - n * m;
    out.push_back(spec.G());
    for (int k = 0; k < m; ++k)
      out.push_back(xpow(k * n + e0) * pow(F, static_cast<unsigned>(m - k)));
  }
  out.push_back(xpow(N));
  return out;
}

std::string contraction_item(const DomainSpec& spec, int N) {
  if (!spec.is_newclass())
    return "russell";
  if (N <= spec.n())
    return "(1)";
  return N <= spec.n() * spec.m() ? "(2)" : "(3)";
}

int default_degree_bound(const DomainSpec& spec) {
  if (spec.is_newclass())
    return 2 * spec.top_order() * std::max(spec.d(), spec.r());
  int deg_f = LaurentPoly::from_multi(spec.F()).x_coefficient(0).total_degree();
  return 2 * spec.n() * deg_f;
}

ContractionVerdict verify_contraction_step(const Domain& domain, int N, int degree_bound, int st_slack) {
  ContractionVerdict v = verify_contraction_candidates(domain, N, paper_contraction_generators(domain.spec, N),
                                                       degree_bound, st_slack);
  v.item = contraction_item(domain.spec, N);
  if (v.item == "(2)")
    v.note = item2_note;
  return v;
}

ContractionVerdict verify_contraction_candidates(const Domain& domain, int N, std::vector<MultiPoly> candidates,
                                                 int degree_bound, int st_slack) {
  ContractionVerdict v;
  v.N = N;
  v.degree_bound = degree_bound;
  if (N < 1)
    throw Error("contraction step N must be >= 1");
  if (candidates.empty())
    throw Error("no candidate generators");
  v.generators = std::move(candidates);
  for (const auto& g : v.generators)
    if (g.total_degree() > degree_bound)
      throw Error("degree bound " + std::to_string(degree_bound) + " is below the degree " +
                  std::to_string(g.total_degree()) + " of generator " + g.to_string());
  const int D = degree_bound;
  const int st_max = D + std::max(0, st_slack);

  // (⊇) generators are in the contraction
  {
    CheckResult c{"generators g satisfy g/x^N in B", contraction_lemma, true, "", ""};
    for (const auto& g : v.generators)
      if (!is_member(domain, LaurentPoly::from_multi(g).shifted_x(-N))) {
        c.passed = false;
        c.witness = g.to_string();
        break;
      }
    v.checks.push_back(std::move(c));
  }

  // {f : deg f <= D, f/x^N in B}: the part of f below x^N must have its
  // quotient in the span of the negative parts of B; the rest is free.
  std::vector<LaurentMonomial> cols;
  std::vector<LaurentMonomial> allowed;
  for (int k = 1; k <= N; ++k)
    for (int s = 0; s <= st_max; ++s)
      for (int t = 0; s + t <= st_max; ++t) {
        LaurentMonomial mono{-k, s, t};
        if (N - k + s + t <= D)
          allowed.push_back(mono);
        else
          cols.push_back(mono);
      }
  const int first_allowed = static_cast<int>(cols.size());
  cols.insert(cols.end(), allowed.begin(), allowed.end());
  std::map<LaurentMonomial, int> index;
  for (std::size_t k = 0; k < cols.size(); ++k)
    index.emplace(cols[k], static_cast<int>(k));
  SparseEchelon echelon(static_cast<int>(cols.size()));
  for (const auto& row : projected_products(domain, -N, st_max)) {
    SparseRow sparse;
    for (const auto& [mono, c] : row.terms())
      sparse.emplace_back(index.at(mono), c);
    std::sort(sparse.begin(), sparse.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    echelon.insert(sparse);
    ++v.product_rows;
  }
  auto low_basis = echelon.rows_from(first_allowed);
  std::size_t high = 0;
  for (const auto& e : monomials_up_to(3, D))
    if (e[0] >= N)
      ++high;
  v.oracle_dimension = low_basis.size() + high;

  Ideal ideal(v.generators, xst_grevlex());
  v.ideal_dimension = ideal.leading_monomials_up_to(D);

  // (⊆) the oracle slice lies in the ideal
  {
    CheckResult c{"oracle slice lies in <generators>", contraction_lemma, true, "", ""};
    if (!ideal.contains(xpow(N))) {
      c.passed = false;
      c.witness = xpow(N).to_string();
    }
    for (std::size_t k = 0; c.passed && k < low_basis.size(); ++k) {
      MultiPoly f(xst_vars());
      for (const auto& [col, val] : low_basis[k]) {
        const LaurentMonomial& mono = cols[col];
        f += MultiPoly::monomial(xst_vars(), {mono.x + N, mono.s, mono.t}, val);
      }
      if (!ideal.contains(f)) {
        c.passed = false;
        c.witness = f.to_string();
      }
    }
    c.detail = std::to_string(low_basis.size()) + " oracle vectors below x^N checked";
    v.checks.push_back(std::move(c));
  }

  {
    bool eq = v.oracle_dimension == v.ideal_dimension;
    CheckResult c{"slice dimensions agree in degree <= " + std::to_string(D), contraction_lemma, eq, "",
                  "oracle " + std::to_string(v.oracle_dimension) + ", ideal " + std::to_string(v.ideal_dimension)};
    if (!eq)
      c.witness = "dim " + std::to_string(v.oracle_dimension) + " != " + std::to_string(v.ideal_dimension);
    v.checks.push_back(std::move(c));
  }
  v.verified = all_passed(v.checks);
  return v;
}

ExponentialChain exponential_chain(const Domain& domain) {
  const DomainSpec& spec = domain.spec;
  ExponentialChain chain{spec, {}, {}, {}};
  const int top = spec.top_order();
  std::vector<std::optional<Domain>> realized;
  for (int N = 0; N <= top; ++N) {
    ChainMember member;
    member.N = N;
    auto gens = step_generators(spec, N);
    for (const auto& g : gens)
      member.generators.push_back(LaurentPoly::from_multi(g).shifted_x(-N));
    member.predicted = predicted_member(spec, N);
    member.label = short_label(member.predicted);
    std::optional<Domain> pred;
    if (member.predicted)
      pred = build_domain(*member.predicted);

    // member inside the prediction
    member.verified = true;
    for (const auto& g : member.generators)
      if (!in_member(pred, g)) {
        member.verified = false;
        member.failure = "generator " + g.to_string() + " is not in " + member.label;
        break;
      }
    // prediction inside the member: x^N * (generator) in the step ideal
    if (member.verified && pred) {
      Ideal ideal(gens, xst_grevlex());
      for (const auto& [name, g] : pred->generators()) {
        if (name != "y" && name != "z")
          continue;
        LaurentPoly lifted = g.shifted_x(N);
        if (!lifted.is_polynomial() || !ideal.contains(lifted.to_multi())) {
          member.verified = false;
          member.failure = name + " = " + g.to_string() + " of " + member.label + " is not in the member";
          break;
        }
      }
    }
    CheckResult c{"member " + std::to_string(N) + " is " + member.label, chain_lemma, member.verified,
                  member.verified ? "" : member.failure, ""};
    chain.checks.push_back(std::move(c));
    chain.members.push_back(std::move(member));
    realized.push_back(std::move(pred));
  }

  for (int N = 0; N < top; ++N) {
    const auto& a = chain.members[N];
    const auto& b = chain.members[N + 1];
    bool b_in_a = std::all_of(b.generators.begin(), b.generators.end(),
                              [&](const LaurentPoly& g) { return in_member(realized[N], g); });
    bool a_in_b = std::all_of(a.generators.begin(), a.generators.end(),
                              [&](const LaurentPoly& g) { return in_member(realized[N + 1], g); });
    chain.collapse.push_back(b_in_a && a_in_b);
    // the chain ascends: member N sits in member N+1
    CheckResult c{"member " + std::to_string(N) + " inside member " + std::to_string(N + 1), chain_lemma, a_in_b,
                  "", b_in_a && a_in_b ? "equal" : "strict"};
    if (!a_in_b)
      c.witness = a.generators.front().to_string();
    chain.checks.push_back(std::move(c));
  }
  return chain;
}

Fingerprint fingerprint(const ExponentialChain& chain) {
  Fingerprint fp;
  fp.total_steps = chain.spec.top_order();
  fp.collapse_pattern = chain.collapse;
  fp.distinct_members = fp.total_steps + 1 -
                        static_cast<int>(std::count(chain.collapse.begin(), chain.collapse.end(), true));
  return fp;
}

Fingerprint fingerprint(const Domain& domain) { return fingerprint(exponential_chain(domain)); }

std::vector<CheckResult> chain_structure_checks(const Domain& domain, const ExponentialChain& chain) {
  std::vector<CheckResult> out;
  const DomainSpec& spec = domain.spec;
  const int top = spec.top_order();
  for (int N = 0; N < top; ++N) {
    Ideal ideal(step_generators(spec, N), xst_grevlex());
    CheckResult c{"step " + std::to_string(N + 1) + " generators in step " + std::to_string(N) + " ideal",
                  "Def contraction chain", true, "", ""};
    for (const auto& g : step_generators(spec, N + 1))
      if (!ideal.contains(g)) {
        c.passed = false;
        c.witness = g.to_string();
        break;
      }
    out.push_back(std::move(c));
  }
  // I A[I/x^N] = <x^N>: every generator g equals x^N (g/x^N), and x^N is in I
  for (const auto& member : chain.members) {
    const int N = member.N;
    auto gens = step_generators(spec, N);
    CheckResult c{"extension of step " + std::to_string(N) + " is <x^" + std::to_string(N) + ">",
                  "affine modification, I.A[I/f] = <f>", true, "", ""};
    for (std::size_t k = 0; k < gens.size(); ++k)
      if (!(member.generators[k].shifted_x(N) == LaurentPoly::from_multi(gens[k]))) {
        c.passed = false;
        c.witness = gens[k].to_string();
      }
    if (c.passed && N > 0 && !Ideal(gens, xst_grevlex()).contains(xpow(N))) {
      c.passed = false;
      c.witness = xpow(N).to_string();
    }
    out.push_back(std::move(c));
  }
  // the identity of k[x,s,t] fixing x extends to the identity on each member
  Bindings identity = {{"x", LaurentPoly::x_power(1)}, {"s", LaurentPoly::s()}, {"t", LaurentPoly::t()}};
  for (const auto& member : chain.members) {
    auto gens = step_generators(spec, member.N);
    CheckResult c{"identity extends to member " + std::to_string(member.N), "Lemma extension-of-iso", true, "", ""};
    for (std::size_t k = 0; k < gens.size(); ++k) {
      LaurentPoly image = substitute(gens[k], identity).shifted_x(-member.N);
      if (!(image == member.generators[k])) {
        c.passed = false;
        c.witness = member.generators[k].to_string();
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

ComparisonReport compare(const DomainSpec& a, const DomainSpec& b) {
  ComparisonReport rep;
  auto e_of = [](const DomainSpec& s) { return s.is_newclass() ? s.e() : 0; };
  const int na = a.n(), nb = b.n(), ea = e_of(a), eb = e_of(b);
  auto pair_str = [](int n, int e) { return "(" + std::to_string(n) + "," + std::to_string(e) + ")"; };

  {
    bool ok = na + ea == nb + eb;
    rep.conditions.push_back({"sum condition n1+e1 = n2+e2", "Prop iso-preseve", ok,
                              ok ? "" : std::to_string(na + ea) + " != " + std::to_string(nb + eb),
                              std::to_string(na + ea) + " vs " + std::to_string(nb + eb)});
  }
  {
    bool ok = na == nb && ea == eb;
    rep.conditions.push_back({"pair condition (n1,e1) = (n2,e2)", "Prop n_1=n_2-and-e_1=e_2", ok,
                              ok ? "" : pair_str(na, ea) + " != " + pair_str(nb, eb),
                              pair_str(na, ea) + " vs " + pair_str(nb, eb)});
  }
  {
    CheckResult c{"russell condition e = 0 and n = n'", "Thm The-new-algebras-are-noniso-to-the-Russell", true, "", ""};
    if (a.is_newclass() != b.is_newclass()) {
      const DomainSpec& nc = a.is_newclass() ? a : b;
      const DomainSpec& ru = a.is_newclass() ? b : a;
      c.passed = nc.e() == 0 && nc.n() == ru.n();
      c.detail = "e = " + std::to_string(nc.e()) + ", n = " + std::to_string(nc.n()) + ", n' = " + std::to_string(ru.n());
      if (!c.passed)
        c.witness = c.detail;
    } else {
      c.detail = "not applicable: both specs of the same family";
    }
    rep.conditions.push_back(std::move(c));
  }
  {
    rep.fingerprint_a = fingerprint(build_domain(a));
    rep.fingerprint_b = fingerprint(build_domain(b));
    bool ok = rep.fingerprint_a.distinct_members == rep.fingerprint_b.distinct_members;
    std::string d = std::to_string(rep.fingerprint_a.distinct_members) + " vs " +
                    std::to_string(rep.fingerprint_b.distinct_members) + " distinct chain members";
    rep.conditions.push_back({"fingerprint condition", "Remark after Lemma k[x,s,t][I_N/x_N]", ok, ok ? "" : d, d});
  }
  rep.necessarily_non_isomorphic = !all_passed(rep.conditions);
  rep.verdict = rep.necessarily_non_isomorphic ? "necessarily non-isomorphic" : "conditions consistent";
  if (a.is_newclass() && b.is_newclass() && (a.m() != b.m() || a.d() != b.d() || a.r() != b.r()))
    rep.note = "(m,d,r) differ between the specs; the conditions above assume them fixed";
  return rep;
}

} // namespace exo
