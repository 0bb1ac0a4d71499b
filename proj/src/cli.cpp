#include "exo/cli.hpp"

#include "exo/chains.hpp"
#include "exo/errors.hpp"
#include "exo/grading.hpp"
#include "exo/parser.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>

namespace exo {

using nlohmann::json;

const char* const tool_name = "exo-verify";
const char* const tool_version = "0.1.0";
const std::vector<std::string> commands = {"verify-domain", "verify-lnd", "grading",     "contraction",
                                           "chain",         "fingerprint", "compare", "oracle-audit"};

namespace {

[[noreturn]] void config_fail(const std::string& what) { throw ConfigError("config: " + what); }

void reject_unknown(const json& obj, const char* where, std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }))
      config_fail(std::string("unknown key \"") + key + "\" in " + where);
  }
}

int get_int(const json& obj, const char* key, const char* where) {
  auto it = obj.find(key);
  if (it == obj.end())
    config_fail(std::string("missing \"") + key + "\" in " + where);
  if (!it->is_number_integer())
    config_fail(std::string("\"") + key + "\" in " + where + " must be an integer");
  return it->get<int>();
}

std::optional<int> opt_int(const json& obj, const char* key, const char* where) {
  if (!obj.contains(key))
    return std::nullopt;
  return get_int(obj, key, where);
}

std::string get_string(const json& obj, const char* key, const char* where) {
  auto it = obj.find(key);
  if (it == obj.end())
    config_fail(std::string("missing \"") + key + "\" in " + where);
  if (!it->is_string())
    config_fail(std::string("\"") + key + "\" in " + where + " must be a string");
  return it->get<std::string>();
}

MultiPoly xst_poly(const std::string& text, const char* what) {
  try {
    return parse_multi(text, xst_vars());
  } catch (const Error& e) {
    config_fail(std::string(what) + ": " + e.what());
  }
}

LaurentPoly laurent_poly(const std::string& text, const char* what) {
  try {
    return parse_laurent(text);
  } catch (const Error& e) {
    config_fail(std::string(what) + ": " + e.what());
  }
}

DomainSpec parse_spec(const json& s, std::size_t index) {
  std::string where = "specs[" + std::to_string(index) + "]";
  if (!s.is_object())
    config_fail(where + " must be an object");
  std::string kind = get_string(s, "kind", where.c_str());
  try {
    if (kind == "newclass") {
      reject_unknown(s, where.c_str(), {"kind", "n", "e", "m", "d", "r", "Q"});
      MultiPoly q = s.contains("Q") ? xst_poly(get_string(s, "Q", where.c_str()), "Q") : MultiPoly(xst_vars());
      return DomainSpec::newclass(get_int(s, "n", where.c_str()), get_int(s, "e", where.c_str()),
                                  get_int(s, "m", where.c_str()), get_int(s, "d", where.c_str()),
                                  get_int(s, "r", where.c_str()), std::move(q));
    }
    if (kind == "russell") {
      reject_unknown(s, where.c_str(), {"kind", "n", "F"});
      return DomainSpec::russell(get_int(s, "n", where.c_str()), xst_poly(get_string(s, "F", where.c_str()), "F"));
    }
  } catch (const SpecError& e) {
    config_fail(where + ": " + e.what());
  }
  config_fail(where + ": kind must be \"newclass\" or \"russell\"");
}

std::string spec_subject(const DomainSpec& spec) { return spec.label(); }

// --- check helpers ---------------------------------------------------------

struct Collector {
  std::vector<ReportCheck> checks;
  std::string subject;

  void add(CheckResult c) {
    ReportCheck r;
    static_cast<CheckResult&>(r) = std::move(c);
    r.subject = subject;
    checks.push_back(std::move(r));
  }
  void add(std::string name, const char* lemma, bool passed, std::string witness, std::string detail = "") {
    add(CheckResult{std::move(name), lemma, passed, passed ? "" : std::move(witness), std::move(detail)});
  }
  void add_all(const std::vector<CheckResult>& cs) {
    for (const auto& c : cs)
      add(c);
  }
};

const char* lemma_filtration = "Prop the filtration new example";
const char* lemma_grading = "Cor the grading new example";
const char* lemma_lnd_description = "Cor Description of LND";
const char* lemma_lnd_degree = "Lemma deg-of-LND";
const char* lemma_top = "Remark determine the graded ideal";

const char* relation_lemma(const DomainSpec& spec) {
  return spec.is_newclass() ? "Sec The-class-B_(n,e,Q)" : "Def Russell-domains";
}

std::vector<std::string> strings_of(const std::vector<MultiPoly>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps)
    out.push_back(p.to_string());
  return out;
}

std::vector<std::string> strings_of(const std::vector<LaurentPoly>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps)
    out.push_back(p.to_string());
  return out;
}

json bits_json(const std::vector<bool>& bits) {
  json out = json::array();
  for (bool b : bits)
    out.push_back(b);
  return out;
}

// --- commands ----------------------------------------------------------------

void check_omega(Collector& out, const Domain& dom) {
  const DomainSpec& spec = dom.spec;
  std::map<std::string, int> expected = {{"x", -1}, {"s", 0}, {"t", 0}, {"y", spec.n()}};
  if (spec.is_newclass())
    expected["z"] = spec.top_order();
  for (const auto& [name, g] : dom.generators()) {
    int w = omega_B(g);
    out.add("omega_B(" + name + ") = " + std::to_string(expected[name]), lemma_filtration, w == expected[name],
            g.to_string(), "omega_B(" + name + ") = " + std::to_string(w));
  }
}

json verify_domain(Collector& out, const Domain& dom, const RunConfig& cfg) {
  const DomainSpec& spec = dom.spec;
  const auto& cert = dom.certificate;
  const char* lemma = relation_lemma(spec);
  out.add("defining relation vanishes", lemma, cert.relation_value.is_zero(), cert.relation_value.to_string());
  if (spec.is_newclass())
    out.add("y^m - x^e z = s", lemma, cert.s_value.is_zero(), cert.s_value.to_string());
  auto rels = presentation_relations(spec);
  for (std::size_t k = 0; k < cert.presentation_values.size(); ++k)
    out.add("presentation relation " + std::to_string(k + 1) + " vanishes at (x,y,z,s,t)", lemma,
            cert.presentation_values[k].is_zero(), cert.presentation_values[k].to_string(), rels[k].to_string());
  check_omega(out, dom);

  json res = {{"spec", spec.label()},
              {"y", dom.y.to_string()},
              {"presentation", strings_of(rels)},
              {"certificate", cert.holds}};
  if (spec.is_newclass()) {
    res["z"] = dom.z.to_string();
    WeightFunction w = cfg.weights ? WeightFunction(*cfg.weights) : presentation_weights(spec.n(), spec.e(), spec.m());
    auto top_pair = [&] {
      try {
        return check_top_ideal_pair(rels[0], rels[1], w);
      } catch (const Error& e) {
        config_fail(std::string("weights: ") + e.what());
      }
    };
    TopIdealReport top = top_pair();
    const auto& pv = presentation_vars();
    std::string n = std::to_string(spec.n()), d = std::to_string(spec.d()), r = std::to_string(spec.r());
    std::string e = std::to_string(spec.e()), m = std::to_string(spec.m());
    MultiPoly hat_p = parse_multi("X^" + n + "*Y - S^" + d + " - T^" + r, pv);
    MultiPoly hat_q = parse_multi("Y^" + m + " - X^" + e + "*Z", pv);
    out.add("top component of relation 1 is " + hat_p.to_string(), lemma_top, top.hat_p == hat_p,
            top.hat_p.to_string());
    out.add("top component of relation 2 is " + hat_q.to_string(), lemma_top, top.hat_q == hat_q,
            top.hat_q.to_string());
    out.add("gcd of top components is 1", lemma_top, top.certified, top.gcd.to_string());
    res["top_components"] = {top.hat_p.to_string(), top.hat_q.to_string()};
    res["top_gcd"] = top.gcd.to_string();
    res["top_ideal_certified"] = top.certified;
  }
  return res;
}

json derivation_json(const Derivation& D) {
  return {{"x", D.image_x.to_string()}, {"s", D.image_s.to_string()}, {"t", D.image_t.to_string()}};
}

json check_derivation(Collector& out, const Domain& dom, const std::string& name, const Derivation& D, int cap) {
  json res = {{"name", name}, {"images", derivation_json(D)}};
  std::string outside; // first image not in B
  json nil = json::object();
  for (const auto& [g_name, g] : dom.generators()) {
    LaurentPoly image = apply(D, g);
    bool in_b = is_member(dom, image);
    if (!in_b && outside.empty())
      outside = image.to_string();
    out.add(name + "(" + g_name + ") in B", lemma_lnd_description, in_b, image.to_string(),
            name + "(" + g_name + ") = " + image.to_string());
    auto k = nilpotency_index(D, g, cap);
    nil[g_name] = k ? json(*k) : json(nullptr);
    out.add(name + " nilpotent on " + g_name + " within " + std::to_string(cap) + " steps", lemma_lnd_description,
            k.has_value(), g.to_string(), k ? "index " + std::to_string(*k) : "cap reached");
  }
  res["nilpotency"] = nil;
  for (auto c : verify_restriction_ideals(dom, D)) {
    c.name = name + c.name.substr(1);
    c.detail = name + c.detail.substr(1);
    out.add(std::move(c));
  }

  const int shift = dom.spec.n() + (dom.spec.is_newclass() ? dom.spec.e() : 0);
  auto sc = structure_check(dom, D);
  std::string bad = !D.image_x.is_zero()                             ? D.image_x.to_string()
                    : !D.image_s.shifted_x(-shift).is_polynomial() ? D.image_s.to_string()
                                                                     : D.image_t.to_string();
  out.add(name + " = x^" + std::to_string(shift) + " delta with delta(x) = 0", lemma_lnd_description, sc.passed, bad,
          sc.failure.empty() ? "" : name + sc.failure.substr(1));

  if (outside.empty()) {
    DerivationDegree deg = derivation_degree(dom, D);
    bool ok = !deg.degree || *deg.degree <= deg.lemma_bound;
    std::string worst;
    for (const auto& [g_name, g] : dom.generators())
      if (deg.degree && deg.per_generator.count(g_name) && deg.per_generator.at(g_name) == *deg.degree) {
        worst = apply(D, g).to_string();
        break;
      }
    std::string shown = deg.degree ? std::to_string(*deg.degree) : "-inf";
    out.add("deg " + name + " <= " + std::to_string(deg.lemma_bound), lemma_lnd_degree, ok, worst,
            "generator degree " + shown + " (upper bound on B)");
    res["degree"] = deg.degree ? json(*deg.degree) : json(nullptr);
    res["degree_is_upper_bound"] = deg.is_upper_bound;
    res["lemma_bound"] = deg.lemma_bound;
    res["per_generator"] = deg.per_generator;
  } else {
    out.add("deg " + name + " defined on B", lemma_lnd_degree, false, outside, "a generator image is not in B");
  }
  return res;
}

json verify_lnd(Collector& out, const Domain& dom, const RunConfig& cfg) {
  json res = {{"spec", dom.spec.label()}, {"derivations", json::array()}};
  std::vector<NamedDerivation> ds = cfg.derivations;
  if (ds.empty()) {
    if (!dom.spec.is_newclass())
      config_fail("verify-lnd on a russell spec needs \"derivations\"");
    auto sd = standard_derivations(dom);
    out.add("closed formulas for D1(y), D1(z), D2(y), D2(z)", lemma_lnd_description, sd.formulas_hold,
            sd.d1_z.to_string(), "D1(z) = " + sd.d1_z.to_string() + ", D2(z) = " + sd.d2_z.to_string());
    ds = {{"D1", sd.d1}, {"D2", sd.d2}};
  }
  for (const auto& nd : ds)
    res["derivations"].push_back(check_derivation(out, dom, nd.name, nd.derivation, cfg.bounds.cap));
  return res;
}

json grading(Collector& out, const Domain& dom) {
  const DomainSpec& spec = dom.spec;
  check_omega(out, dom);
  json pieces = json::array();
  for (int alpha = -3; alpha <= spec.top_order(); ++alpha) {
    auto idx = graded_index_for(alpha, spec);
    std::string a = std::to_string(alpha);
    if (!idx) {
      out.add("graded piece " + a + " has a generator", lemma_grading, false, "0");
      continue;
    }
    LaurentPoly g = piece_generator(dom, *idx);
    bool member = is_member(dom, g);
    int w = omega_B(g);
    bool exact = member && w == alpha && filtration_test(dom, g, alpha) && !filtration_test(dom, g, alpha - 1);
    out.add("generator of graded piece " + a + " lies in F_" + a + " with omega_B = " + a, lemma_grading, exact,
            g.to_string(), "x^" + std::to_string(idx->l) + " y^" + std::to_string(idx->j) + " z^" +
                               std::to_string(idx->i) + ", omega_B = " + std::to_string(w));
    json piece = {{"alpha", alpha},
                  {"i", idx->i},
                  {"j", idx->j},
                  {"l", idx->l},
                  {"generator", g.to_string()},
                  {"slice_power", slice_power(*idx, spec)}};
    auto cor = corollary_index(alpha, spec);
    piece["corollary"] = cor ? json{{"i", cor->i}, {"j", cor->j}, {"l", cor->l}} : json(nullptr);
    pieces.push_back(std::move(piece));
  }
  return {{"spec", spec.label()}, {"pieces", pieces}};
}

json contraction(Collector& out, const Domain& dom, const RunConfig& cfg) {
  const DomainSpec& spec = dom.spec;
  int bound = cfg.bounds.degree.value_or(default_degree_bound(spec));
  json steps = json::array();
  for (int N = 1; N <= spec.top_order(); ++N) {
    ContractionVerdict v;
    try {
      v = verify_contraction_step(dom, N, bound);
    } catch (const Error& e) {
      config_fail("bounds.degree " + std::to_string(bound) + ": " + e.what());
    }
    for (auto c : v.checks) {
      c.name = "N=" + std::to_string(N) + ": " + c.name;
      out.add(std::move(c));
    }
    steps.push_back({{"N", N},
                     {"item", v.item},
                     {"generators", strings_of(v.generators)},
                     {"oracle_dimension", v.oracle_dimension},
                     {"ideal_dimension", v.ideal_dimension},
                     {"verified", v.verified},
                     {"note", v.note}});
  }
  return {{"spec", spec.label()}, {"degree_bound", bound}, {"steps", steps}};
}

json chain_json(const ExponentialChain& chain) {
  json members = json::array();
  for (const auto& m : chain.members)
    members.push_back({{"N", m.N},
                       {"label", m.label},
                       {"generators", strings_of(m.generators)},
                       {"verified", m.verified},
                       {"failure", m.failure}});
  return {{"members", members}, {"collapse", bits_json(chain.collapse)}};
}

json fingerprint_json(const Fingerprint& fp) {
  // members equal to a neighbour
  std::set<int> collapsed;
  for (std::size_t k = 0; k < fp.collapse_pattern.size(); ++k)
    if (fp.collapse_pattern[k]) {
      collapsed.insert(static_cast<int>(k));
      collapsed.insert(static_cast<int>(k) + 1);
    }
  return {{"total_steps", fp.total_steps},
          {"distinct_members", fp.distinct_members},
          {"collapse_pattern", bits_json(fp.collapse_pattern)},
          {"collapsed_members", collapsed}};
}

json chain(Collector& out, const Domain& dom) {
  auto ch = exponential_chain(dom);
  out.add_all(ch.checks);
  out.add_all(chain_structure_checks(dom, ch));
  json res = chain_json(ch);
  res["spec"] = dom.spec.label();
  return res;
}

json fingerprint_cmd(Collector& out, const Domain& dom) {
  auto ch = exponential_chain(dom);
  out.add_all(ch.checks);
  Fingerprint fp = fingerprint(ch);
  int collapses = static_cast<int>(std::count(fp.collapse_pattern.begin(), fp.collapse_pattern.end(), true));
  out.add("distinct members = steps + 1 - collapses", "Remark after Lemma k[x,s,t][I_N/x_N]",
          fp.distinct_members == fp.total_steps + 1 - collapses, std::to_string(fp.distinct_members));
  json res = fingerprint_json(fp);
  res["spec"] = dom.spec.label();
  std::vector<std::string> labels;
  for (const auto& m : ch.members)
    labels.push_back(m.label);
  res["members"] = labels;
  return res;
}

json compare_cmd(Collector& out, const std::vector<Domain>& doms) {
  for (const auto& d : doms) {
    out.subject = d.spec.label();
    out.add_all(exponential_chain(d).checks);
  }
  out.subject = doms[0].spec.label() + " vs " + doms[1].spec.label();
  auto rep = compare(doms[0].spec, doms[1].spec);
  json conds = json::array();
  for (const auto& c : rep.conditions)
    conds.push_back({{"name", c.name}, {"lemma", c.lemma}, {"holds", c.passed}, {"detail", c.detail}});
  return {{"pair", {doms[0].spec.label(), doms[1].spec.label()}},
          {"conditions", conds},
          {"necessarily_non_isomorphic", rep.necessarily_non_isomorphic},
          {"verdict", rep.verdict},
          {"note", rep.note},
          {"fingerprints", {fingerprint_json(rep.fingerprint_a), fingerprint_json(rep.fingerprint_b)}}};
}

OracleBounds oracle_bounds(const DomainSpec& spec, const RunBounds& b) {
  OracleBounds out;
  out.x_lo = b.x_lo.value_or(-2 * spec.top_order());
  out.x_hi = b.x_hi.value_or(2);
  if (b.st_degree)
    out.st_degree = *b.st_degree;
  else if (spec.is_newclass())
    out.st_degree = 2 * spec.m() * std::max(spec.d(), spec.r());
  else
    out.st_degree = 4 * LaurentPoly::from_multi(spec.F()).x_coefficient(0).total_degree();
  out.x_slack = 2;
  out.st_slack = 4;
  return out;
}

json oracle_audit(Collector& out, const Domain& dom, const RunConfig& cfg, std::mt19937_64& rng) {
  const char* lemma = lemma_filtration;
  OracleBounds ob = oracle_bounds(dom.spec, cfg.bounds);
  std::optional<SpanOracle> oracle;
  try {
    oracle.emplace(dom, ob);
  } catch (const Error& e) {
    config_fail(std::string("oracle box: ") + e.what());
  }
  const auto& basis = oracle->basis();
  std::string basis_witness, reassembly_witness;
  for (const auto& b : basis) {
    auto res = membership(dom, b);
    if (!res.member && basis_witness.empty())
      basis_witness = b.to_string();
    if (res.member && res.normal_form.reassemble(dom) != b && reassembly_witness.empty())
      reassembly_witness = b.to_string();
  }
  std::string dim = "dimension " + std::to_string(basis.size());
  out.add("membership accepts every oracle basis element", lemma, basis_witness.empty(), basis_witness, dim);
  out.add("normal forms of basis elements reassemble", lemma, reassembly_witness.empty(), reassembly_witness);

  // basis combinations, half of them perturbed by a monomial of negative x-order
  int members = 0, non_members = 0, agree = 0;
  std::string disagreement;
  if (!basis.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    std::uniform_int_distribution<int> coef(-5, 5), den(1, 3);
    auto rational = [&] {
      int num = 0;
      while (num == 0)
        num = coef(rng);
      Rational q(num, den(rng));
      q.canonicalize();
      return q;
    };
    for (int k = 0; k < cfg.bounds.samples; ++k) {
      LaurentPoly p;
      for (int c = 0; c < 4; ++c)
        p.add_scaled(basis[pick(rng)], rational());
      if (k % 2 == 1 && ob.x_lo <= -1) {
        std::uniform_int_distribution<int> xd(ob.x_lo, -1), sd(0, ob.st_degree);
        int sdeg = sd(rng);
        std::uniform_int_distribution<int> td(0, ob.st_degree - sdeg);
        int xe = xd(rng);
        p += LaurentPoly::monomial({xe, sdeg, td(rng)}, rational());
      }
      bool ours = is_member(dom, p);
      (ours ? members : non_members)++;
      if (ours == oracle->contains(p))
        ++agree;
      else if (disagreement.empty())
        disagreement = p.to_string();
    }
  }
  out.add("membership agrees with the oracle on " + std::to_string(cfg.bounds.samples) + " samples", lemma,
          disagreement.empty(), disagreement,
          std::to_string(members) + " members, " + std::to_string(non_members) + " non-members");
  return {{"spec", dom.spec.label()},
          {"box", {{"x_lo", ob.x_lo}, {"x_hi", ob.x_hi}, {"st_degree", ob.st_degree}}},
          {"dimension", basis.size()},
          {"product_rows", oracle->product_rows()},
          {"samples", cfg.bounds.samples},
          {"members", members},
          {"non_members", non_members},
          {"agreements", agree}};
}

} // namespace

// --- config ------------------------------------------------------------------

json spec_to_json(const DomainSpec& spec) {
  if (spec.is_newclass())
    return {{"kind", "newclass"}, {"n", spec.n()}, {"e", spec.e()}, {"m", spec.m()},
            {"d", spec.d()},      {"r", spec.r()}, {"Q", spec.Q().to_string()}};
  return {{"kind", "russell"}, {"n", spec.n()}, {"F", spec.F().to_string()}};
}

RunConfig parse_config(const json& doc, std::string_view command) {
  if (!doc.is_object())
    config_fail("top level must be an object");
  reject_unknown(doc, "config", {"command", "specs", "bounds", "seed", "derivations", "weights", "output"});
  RunConfig cfg;
  if (doc.contains("command")) {
    cfg.command = get_string(doc, "command", "config");
    if (!command.empty() && cfg.command != command)
      config_fail("command \"" + cfg.command + "\" does not match \"" + std::string(command) + "\"");
  } else {
    cfg.command = std::string(command);
  }
  if (cfg.command.empty())
    config_fail("no command given");
  if (std::find(commands.begin(), commands.end(), cfg.command) == commands.end())
    config_fail("unknown command \"" + cfg.command + "\"");

  auto specs = doc.find("specs");
  if (specs == doc.end() || !specs->is_array())
    config_fail("\"specs\" must be an array");
  for (std::size_t k = 0; k < specs->size(); ++k)
    cfg.specs.push_back(parse_spec((*specs)[k], k));
  if (cfg.command == "compare" ? cfg.specs.size() != 2 : cfg.specs.empty())
    config_fail(cfg.command == "compare" ? "compare needs exactly two specs" : "at least one spec is required");

  if (doc.contains("bounds")) {
    const json& b = doc["bounds"];
    if (!b.is_object())
      config_fail("\"bounds\" must be an object");
    reject_unknown(b, "bounds", {"degree", "cap", "x_lo", "x_hi", "st_degree", "samples"});
    cfg.bounds.degree = opt_int(b, "degree", "bounds");
    cfg.bounds.cap = opt_int(b, "cap", "bounds").value_or(cfg.bounds.cap);
    cfg.bounds.x_lo = opt_int(b, "x_lo", "bounds");
    cfg.bounds.x_hi = opt_int(b, "x_hi", "bounds");
    cfg.bounds.st_degree = opt_int(b, "st_degree", "bounds");
    cfg.bounds.samples = opt_int(b, "samples", "bounds").value_or(cfg.bounds.samples);
    if (cfg.bounds.degree && *cfg.bounds.degree <= 0)
      config_fail("bounds.degree must be positive");
    if (cfg.bounds.cap <= 0)
      config_fail("bounds.cap must be positive");
    if (cfg.bounds.samples <= 0)
      config_fail("bounds.samples must be positive");
    if (cfg.bounds.st_degree && *cfg.bounds.st_degree < 0)
      config_fail("bounds.st_degree must be non-negative");
    if (cfg.bounds.x_lo && cfg.bounds.x_hi && *cfg.bounds.x_lo > *cfg.bounds.x_hi)
      config_fail("bounds.x_lo exceeds bounds.x_hi");
  }

  if (doc.contains("seed")) {
    const json& s = doc["seed"];
    if (!s.is_number_unsigned() && !(s.is_number_integer() && s.get<long long>() >= 0))
      config_fail("\"seed\" must be a non-negative integer");
    cfg.seed = s.get<std::uint64_t>();
  }

  if (doc.contains("derivations")) {
    const json& ds = doc["derivations"];
    if (!ds.is_array())
      config_fail("\"derivations\" must be an array");
    for (std::size_t k = 0; k < ds.size(); ++k) {
      std::string where = "derivations[" + std::to_string(k) + "]";
      if (!ds[k].is_object())
        config_fail(where + " must be an object");
      reject_unknown(ds[k], where.c_str(), {"name", "x", "s", "t"});
      NamedDerivation nd;
      nd.name = ds[k].contains("name") ? get_string(ds[k], "name", where.c_str()) : "D" + std::to_string(k + 1);
      auto image = [&](const char* v) {
        return ds[k].contains(v) ? laurent_poly(get_string(ds[k], v, where.c_str()), v) : LaurentPoly();
      };
      nd.derivation = {image("x"), image("s"), image("t")};
      cfg.derivations.push_back(std::move(nd));
    }
  }

  if (doc.contains("weights")) {
    const json& w = doc["weights"];
    if (!w.is_object())
      config_fail("\"weights\" must be an object");
    std::map<std::string, int, std::less<>> weights;
    for (const auto& [var, value] : w.items()) {
      if (!value.is_number_integer())
        config_fail("weights." + var + " must be an integer");
      weights[var] = value.get<int>();
    }
    cfg.weights = std::move(weights);
  }
  if (doc.contains("output"))
    cfg.output = get_string(doc, "output", "config");
  return cfg;
}

RunConfig parse_config_text(std::string_view text, std::string_view command) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    config_fail(std::string("invalid JSON: ") + e.what());
  }
  return parse_config(doc, command);
}

// --- run ---------------------------------------------------------------------

bool Report::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const ReportCheck& c) { return c.passed; });
}

Report run(const RunConfig& cfg) {
  auto start = std::chrono::steady_clock::now();
  Report rep;
  rep.command = cfg.command;
  rep.version = tool_version;
  rep.seed = cfg.seed;
  std::vector<Domain> doms;
  for (const auto& spec : cfg.specs) {
    rep.subjects.push_back(spec_subject(spec));
    doms.push_back(build_domain(spec));
  }

  Collector out;
  std::mt19937_64 rng(cfg.seed);
  json results = json::array();
  if (cfg.command == "compare") {
    rep.results = compare_cmd(out, doms);
  } else {
    for (const auto& dom : doms) {
      out.subject = spec_subject(dom.spec);
      if (cfg.command == "verify-domain")
        results.push_back(verify_domain(out, dom, cfg));
      else if (cfg.command == "verify-lnd")
        results.push_back(verify_lnd(out, dom, cfg));
      else if (cfg.command == "grading")
        results.push_back(grading(out, dom));
      else if (cfg.command == "contraction")
        results.push_back(contraction(out, dom, cfg));
      else if (cfg.command == "chain")
        results.push_back(chain(out, dom));
      else if (cfg.command == "fingerprint")
        results.push_back(fingerprint_cmd(out, dom));
      else if (cfg.command == "oracle-audit")
        results.push_back(oracle_audit(out, dom, cfg, rng));
      else
        config_fail("unknown command \"" + cfg.command + "\"");
    }
    rep.results = std::move(results);
  }
  rep.checks = std::move(out.checks);
  rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

// --- output ------------------------------------------------------------------

namespace {

json report_json(const Report& rep) {
  json checks = json::array();
  std::size_t passed = 0;
  for (const auto& c : rep.checks) {
    checks.push_back({{"subject", c.subject},
                      {"name", c.name},
                      {"lemma", c.lemma},
                      {"passed", c.passed},
                      {"witness", c.witness},
                      {"detail", c.detail}});
    passed += c.passed ? 1 : 0;
  }
  return {{"tool", tool_name},
          {"version", rep.version},
          {"command", rep.command},
          {"seed", rep.seed},
          {"specs", rep.subjects},
          {"checks", checks},
          {"results", rep.results},
          {"summary",
           {{"checks", rep.checks.size()},
            {"passed", passed},
            {"failed", rep.checks.size() - passed},
            {"status", rep.all_passed() ? "pass" : "fail"}}}};
}

std::string report_text(const Report& rep) {
  std::ostringstream os;
  os << tool_name << " " << rep.version << "  command: " << rep.command << "  seed: " << rep.seed << "\n";
  std::string subject;
  std::size_t passed = 0;
  for (const auto& c : rep.checks) {
    if (c.subject != subject || &c == &rep.checks.front()) {
      subject = c.subject;
      os << "\n" << subject << "\n";
    }
    os << "  " << (c.passed ? "PASS" : "FAIL") << "  " << c.name << "  [" << c.lemma << "]\n";
    if (!c.passed && !c.witness.empty())
      os << "        witness: " << c.witness << "\n";
    if (!c.detail.empty())
      os << "        " << c.detail << "\n";
    passed += c.passed ? 1 : 0;
  }
  os << "\nresults:\n" << rep.results.dump(2) << "\n";
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.3f", rep.elapsed_seconds);
  os << "\n"
     << rep.checks.size() << " checks, " << passed << " passed, " << rep.checks.size() - passed << " failed in "
     << secs << " s: " << (rep.all_passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

} // namespace

std::string emit_report(const Report& report, ReportFormat format) {
  if (format == ReportFormat::text)
    return report_text(report);
  return report_json(report).dump(2) + "\n";
}

Report report_from_json(const json& doc) {
  Report rep;
  try {
    rep.command = doc.at("command").get<std::string>();
    rep.version = doc.at("version").get<std::string>();
    rep.seed = doc.at("seed").get<std::uint64_t>();
    rep.subjects = doc.at("specs").get<std::vector<std::string>>();
    for (const auto& c : doc.at("checks")) {
      ReportCheck r;
      r.subject = c.at("subject").get<std::string>();
      r.name = c.at("name").get<std::string>();
      r.lemma = c.at("lemma").get<std::string>();
      r.passed = c.at("passed").get<bool>();
      r.witness = c.at("witness").get<std::string>();
      r.detail = c.at("detail").get<std::string>();
      rep.checks.push_back(std::move(r));
    }
    rep.results = doc.at("results");
  } catch (const json::exception& e) {
    throw Error(std::string("malformed report: ") + e.what());
  }
  return rep;
}

} // namespace exo
