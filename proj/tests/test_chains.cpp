#include "doctest.h"

#include "exo/chains.hpp"
#include "exo/errors.hpp"
#include "exo/parser.hpp"
#include "test_support.hpp"

using namespace exo;
using exo::testing::spec_russell3;
using exo::testing::spec_s1;

namespace {

MultiPoly X(const char* text) { return parse_multi(text, xst_vars()); }

const Domain& s1() {
  static const Domain d = build_domain(spec_s1());
  return d;
}

const Domain& r3() {
  static const Domain d = build_domain(spec_russell3());
  return d;
}

DomainSpec plain(int n, int e, int m) { return DomainSpec::newclass(n, e, m, 2, 3, X("1")); }

std::vector<bool> bits(std::initializer_list<int> v) {
  std::vector<bool> out;
  for (int b : v)
    out.push_back(b != 0);
  return out;
}

} // namespace

TEST_CASE("closed-form contraction generators") {
  MultiPoly F = X("s^2 + t^3 + x");
  MultiPoly G = X("(s^2 + t^3 + x)^2 - x^4*s");
  CHECK(paper_contraction_generators(spec_s1(), 1) == std::vector<MultiPoly>{F, X("x")});
  CHECK(paper_contraction_generators(spec_s1(), 2) == std::vector<MultiPoly>{F, X("x^2")});
  CHECK(paper_contraction_generators(spec_s1(), 3) == std::vector<MultiPoly>{F * F, X("x") * F, X("x^3")});
  CHECK(paper_contraction_generators(spec_s1(), 4) == std::vector<MultiPoly>{F * F, X("x^2") * F, X("x^4")});
  CHECK(paper_contraction_generators(spec_s1(), 5) ==
        std::vector<MultiPoly>{G, X("x") * F * F, X("x^3") * F, X("x^5")});
  CHECK(paper_contraction_generators(spec_russell3(), 2) == std::vector<MultiPoly>{F, X("x^2")});
  CHECK_THROWS_AS(paper_contraction_generators(spec_s1(), 0), Error);
  CHECK_THROWS_AS(paper_contraction_generators(spec_s1(), 6), Error);
  CHECK_THROWS_AS(paper_contraction_generators(spec_russell3(), 4), Error);

  CHECK(contraction_item(spec_s1(), 2) == "(1)");
  CHECK(contraction_item(spec_s1(), 3) == "(2)");
  CHECK(contraction_item(spec_s1(), 5) == "(3)");
  CHECK(contraction_item(spec_russell3(), 1) == "russell");
  CHECK(default_degree_bound(spec_s1()) == 30);
  CHECK(default_degree_bound(spec_russell3()) == 18);

  // m = 3, n = 2: item (2) twice with m0 = 1, 2
  auto g = paper_contraction_generators(plain(2, 1, 3), 6);
  MultiPoly F1 = plain(2, 1, 3).F();
  CHECK(g == std::vector<MultiPoly>{pow(F1, 3), X("x^2") * pow(F1, 2), X("x^4") * F1, X("x^6")});
}

TEST_CASE("verify_contraction_step examples") {
  auto v1 = verify_contraction_step(s1(), 1, 12);
  CHECK(v1.verified);
  CHECK(v1.oracle_dimension == v1.ideal_dimension);
  CHECK(v1.note.empty());

  auto v3 = verify_contraction_step(s1(), 3, 12);
  CHECK(v3.verified);
  CHECK(v3.note == item2_note);

  auto v5 = verify_contraction_step(s1(), 5, 20);
  CHECK(v5.verified);
  CHECK(v5.checks.size() == 3);
  for (const auto& c : v5.checks)
    CHECK(c.lemma == "Lemma The-contraction-of-I_N");

  auto r = verify_contraction_step(r3(), 2, 12);
  CHECK(r.verified);

  CHECK_THROWS_AS(verify_contraction_step(s1(), 5, 5), Error);
}

TEST_CASE("wrong candidate lists are rejected") {
  MultiPoly F = spec_s1().F();
  // missing x*F: the contraction is larger than the ideal
  auto small = verify_contraction_candidates(s1(), 3, {F * F, X("x^3")}, 12);
  CHECK_FALSE(small.verified);
  CHECK(small.checks[0].passed);
  CHECK_FALSE(small.checks[1].passed);
  CHECK_FALSE(small.checks[1].witness.empty());
  CHECK(small.oracle_dimension > small.ideal_dimension);
  // F/x^3 is not in B
  auto big = verify_contraction_candidates(s1(), 3, {F, X("x^3")}, 12);
  CHECK_FALSE(big.verified);
  CHECK_FALSE(big.checks[0].passed);
  CHECK(big.checks[0].witness == F.to_string());
}

TEST_CASE("all contraction steps of S1 at bound 20") {
  for (int N = 1; N <= 5; ++N) {
    auto v = verify_contraction_step(s1(), N, 20);
    INFO("N=" << N);
    CHECK(v.verified);
  }
}

TEST_CASE("contraction steps on other specs") {
  for (const auto& spec : {plain(1, 1, 2), plain(2, 2, 2), plain(3, 1, 2), plain(2, 0, 3),
                           DomainSpec::newclass(2, 1, 2, 3, 2, X("s*t - x"))}) {
    Domain d = build_domain(spec);
    for (int N = 1; N <= spec.top_order(); ++N) {
      INFO(spec.label() << " N=" << N);
      CHECK(verify_contraction_step(d, N, 14).verified);
    }
  }
  for (int n = 1; n <= 4; ++n) {
    Domain d = build_domain(DomainSpec::russell(n, X("s^2 + t^3 + x*s")));
    for (int N = 1; N <= n; ++N)
      CHECK(verify_contraction_step(d, N, 12).verified);
  }
}

TEST_CASE("exponential chain examples") {
  auto chain = exponential_chain(s1());
  std::vector<std::string> labels;
  for (const auto& m : chain.members) {
    labels.push_back(m.label);
    CHECK(m.verified);
  }
  CHECK(labels == std::vector<std::string>{"k[x,s,t]", "R(1,F)", "R(2,F)", "R(2,F)", "R(2,F)", "B(2,1,Q)"});
  CHECK(chain.collapse == bits({0, 0, 1, 1, 0}));
  CHECK(all_passed(chain.checks));
  // F^2/x^3 = x y^2
  CHECK(chain.members[3].generators[0] == LaurentPoly::x_power(1) * pow(s1().y, 2));

  auto rc = exponential_chain(r3());
  labels.clear();
  for (const auto& m : rc.members)
    labels.push_back(m.label);
  CHECK(labels == std::vector<std::string>{"k[x,s,t]", "R(1,F)", "R(2,F)", "R(3,F)"});
  CHECK(rc.collapse == bits({0, 0, 0}));
}

TEST_CASE("fingerprint examples") {
  auto fp = fingerprint(s1());
  CHECK(fp.total_steps == 5);
  CHECK(fp.distinct_members == 4);
  CHECK(fp.collapse_pattern == bits({0, 0, 1, 1, 0}));

  auto fr = fingerprint(r3());
  CHECK(fr.total_steps == 3);
  CHECK(fr.distinct_members == 4);
  CHECK(fr.collapse_pattern == bits({0, 0, 0}));

  auto f1 = fingerprint(build_domain(DomainSpec::russell(1, exo::testing::f1_poly())));
  CHECK(f1.total_steps == 1);
  CHECK(f1.distinct_members == 2);
}

TEST_CASE("collapse counts at desk scale") {
  for (int n = 1; n <= 3; ++n)
    for (int e = 0; e <= 2; ++e)
      for (int m = 2; m <= 3; ++m) {
        if (n == 1 && e == 0)
          continue;
        Domain d = build_domain(plain(n, e, m));
        auto chain = exponential_chain(d);
        auto fp = fingerprint(chain);
        INFO(d.spec.label() << " m=" << m);
        CHECK(all_passed(chain.checks));
        CHECK(fp.distinct_members == n + e + 1);
        CHECK(fp.distinct_members ==
              fp.total_steps + 1 - std::count(fp.collapse_pattern.begin(), fp.collapse_pattern.end(), true));
      }
  for (int n = 1; n <= 5; ++n) {
    auto fp = fingerprint(build_domain(DomainSpec::russell(n, exo::testing::f1_poly())));
    CHECK(fp.distinct_members == n + 1);
    CHECK(std::count(fp.collapse_pattern.begin(), fp.collapse_pattern.end(), true) == 0);
  }
}

TEST_CASE("chain monotonicity, extension and identity checks") {
  std::vector<DomainSpec> specs = {spec_s1(), spec_russell3(), plain(3, 2, 2), plain(1, 2, 3)};
  for (const auto& spec : exo::testing::sampled_specs(71, 3))
    specs.push_back(spec);
  for (const auto& spec : specs) {
    Domain d = build_domain(spec);
    auto chain = exponential_chain(d);
    auto checks = chain_structure_checks(d, chain);
    INFO(spec.label());
    CHECK(checks.size() == static_cast<std::size_t>(3 * spec.top_order() + 2));
    for (const auto& c : checks) {
      INFO(c.name);
      CHECK(c.passed);
    }
  }
}

TEST_CASE("compare examples") {
  MultiPoly q = X("1");
  auto ab = compare(DomainSpec::newclass(2, 1, 2, 2, 3, q), DomainSpec::newclass(1, 2, 2, 2, 3, q));
  CHECK(ab.conditions[0].passed);
  CHECK_FALSE(ab.conditions[1].passed);
  CHECK(ab.necessarily_non_isomorphic);
  CHECK(ab.verdict == "necessarily non-isomorphic");

  auto br = compare(spec_s1(), spec_russell3());
  CHECK_FALSE(br.conditions[2].passed);
  CHECK(br.necessarily_non_isomorphic);

  auto rr = compare(DomainSpec::russell(2, exo::testing::f1_poly()), DomainSpec::russell(2, exo::testing::f1_poly()));
  CHECK_FALSE(rr.necessarily_non_isomorphic);
  CHECK(rr.verdict == "conditions consistent");

  auto r23 = compare(DomainSpec::russell(2, exo::testing::f1_poly()), spec_russell3());
  CHECK_FALSE(r23.conditions[0].passed);
  CHECK(r23.necessarily_non_isomorphic);

  // with e = 0, z = y^m - s and B(n,0,Q) is R(n,F) itself
  auto same = compare(DomainSpec::newclass(2, 0, 2, 2, 3, q), DomainSpec::russell(2, exo::testing::f1_poly()));
  CHECK_FALSE(same.necessarily_non_isomorphic);

  auto mdr = compare(spec_s1(), DomainSpec::newclass(2, 1, 3, 2, 3, q));
  CHECK_FALSE(mdr.note.empty());
}

TEST_CASE("compare is symmetric") {
  std::vector<DomainSpec> specs = {spec_s1(), spec_russell3(), plain(1, 2, 2), plain(2, 0, 2), plain(3, 0, 2),
                                   DomainSpec::russell(2, exo::testing::f1_poly())};
  for (const auto& a : specs)
    for (const auto& b : specs) {
      auto ab = compare(a, b), ba = compare(b, a);
      CHECK(ab.verdict == ba.verdict);
      for (std::size_t k = 0; k < ab.conditions.size(); ++k)
        CHECK(ab.conditions[k].passed == ba.conditions[k].passed);
    }
}
