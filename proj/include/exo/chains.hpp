#pragma once

#include "exo/check.hpp"
#include "exo/domains.hpp"
#include "exo/groebner.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace exo {

// Closed-form generators of <x^N>^c = <x^N> B ∩ k[x,s,t]:
// (1) N = n0 <= n: F, x^N
// (2) N = n m0 + n0 (1 <= m0 <= m-1, 1 <= n0 <= n): F^(m0+1), x^n0 F^m0, ..., x^((m0-1)n+n0) F, x^N
// (3) N = nm + e0 (1 <= e0 <= e): G, x^e0 F^m, x^(n+e0) F^(m-1), ..., x^((m-1)n+e0) F, x^N
// Russell, 1 <= N <= n: F, x^N. Throws Error when N is out of range.
std::vector<MultiPoly> paper_contraction_generators(const DomainSpec& spec, int N);
// "(1)", "(2)", "(3)" or "russell"
std::string contraction_item(const DomainSpec& spec, int N);
// Note attached to every report using item (2).
extern const char* const item2_note;

// 2(nm+e) max(d,r); russell: 2 n deg F(0,s,t).
int default_degree_bound(const DomainSpec& spec);

struct ContractionVerdict {
  int N = 0;
  int degree_bound = 0;
  std::string item;
  std::vector<MultiPoly> generators;
  // dimensions of the two degree-bounded slices
  std::size_t oracle_dimension = 0; // {f : deg f <= bound, f/x^N in B}
  std::size_t ideal_dimension = 0;  // <generators> in degree <= bound
  std::size_t product_rows = 0;
  std::vector<CheckResult> checks;
  bool verified = false;
  std::string note;
};

// Compares the two slices by rank and double containment. Throws Error when
// the bound is below the degree of a generator.
ContractionVerdict verify_contraction_step(const Domain& domain, int N, int degree_bound, int st_slack = 2);
// Same comparison for an arbitrary candidate generator list.
ContractionVerdict verify_contraction_candidates(const Domain& domain, int N, std::vector<MultiPoly> candidates,
                                                 int degree_bound, int st_slack = 2);

struct ChainMember {
  int N = 0;
  std::vector<LaurentPoly> generators; // g / x^N
  std::optional<DomainSpec> predicted; // nullopt: k[x,s,t]
  std::string label;
  bool verified = false; // mutual generator membership with the prediction
  std::string failure;
};

struct ExponentialChain {
  DomainSpec spec;
  std::vector<ChainMember> members; // N = 0 .. top_order
  std::vector<bool> collapse;       // member N equals member N+1
  std::vector<CheckResult> checks;
};

ExponentialChain exponential_chain(const Domain& domain);

struct Fingerprint {
  int total_steps = 0;
  int distinct_members = 0;
  std::vector<bool> collapse_pattern;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const ExponentialChain& chain);
Fingerprint fingerprint(const Domain& domain);

// Descending chain of contraction ideals with the checks run on it:
// monotonicity, recovery of g from g/x^N, and the identity automorphism
// inducing the identity on every member.
std::vector<CheckResult> chain_structure_checks(const Domain& domain, const ExponentialChain& chain);

struct ComparisonReport {
  std::vector<CheckResult> conditions; // sum, pair, russell, fingerprint
  bool necessarily_non_isomorphic = false;
  std::string verdict; // "necessarily non-isomorphic" or "conditions consistent"
  std::string note;
  Fingerprint fingerprint_a, fingerprint_b;
};

ComparisonReport compare(const DomainSpec& a, const DomainSpec& b);

} // namespace exo
