#pragma once

#include "exo/laurent_poly.hpp"
#include "exo/linear_span.hpp"
#include "exo/multi_poly.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace exo {

enum class DomainKind { russell, newclass };

// Parameters of B_(n,e,Q) = k[x,s,t,y,z] or of the Russell domain
// R_(n,F) = k[x,s,t,y] inside k[x,1/x,s,t]. Constructors validate.
class DomainSpec {
public:
  // n >= 1, e >= 0, (n,e) != (1,0), m,d,r >= 2, gcd(d,r) = 1, Q in k[x,s,t].
  static DomainSpec newclass(int n, int e, int m, int d, int r, MultiPoly Q);
  // n >= 1, F in k[x,s,t] with F(0,s,t) non-constant.
  static DomainSpec russell(int n, MultiPoly F);

  DomainKind kind() const { return kind_; }
  bool is_newclass() const { return kind_ == DomainKind::newclass; }
  int n() const { return n_; }
  int e() const { return e_; }
  int m() const { return m_; }
  int d() const { return d_; }
  int r() const { return r_; }
  // Q for newclass, zero for russell.
  const MultiPoly& Q() const { return Q_; }
  // s^d + t^r + xQ, or the Russell F.
  const MultiPoly& F() const { return F_; }
  // F^m - x^(nm) s; zero for russell.
  const MultiPoly& G() const { return G_; }
  // omega_B of the last generator: nm+e (newclass) or n (russell).
  int top_order() const;
  // "B(2,1,1)" or "R(3,s^2 + t^3 + x)".
  std::string label() const;

  friend bool operator==(const DomainSpec&, const DomainSpec&) = default;

private:
  DomainSpec() : Q_(xst_vars()), F_(xst_vars()), G_(xst_vars()) {}

  DomainKind kind_ = DomainKind::newclass;
  int n_ = 0, e_ = 0, m_ = 0, d_ = 0, r_ = 0;
  MultiPoly Q_, F_, G_;
};

// The two relations of the presentation ring k[X,Y,Z,S,T]:
// X^nY - S^d - T^r - X Q(X,S,T) and Y^m - X^e Z - S. Russell: X^nY - F(X,S,T) only.
std::vector<MultiPoly> presentation_relations(const DomainSpec& spec);

struct RelationCertificate {
  // x^n y - (y^m - x^e z)^d - t^r - x Q(x, y^m - x^e z, t); russell: x^n y - F
  LaurentPoly relation_value;
  // y^m - x^e z - s (newclass only)
  LaurentPoly s_value;
  // presentation relations evaluated at (x, y, z, s, t)
  std::vector<LaurentPoly> presentation_values;
  bool holds = false;
};

// A spec realized in k[x,1/x,s,t].
struct Domain {
  DomainSpec spec;
  LaurentPoly F, G, y, z; // z and G are zero for russell
  // F(0,s,t): leading slice of y; s^d + t^r for newclass.
  MultiPoly slice_f;
  RelationCertificate certificate;

  // x, s, t, y and (newclass) z.
  std::vector<std::pair<std::string, LaurentPoly>> generators() const;
};

Domain build_domain(const DomainSpec& spec);

// alpha = (nm+e) i + n j - l, all of i, j, l >= 0. Russell pieces have i = 0.
struct GradedPieceIndex {
  int alpha = 0;
  int i = 0;
  int j = 0;
  int l = 0;
  friend auto operator<=>(const GradedPieceIndex&, const GradedPieceIndex&) = default;
};

// The triple whose generator x^l y^j z^i has the smallest power of F in its
// leading slice, ties resolved in the order alpha <= 0, i = 0, j = 0, i,j >= 1.
std::optional<GradedPieceIndex> graded_index_for(int alpha, const DomainSpec& spec);
// The first triple admitted by the case ranges of the grading corollary:
// (alpha <= 0: i = j = 0), (i = 0, 1 <= j <= m-1, l < n), (j = 0, i >= 1, l < e),
// (i, j >= 1, l < min(n, e)). Russell: j = ceil(alpha/n), l = nj - alpha.
std::optional<GradedPieceIndex> corollary_index(int alpha, const DomainSpec& spec);
// Power of F in the leading slice of x^l y^j z^i.
int slice_power(const GradedPieceIndex& idx, const DomainSpec& spec);
// x^l y^j z^i
LaurentPoly piece_generator(const Domain& domain, const GradedPieceIndex& idx);

struct BNormalForm {
  MultiPoly base; // over (x, s, t)
  std::map<GradedPieceIndex, MultiPoly> coefficients; // over (s, t)

  BNormalForm() : base(xst_vars()) {}
  LaurentPoly reassemble(const Domain& domain) const;
  // base + (h)*x^l*y^j*z^i + ...
  std::string to_string() const;
};

struct MembershipResult {
  bool member = false;
  BNormalForm normal_form; // complete only for members
  // For non-members: the slice that failed and the alpha where it failed.
  std::optional<MultiPoly> witness_slice;
  int witness_alpha = 0;
  // x-order of the running remainder before each subtraction
  std::vector<int> orders;
};

MembershipResult membership(const Domain& domain, const LaurentPoly& p);
bool is_member(const Domain& domain, const LaurentPoly& p);

// p nonzero: p in B and omega_B(p) <= alpha.
bool filtration_test(const Domain& domain, const LaurentPoly& p, int alpha);

// Negative-x parts of the products x^a s^b t^c y^j z^i whose x-order is at
// least x_min and whose negative part has (s,t)-degree at most st_max. Since
// k[x,s,t] lies in B, p is in B iff p's negative part is in their span.
std::vector<LaurentPoly> projected_products(const Domain& domain, int x_min, int st_max);

struct OracleBounds {
  int x_lo = 0;
  int x_hi = 0;
  int st_degree = 0;
  // extra room for products whose terms outside the box cancel
  int x_slack = 0;
  int st_slack = 0;
};

// Brute-force linear-algebra description of B within a box of Laurent
// monomials, independent of the graded normal form.
class SpanOracle {
public:
  // Throws Error when a nonempty box cannot hold the generators y, z.
  SpanOracle(const Domain& domain, const OracleBounds& bounds);

  const OracleBounds& bounds() const { return bounds_; }
  bool in_bounds(const LaurentPoly& p) const;
  // p must lie in the box.
  bool contains(const LaurentPoly& p) const;
  const std::vector<LaurentPoly>& basis() const { return basis_; }
  std::size_t dimension() const { return basis_.size(); }
  std::size_t product_rows() const { return product_rows_; }

private:
  OracleBounds bounds_;
  std::map<LaurentMonomial, int> columns_;
  std::vector<LaurentMonomial> column_monomials_;
  int first_allowed_ = 0;
  std::vector<LaurentPoly> basis_;
  std::size_t product_rows_ = 0;
  SparseEchelon echelon_;
};

} // namespace exo
