#include "exo/domains.hpp"

#include "exo/errors.hpp"
#include "exo/grading.hpp"
#include "exo/poly_ops.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace exo {

namespace {

int ceil_div(int a, int b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

void require(bool ok, const std::string& what) {
  if (!ok)
    throw SpecError("invalid domain parameters: " + what);
}

MultiPoly st_power_sum(int d, int r) {
  return MultiPoly::monomial(xst_vars(), {0, d, 0}, 1) + MultiPoly::monomial(xst_vars(), {0, 0, r}, 1);
}

// q(x,s,t) rewritten in the presentation variables as q(X,S,T).
MultiPoly to_presentation(const MultiPoly& q) {
  MultiPoly out(presentation_vars());
  for (const auto& [e, c] : q.terms())
    out += MultiPoly::monomial(presentation_vars(), {e[0], 0, 0, e[1], e[2]}, c);
  return out;
}

MultiPoly pvar(int idx, int power = 1) {
  Exponents e(5, 0);
  e[idx] = power;
  return MultiPoly::monomial(presentation_vars(), e, 1);
}

} // namespace

DomainSpec DomainSpec::newclass(int n, int e, int m, int d, int r, MultiPoly Q) {
  require(n >= 1, "n >= 1");
  require(e >= 0, "e >= 0");
  require(!(n == 1 && e == 0), "(n,e) != (1,0)");
  require(m >= 2, "m >= 2");
  require(d >= 2, "d >= 2");
  require(r >= 2, "r >= 2");
  require(std::gcd(d, r) == 1, "gcd(d,r) = 1");
  require(Q.vars() == xst_vars(), "Q must be a polynomial in x, s, t");
  DomainSpec spec;
  spec.kind_ = DomainKind::newclass;
  spec.n_ = n;
  spec.e_ = e;
  spec.m_ = m;
  spec.d_ = d;
  spec.r_ = r;
  spec.Q_ = std::move(Q);
  MultiPoly x = MultiPoly::variable(xst_vars(), "x");
  spec.F_ = st_power_sum(d, r) + x * spec.Q_;
  spec.G_ = pow(spec.F_, static_cast<unsigned>(m)) -
            MultiPoly::monomial(xst_vars(), {n * m, 1, 0}, 1);
  return spec;
}

DomainSpec DomainSpec::russell(int n, MultiPoly F) {
  require(n >= 1, "n >= 1");
  require(F.vars() == xst_vars(), "F must be a polynomial in x, s, t");
  require(!LaurentPoly::from_multi(F).x_coefficient(0).is_constant(), "F(0,s,t) non-constant");
  DomainSpec spec;
  spec.kind_ = DomainKind::russell;
  spec.n_ = n;
  spec.F_ = std::move(F);
  return spec;
}

int DomainSpec::top_order() const { return is_newclass() ? n_ * m_ + e_ : n_; }

std::string DomainSpec::label() const {
  if (is_newclass())
    return "B(" + std::to_string(n_) + "," + std::to_string(e_) + "," + Q_.to_string() + ")";
  return "R(" + std::to_string(n_) + "," + F_.to_string() + ")";
}

std::vector<MultiPoly> presentation_relations(const DomainSpec& spec) {
  const int n = spec.n();
  MultiPoly X = pvar(0), Y = pvar(1);
  if (!spec.is_newclass())
    return {pow(X, n) * Y - to_presentation(spec.F())};
  MultiPoly p = pow(X, n) * Y - pvar(3, spec.d()) - pvar(4, spec.r()) - X * to_presentation(spec.Q());
  MultiPoly q = pow(Y, spec.m()) - pow(X, spec.e()) * pvar(2) - pvar(3);
  return {p, q};
}

std::vector<std::pair<std::string, LaurentPoly>> Domain::generators() const {
  std::vector<std::pair<std::string, LaurentPoly>> out = {
      {"x", LaurentPoly::x_power(1)}, {"s", LaurentPoly::s()}, {"t", LaurentPoly::t()}, {"y", y}};
  if (spec.is_newclass())
    out.emplace_back("z", z);
  return out;
}

Domain build_domain(const DomainSpec& spec) {
  Domain dom{spec, LaurentPoly::from_multi(spec.F()), LaurentPoly::from_multi(spec.G()), {}, {}, MultiPoly(st_vars()), {}};
  const int n = spec.n();
  dom.y = dom.F.shifted_x(-n);
  dom.slice_f = dom.F.x_coefficient(0);
  LaurentPoly x = LaurentPoly::x_power(1), s = LaurentPoly::s(), t = LaurentPoly::t();
  RelationCertificate& cert = dom.certificate;
  if (spec.is_newclass()) {
    const int m = spec.m(), e = spec.e();
    dom.z = dom.G.shifted_x(-(n * m + e));
    // the leading slice of F ignores Q
    MultiPoly expected = MultiPoly::monomial(st_vars(), {spec.d(), 0}, 1) +
                         MultiPoly::monomial(st_vars(), {0, spec.r()}, 1);
    if (!(dom.slice_f == expected))
      throw Error("internal: leading slice of F differs from s^d + t^r");
    LaurentPoly sy = pow(dom.y, m) - dom.z.shifted_x(e);
    LaurentPoly qv = substitute(spec.Q(), {{"x", x}, {"s", sy}, {"t", t}});
    cert.relation_value = dom.y.shifted_x(n) - pow(sy, spec.d()) - pow(t, spec.r()) - x * qv;
    cert.s_value = sy - s;
  } else {
    cert.relation_value = dom.y.shifted_x(n) - dom.F;
  }
  Bindings b = {{"X", x}, {"Y", dom.y}, {"Z", dom.z}, {"S", s}, {"T", t}};
  bool ok = cert.relation_value.is_zero() && cert.s_value.is_zero();
  for (const auto& rel : presentation_relations(spec)) {
    cert.presentation_values.push_back(substitute(rel, b));
    ok = ok && cert.presentation_values.back().is_zero();
  }
  cert.holds = ok;
  return dom;
}

int slice_power(const GradedPieceIndex& idx, const DomainSpec& spec) {
  return idx.j + (spec.is_newclass() ? spec.m() * idx.i : 0);
}

std::optional<GradedPieceIndex> graded_index_for(int alpha, const DomainSpec& spec) {
  if (alpha <= 0)
    return GradedPieceIndex{alpha, 0, 0, -alpha};
  const int n = spec.n();
  if (!spec.is_newclass()) {
    int j = ceil_div(alpha, n);
    return GradedPieceIndex{alpha, 0, j, n * j - alpha};
  }
  const int w = spec.top_order();
  auto cor = corollary_index(alpha, spec);
  std::optional<GradedPieceIndex> best;
  std::tuple<int, int, int> best_key;
  for (int i = 0; i <= ceil_div(alpha, w); ++i) {
    int rest = alpha - w * i;
    int j = rest > 0 ? ceil_div(rest, n) : 0;
    GradedPieceIndex idx{alpha, i, j, w * i + n * j - alpha};
    int rank = i == 0 ? 1 : (j == 0 ? 2 : 3);
    std::tuple<int, int, int> key{slice_power(idx, spec), rank, i};
    if (!best || key < best_key) {
      best = idx;
      best_key = key;
    }
  }
  // where the corollary lists a triple of the same F power, use it
  if (cor && slice_power(*cor, spec) == std::get<0>(best_key))
    return cor;
  return best;
}

std::optional<GradedPieceIndex> corollary_index(int alpha, const DomainSpec& spec) {
  if (alpha <= 0)
    return GradedPieceIndex{alpha, 0, 0, -alpha};
  const int n = spec.n();
  if (!spec.is_newclass()) {
    int j = ceil_div(alpha, n);
    return GradedPieceIndex{alpha, 0, j, n * j - alpha};
  }
  const int m = spec.m(), e = spec.e(), w = spec.top_order();
  for (int j = 1; j <= m - 1; ++j) {
    int l = n * j - alpha;
    if (l >= 0 && l <= n - 1)
      return GradedPieceIndex{alpha, 0, j, l};
  }
  {
    int i = ceil_div(alpha, w);
    int l = w * i - alpha;
    if (i >= 1 && l <= e - 1)
      return GradedPieceIndex{alpha, i, 0, l};
  }
  int lmax = std::min(n, e) - 1;
  for (int i = 1; w * i + n <= alpha + lmax; ++i)
    for (int j = 1; w * i + n * j <= alpha + lmax; ++j) {
      int l = w * i + n * j - alpha;
      if (l >= 0)
        return GradedPieceIndex{alpha, i, j, l};
    }
  return std::nullopt;
}

LaurentPoly piece_generator(const Domain& domain, const GradedPieceIndex& idx) {
  LaurentPoly g = LaurentPoly::x_power(idx.l) * pow(domain.y, idx.j);
  if (idx.i > 0)
    g *= pow(domain.z, idx.i);
  return g;
}

LaurentPoly BNormalForm::reassemble(const Domain& domain) const {
  LaurentPoly out = LaurentPoly::from_multi(base);
  for (const auto& [idx, h] : coefficients)
    out += LaurentPoly::from_multi(h.rebased(xst_vars())) * piece_generator(domain, idx);
  return out;
}

std::string BNormalForm::to_string() const {
  std::string out;
  if (!base.is_zero())
    out = base.to_string();
  for (const auto& [idx, h] : coefficients) {
    if (!out.empty())
      out += " + ";
    out += "(" + h.to_string() + ")";
    if (idx.l > 0)
      out += "*x" + (idx.l > 1 ? "^" + std::to_string(idx.l) : std::string());
    if (idx.j > 0)
      out += "*y" + (idx.j > 1 ? "^" + std::to_string(idx.j) : std::string());
    if (idx.i > 0)
      out += "*z" + (idx.i > 1 ? "^" + std::to_string(idx.i) : std::string());
  }
  return out.empty() ? "0" : out;
}

MembershipResult membership(const Domain& domain, const LaurentPoly& p) {
  MembershipResult res;
  LaurentPoly rest = p;
  std::map<int, MultiPoly> f_powers;
  auto f_power = [&](int b) -> const MultiPoly& {
    auto it = f_powers.find(b);
    if (it == f_powers.end())
      it = f_powers.emplace(b, pow(domain.slice_f, static_cast<unsigned>(b))).first;
    return it->second;
  };
  for (;;) {
    auto lead = x_order_and_slice(rest);
    if (!lead || lead->order >= 0)
      break;
    res.orders.push_back(lead->order);
    int alpha = -lead->order;
    auto idx = graded_index_for(alpha, domain.spec);
    std::optional<MultiPoly> h;
    if (idx)
      h = divide_exact(lead->slice, f_power(slice_power(*idx, domain.spec)));
    if (!h) {
      res.witness_slice = lead->slice;
      res.witness_alpha = alpha;
      return res;
    }
    rest -= LaurentPoly::from_multi(h->rebased(xst_vars())) * piece_generator(domain, *idx);
    auto [it, fresh] = res.normal_form.coefficients.emplace(*idx, *h);
    if (!fresh)
      it->second += *h;
  }
  res.member = true;
  res.normal_form.base = rest.to_multi();
  return res;
}

bool is_member(const Domain& domain, const LaurentPoly& p) { return membership(domain, p).member; }

bool filtration_test(const Domain& domain, const LaurentPoly& p, int alpha) {
  if (p.is_zero())
    throw Error("filtration_test needs a nonzero element");
  return is_member(domain, p) && omega_B(p) <= alpha;
}

std::vector<LaurentPoly> projected_products(const Domain& domain, int x_min, int st_max) {
  std::vector<LaurentPoly> rows;
  if (x_min > -1 || st_max < 0)
    return rows;
  const DomainSpec& spec = domain.spec;
  const int n = spec.n(), w = spec.top_order();
  const int deg_f = domain.slice_f.total_degree();
  const int max_i = spec.is_newclass() ? st_max : 0;
  LaurentPoly zi(1);
  for (int i = 0; i <= max_i; ++i, zi *= domain.z) {
    int m_i = spec.is_newclass() ? spec.m() * i : 0;
    if (m_i * deg_f > st_max)
      break;
    LaurentPoly prod = zi;
    for (int j = 0;; ++j, prod *= domain.y) {
      if ((j + m_i) * deg_f > st_max)
        break;
      int top = n * j + (spec.is_newclass() ? w * i : 0); // -x-order of y^j z^i
      for (int a = std::max(0, x_min + top); a < top; ++a) {
        LaurentPoly row = prod.shifted_x(a).below_x(0);
        int deg = row.max_st_degree();
        if (deg > st_max)
          continue;
        for (int b = 0; b <= st_max - deg; ++b)
          for (int c = 0; b + c <= st_max - deg; ++c)
            rows.push_back(row * LaurentPoly::monomial({0, b, c}));
      }
    }
  }
  return rows;
}

SpanOracle::SpanOracle(const Domain& domain, const OracleBounds& bounds) : bounds_(bounds), echelon_(0) {
  if (bounds.x_lo > bounds.x_hi || bounds.st_degree < 0)
    return;
  for (const auto& [name, g] : domain.generators()) {
    if (name != "y" && name != "z")
      continue;
    if (!in_bounds(g))
      throw Error("oracle bounds too small to contain generator " + name + " = " + g.to_string());
  }
  const int x_min = bounds.x_lo - std::max(0, bounds.x_slack);
  const int st_max = bounds.st_degree + std::max(0, bounds.st_slack);

  // forbidden coordinates first, then the box
  std::vector<LaurentMonomial> allowed;
  for (int x = x_min; x <= -1; ++x)
    for (int s = 0; s <= st_max; ++s)
      for (int t = 0; s + t <= st_max; ++t) {
        LaurentMonomial mono{x, s, t};
        bool inside = x >= bounds.x_lo && x <= bounds.x_hi && s + t <= bounds.st_degree;
        if (inside)
          allowed.push_back(mono);
        else
          column_monomials_.push_back(mono);
      }
  first_allowed_ = static_cast<int>(column_monomials_.size());
  column_monomials_.insert(column_monomials_.end(), allowed.begin(), allowed.end());
  for (std::size_t k = 0; k < column_monomials_.size(); ++k)
    columns_.emplace(column_monomials_[k], static_cast<int>(k));

  echelon_ = SparseEchelon(static_cast<int>(column_monomials_.size()));
  for (const auto& row : projected_products(domain, x_min, st_max)) {
    SparseRow sparse;
    for (const auto& [mono, c] : row.terms())
      sparse.emplace_back(columns_.at(mono), c);
    std::sort(sparse.begin(), sparse.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    echelon_.insert(sparse);
    ++product_rows_;
  }

  for (int x = std::max(0, bounds.x_lo); x <= bounds.x_hi; ++x)
    for (int s = 0; s <= bounds.st_degree; ++s)
      for (int t = 0; s + t <= bounds.st_degree; ++t)
        basis_.push_back(LaurentPoly::monomial({x, s, t}));
  for (const auto& row : echelon_.rows_from(first_allowed_)) {
    LaurentPoly::TermMap terms;
    for (const auto& [col, c] : row)
      terms.emplace(column_monomials_[col], c);
    basis_.emplace_back(std::move(terms));
  }
}

bool SpanOracle::in_bounds(const LaurentPoly& p) const {
  for (const auto& [mono, c] : p.terms())
    if (mono.x < bounds_.x_lo || mono.x > bounds_.x_hi || mono.st_degree() > bounds_.st_degree)
      return false;
  return true;
}

bool SpanOracle::contains(const LaurentPoly& p) const {
  if (!in_bounds(p))
    throw Error("element outside the oracle bounds: " + p.to_string());
  SparseRow row;
  LaurentPoly negative = p.below_x(0);
  for (const auto& [mono, c] : negative.terms())
    row.emplace_back(columns_.at(mono), c);
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return echelon_.contains(row);
}

} // namespace exo
