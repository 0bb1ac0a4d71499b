#pragma once

#include "exo/multi_poly.hpp"
#include "exo/rational.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>

namespace exo {

// Exponents of x (any integer), s and t (non-negative).
struct LaurentMonomial {
  int x = 0;
  int s = 0;
  int t = 0;

  friend auto operator<=>(const LaurentMonomial&, const LaurentMonomial&) = default;
  friend LaurentMonomial operator+(LaurentMonomial a, const LaurentMonomial& b) {
    return {a.x + b.x, a.s + b.s, a.t + b.t};
  }
  int st_degree() const { return s + t; }
};

// The variable set (x, s, t) shared by k[x,s,t] polynomials.
const VarSet& xst_vars();
// The variable set (s, t) used for x-slices.
const VarSet& st_vars();

// Element of k[x, 1/x, s, t]. The term map is ordered lexicographically on
// (x, s, t), so the first term always carries the minimal x exponent.
class LaurentPoly {
public:
  using TermMap = std::map<LaurentMonomial, Rational>;

  LaurentPoly() = default;
  explicit LaurentPoly(TermMap terms);
  LaurentPoly(const Rational& c); // NOLINT: constants convert implicitly

  static LaurentPoly monomial(LaurentMonomial m, const Rational& c = 1);
  static LaurentPoly x_power(int k) { return monomial({k, 0, 0}); }
  static LaurentPoly s() { return monomial({0, 1, 0}); }
  static LaurentPoly t() { return monomial({0, 0, 1}); }
  // p must be over a subset of {x, s, t}.
  static LaurentPoly from_multi(const MultiPoly& p);

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const LaurentMonomial& m) const;

  // Minimal / maximal x exponent; nullopt for zero.
  std::optional<int> x_order() const;
  std::optional<int> x_top() const;
  int max_st_degree() const; // -1 for zero
  bool is_polynomial() const; // no negative x exponent

  // Back to k[x,s,t]; throws if a negative x exponent is present.
  MultiPoly to_multi() const;
  // Coefficient of x^k as a polynomial in (s, t).
  MultiPoly x_coefficient(int k) const;
  LaurentPoly shifted_x(int k) const;
  // Terms with x exponent < bound.
  LaurentPoly below_x(int bound) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);
  void add_scaled(const LaurentPoly& o, const Rational& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

  std::string to_string() const;

private:
  TermMap terms_;
};

LaurentPoly pow(const LaurentPoly& p, unsigned k);

} // namespace exo
