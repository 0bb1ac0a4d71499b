#pragma once

#include "exo/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace exo {

// Ordered list of variable names shared by every polynomial built over it.
class VarSet {
public:
  VarSet(std::initializer_list<std::string> names);
  explicit VarSet(std::vector<std::string> names);

  std::size_t size() const { return names_->size(); }
  const std::string& operator[](std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  // Throws VariableError for names outside the set.
  std::size_t require(std::string_view name) const;

  friend bool operator==(const VarSet& a, const VarSet& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

using Exponents = std::vector<int>;

// Sparse polynomial over Q with non-negative exponents. Terms are kept in a
// map keyed lexicographically on the exponent tuple; zero coefficients are
// never stored.
class MultiPoly {
public:
  using TermMap = std::map<Exponents, Rational>;

  explicit MultiPoly(VarSet vars);
  MultiPoly(VarSet vars, TermMap terms);

  static MultiPoly constant(const VarSet& vars, const Rational& c);
  static MultiPoly variable(const VarSet& vars, std::string_view name, int power = 1);
  static MultiPoly monomial(const VarSet& vars, Exponents exps, const Rational& c = 1);

  const VarSet& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational coefficient(const Exponents& e) const;
  Rational constant_term() const;

  int total_degree() const; // -1 for zero
  int degree_in(std::size_t var) const; // -1 for zero
  bool depends_on(std::size_t var) const;

  // Lex-largest term; precondition: nonzero.
  const TermMap::value_type& leading_term() const { return *terms_.rbegin(); }

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  // Coefficient of var^k viewing the polynomial in that variable.
  MultiPoly coefficient_in(std::size_t var, int k) const;
  // Multiply by a monomial given as exponents.
  MultiPoly shifted(const Exponents& e) const;
  // Rebuild over another variable set; every used variable must exist there.
  MultiPoly rebased(const VarSet& target) const;

  // Printed in the expression grammar, terms in descending lex order.
  std::string to_string() const;

private:
  void check_same_vars(const MultiPoly& o) const;

  VarSet vars_;
  TermMap terms_;
};

MultiPoly pow(const MultiPoly& p, unsigned k);

} // namespace exo
