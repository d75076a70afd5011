#pragma once

// Sparse multivariate polynomials over Q in the variables x1, x2, ...
//
// A Monomial is a sorted list of (variable, exponent) pairs with positive
// exponents; the empty list is the unit monomial. A Polynomial maps monomials
// to nonzero coefficients. Both are plain values: every operation returns a
// fresh normalized object.

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "vfalg/rational.hpp"

namespace vfalg {

using VarIndex = int;

class Monomial {
 public:
  using Factor = std::pair<VarIndex, int>;

  Monomial() = default;
  // Builds from arbitrary factors; merges repeated variables and drops
  // zero exponents. Throws InvalidArgument on an index or exponent < 0
  // or an index of 0.
  explicit Monomial(std::vector<Factor> factors);

  static Monomial unit() { return {}; }
  static Monomial var(VarIndex i, int exponent = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_unit() const { return factors_.empty(); }

  // Total degree (sum of exponents).
  int length() const;
  int degree_in(VarIndex i) const;
  VarIndex max_variable() const { return factors_.empty() ? 0 : factors_.back().first; }

  Monomial operator*(const Monomial& other) const;

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<Factor> factors_;
};

// Canonical order: by length, then the monomial with the larger exponent at
// the first differing variable index comes first (x1^2 < x1*x2 < x2^2).
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

int var_degree(const Monomial& m, VarIndex i);

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialOrder>;

  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Polynomial(const Monomial& m, const Rational& coeff = 1);

  static Polynomial var(VarIndex i) { return Polynomial(Monomial::var(i)); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Monomial& m) const;

  // Largest variable index occurring in any term; 0 for constants.
  VarIndex max_variable() const;
  // Largest monomial length; -1 for the zero polynomial.
  int total_degree() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  bool operator==(const Polynomial&) const = default;

  // Adds c*m in place, keeping the map normalized.
  void add_term(const Monomial& m, const Rational& c);

 private:
  TermMap terms_;
};

Polynomial poly_add(const Polynomial& p, const Polynomial& q);
Polynomial poly_mul(const Polynomial& p, const Polynomial& q);
// Formal partial derivative d p / d x_i.
Polynomial partial(const Polynomial& p, VarIndex i);
std::set<VarIndex> support_vars(const Polynomial& p);

}  // namespace vfalg
