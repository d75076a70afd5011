#pragma once

// Polynomial vector fields sum_i f_i d/dx_i with finitely many nonzero
// components, their Lie bracket, and the degree grading
// deg(m d/dx_i) = length(m) - 1.

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "vfalg/poly.hpp"

namespace vfalg {

using Direction = int;

// Coordinate of a single monomial field m d/dx_i; ordered by direction, then
// by the canonical monomial order.
struct TermKey {
  Direction direction = 1;
  Monomial monomial;

  int degree() const { return monomial.length() - 1; }
  bool operator==(const TermKey&) const = default;
};

struct TermKeyOrder {
  bool operator()(const TermKey& a, const TermKey& b) const {
    if (a.direction != b.direction) return a.direction < b.direction;
    return MonomialOrder{}(a.monomial, b.monomial);
  }
};

class VectorField {
 public:
  using ComponentMap = std::map<Direction, Polynomial>;

  VectorField() = default;
  // d/dx_i scaled by f; a zero f gives the zero field.
  VectorField(Direction i, Polynomial f);

  // The coordinate field d/dx_i.
  static VectorField d(Direction i) { return VectorField(i, Polynomial(Rational(1))); }
  static VectorField term(const TermKey& key, const Rational& coeff = 1);

  const ComponentMap& components() const { return components_; }
  // f_i; zero when absent.
  Polynomial component(Direction i) const;
  bool is_zero() const { return components_.empty(); }

  // Largest variable index in any coefficient (0 if none).
  VarIndex max_variable() const;
  // Largest direction index (0 for the zero field).
  Direction max_direction() const;
  // Number of (direction, monomial) terms.
  std::size_t term_count() const;
  Rational coefficient(const TermKey& key) const;

  // Visits terms in canonical order.
  void for_each_term(const std::function<void(const TermKey&, const Rational&)>& fn) const;

  void add_term(const TermKey& key, const Rational& c);
  void add_component(Direction i, const Polynomial& f);

  VectorField operator-() const;
  VectorField& operator+=(const VectorField& other);
  VectorField& operator-=(const VectorField& other);
  VectorField& operator*=(const Rational& c);

  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
  friend VectorField operator*(VectorField a, const Rational& c) { return a *= c; }
  friend VectorField operator*(const Rational& c, VectorField a) { return a *= c; }
  // Multiplies every component by p.
  friend VectorField operator*(const Polynomial& p, const VectorField& w);

  bool operator==(const VectorField&) const = default;

 private:
  ComponentMap components_;
};

// [u, w] as the commutator of derivations u∘w - w∘u.
VectorField bracket(const VectorField& u, const VectorField& w);

// w(p) = sum_i f_i * dp/dx_i.
Polynomial apply_field(const VectorField& w, const Polynomial& p);

struct HomogeneousField {
  VectorField field;
  int degree = -1;

  // Throws InvalidArgument when some term of `field` has another degree.
  HomogeneousField(VectorField field, int degree);
};

// Splits w into homogeneous pieces keyed by degree; the zero field gives an
// empty map.
std::map<int, HomogeneousField> degree_components(const VectorField& w);

// Returns the common degree of all terms, or nullopt for mixed or zero fields.
std::optional<int> homogeneous_degree(const VectorField& w);

// sl_n inside W_n, in this order: x_i d/dx_j for i != j in row-major (i, j),
// followed by x_i d/dx_i - x_{i+1} d/dx_{i+1} for i = 1..n-1.
std::vector<VectorField> sl_basis(int n);
// x_i d/dx_j for i, j = 1..n in row-major order.
std::vector<VectorField> gl_basis(int n);
// d/dx_1, ..., d/dx_n followed by gl_basis(n).
std::vector<VectorField> L_basis(int n);
// sum_{i<=n} x_i d/dx_i.
VectorField euler(int n);

enum class TruncationMode { strict, project };

struct TruncationWindow {
  int max_var = 1;
  int degree_min = -1;
  int degree_max = 2;
  TruncationMode mode = TruncationMode::strict;

  // Throws InvalidArgument unless max_var >= 1 and -1 <= degree_min <= degree_max.
  void validate() const;
  bool contains(const TermKey& key) const;
  bool contains(const VectorField& w) const;
};

// Drops terms outside the window (project) or throws WindowViolation naming
// the first offending term in canonical order (strict).
VectorField truncate(const VectorField& w, const TruncationWindow& win);

// Every monomial field m d/dx_i inside the window, in canonical term order.
std::vector<TermKey> window_terms(const TruncationWindow& win);

// All monomials of the given length in x_1..x_nvars, in canonical order.
std::vector<Monomial> monomials_of_length(int nvars, int length);

}  // namespace vfalg
