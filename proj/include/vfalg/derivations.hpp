#pragma once

// Finite-window computations with adjoint actions: centralizers, submodule
// closures, first cohomology of sl_n with coefficients in a field space,
// recovery of an inner element from a derivation's values on generators,
// and stabilization of normalized solutions as n grows.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "vfalg/exactla.hpp"
#include "vfalg/witt.hpp"

namespace vfalg {

// A finite ordered basis of vector fields living inside a truncation window.
class SubspaceSpec {
 public:
  // Throws WindowViolation if a basis element leaves the window and
  // InvalidArgument if the basis is linearly dependent.
  SubspaceSpec(std::vector<VectorField> basis, TruncationWindow window);

  // Every monomial field of the window, in canonical term order.
  static SubspaceSpec full(const TruncationWindow& window);
  // Degree-k monomial fields in x_1..x_m with directions <= m.
  static SubspaceSpec degree_slice(int max_var, int degree);

  const std::vector<VectorField>& basis() const { return basis_; }
  const TruncationWindow& window() const { return window_; }
  std::size_t dim() const { return basis_.size(); }

  VectorField combine(const RationalVector& coords) const;

 private:
  std::vector<VectorField> basis_;
  TruncationWindow window_;
};

// Expresses fields as coordinates in a fixed linearly independent basis.
class SpanCoordinates {
 public:
  // Throws InvalidArgument if the basis is dependent.
  explicit SpanCoordinates(std::vector<VectorField> basis);

  std::size_t dim() const { return basis_.size(); }

  // nullopt if w is outside the span.
  std::optional<RationalVector> coordinates(const VectorField& w) const;
  // Like coordinates(), but throws WindowViolation naming a term of w that
  // cannot be matched.
  RationalVector require(const VectorField& w, const std::string& what) const;

 private:
  struct Reduced;
  Reduced reduce(const VectorField& w) const;

  std::vector<VectorField> basis_;
  std::vector<TermKey> keys_;
  std::map<TermKey, std::size_t, TermKeyOrder> key_index_;
  Echelon echelon_;
};

// Matrix of x -> [x, w] from span(domain) to span(codomain): column j holds
// the codomain coordinates of [domain_j, w]. In strict mode an image that
// leaves the codomain window or span throws WindowViolation; in project mode
// images are first truncated to the codomain window.
RationalMatrix ad_matrix(const VectorField& w, const SubspaceSpec& domain, const SubspaceSpec& codomain);

// Rows indexed by (s, term) over all terms of [s, b], columns by the ambient
// basis b. No window is applied, so its kernel is the centralizer even when
// the brackets leave the ambient window.
RationalMatrix stacked_action_matrix(const std::vector<VectorField>& actors, const SubspaceSpec& ambient);

// Canonical basis of {w in span(ambient) : [s, w] = 0 for all s}. Strict
// windows require every [s, b] to stay inside the ambient window.
std::vector<VectorField> centralizer(const std::vector<VectorField>& actors, const SubspaceSpec& ambient);

// Smallest sl_n-invariant subspace of span(ambient) containing v, returned
// as a reduced echelon basis over canonical term order.
std::vector<VectorField> submodule_closure(const VectorField& v, int n, const SubspaceSpec& ambient);

struct CohomologyDims {
  std::size_t cocycles = 0;      // dim Z^1
  std::size_t coboundaries = 0;  // dim B^1
  bool coboundaries_are_cocycles = false;

  long long h1() const {
    return static_cast<long long>(cocycles) - static_cast<long long>(coboundaries);
  }
};

// Z^1 and B^1 of a Lie algebra (given by a basis closed under bracket) with
// coefficients in span(module), acting by a.w = [a, w].
CohomologyDims first_cohomology(const std::vector<VectorField>& algebra, const SubspaceSpec& module);

// dim H^1(sl_n, span(module)). Throws WindowViolation if the module is not
// closed under the sl_n action.
long long h1_dimension(int n, const SubspaceSpec& module);

enum class GeneratorFamily { sl, L };

const char* to_string(GeneratorFamily f);
GeneratorFamily parse_family(const std::string& name);
std::vector<VectorField> family_basis(GeneratorFamily f, int n);

// Values of a derivation d on a generating set. Construction checks the
// derivation rule d[a,b] = [d a, b] + [a, d b] on every generator pair whose
// bracket lies in the span of the generators; pairs outside the span are
// recorded in skipped_pairs().
class DerivationSpec {
 public:
  struct Pair {
    std::size_t a;
    std::size_t b;
    bool operator==(const Pair&) const = default;
  };

  // Throws InvalidArgument on length mismatch, InconsistentSpec when the
  // derivation rule fails.
  DerivationSpec(std::vector<VectorField> generators, std::vector<VectorField> values);
  DerivationSpec(GeneratorFamily family, int n, std::vector<VectorField> values);

  // d(g) = [g, w] on the given family.
  static DerivationSpec inner(GeneratorFamily family, int n, const VectorField& w);

  const std::vector<VectorField>& generators() const { return generators_; }
  const std::vector<VectorField>& values() const { return values_; }
  const std::vector<Pair>& skipped_pairs() const { return skipped_; }
  std::size_t checked_pairs() const { return checked_; }
  std::optional<GeneratorFamily> family() const { return family_; }
  int n() const { return n_; }

 private:
  void validate();

  std::vector<VectorField> generators_;
  std::vector<VectorField> values_;
  std::vector<Pair> skipped_;
  std::size_t checked_ = 0;
  std::optional<GeneratorFamily> family_;
  int n_ = 0;
};

struct InconsistencyCertificate {
  std::size_t generator = 0;
  TermKey term;
  // Coefficient of `term` demanded by d(generator).
  Rational required;
  std::string message;

  bool operator==(const InconsistencyCertificate&) const = default;
};

struct InnerSolution {
  SolveKind kind = SolveKind::inconsistent;
  // Particular solution (free coordinates zero); absent when inconsistent.
  std::optional<VectorField> solution;
  // Ambiguity: basis of the centralizer of the generators in the search span.
  std::vector<VectorField> kernel;
  std::optional<InconsistencyCertificate> certificate;

  bool operator==(const InnerSolution&) const = default;
};

// Solves [g, w] = d(g) for all generators g over w in span(search). Every
// bracket [g, b] must stay in `codomain` (strict) or is truncated to it
// (project). The codomain defaults to the search window.
InnerSolution solve_inner(const DerivationSpec& d, const SubspaceSpec& search);
InnerSolution solve_inner(const DerivationSpec& d, const SubspaceSpec& search,
                          const TruncationWindow& codomain);

// Compares the generic bracket with the closed forms
//   [w, x_j d_i] = f_j d_i - sum_l x_j (d_i f_l) d_l,
//   its d_i-component f_j - x_j d_i f_i,
//   [w, x_i d_i - x_j d_j] = f_i d_i - f_j d_j + sum_l (x_j d_j f_l - x_i d_i f_l) d_l.
struct IdentityCheck {
  bool commutator = false;
  bool component = false;
  bool diagonal = false;
  bool all() const { return commutator && component && diagonal; }
};
IdentityCheck check_bracket_identities(const VectorField& w, int i, int j);
bool verify_bracket_identities(const VectorField& w, int i, int j);

enum class ScanTask { centralizer, solve_inner };

const char* to_string(ScanTask t);
ScanTask parse_scan_task(const std::string& name);

struct ScanParameters {
  ScanTask task = ScanTask::solve_inner;
  GeneratorFamily family = GeneratorFamily::L;
  // For solve_inner: the derivation is ad(inner) restricted to family(n).
  VectorField inner;
  // Window at step n: variables and directions <= n + extra_vars.
  int extra_vars = 0;
  int degree_min = -1;
  int degree_max = 2;
  TruncationMode mode = TruncationMode::strict;
};

struct Trajectory {
  std::vector<Rational> values;
  bool stabilized = false;
  // Smallest n from which the values stay constant to the end of the range.
  int first_stable_n = 0;
};

struct CoefficientTrajectory {
  TermKey term;
  Trajectory trajectory;
};

struct StabilizationReport {
  ScanTask task = ScanTask::solve_inner;
  int n_from = 0;
  int n_to = 0;
  // Centralizer dimension, or solution-kernel dimension, per n.
  Trajectory dimensions;
  // solve_inner only: coefficient of each term of the normalized solution
  // w_n - c_n * euler(n), c_n the coefficient of x1 d1 in w_n.
  std::vector<CoefficientTrajectory> coefficients;

  bool all_stabilized() const;
  // Field built from the final value of every coefficient trajectory.
  VectorField limit() const;
};

// A trajectory is stabilized when at least its last two values agree; a
// single-point range is never reported as stabilized.
Trajectory make_trajectory(std::vector<Rational> values, int n_from);

// Runs the task for n = n_from..n_to. Errors from a step are rethrown with
// the offending n in the message.
StabilizationReport stabilization_scan(const ScanParameters& params, int n_from, int n_to);

struct RigidityTable {
  std::size_t domain_dim = 0;
  std::size_t unknowns = 0;
  std::size_t checked_pairs = 0;
  // Dimension of the space of degree-windowed derivation tables on W_n that
  // vanish on L_basis(n).
  std::size_t dimension = 0;
};

// Linear maps D from the monomial fields of W_n with degree in
// [-1, degree_max] into the same window such that D vanishes on L_basis(n)
// and D[a,b] = [D a, b] + [a, D b] whenever [a,b] lies in the window.
RigidityTable rigidity_table_dimension(int n, int degree_max);

}  // namespace vfalg
