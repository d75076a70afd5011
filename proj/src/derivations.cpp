#include "vfalg/derivations.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>

#include "vfalg/error.hpp"
#include "vfalg/textio.hpp"

namespace vfalg {

namespace {

using KeyIndex = std::map<TermKey, std::size_t, TermKeyOrder>;

// Strict windows reject images that leave them; projecting windows drop the
// stray terms.
VectorField fit_to_window(const VectorField& image, const TruncationWindow& win,
                          const std::string& context) {
  if (win.mode == TruncationMode::project) return truncate(image, win);
  std::optional<std::pair<TermKey, Rational>> bad;
  image.for_each_term([&](const TermKey& key, const Rational& c) {
    if (!bad && !win.contains(key)) bad.emplace(key, c);
  });
  if (bad) {
    const std::string t = format_term(bad->first, bad->second);
    throw WindowViolation(t, context + ": term " + t + " leaves the window");
  }
  return image;
}

std::string describe(const VectorField& w) { return print_field(w); }

}  // namespace

// ---------------------------------------------------------------------------
// SpanCoordinates

struct SpanCoordinates::Reduced {
  std::optional<std::pair<TermKey, Rational>> offending;
  RationalVector coords;
};

SpanCoordinates::SpanCoordinates(std::vector<VectorField> basis)
    : basis_(std::move(basis)), echelon_(0) {
  for (const auto& b : basis_)
    b.for_each_term([&](const TermKey& key, const Rational&) { key_index_.emplace(key, 0); });
  std::size_t idx = 0;
  for (auto& [key, i] : key_index_) {
    i = idx++;
    keys_.push_back(key);
  }
  const std::size_t nkeys = keys_.size();
  echelon_ = Echelon(nkeys + basis_.size());
  // Row j is [coordinates of basis_j | e_j]; the tag block records which
  // combination of basis elements each pivot row stands for.
  for (std::size_t j = 0; j < basis_.size(); ++j) {
    SparseRow row;
    basis_[j].for_each_term(
        [&](const TermKey& key, const Rational& c) { row.emplace_back(key_index_.at(key), c); });
    row.emplace_back(nkeys + j, Rational(1));
    auto pivot = echelon_.insert(row);
    if (!pivot || *pivot >= nkeys)
      throw InvalidArgument("basis element " + std::to_string(j) + " (" + describe(basis_[j]) +
                            ") is linearly dependent on the preceding ones");
  }
}

SpanCoordinates::Reduced SpanCoordinates::reduce(const VectorField& w) const {
  Reduced out;
  const std::size_t nkeys = keys_.size();
  SparseRow row;
  w.for_each_term([&](const TermKey& key, const Rational& c) {
    auto it = key_index_.find(key);
    if (it == key_index_.end()) {
      if (!out.offending) out.offending.emplace(key, c);
      return;
    }
    row.emplace_back(it->second, c);
  });
  if (out.offending) return out;
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  const SparseRow r = echelon_.reduce(row);
  out.coords.assign(basis_.size(), Rational(0));
  for (const auto& [col, v] : r) {
    if (col < nkeys) {
      if (!out.offending) out.offending.emplace(keys_[col], v);
    } else {
      out.coords[col - nkeys] = -v;
    }
  }
  return out;
}

std::optional<RationalVector> SpanCoordinates::coordinates(const VectorField& w) const {
  auto r = reduce(w);
  if (r.offending) return std::nullopt;
  return std::move(r.coords);
}

RationalVector SpanCoordinates::require(const VectorField& w, const std::string& what) const {
  auto r = reduce(w);
  if (r.offending) {
    const std::string t = format_term(r.offending->first, r.offending->second);
    throw WindowViolation(t, what + ": " + describe(w) + " is not in the span (unmatched term " + t + ")");
  }
  return std::move(r.coords);
}

// ---------------------------------------------------------------------------
// SubspaceSpec

SubspaceSpec::SubspaceSpec(std::vector<VectorField> basis, TruncationWindow window)
    : basis_(std::move(basis)), window_(window) {
  window_.validate();
  for (std::size_t j = 0; j < basis_.size(); ++j) {
    basis_[j].for_each_term([&](const TermKey& key, const Rational& c) {
      if (!window_.contains(key)) {
        const std::string t = format_term(key, c);
        throw WindowViolation(t, "basis element " + std::to_string(j) + " has term " + t +
                                     " outside the window");
      }
    });
  }
  SpanCoordinates check(basis_);
}

SubspaceSpec SubspaceSpec::full(const TruncationWindow& window) {
  std::vector<VectorField> basis;
  for (const auto& key : window_terms(window)) basis.push_back(VectorField::term(key));
  return SubspaceSpec(std::move(basis), window);
}

SubspaceSpec SubspaceSpec::degree_slice(int max_var, int degree) {
  return full(TruncationWindow{max_var, degree, degree, TruncationMode::strict});
}

VectorField SubspaceSpec::combine(const RationalVector& coords) const {
  if (coords.size() != basis_.size()) throw InvalidArgument("coordinate vector has wrong length");
  VectorField out;
  for (std::size_t j = 0; j < coords.size(); ++j)
    if (coords[j] != 0) out += coords[j] * basis_[j];
  return out;
}

// ---------------------------------------------------------------------------
// Adjoint matrices and centralizers

RationalMatrix ad_matrix(const VectorField& w, const SubspaceSpec& domain, const SubspaceSpec& codomain) {
  const SpanCoordinates coords(codomain.basis());
  RationalMatrix m(codomain.dim(), domain.dim());
  for (std::size_t j = 0; j < domain.dim(); ++j) {
    const VectorField image =
        fit_to_window(bracket(domain.basis()[j], w), codomain.window(), "ad_matrix image");
    const RationalVector c = coords.require(image, "ad_matrix image escapes the codomain");
    for (std::size_t i = 0; i < c.size(); ++i) m(i, j) = c[i];
  }
  return m;
}

namespace {

// With `windowed` false the brackets are used as they are, whatever window
// they land in.
std::vector<SparseRow> stacked_rows(const std::vector<VectorField>& actors, const SubspaceSpec& ambient,
                                    bool windowed) {
  std::vector<SparseRow> rows;
  for (const auto& s : actors) {
    std::map<TermKey, SparseRow, TermKeyOrder> by_key;
    for (std::size_t j = 0; j < ambient.dim(); ++j) {
      VectorField image = bracket(s, ambient.basis()[j]);
      if (windowed)
        image = fit_to_window(image, ambient.window(),
                              "[" + describe(s) + ", " + describe(ambient.basis()[j]) + "]");
      image.for_each_term([&](const TermKey& key, const Rational& c) { by_key[key].emplace_back(j, c); });
    }
    for (auto& [key, row] : by_key) rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

RationalMatrix stacked_action_matrix(const std::vector<VectorField>& actors, const SubspaceSpec& ambient) {
  const auto rows = stacked_rows(actors, ambient, false);
  RationalMatrix m(rows.size(), ambient.dim());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rows[r]) m(r, c) = v;
  return m;
}

std::vector<VectorField> centralizer(const std::vector<VectorField>& actors, const SubspaceSpec& ambient) {
  Echelon e(ambient.dim());
  for (const auto& row : stacked_rows(actors, ambient, true)) e.insert(row);
  std::vector<VectorField> out;
  for (const auto& k : e.kernel_basis()) out.push_back(ambient.combine(k));
  return out;
}

std::vector<VectorField> submodule_closure(const VectorField& v, int n, const SubspaceSpec& ambient) {
  const auto actors = sl_basis(n);
  const SpanCoordinates coords(ambient.basis());
  Echelon span(ambient.dim());
  std::deque<VectorField> pending;
  if (!v.is_zero()) {
    span.insert(to_sparse(coords.require(v, "closure seed")));
    pending.push_back(v);
  }
  while (!pending.empty()) {
    const VectorField u = std::move(pending.front());
    pending.pop_front();
    for (const auto& s : actors) {
      const VectorField image =
          fit_to_window(bracket(s, u), ambient.window(), "[" + describe(s) + ", " + describe(u) + "]");
      if (image.is_zero()) continue;
      if (span.insert(to_sparse(coords.require(image, "closure image escapes the ambient span"))))
        pending.push_back(image);
    }
  }
  std::vector<VectorField> out;
  for (const auto& [pivot, row] : span.pivot_rows()) {
    RationalVector c(ambient.dim());
    for (const auto& [col, val] : row) c[col] = val;
    out.push_back(ambient.combine(c));
  }
  return out;
}

// ---------------------------------------------------------------------------
// First cohomology

CohomologyDims first_cohomology(const std::vector<VectorField>& algebra, const SubspaceSpec& module) {
  const std::size_t s = algebra.size();
  const std::size_t dim = module.dim();
  const SpanCoordinates alg(algebra);
  const SpanCoordinates mod(module.basis());

  // structure[a][b] = coordinates of [A_a, A_b] in the algebra basis.
  std::vector<std::vector<RationalVector>> structure(s, std::vector<RationalVector>(s));
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = a + 1; b < s; ++b)
      structure[a][b] = alg.require(bracket(algebra[a], algebra[b]), "algebra basis is not closed");

  // action[a][j] = coordinates of [A_a, M_j] in the module basis (column j of rho(A_a)).
  std::vector<std::vector<RationalVector>> action(s, std::vector<RationalVector>(dim));
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t j = 0; j < dim; ++j) {
      const VectorField image = fit_to_window(bracket(algebra[a], module.basis()[j]), module.window(),
                                              "module action of " + describe(algebra[a]));
      action[a][j] = mod.require(image, "module is not closed under the action");
    }

  // Unknown (a, i): i-th module coordinate of c(A_a), column a * dim + i.
  // Cocycle rule for a < b: c([A_a, A_b]) - A_a.c(A_b) + A_b.c(A_a) = 0.
  std::vector<SparseRow> equations;
  for (std::size_t a = 0; a < s; ++a) {
    for (std::size_t b = a + 1; b < s; ++b) {
      std::vector<std::map<std::size_t, Rational>> rows(dim);
      for (std::size_t k = 0; k < s; ++k) {
        const Rational& kappa = structure[a][b][k];
        if (kappa == 0) continue;
        for (std::size_t i = 0; i < dim; ++i) rows[i][k * dim + i] += kappa;
      }
      for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t i = 0; i < dim; ++i) {
          if (action[a][j][i] != 0) rows[i][b * dim + j] -= action[a][j][i];
          if (action[b][j][i] != 0) rows[i][a * dim + j] += action[b][j][i];
        }
      }
      for (auto& r : rows) {
        SparseRow sr;
        for (auto& [col, v] : r)
          if (v != 0) sr.emplace_back(col, v);
        if (!sr.empty()) equations.push_back(std::move(sr));
      }
    }
  }
  Echelon z(s * dim);
  for (const auto& eq : equations) z.insert(eq);

  // Coboundary of M_j: A_a -> [A_a, M_j].
  std::vector<SparseRow> coboundaries;
  for (std::size_t j = 0; j < dim; ++j) {
    SparseRow row;
    for (std::size_t a = 0; a < s; ++a)
      for (std::size_t i = 0; i < dim; ++i)
        if (action[a][j][i] != 0) row.emplace_back(a * dim + i, action[a][j][i]);
    coboundaries.push_back(std::move(row));
  }
  Echelon b(s * dim);
  for (const auto& row : coboundaries) b.insert(row);

  bool inside = true;
  for (const auto& cb : coboundaries) {
    for (const auto& eq : equations) {
      Rational dot = 0;
      auto it = cb.begin();
      for (const auto& [col, v] : eq) {
        while (it != cb.end() && it->first < col) ++it;
        if (it != cb.end() && it->first == col) dot += v * it->second;
      }
      if (dot != 0) {
        inside = false;
        break;
      }
    }
    if (!inside) break;
  }

  CohomologyDims out;
  out.cocycles = s * dim - z.rank();
  out.coboundaries = b.rank();
  out.coboundaries_are_cocycles = inside;
  return out;
}

long long h1_dimension(int n, const SubspaceSpec& module) {
  return first_cohomology(sl_basis(n), module).h1();
}

// ---------------------------------------------------------------------------
// Derivation data

const char* to_string(GeneratorFamily f) { return f == GeneratorFamily::sl ? "sl" : "L"; }

GeneratorFamily parse_family(const std::string& name) {
  if (name == "sl") return GeneratorFamily::sl;
  if (name == "L") return GeneratorFamily::L;
  throw InvalidArgument("unknown generator family '" + name + "' (expected sl or L)");
}

std::vector<VectorField> family_basis(GeneratorFamily f, int n) {
  return f == GeneratorFamily::sl ? sl_basis(n) : L_basis(n);
}

DerivationSpec::DerivationSpec(std::vector<VectorField> generators, std::vector<VectorField> values)
    : generators_(std::move(generators)), values_(std::move(values)) {
  validate();
}

DerivationSpec::DerivationSpec(GeneratorFamily family, int n, std::vector<VectorField> values)
    : generators_(family_basis(family, n)), values_(std::move(values)), family_(family), n_(n) {
  validate();
}

DerivationSpec DerivationSpec::inner(GeneratorFamily family, int n, const VectorField& w) {
  std::vector<VectorField> values;
  for (const auto& g : family_basis(family, n)) values.push_back(bracket(g, w));
  return DerivationSpec(family, n, std::move(values));
}

void DerivationSpec::validate() {
  if (generators_.size() != values_.size())
    throw InvalidArgument("derivation has " + std::to_string(generators_.size()) + " generators but " +
                          std::to_string(values_.size()) + " values");
  const SpanCoordinates span(generators_);
  for (std::size_t a = 0; a < generators_.size(); ++a) {
    for (std::size_t b = a + 1; b < generators_.size(); ++b) {
      const auto c = span.coordinates(bracket(generators_[a], generators_[b]));
      if (!c) {
        skipped_.push_back({a, b});
        continue;
      }
      VectorField lhs;
      for (std::size_t k = 0; k < c->size(); ++k)
        if ((*c)[k] != 0) lhs += (*c)[k] * values_[k];
      const VectorField rhs = bracket(values_[a], generators_[b]) + bracket(generators_[a], values_[b]);
      if (lhs != rhs)
        throw InconsistentSpec("derivation rule fails on generators " + std::to_string(a) + " (" +
                               describe(generators_[a]) + ") and " + std::to_string(b) + " (" +
                               describe(generators_[b]) + "): d[a,b] = " + describe(lhs) +
                               " but [d a, b] + [a, d b] = " + describe(rhs));
      ++checked_;
    }
  }
}

// ---------------------------------------------------------------------------
// Inner reconstruction

InnerSolution solve_inner(const DerivationSpec& d, const SubspaceSpec& search) {
  return solve_inner(d, search, search.window());
}

InnerSolution solve_inner(const DerivationSpec& d, const SubspaceSpec& search, const TruncationWindow& codomain) {
  codomain.validate();
  const auto& gens = d.generators();
  const std::size_t dim = search.dim();

  struct RowOrigin {
    std::size_t generator;
    TermKey key;
    Rational required;
  };
  std::vector<SparseRow> rows;
  RationalVector rhs;
  std::vector<RowOrigin> origin;

  for (std::size_t a = 0; a < gens.size(); ++a) {
    std::map<TermKey, SparseRow, TermKeyOrder> by_key;
    for (std::size_t j = 0; j < dim; ++j) {
      const VectorField image =
          fit_to_window(bracket(gens[a], search.basis()[j]), codomain,
                        "[" + describe(gens[a]) + ", " + describe(search.basis()[j]) + "]");
      image.for_each_term([&](const TermKey& key, const Rational& c) { by_key[key].emplace_back(j, c); });
    }
    const VectorField value = codomain.mode == TruncationMode::project
                                  ? truncate(d.values()[a], codomain)
                                  : d.values()[a];
    value.for_each_term([&](const TermKey& key, const Rational&) { by_key.try_emplace(key); });
    for (auto& [key, row] : by_key) {
      const Rational target = value.coefficient(key);
      rows.push_back(std::move(row));
      rhs.push_back(target);
      origin.push_back({a, key, target});
    }
  }

  const SolveOutcome outcome = solve(rows, rhs, dim);
  InnerSolution out;
  out.kind = outcome.kind;
  if (outcome.kind == SolveKind::inconsistent) {
    const auto& o = origin[*outcome.inconsistent_row];
    InconsistencyCertificate cert;
    cert.generator = o.generator;
    cert.term = o.key;
    cert.required = o.required;
    cert.message = "no w in the search span satisfies [g, w] = d(g) for generator " +
                   std::to_string(o.generator) + " (" + describe(gens[o.generator]) +
                   ") at coordinate " + format_term(o.key, 1) + " (required coefficient " +
                   to_string(o.required) + ") together with the preceding coordinates";
    out.certificate = std::move(cert);
    return out;
  }
  out.solution = search.combine(*outcome.particular);
  for (const auto& k : outcome.kernel_basis) out.kernel.push_back(search.combine(k));
  return out;
}

// ---------------------------------------------------------------------------
// Closed-form bracket identities

IdentityCheck check_bracket_identities(const VectorField& w, int i, int j) {
  if (i < 1 || j < 1) throw InvalidArgument("indices must be >= 1");
  if (i == j) throw InvalidArgument("identities need i != j");
  const Polynomial xi = Polynomial::var(i);
  const Polynomial xj = Polynomial::var(j);
  const Polynomial fi = w.component(i);
  const Polynomial fj = w.component(j);

  IdentityCheck out;

  const VectorField generic = bracket(w, VectorField(i, xj));
  VectorField closed(i, fj);
  for (const auto& [l, fl] : w.components()) closed.add_component(l, -(xj * partial(fl, i)));
  out.commutator = generic == closed;

  out.component = generic.component(i) == fj - xj * partial(fi, i);

  const VectorField generic_diag = bracket(w, VectorField(i, xi) - VectorField(j, xj));
  VectorField closed_diag = VectorField(i, fi) - VectorField(j, fj);
  for (const auto& [l, fl] : w.components())
    closed_diag.add_component(l, partial(fl, j) * xj - partial(fl, i) * xi);
  out.diagonal = generic_diag == closed_diag;
  return out;
}

bool verify_bracket_identities(const VectorField& w, int i, int j) {
  return check_bracket_identities(w, i, j).all();
}

// ---------------------------------------------------------------------------
// Stabilization

const char* to_string(ScanTask t) { return t == ScanTask::centralizer ? "centralizer" : "solve-inner"; }

ScanTask parse_scan_task(const std::string& name) {
  if (name == "centralizer") return ScanTask::centralizer;
  if (name == "solve-inner" || name == "solve_inner") return ScanTask::solve_inner;
  throw InvalidArgument("unknown scan task '" + name + "' (expected centralizer or solve-inner)");
}

Trajectory make_trajectory(std::vector<Rational> values, int n_from) {
  Trajectory t;
  std::size_t first = values.size();
  if (!values.empty()) {
    first = values.size() - 1;
    while (first > 0 && values[first - 1] == values.back()) --first;
  }
  t.stabilized = values.size() >= 2 && first + 1 < values.size();
  t.first_stable_n = n_from + static_cast<int>(first);
  t.values = std::move(values);
  return t;
}

bool StabilizationReport::all_stabilized() const {
  if (!dimensions.stabilized) return false;
  return std::all_of(coefficients.begin(), coefficients.end(),
                     [](const CoefficientTrajectory& c) { return c.trajectory.stabilized; });
}

VectorField StabilizationReport::limit() const {
  VectorField out;
  for (const auto& c : coefficients)
    if (!c.trajectory.values.empty()) out.add_term(c.term, c.trajectory.values.back());
  return out;
}

namespace {

template <typename Fn>
auto at_step(int n, Fn&& fn) {
  const std::string where = "at n=" + std::to_string(n) + ": ";
  try {
    return fn();
  } catch (const WindowViolation& e) {
    throw WindowViolation(e.term(), where + e.what());
  } catch (const InconsistentSpec& e) {
    throw InconsistentSpec(where + e.what());
  } catch (const InvalidArgument& e) {
    throw InvalidArgument(where + e.what());
  }
}

}  // namespace

StabilizationReport stabilization_scan(const ScanParameters& params, int n_from, int n_to) {
  if (n_from > n_to) throw InvalidArgument("empty n range");
  if (n_from < 1) throw InvalidArgument("n range must start at n >= 1");
  if (params.extra_vars < 0) throw InvalidArgument("extra_vars must be >= 0");

  StabilizationReport report;
  report.task = params.task;
  report.n_from = n_from;
  report.n_to = n_to;

  std::vector<Rational> dims;
  std::vector<VectorField> normalized;
  for (int n = n_from; n <= n_to; ++n) {
    const TruncationWindow win{n + params.extra_vars, params.degree_min, params.degree_max, params.mode};
    if (params.task == ScanTask::centralizer) {
      const auto basis = at_step(n, [&] {
        return centralizer(family_basis(params.family, n), SubspaceSpec::full(win));
      });
      dims.emplace_back(static_cast<unsigned long>(basis.size()));
    } else {
      const InnerSolution sol = at_step(n, [&] {
        return solve_inner(DerivationSpec::inner(params.family, n, params.inner), SubspaceSpec::full(win));
      });
      if (sol.kind == SolveKind::inconsistent)
        throw InconsistentSpec("at n=" + std::to_string(n) + ": " + sol.certificate->message);
      dims.emplace_back(static_cast<unsigned long>(sol.kernel.size()));
      VectorField w = *sol.solution;
      const Rational c = w.coefficient(TermKey{1, Monomial::var(1)});
      if (c != 0) w -= c * euler(n);
      normalized.push_back(std::move(w));
    }
  }
  report.dimensions = make_trajectory(std::move(dims), n_from);

  std::map<TermKey, bool, TermKeyOrder> keys;
  for (const auto& w : normalized)
    w.for_each_term([&](const TermKey& key, const Rational&) { keys.emplace(key, true); });
  for (const auto& [key, unused] : keys) {
    std::vector<Rational> values;
    for (const auto& w : normalized) values.push_back(w.coefficient(key));
    report.coefficients.push_back({key, make_trajectory(std::move(values), n_from)});
  }
  return report;
}

// ---------------------------------------------------------------------------
// Degree-windowed derivation tables

RigidityTable rigidity_table_dimension(int n, int degree_max) {
  if (n < 1) throw InvalidArgument("rigidity table needs n >= 1");
  if (degree_max < 0) throw InvalidArgument("rigidity table needs degree_max >= 0");
  const TruncationWindow win{n, -1, degree_max, TruncationMode::strict};
  const std::vector<TermKey> keys = window_terms(win);
  const std::size_t nk = keys.size();
  KeyIndex index;
  for (std::size_t i = 0; i < nk; ++i) index.emplace(keys[i], i);
  std::vector<VectorField> fields;
  for (const auto& k : keys) fields.push_back(VectorField::term(k));

  // Unknown (b, c): coefficient of fields[c] in D(fields[b]).
  const auto unknown = [nk](std::size_t b, std::size_t c) { return b * nk + c; };

  // table[c][b] = [fields[c], fields[b]]
  std::vector<std::vector<VectorField>> table(nk, std::vector<VectorField>(nk));
  for (std::size_t c = 0; c < nk; ++c)
    for (std::size_t b = 0; b < nk; ++b) table[c][b] = bracket(fields[c], fields[b]);

  Echelon e(nk * nk);
  const auto flush = [&](std::map<TermKey, std::map<std::size_t, Rational>, TermKeyOrder>& eqs) {
    for (auto& [key, coeffs] : eqs) {
      SparseRow row;
      for (auto& [col, v] : coeffs)
        if (v != 0) row.emplace_back(col, v);
      if (!row.empty()) e.insert(row);
    }
  };

  // D vanishes on L_basis(n); every L element is a single window term.
  for (const auto& g : L_basis(n)) {
    std::map<TermKey, std::map<std::size_t, Rational>, TermKeyOrder> eqs;
    g.for_each_term([&](const TermKey& key, const Rational& coeff) {
      const std::size_t t = index.at(key);
      for (std::size_t c = 0; c < nk; ++c) eqs[keys[c]][unknown(t, c)] += coeff;
    });
    flush(eqs);
  }

  RigidityTable out;
  out.domain_dim = nk;
  out.unknowns = nk * nk;
  for (std::size_t a = 0; a < nk; ++a) {
    for (std::size_t b = a + 1; b < nk; ++b) {
      const VectorField& br = table[a][b];
      if (!win.contains(br)) continue;
      ++out.checked_pairs;
      // D([a,b]) - [D a, b] - [a, D b] = 0, collected per output term.
      std::map<TermKey, std::map<std::size_t, Rational>, TermKeyOrder> eqs;
      br.for_each_term([&](const TermKey& key, const Rational& coeff) {
        const std::size_t t = index.at(key);
        for (std::size_t c = 0; c < nk; ++c) eqs[keys[c]][unknown(t, c)] += coeff;
      });
      for (std::size_t c = 0; c < nk; ++c) {
        table[c][b].for_each_term(
            [&](const TermKey& key, const Rational& v) { eqs[key][unknown(a, c)] -= v; });
        // [a, D b] = -sum_c D_bc [c, a]
        table[c][a].for_each_term(
            [&](const TermKey& key, const Rational& v) { eqs[key][unknown(b, c)] += v; });
      }
      flush(eqs);
    }
  }
  out.dimension = out.unknowns - e.rank();
  return out;
}

}  // namespace vfalg
