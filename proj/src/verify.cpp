#include "vfalg/verify.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "vfalg/derivations.hpp"
#include "vfalg/error.hpp"
#include "vfalg/random.hpp"
#include "vfalg/textio.hpp"

namespace vfalg {

namespace {

struct Mismatch {
  std::string detail;
};

void expect(bool ok, const std::function<std::string()>& detail) {
  if (!ok) throw Mismatch{detail()};
}

std::string fields(std::initializer_list<std::pair<const char*, const VectorField*>> named) {
  std::string out;
  for (const auto& [name, f] : named) {
    if (!out.empty()) out += "; ";
    out += std::string(name) + " = " + print_field(*f);
  }
  return out;
}

std::string polys(std::initializer_list<std::pair<const char*, const Polynomial*>> named) {
  std::string out;
  for (const auto& [name, p] : named) {
    if (!out.empty()) out += "; ";
    out += std::string(name) + " = " + print_polynomial(*p);
  }
  return out;
}

bool normalized(const Polynomial& p) {
  for (const auto& [m, c] : p.terms()) {
    if (c == 0) return false;
    for (const auto& f : m.factors())
      if (f.second == 0) return false;
  }
  return true;
}

bool normalized(const VectorField& w) {
  for (const auto& [i, f] : w.components())
    if (f.is_zero() || !normalized(f)) return false;
  return true;
}

using ItemFn = std::function<std::size_t(RandomSource&)>;

struct Item {
  std::string suite;
  std::string id;
  ItemFn run;
};

// --- poly -------------------------------------------------------------------

std::size_t poly_ring_axioms(RandomSource& rng) {
  const int cases = 200;
  for (int k = 0; k < cases; ++k) {
    const auto p = random_polynomial(rng, 4, 3, 4);
    const auto q = random_polynomial(rng, 4, 3, 4);
    const auto r = random_polynomial(rng, 4, 3, 4);
    const auto detail = [&] { return polys({{"p", &p}, {"q", &q}, {"r", &r}}); };
    expect(p + q == q + p, detail);
    expect(p * q == q * p, detail);
    expect((p + q) + r == p + (q + r), detail);
    expect((p * q) * r == p * (q * r), detail);
    expect(p * (q + r) == p * q + p * r, detail);
    expect(p + Polynomial() == p && p * Polynomial(Rational(1)) == p, detail);
  }
  return cases;
}

std::size_t poly_leibniz(RandomSource& rng) {
  const int cases = 200;
  for (int k = 0; k < cases; ++k) {
    const auto p = random_polynomial(rng, 4, 4, 4);
    const auto q = random_polynomial(rng, 4, 4, 4);
    const int i = rng.uniform(1, 4);
    expect(partial(p * q, i) == partial(p, i) * q + p * partial(q, i),
           [&] { return polys({{"p", &p}, {"q", &q}}) + "; i = " + std::to_string(i); });
  }
  return cases;
}

std::size_t poly_partials_commute(RandomSource& rng) {
  const int cases = 200;
  for (int k = 0; k < cases; ++k) {
    const auto p = random_polynomial(rng, 4, 4, 5);
    const int i = rng.uniform(1, 4);
    const int j = rng.uniform(1, 4);
    expect(partial(partial(p, i), j) == partial(partial(p, j), i), [&] {
      return polys({{"p", &p}}) + "; i = " + std::to_string(i) + "; j = " + std::to_string(j);
    });
  }
  return cases;
}

std::size_t poly_normalization(RandomSource& rng) {
  const int cases = 200;
  for (int k = 0; k < cases; ++k) {
    const auto p = random_polynomial(rng, 3, 3, 4);
    const auto q = random_polynomial(rng, 3, 3, 4);
    const auto detail = [&] { return polys({{"p", &p}, {"q", &q}}); };
    expect(normalized(p + q) && normalized(p - q) && normalized(p * q) && normalized(p - p), detail);
    expect((p - p).is_zero(), detail);
    expect(normalized(partial(p, rng.uniform(1, 3))), detail);
  }
  return cases;
}

// --- exactla ----------------------------------------------------------------

std::string matrix_text(const RationalMatrix& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += r ? ", [" : "[";
    for (std::size_t c = 0; c < m.cols(); ++c) out += (c ? ", " : "") + to_string(m(r, c));
    out += "]";
  }
  return out + "]";
}

std::size_t exactla_kernel(RandomSource& rng) {
  const int cases = 100;
  for (int k = 0; k < cases; ++k) {
    const auto m = random_matrix(rng, rng.uniform(0, 6), rng.uniform(0, 6), 60);
    const auto ker = kernel(m);
    const auto detail = [&] { return "M = " + matrix_text(m); };
    for (const auto& v : ker) {
      const auto mv = m.multiply(v);
      expect(std::all_of(mv.begin(), mv.end(), [](const Rational& q) { return q == 0; }), detail);
    }
    expect(rank(m) + ker.size() == m.cols(), detail);
    expect(kernel(m) == ker && rref(m) == rref(m), detail);
    expect(rref(rref(m)) == rref(m), detail);
  }
  return cases;
}

std::size_t exactla_solve(RandomSource& rng) {
  const int cases = 100;
  for (int k = 0; k < cases; ++k) {
    const auto m = random_matrix(rng, rng.uniform(1, 6), rng.uniform(1, 6), 50);
    RationalVector b(m.rows());
    // Half the cases use a right-hand side in the column space.
    if (rng.coin()) {
      RationalVector x(m.cols());
      for (auto& q : x) q = rng.small_rational();
      b = m.multiply(x);
    } else {
      for (auto& q : b) q = rng.uniform(0, 1) ? rng.small_rational() : Rational(0);
    }
    const auto s = solve(m, b);
    const auto detail = [&] { return "M = " + matrix_text(m); };
    if (s.kind == SolveKind::inconsistent) {
      expect(!s.particular && s.inconsistent_row.has_value(), detail);
      RationalMatrix aug(m.rows(), m.cols() + 1);
      for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
      }
      expect(rank(aug) == rank(m) + 1, detail);
    } else {
      expect(m.multiply(*s.particular) == b, detail);
      expect((s.kind == SolveKind::unique) == s.kernel_basis.empty(), detail);
      expect(s.kernel_basis == kernel(m), detail);
    }
  }
  return cases;
}

// --- witt -------------------------------------------------------------------

VectorField small_field(RandomSource& rng) { return random_field(rng, 4, -1, 3, 4); }

std::size_t witt_antisymmetry(RandomSource& rng) {
  const int cases = 500;
  for (int k = 0; k < cases; ++k) {
    const auto u = small_field(rng);
    const auto w = small_field(rng);
    const auto detail = [&] { return fields({{"u", &u}, {"w", &w}}); };
    expect(bracket(u, w) == -bracket(w, u), detail);
    expect(normalized(bracket(u, w)), detail);
  }
  return cases;
}

std::size_t witt_bilinearity(RandomSource& rng) {
  const int cases = 500;
  for (int k = 0; k < cases; ++k) {
    const auto u = small_field(rng);
    const auto v = small_field(rng);
    const auto w = small_field(rng);
    const Rational a = rng.small_rational();
    expect(bracket(a * u + v, w) == a * bracket(u, w) + bracket(v, w) &&
               bracket(w, a * u + v) == a * bracket(w, u) + bracket(w, v),
           [&] { return fields({{"u", &u}, {"v", &v}, {"w", &w}}) + "; a = " + to_string(a); });
  }
  return cases;
}

std::size_t witt_jacobi(RandomSource& rng) {
  const int cases = 500;
  for (int k = 0; k < cases; ++k) {
    const auto u = small_field(rng);
    const auto v = small_field(rng);
    const auto w = small_field(rng);
    const auto sum = bracket(u, bracket(v, w)) + bracket(v, bracket(w, u)) + bracket(w, bracket(u, v));
    expect(sum.is_zero(), [&] { return fields({{"u", &u}, {"v", &v}, {"w", &w}}); });
  }
  return cases;
}

std::size_t witt_commutator_oracle(RandomSource& rng) {
  const int cases = 500;
  for (int k = 0; k < cases; ++k) {
    const auto u = small_field(rng);
    const auto w = small_field(rng);
    const auto p = random_polynomial(rng, 4, 4, 4);
    expect(apply_field(bracket(u, w), p) == apply_field(u, apply_field(w, p)) - apply_field(w, apply_field(u, p)),
           [&] { return fields({{"u", &u}, {"w", &w}}) + "; " + polys({{"p", &p}}); });
  }
  return cases;
}

std::size_t witt_grading(RandomSource& rng) {
  std::size_t cases = 0;
  for (int n = 2; n <= 4; ++n) {
    for (int a = -1; a <= 3; ++a) {
      for (int b = -1; b <= 3; ++b) {
        for (int rep = 0; rep < 4; ++rep, ++cases) {
          const auto u = random_field(rng, n, a, a, 3);
          const auto w = random_field(rng, n, b, b, 3);
          const auto br = bracket(u, w);
          bool ok = true;
          br.for_each_term([&](const TermKey& key, const Rational&) { ok = ok && key.degree() == a + b; });
          expect(ok, [&] { return fields({{"u", &u}, {"w", &w}}); });
        }
        const auto w = random_field(rng, n, a, a, 4);
        expect(bracket(euler(n), w) == Rational(a) * w, [&] {
          return "n = " + std::to_string(n) + "; " + fields({{"w", &w}});
        });
        ++cases;
      }
    }
  }
  return cases;
}

std::size_t witt_identities(RandomSource& rng) {
  const int cases = 200;
  for (int k = 0; k < cases; ++k) {
    const auto w = small_field(rng);
    const int i = rng.uniform(1, 4);
    int j = rng.uniform(1, 3);
    if (j >= i) ++j;
    expect(verify_bracket_identities(w, i, j), [&] {
      return fields({{"w", &w}}) + "; i = " + std::to_string(i) + "; j = " + std::to_string(j);
    });
  }
  return cases;
}

// --- derivations ------------------------------------------------------------

TruncationWindow window(int max_var, int dmin, int dmax) {
  return TruncationWindow{max_var, dmin, dmax, TruncationMode::strict};
}

bool same_span(const std::vector<VectorField>& a, const std::vector<VectorField>& b) {
  // Coordinates over the union of terms; equal spans iff rank(a) = rank(b) = rank(a ∪ b).
  std::map<TermKey, std::size_t, TermKeyOrder> idx;
  for (const auto* set : {&a, &b})
    for (const auto& f : *set) f.for_each_term([&](const TermKey& k, const Rational&) { idx.emplace(k, 0); });
  std::size_t n = 0;
  for (auto& e : idx) e.second = n++;
  const auto rank_of = [&](std::initializer_list<const std::vector<VectorField>*> sets) {
    Echelon e(n);
    for (const auto* set : sets)
      for (const auto& f : *set) {
        SparseRow row;
        f.for_each_term([&](const TermKey& k, const Rational& c) { row.emplace_back(idx.at(k), c); });
        e.insert(row);
      }
    return e.rank();
  };
  const auto ra = rank_of({&a});
  return ra == rank_of({&b}) && ra == rank_of({&a, &b});
}

std::size_t derivations_centralizer(RandomSource&) {
  std::size_t cases = 0;
  for (int n = 2; n <= 3; ++n) {
    for (int extra = 0; extra <= 1; ++extra) {
      const auto ambient = SubspaceSpec::full(window(n + extra, -1, 2));
      for (const auto fam : {GeneratorFamily::sl, GeneratorFamily::L}) {
        const auto gens = family_basis(fam, n);
        const auto c = centralizer(gens, ambient);
        for (const auto& z : c)
          for (const auto& s : gens)
            expect(bracket(s, z).is_zero(), [&] { return fields({{"s", &s}, {"c", &z}}); });
        // Second encoding: stacked ad matrices into the ambient basis.
        Echelon e(ambient.dim());
        for (const auto& s : gens) {
          const auto m = ad_matrix(-s, ambient, ambient);
          for (std::size_t r = 0; r < m.rows(); ++r) e.insert(to_sparse(m.row(r)));
        }
        expect(ambient.dim() - e.rank() == c.size(), [&] {
          return "n = " + std::to_string(n) + ", family " + to_string(fam) + ": encodings disagree";
        });
        ++cases;
      }
    }
  }
  return cases;
}

std::size_t derivations_centralizer_shape(RandomSource&) {
  const auto ambient = SubspaceSpec::full(window(4, -1, 2));
  const auto c = centralizer(sl_basis(3), ambient);
  std::vector<VectorField> expected;
  const Polynomial x4 = Polynomial::var(4);
  Polynomial power(Rational(1));
  for (int k = 0; k <= 3; ++k) {
    if (k <= 2) expected.push_back(power * euler(3));
    expected.push_back(VectorField(4, power));
    power = power * x4;
  }
  expect(same_span(c, expected), [&] { return "centralizer of sl_3 in vars <= 4, degrees -1..2"; });
  return 1;
}

std::size_t derivations_h1(RandomSource&) {
  std::size_t cases = 0;
  for (int n = 2; n <= 3; ++n)
    for (int k = -1; k <= 1; ++k)
      for (int m = n; m <= n + 1; ++m) {
        const auto dims = first_cohomology(sl_basis(n), SubspaceSpec::degree_slice(m, k));
        expect(dims.coboundaries_are_cocycles && dims.h1() == 0, [&] {
          return "n = " + std::to_string(n) + ", k = " + std::to_string(k) + ", m = " + std::to_string(m) +
                 ": h1 = " + std::to_string(dims.h1());
        });
        ++cases;
      }
  return cases;
}

std::size_t derivations_roundtrip(RandomSource& rng) {
  const auto search = SubspaceSpec::full(window(3, -1, 2));
  const int cases = 100;
  for (int k = 0; k < cases; ++k) {
    const auto w = random_field(rng, 3, -1, 2, 5);
    const auto sol = solve_inner(DerivationSpec::inner(GeneratorFamily::L, 3, w), search);
    expect(sol.kind == SolveKind::unique && sol.solution && *sol.solution == w,
           [&] { return fields({{"w", &w}}); });
  }
  return cases;
}

std::size_t derivations_ambiguity(RandomSource& rng) {
  const auto search = SubspaceSpec::full(window(3, -1, 2));
  const auto cent = centralizer(sl_basis(3), search);
  const int cases = 20;
  for (int k = 0; k < cases; ++k) {
    const auto w = random_field(rng, 3, -1, 2, 5);
    const auto sol = solve_inner(DerivationSpec::inner(GeneratorFamily::sl, 3, w), search);
    expect(sol.kind == SolveKind::underdetermined && same_span(sol.kernel, cent) &&
               same_span(sol.kernel, {euler(3)}) && sol.solution &&
               same_span({*sol.solution - w}, {euler(3)}) == !(*sol.solution - w).is_zero(),
           [&] { return fields({{"w", &w}}); });
  }
  return cases;
}

std::size_t derivations_rigidity(RandomSource&) {
  std::size_t cases = 0;
  for (int n = 1; n <= 3; ++n) {
    const auto c = centralizer(L_basis(n), SubspaceSpec::full(window(n, -1, 3)));
    expect(c.empty(), [&] { return "n = " + std::to_string(n) + ": centralizer of L_n is nonzero"; });
    // Positive degrees only: brackets with d_k leave this window, so use the
    // stacked matrix directly instead of a closed ambient space.
    const auto positive = SubspaceSpec::full(window(n, 1, 3));
    expect(kernel(stacked_action_matrix(L_basis(n), positive)).empty(), [&] {
      return "n = " + std::to_string(n) + ": a positive-degree field commutes with L_n";
    });
    cases += 2;
  }
  return cases;
}

std::size_t derivations_closure(RandomSource&) {
  const auto c1 = submodule_closure(VectorField::d(1), 3, SubspaceSpec::full(window(3, -1, -1)));
  expect(c1.size() == 3, [] { return "closure of d1 under sl_3"; });
  const auto c2 = submodule_closure(euler(2), 2, SubspaceSpec::full(window(2, 0, 0)));
  expect(c2.size() == 1, [] { return "closure of x1 d1 + x2 d2 under sl_2"; });
  const auto c3 = submodule_closure(VectorField(1, Polynomial::var(1)), 2, SubspaceSpec::full(window(2, 0, 0)));
  expect(c3.size() == 4, [] { return "closure of x1 d1 under sl_2"; });
  return 3;
}

// --- textio -----------------------------------------------------------------

std::size_t textio_roundtrip(RandomSource& rng) {
  const int cases = 1000;
  for (int k = 0; k < cases; ++k) {
    const auto w = random_field(rng, 5, -1, 3, 5);
    const std::string s = print_field(w);
    expect(parse_field(s) == w, [&] { return "w = " + s; });
    expect(print_field(parse_field(s)) == s, [&] { return "w = " + s; });
  }
  return cases;
}

std::size_t textio_fuzz(RandomSource& rng) {
  static const std::string alphabet = "x d0123456789+-*/^ \n\t\xff()abc";
  const int cases = 2000;
  for (int k = 0; k < cases; ++k) {
    std::string s;
    const int len = rng.uniform(0, 24);
    for (int c = 0; c < len; ++c)
      s += rng.uniform(0, 3) == 0 ? static_cast<char>(rng.uniform(0, 255))
                                  : alphabet[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(alphabet.size()) - 1))];
    try {
      const auto w = parse_field(s);
      expect(parse_field(print_field(w)) == w, [&] { return "input bytes of length " + std::to_string(s.size()); });
    } catch (const ParseError&) {
    }
    try {
      (void)parse_polynomial(s);
    } catch (const ParseError&) {
    }
  }
  return cases;
}

std::size_t textio_json(RandomSource& rng) {
  const int cases = 200;
  for (int k = 0; k < cases; ++k) {
    const auto w = random_field(rng, 5, -1, 3, 5);
    const auto back = field_from_json(parse_json(to_json(w).dump()));
    expect(back == w, [&] { return fields({{"w", &w}}); });
  }
  for (int k = 0; k < 50; ++k) {
    const auto m = random_matrix(rng, rng.uniform(1, 5), rng.uniform(1, 5), 50);
    RationalVector b(m.rows());
    for (auto& q : b) q = rng.small_rational();
    const auto s = solve(m, b);
    expect(solve_outcome_from_json(parse_json(to_json(s).dump())) == s, [&] { return "M = " + matrix_text(m); });
  }
  for (int n = 1; n <= 3; ++n) {
    const auto spec = SubspaceSpec::degree_slice(n, 1);
    const auto back = subspace_from_json(parse_json(to_json(spec).dump()));
    expect(back.basis() == spec.basis(), [&] { return "degree-1 slice in " + std::to_string(n) + " variables"; });
  }
  const auto report = stabilization_scan(ScanParameters{ScanTask::solve_inner, GeneratorFamily::L,
                                                        parse_field("x1^2 d2 - d1"), 0, -1, 2,
                                                        TruncationMode::strict},
                                         2, 3);
  const auto again = stabilization_from_json(parse_json(to_json(report).dump()));
  expect(to_json(again) == to_json(report), [] { return "stabilization report JSON round trip"; });
  return cases + 54;
}

const std::vector<Item>& items() {
  static const std::vector<Item> all = {
      {"poly", "poly.ring_axioms", poly_ring_axioms},
      {"poly", "poly.leibniz", poly_leibniz},
      {"poly", "poly.partials_commute", poly_partials_commute},
      {"poly", "poly.normalization", poly_normalization},
      {"exactla", "exactla.kernel", exactla_kernel},
      {"exactla", "exactla.solve", exactla_solve},
      {"witt", "witt.antisymmetry", witt_antisymmetry},
      {"witt", "witt.bilinearity", witt_bilinearity},
      {"witt", "witt.jacobi", witt_jacobi},
      {"witt", "witt.commutator_oracle", witt_commutator_oracle},
      {"witt", "witt.grading", witt_grading},
      {"witt", "witt.identities", witt_identities},
      {"derivations", "derivations.centralizer", derivations_centralizer},
      {"derivations", "derivations.centralizer_shape", derivations_centralizer_shape},
      {"derivations", "derivations.h1", derivations_h1},
      {"derivations", "derivations.solve_inner_roundtrip", derivations_roundtrip},
      {"derivations", "derivations.ambiguity", derivations_ambiguity},
      {"derivations", "derivations.rigidity", derivations_rigidity},
      {"derivations", "derivations.closure", derivations_closure},
      {"textio", "textio.roundtrip", textio_roundtrip},
      {"textio", "textio.fuzz", textio_fuzz},
      {"textio", "textio.json", textio_json},
  };
  return all;
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(items.begin(), items.end(), [](const SuiteItem& i) { return i.passed; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"poly", "exactla", "witt", "derivations", "textio"};
  return names;
}

VerifyReport run_verify(const std::string& suite, std::uint64_t seed) {
  const auto& names = suite_names();
  if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end())
    throw InvalidArgument("unknown suite '" + suite + "'");
  VerifyReport report;
  report.seed = seed;
  for (const auto& item : items()) {
    if (suite != "all" && item.suite != suite) continue;
    RandomSource rng(seed, item.id);
    SuiteItem result;
    result.id = item.id;
    try {
      result.cases = item.run(rng);
      result.passed = true;
    } catch (const Mismatch& m) {
      result.counterexample = m.detail;
    } catch (const Error& e) {
      result.counterexample = std::string("error: ") + e.what();
    }
    report.items.push_back(std::move(result));
    if (!report.items.back().passed) break;
  }
  return report;
}

}  // namespace vfalg
