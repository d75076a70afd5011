#include <doctest.h>

#include "vfalg/derivations.hpp"
#include "vfalg/error.hpp"
#include "vfalg/textio.hpp"

using namespace vfalg;

namespace {

VectorField F(const char* s) { return parse_field(s); }

TruncationWindow win(int max_var, int dmin, int dmax, TruncationMode mode = TruncationMode::strict) {
  return TruncationWindow{max_var, dmin, dmax, mode};
}

// Equal spans: each set reduces to zero against the other.
bool same_span(const std::vector<VectorField>& a, const std::vector<VectorField>& b) {
  if (a.empty() || b.empty()) return a.empty() && b.empty();
  const SpanCoordinates sa(a), sb(b);
  for (const auto& x : a)
    if (!sb.coordinates(x)) return false;
  for (const auto& x : b)
    if (!sa.coordinates(x)) return false;
  return true;
}

}  // namespace

TEST_CASE("subspace construction") {
  CHECK(SubspaceSpec::full(win(2, -1, 0)).dim() == 6);
  CHECK(SubspaceSpec::degree_slice(2, -1).basis() == std::vector<VectorField>{F("d1"), F("d2")});
  CHECK_THROWS_AS(SubspaceSpec({F("x5 d1")}, win(4, -1, 2)), WindowViolation);
  CHECK_THROWS_AS(SubspaceSpec({F("d1"), F("2 d1")}, win(2, -1, 2)), InvalidArgument);
}

TEST_CASE("ad_matrix") {
  const auto sl = SubspaceSpec(sl_basis(3), win(3, 0, 0));
  CHECK(ad_matrix(euler(3), sl, sl).is_zero());
  CHECK(ad_matrix(VectorField(), sl, sl).is_zero());
  // [d1, x1 d2] = d2 and [d2, x1 d2] = 0.
  const auto d = SubspaceSpec({F("d1"), F("d2")}, win(2, -1, -1));
  const auto m = ad_matrix(F("x1 d2"), d, d);
  CHECK(m == RationalMatrix(2, 2, {0, 0, 1, 0}));
  CHECK_THROWS_AS(ad_matrix(F("x1^2 d2"), d, d), WindowViolation);
}

TEST_CASE("centralizers") {
  const auto c3 = centralizer(sl_basis(3), SubspaceSpec::full(win(3, -1, 3)));
  REQUIRE(c3.size() == 1);
  CHECK(c3[0] == euler(3));

  const auto c4 = centralizer(sl_basis(3), SubspaceSpec::full(win(4, -1, 1)));
  CHECK(c4.size() == 5);
  CHECK(same_span(c4, {euler(3), F("x4 d4"), F("d4"), F("x4^2 d4"),
                       F("x1*x4 d1 + x2*x4 d2 + x3*x4 d3")}));

  CHECK(centralizer(L_basis(2), SubspaceSpec::full(win(2, -1, 3))).empty());
  CHECK_THROWS_AS(centralizer(L_basis(2), SubspaceSpec::full(win(2, 0, 3))), WindowViolation);
  // Projection drops the degree -1 images, so the d_i constraints disappear.
  CHECK(centralizer(L_basis(2), SubspaceSpec::full(win(2, 0, 3, TruncationMode::project))).size() > 0);
}

TEST_CASE("stacked matrix and centralizer agree") {
  const auto ambient = SubspaceSpec::full(win(3, -1, 1));
  const auto m = stacked_action_matrix(sl_basis(2), ambient);
  CHECK(m.cols() == ambient.dim());
  CHECK(kernel(m).size() == centralizer(sl_basis(2), ambient).size());
}

TEST_CASE("submodule closures") {
  CHECK(submodule_closure(F("d1"), 3, SubspaceSpec::full(win(3, -1, -1))).size() == 3);
  CHECK(submodule_closure(euler(2), 2, SubspaceSpec::full(win(2, 0, 0))).size() == 1);
  CHECK(submodule_closure(F("x1 d1"), 2, SubspaceSpec::full(win(2, 0, 0))).size() == 4);
  CHECK(submodule_closure(VectorField(), 2, SubspaceSpec::full(win(2, 0, 0))).empty());
  // The spare variable x3 never enters the orbit.
  CHECK(submodule_closure(F("x1 d2"), 2, SubspaceSpec::full(win(3, 0, 0))).size() == 3);
}

TEST_CASE("first cohomology") {
  CHECK(h1_dimension(2, SubspaceSpec::degree_slice(2, -1)) == 0);
  CHECK(h1_dimension(2, SubspaceSpec({euler(2)}, win(2, 0, 0))) == 0);
  CHECK(h1_dimension(3, SubspaceSpec::degree_slice(3, 0)) == 0);
  const auto dims = first_cohomology(sl_basis(2), SubspaceSpec::degree_slice(2, -1));
  CHECK(dims.coboundaries_are_cocycles);
  // B^1 of a module without invariants has the module's dimension.
  CHECK(dims.coboundaries == 2);
  CHECK_THROWS_AS(h1_dimension(2, SubspaceSpec({F("d1")}, win(2, -1, -1))), WindowViolation);
}

TEST_CASE("derivation specs") {
  CHECK_THROWS_AS(DerivationSpec({F("d1")}, {}), InvalidArgument);
  // [d1, x1 d1] = d1, so d must satisfy d(d1) = [d d1, x1 d1] + [d1, d(x1 d1)].
  CHECK_THROWS_AS(DerivationSpec({F("d1"), F("x1 d1")}, {F("d2"), VectorField()}), InconsistentSpec);
  const DerivationSpec ok({F("d1"), F("x1 d1")}, {F("d1"), VectorField()});
  CHECK(ok.checked_pairs() > 0);
  const auto spec = DerivationSpec::inner(GeneratorFamily::sl, 2, F("x1^2 d2"));
  CHECK(spec.family() == GeneratorFamily::sl);
  CHECK(spec.values()[0] == bracket(sl_basis(2)[0], F("x1^2 d2")));
}

TEST_CASE("solve_inner") {
  const auto search = SubspaceSpec::full(win(2, -1, 2));
  const auto s1 = solve_inner(DerivationSpec::inner(GeneratorFamily::L, 2, F("x1^2 d2")), search);
  CHECK(s1.kind == SolveKind::unique);
  CHECK(*s1.solution == F("x1^2 d2"));

  const auto s0 = solve_inner(DerivationSpec(GeneratorFamily::L, 2, std::vector<VectorField>(6)), search);
  CHECK(s0.kind == SolveKind::unique);
  CHECK(s0.solution->is_zero());

  const auto se = solve_inner(DerivationSpec::inner(GeneratorFamily::L, 2, euler(2)), search);
  CHECK(se.kind == SolveKind::unique);
  CHECK(*se.solution == euler(2));

  const auto amb = solve_inner(DerivationSpec::inner(GeneratorFamily::sl, 2, F("x1^2 d2")), search);
  CHECK(amb.kind == SolveKind::underdetermined);
  CHECK(same_span(amb.kernel, {euler(2)}));
  CHECK(same_span(amb.kernel, centralizer(sl_basis(2), search)));

  const auto bad = solve_inner(DerivationSpec({F("d1")}, {F("x1^2 d1")}), SubspaceSpec::full(win(2, -1, 1)));
  CHECK(bad.kind == SolveKind::inconsistent);
  REQUIRE(bad.certificate.has_value());
  CHECK(bad.certificate->generator == 0);
  CHECK(format_term(bad.certificate->term, bad.certificate->required) == "x1^2 d1");
}

TEST_CASE("stabilization") {
  ScanParameters p;
  p.inner = F("x1^2 d2");
  const auto r = stabilization_scan(p, 2, 5);
  CHECK(r.all_stabilized());
  CHECK(r.limit() == F("x1^2 d2"));
  for (const auto& c : r.coefficients) CHECK(c.trajectory.first_stable_n == 2);

  ScanParameters c;
  c.task = ScanTask::centralizer;
  c.family = GeneratorFamily::sl;
  const auto rc = stabilization_scan(c, 3, 5);
  CHECK(rc.dimensions.values == std::vector<Rational>{1, 1, 1});
  CHECK(rc.all_stabilized());

  CHECK_THROWS_AS(stabilization_scan(p, 4, 3), InvalidArgument);

  const auto t = make_trajectory({Rational(0), Rational(1), Rational(1)}, 2);
  CHECK(t.stabilized);
  CHECK(t.first_stable_n == 3);
  CHECK_FALSE(make_trajectory({Rational(1)}, 2).stabilized);
  CHECK_FALSE(make_trajectory({Rational(1), Rational(2)}, 2).stabilized);
}

TEST_CASE("rigidity table") {
  const auto t = rigidity_table_dimension(2, 1);
  CHECK(t.domain_dim == 12);
  CHECK(t.unknowns > 0);
  CHECK(t.checked_pairs > 0);
}
