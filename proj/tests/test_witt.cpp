#include <doctest.h>

#include "vfalg/derivations.hpp"
#include "vfalg/error.hpp"
#include "vfalg/random.hpp"
#include "vfalg/textio.hpp"
#include "vfalg/witt.hpp"

using namespace vfalg;

namespace {

VectorField F(const char* s) { return parse_field(s); }

// [u, w] computed from the action on coordinate functions:
// component k is u(w_k) - w(u_k).
VectorField bracket_by_action(const VectorField& u, const VectorField& w) {
  const int top = std::max(u.max_direction(), w.max_direction());
  VectorField out;
  for (int k = 1; k <= top; ++k) {
    const Polynomial xk = Polynomial::var(k);
    out.add_component(k, apply_field(u, apply_field(w, xk)) - apply_field(w, apply_field(u, xk)));
  }
  return out;
}

bool in_span(const std::vector<VectorField>& basis, const VectorField& w) {
  return SpanCoordinates(basis).coordinates(w).has_value();
}

}  // namespace

TEST_CASE("bracket examples") {
  CHECK(bracket(F("d1"), F("x1 d2")) == F("d2"));
  CHECK(bracket(F("x1 d2"), F("x2 d1")) == F("x1 d1 - x2 d2"));
  CHECK(bracket(F("x1*x2 d1"), F("x2 d1")) == F("-x2^2 d1"));
  CHECK(bracket(F("x1*x2 d1"), F("x2 d1")) == bracket_by_action(F("x1*x2 d1"), F("x2 d1")));
}

TEST_CASE("bracket agrees with the action on coordinates") {
  RandomSource rng(11, "witt-oracle");
  for (int k = 0; k < 200; ++k) {
    const auto u = random_field(rng, 4, -1, 3, 4);
    const auto w = random_field(rng, 4, -1, 3, 4);
    CHECK(bracket(u, w) == bracket_by_action(u, w));
  }
}

TEST_CASE("apply_field") {
  CHECK(apply_field(F("x1 d2"), parse_polynomial("x2")) == parse_polynomial("x1"));
  CHECK(apply_field(F("x3^2 d1 + d2"), parse_polynomial("1")).is_zero());
  CHECK(apply_field(euler(2), parse_polynomial("x1*x2")) == parse_polynomial("2*x1*x2"));
}

TEST_CASE("degree components") {
  const auto parts = degree_components(F("d1 + x1*x2 d2"));
  REQUIRE(parts.size() == 2);
  CHECK(parts.at(-1).field == F("d1"));
  CHECK(parts.at(1).field == F("x1*x2 d2"));
  CHECK(degree_components(VectorField()).empty());
  const auto h = degree_components(F("x1 d1 - x2 d2"));
  REQUIRE(h.size() == 1);
  CHECK(h.at(0).field == F("x1 d1 - x2 d2"));
  CHECK(homogeneous_degree(F("x1 d1 + d2")) == std::nullopt);
  CHECK(homogeneous_degree(F("x1^3 d2")) == 2);
  CHECK_THROWS_AS(HomogeneousField(F("x1 d1 + d2"), 0), InvalidArgument);
}

TEST_CASE("standard bases") {
  const auto sl2 = sl_basis(2);
  REQUIRE(sl2.size() == 3);
  CHECK(sl2[0] == F("x1 d2"));
  CHECK(sl2[1] == F("x2 d1"));
  CHECK(sl2[2] == F("x1 d1 - x2 d2"));
  CHECK(sl_basis(3).size() == 8);
  CHECK(gl_basis(3).size() == 9);
  CHECK(L_basis(2).size() == 6);
  CHECK(L_basis(2)[0] == F("d1"));
  CHECK_THROWS_AS(sl_basis(1), InvalidArgument);
  CHECK_THROWS_AS(gl_basis(0), InvalidArgument);
  CHECK_THROWS_AS(euler(0), InvalidArgument);

  const auto L2 = L_basis(2);
  for (const auto* basis : {&sl2, &L2})
    for (const auto& a : *basis)
      for (const auto& b : *basis) CHECK(in_span(*basis, bracket(a, b)));
}

TEST_CASE("euler field") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& s : sl_basis(n)) CHECK(bracket(s, euler(n)).is_zero());
  CHECK(bracket(euler(2), F("d1")) == F("-d1"));
  CHECK(bracket(euler(3), F("x1*x2 d3")) == F("x1*x2 d3"));
  CHECK(print_field(euler(2)) == "x1 d1 + x2 d2");
}

TEST_CASE("truncation windows") {
  const TruncationWindow project{4, -1, 2, TruncationMode::project};
  const TruncationWindow strict{4, -1, 2, TruncationMode::strict};
  CHECK(truncate(F("x1 d1 + x5 d1"), project) == F("x1 d1"));
  CHECK(truncate(F("x1 d1 + x2^3 d4"), project) == F("x1 d1 + x2^3 d4"));
  CHECK(truncate(F("x1 d1 + d5"), project) == F("x1 d1"));
  CHECK(truncate(F("x1^4 d1 + d2"), project) == F("d2"));
  CHECK(truncate(F("x1 d1"), strict) == F("x1 d1"));
  try {
    truncate(F("x5 d1"), strict);
    FAIL("expected a window violation");
  } catch (const WindowViolation& e) {
    CHECK(e.term() == "x5 d1");
  }
  CHECK_THROWS_AS((TruncationWindow{0, -1, 2}.validate()), InvalidArgument);
  CHECK_THROWS_AS((TruncationWindow{2, 1, 0}.validate()), InvalidArgument);
  CHECK_NOTHROW((TruncationWindow{2, -1, -1}.validate()));
}

TEST_CASE("window enumeration") {
  // Two directions times (1 + 2 + 3) monomials of length 0..2.
  CHECK(window_terms(TruncationWindow{2, -1, 1}).size() == 12);
  CHECK(window_terms(TruncationWindow{3, -1, -1}).size() == 3);
  const auto mons = monomials_of_length(2, 2);
  REQUIRE(mons.size() == 3);
  CHECK(print_monomial(mons[0]) == "x1^2");
  CHECK(print_monomial(mons[1]) == "x1*x2");
  CHECK(print_monomial(mons[2]) == "x2^2");
}

TEST_CASE("closed-form bracket identities") {
  CHECK(verify_bracket_identities(VectorField(), 1, 2));
  CHECK(verify_bracket_identities(F("x2 d1"), 1, 2));
  // The d1 component of [x2 d1, x2 d1] is f_2 - x2 * d f_1/dx1 = 0 - 0.
  CHECK(bracket(F("x2 d1"), F("x2 d1")).component(1).is_zero());
  CHECK(verify_bracket_identities(F("x1^2*x3 d2 - 4 d3 + x2*x4 d4"), 3, 1));
}
