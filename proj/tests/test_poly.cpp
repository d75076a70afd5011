#include <doctest.h>

#include "vfalg/error.hpp"
#include "vfalg/poly.hpp"
#include "vfalg/textio.hpp"

using namespace vfalg;

namespace {
Polynomial P(const char* s) { return parse_polynomial(s); }
}  // namespace

TEST_CASE("addition cancels and merges like terms") {
  CHECK(P("x1 + x2") + P("-x2") == P("x1"));
  CHECK(P("x1^2*x3 + 7") + Polynomial() == P("x1^2*x3 + 7"));
  CHECK(P("1/2*x1^2") + P("1/2*x1^2") == P("x1^2"));
  CHECK((P("x1") - P("x1")).is_zero());
}

TEST_CASE("multiplication") {
  CHECK((P("x1 + x2") * P("x1 - x2")) == P("x1^2 - x2^2"));
  CHECK(P("3*x2*x4 - 1") * Polynomial(Rational(1)) == P("3*x2*x4 - 1"));
  CHECK(P("x1") * P("x1^2") == P("x1^3"));
  CHECK((P("x1 + 1") * Polynomial()).is_zero());
}

TEST_CASE("partial derivatives") {
  CHECK(partial(P("x1^2*x2"), 1) == P("2*x1*x2"));
  CHECK(partial(P("x1^2*x2"), 3).is_zero());
  CHECK(partial(P("x2^3"), 2) == P("3*x2^2"));
  CHECK(partial(P("5"), 1).is_zero());
}

TEST_CASE("variable degree and support") {
  const Monomial m({{1, 2}, {2, 1}});
  CHECK(var_degree(m, 1) == 2);
  CHECK(var_degree(m, 5) == 0);
  CHECK(var_degree(Monomial::unit(), 1) == 0);
  CHECK(support_vars(P("x1^2*x2")) == std::set<VarIndex>{1, 2});
  CHECK(support_vars(Polynomial()).empty());
  CHECK(support_vars(P("3 + x4")) == std::set<VarIndex>{4});
}

TEST_CASE("monomial construction normalizes") {
  const Monomial m({{3, 1}, {1, 2}, {3, 2}, {2, 0}});
  CHECK(m.factors() == std::vector<Monomial::Factor>{{1, 2}, {3, 3}});
  CHECK(m.length() == 5);
  CHECK(m.max_variable() == 3);
  CHECK_THROWS_AS(Monomial({{0, 1}}), InvalidArgument);
  CHECK_THROWS_AS(Monomial({{1, -1}}), InvalidArgument);
}

TEST_CASE("canonical monomial order") {
  const MonomialOrder less;
  const Monomial x1sq = Monomial::var(1, 2), x1x2({{1, 1}, {2, 1}}), x2sq = Monomial::var(2, 2);
  CHECK(less(x1sq, x1x2));
  CHECK(less(x1x2, x2sq));
  CHECK(less(Monomial::var(3), x1sq));
  CHECK(less(Monomial::unit(), Monomial::var(1)));
  CHECK_FALSE(less(x1x2, x1x2));
}

TEST_CASE("metadata") {
  CHECK(P("x1^2*x5 + x2").max_variable() == 5);
  CHECK(P("x1^2*x5 + x2").total_degree() == 3);
  CHECK(Polynomial().total_degree() == -1);
  CHECK(P("4").max_variable() == 0);
  CHECK(P("2/3*x1 - x2").coefficient(Monomial::var(1)) == Rational(2, 3));
  CHECK(P("2/3*x1 - x2").coefficient(Monomial::var(4)) == 0);
}
