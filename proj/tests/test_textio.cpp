#include <doctest.h>

#include "vfalg/error.hpp"
#include "vfalg/random.hpp"
#include "vfalg/textio.hpp"

using namespace vfalg;

TEST_CASE("parse fields") {
  const auto w = parse_field("x1*x2 d1 - 2/3*x3^2 d2");
  CHECK(w.component(1) == parse_polynomial("x1*x2"));
  CHECK(w.component(2) == Polynomial(Monomial::var(3, 2), Rational(-2, 3)));
  CHECK(parse_field("d4") == VectorField::d(4));
  CHECK(parse_field("x1 d1 + x2 d2 + x3 d3") == euler(3));
  CHECK(parse_field("0").is_zero());
  CHECK(parse_field("-d1 + 2*d2") == parse_field("  - d1+2 d2 "));
  CHECK(parse_field("x1*x2 d1") == parse_field("x1*x2*d1"));
  CHECK_THROWS_AS(parse_field("x1 x2 d1"), ParseError);
  CHECK(parse_field("x1^2*x1 d1") == parse_field("x1^3 d1"));
  CHECK(parse_field("x1 d1 - x1 d1").is_zero());
}

TEST_CASE("print fields") {
  CHECK(print_field(parse_field("x2 d1  +x1 d2")) == "x2 d1 + x1 d2");
  CHECK(print_field(VectorField()) == "0");
  CHECK(print_field(euler(2)) == "x1 d1 + x2 d2");
  CHECK(print_field(parse_field("x2^2 d1 + x1*x2 d1 + x1^2 d1")) == "x1^2 d1 + x1*x2 d1 + x2^2 d1");
  CHECK(print_field(parse_field("-2/3 d1 - x1 d3")) == "-2/3 d1 - x1 d3");
  CHECK(print_field(parse_field("-4/6*x1 d1")) == "-2/3*x1 d1");
  CHECK(print_polynomial(parse_polynomial("x2 - 1 + x1^2")) == "-1 + x2 + x1^2");
  CHECK(format_term(TermKey{2, Monomial::var(1, 2)}, Rational(-3)) == "-3*x1^2 d2");
}

TEST_CASE("parse errors carry position and expectations") {
  try {
    parse_field("x1 d1 +\n  x2 ^ d2");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 8);
    CHECK(e.expected() == std::vector<std::string>{"INT"});
  }
  CHECK_THROWS_AS(parse_field(""), ParseError);
  CHECK_THROWS_AS(parse_field("x1"), ParseError);
  CHECK_THROWS_AS(parse_field("d0"), ParseError);
  CHECK_THROWS_AS(parse_field("x0 d1"), ParseError);
  CHECK_THROWS_AS(parse_field("x1^0 d1"), ParseError);
  CHECK_THROWS_AS(parse_field("1/0 d1"), ParseError);
  CHECK_THROWS_AS(parse_field("d1 d2"), ParseError);
  CHECK_THROWS_AS(parse_field("d99999999999999999999"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x1 d1"), ParseError);
}

TEST_CASE("round trip on random fields") {
  RandomSource rng(3, "textio-roundtrip");
  for (int k = 0; k < 300; ++k) {
    const auto w = random_field(rng, 5, -1, 3, 6);
    const auto text = print_field(w);
    CHECK(parse_field(text) == w);
    CHECK(print_field(parse_field(text)) == text);
  }
}

TEST_CASE("json schema") {
  CHECK(to_json(VectorField::d(1)).dump() == R"({"components":{"1":[{"monomial":{},"coeff":"1"}]}})");
  CHECK(to_json(parse_field("-1/2*x1^2*x3 d2")).dump() ==
        R"({"components":{"2":[{"monomial":{"1":2,"3":1},"coeff":"-1/2"}]}})");
  RandomSource rng(4, "textio-json");
  for (int k = 0; k < 100; ++k) {
    const auto w = random_field(rng, 4, -1, 3, 5);
    CHECK(field_from_json(parse_json(to_json(w).dump())) == w);
  }
}

TEST_CASE("json schema errors name the path") {
  try {
    field_from_json(parse_json(R"({"components":{"1":[{"monomial":{},"coeff":"1/0"}]}})"));
    FAIL("expected a schema error");
  } catch (const SchemaError& e) {
    CHECK(e.path() == "/components/1/0/coeff");
  }
  CHECK_THROWS_AS(field_from_json(parse_json(R"({"components":[]})")), SchemaError);
  CHECK_THROWS_AS(field_from_json(parse_json(R"({"components":{"0":[]}})")), SchemaError);
  CHECK_THROWS_AS(parse_json("{"), SchemaError);
  CHECK_THROWS_AS(derivation_from_json(parse_json(R"({"family":"gl","n":2,"values":[]})")), SchemaError);
}

TEST_CASE("json round trip of results") {
  const auto outcome = solve(RationalMatrix(1, 2, {Rational(1), Rational(1)}), RationalVector{Rational(3)});
  CHECK(solve_outcome_from_json(parse_json(to_json(outcome).dump())) == outcome);

  const auto spec = SubspaceSpec::degree_slice(2, 0);
  const auto back = subspace_from_json(parse_json(to_json(spec).dump()));
  CHECK(back.basis() == spec.basis());

  ScanParameters p;
  p.inner = parse_field("x1^2 d2 - d1");
  const auto report = stabilization_scan(p, 2, 3);
  CHECK(to_json(stabilization_from_json(parse_json(to_json(report).dump()))) == to_json(report));

  const auto d = derivation_from_json(parse_json(R"({"family":"L","n":2,"values":["0","0","0","0","0","0"]})"));
  CHECK(d.generators() == L_basis(2));
  CHECK(to_json(derivation_from_json(to_json(d))) == to_json(d));
}
