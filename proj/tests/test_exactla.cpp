#include <doctest.h>

#include "vfalg/error.hpp"
#include "vfalg/exactla.hpp"

using namespace vfalg;

namespace {
RationalMatrix M(std::size_t r, std::size_t c, std::initializer_list<int> xs) {
  std::vector<Rational> e;
  for (int x : xs) e.emplace_back(x);
  return RationalMatrix(r, c, e);
}
RationalVector V(std::initializer_list<int> xs) {
  RationalVector v;
  for (int x : xs) v.emplace_back(x);
  return v;
}
}  // namespace

TEST_CASE("rref") {
  CHECK(rref(RationalMatrix::identity(3)) == RationalMatrix::identity(3));
  CHECK(rref(M(2, 2, {2, 4, 1, 2})) == M(2, 2, {1, 2, 0, 0}));
  CHECK(rref(RationalMatrix(2, 3)) == RationalMatrix(2, 3));
  CHECK(rref(M(2, 3, {0, 2, 4, 1, 1, 1})) == M(2, 3, {1, 0, -1, 0, 1, 2}));
}

TEST_CASE("kernel") {
  CHECK(kernel(RationalMatrix::identity(4)).empty());
  CHECK(kernel(RationalMatrix(2, 3)).size() == 3);
  CHECK(kernel(M(1, 2, {1, 1})) == std::vector<RationalVector>{V({-1, 1})});
  const auto m = M(2, 4, {1, 2, 0, 3, 0, 0, 1, -1});
  const auto k = kernel(m);
  REQUIRE(k.size() == 2);
  CHECK(k[0] == V({-2, 1, 0, 0}));
  CHECK(k[1] == V({-3, 0, 1, 1}));
  for (const auto& v : k) CHECK(m.multiply(v) == V({0, 0}));
}

TEST_CASE("solve classification") {
  const auto u = solve(RationalMatrix::identity(3), V({4, 5, 6}));
  CHECK(u.kind == SolveKind::unique);
  CHECK(*u.particular == V({4, 5, 6}));
  CHECK(u.kernel_basis.empty());

  const auto d = solve(M(1, 2, {1, 1}), V({0}));
  CHECK(d.kind == SolveKind::underdetermined);
  CHECK(d.kernel_basis.size() == 1);

  const auto i = solve(M(1, 1, {0}), V({1}));
  CHECK(i.kind == SolveKind::inconsistent);
  CHECK_FALSE(i.particular.has_value());
  CHECK(i.inconsistent_row == 0u);

  // Row 2 repeats row 0 with another right-hand side.
  const auto later = solve(M(3, 2, {1, 1, 0, 1, 1, 1}), V({1, 2, 3}));
  CHECK(later.kind == SolveKind::inconsistent);
  CHECK(later.inconsistent_row == 2u);

  CHECK_THROWS_AS(solve(M(1, 1, {1}), V({1, 2})), InvalidArgument);
}

TEST_CASE("echelon reduces incrementally") {
  Echelon e(3);
  CHECK(e.insert(SparseRow{{1, Rational(2)}, {2, Rational(4)}}) == std::optional<std::size_t>(1));
  CHECK_FALSE(e.insert(SparseRow{{1, Rational(1)}, {2, Rational(2)}}).has_value());
  CHECK(e.in_span(SparseRow{{1, Rational(-3)}, {2, Rational(-6)}}));
  CHECK(e.rank() == 1);
  CHECK(e.kernel_basis().size() == 2);
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(to_string(Rational(-3, 2)) == "-3/2");
  CHECK(to_string(Rational(4)) == "4");
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational("1.5"), InvalidArgument);
}
