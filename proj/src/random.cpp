#include "vfalg/random.hpp"

#include <functional>
#include <string>

namespace vfalg {

RandomSource::RandomSource(std::uint64_t seed, std::string_view label)
    : engine_(seed ^ (std::hash<std::string_view>{}(label) * 0x9E3779B97F4A7C15ULL)) {}

int RandomSource::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

Rational RandomSource::small_rational() {
  int num = 0;
  while (num == 0) num = uniform(-5, 5);
  Rational q(num, uniform(1, 3));
  q.canonicalize();
  return q;
}

namespace {

// Zero stays a regular sample, but only about one draw in ten.
int term_count(RandomSource& rng, int max_terms) {
  if (max_terms <= 0 || rng.uniform(1, 10) == 1) return 0;
  return rng.uniform(1, max_terms);
}

}  // namespace

Monomial random_monomial(RandomSource& rng, int max_var, int length) {
  std::vector<Monomial::Factor> f;
  for (int k = 0; k < length; ++k) f.emplace_back(rng.uniform(1, max_var), 1);
  return Monomial(std::move(f));
}

Polynomial random_polynomial(RandomSource& rng, int max_var, int max_length, int max_terms) {
  Polynomial p;
  const int terms = term_count(rng, max_terms);
  for (int t = 0; t < terms; ++t)
    p.add_term(random_monomial(rng, max_var, rng.uniform(0, max_length)), rng.small_rational());
  return p;
}

VectorField random_field(RandomSource& rng, int max_var, int degree_min, int degree_max, int max_terms) {
  VectorField w;
  const int terms = term_count(rng, max_terms);
  for (int t = 0; t < terms; ++t) {
    const int deg = rng.uniform(degree_min, degree_max);
    w.add_term(TermKey{rng.uniform(1, max_var), random_monomial(rng, max_var, deg + 1)}, rng.small_rational());
  }
  return w;
}

RationalMatrix random_matrix(RandomSource& rng, int rows, int cols, int percent_zero) {
  RationalMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (rng.uniform(1, 100) > percent_zero) m(r, c) = rng.small_rational();
  return m;
}

}  // namespace vfalg
