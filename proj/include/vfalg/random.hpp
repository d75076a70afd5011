#pragma once

// Seeded generators of random polynomials, fields and matrices. The same
// seed always yields the same sequence on a given build.

#include <cstdint>
#include <random>
#include <string_view>

#include "vfalg/exactla.hpp"
#include "vfalg/poly.hpp"
#include "vfalg/witt.hpp"

namespace vfalg {

class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}
  // Independent stream derived from a seed and a label.
  RandomSource(std::uint64_t seed, std::string_view label);

  int uniform(int lo, int hi);
  bool coin() { return uniform(0, 1) == 1; }
  // Nonzero p/q with |p| <= 5, 1 <= q <= 3.
  Rational small_rational();

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

Monomial random_monomial(RandomSource& rng, int max_var, int length);
// Up to max_terms terms in x_1..x_max_var with lengths 0..max_length.
Polynomial random_polynomial(RandomSource& rng, int max_var, int max_length, int max_terms);
// Terms m d/dx_i with variables and directions <= max_var and field degree
// in [degree_min, degree_max].
VectorField random_field(RandomSource& rng, int max_var, int degree_min, int degree_max, int max_terms);
RationalMatrix random_matrix(RandomSource& rng, int rows, int cols, int percent_zero);

}  // namespace vfalg
