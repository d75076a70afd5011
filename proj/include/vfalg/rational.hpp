#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace vfalg {

// Arbitrary-precision rational, always kept in canonical (reduced) form.
using Rational = mpq_class;
using Integer = mpz_class;

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

// Accepts "p" or "p/q" with optional leading '-'. Throws InvalidArgument on
// malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace vfalg
