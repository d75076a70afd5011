#pragma once

// Text grammar and JSON schema for polynomials, vector fields and results.
//
// Field grammar (whitespace-insensitive):
//
//   field    := "0" | ["+"|"-"] term (("+"|"-") term)*
//   term     := [coeff ["*"]] [monomial ["*"]] "d" INT
//   monomial := factor ("*" factor)*
//   factor   := "x" INT ["^" INT]
//   coeff    := INT ["/" INT]
//
// Polynomials use the same terms without the trailing "d" INT.
//
// Printing is canonical: terms are ordered by direction, then by the
// canonical monomial order; unit coefficients are omitted.

#include <string>
#include <string_view>

#include <json.hpp>

#include "vfalg/derivations.hpp"
#include "vfalg/exactla.hpp"
#include "vfalg/poly.hpp"
#include "vfalg/witt.hpp"

namespace vfalg {

using Json = nlohmann::ordered_json;

VectorField parse_field(std::string_view text);
Polynomial parse_polynomial(std::string_view text);

std::string print_field(const VectorField& w);
std::string print_polynomial(const Polynomial& p);
std::string print_monomial(const Monomial& m);
// A single signed term such as "-2/3*x1^2 d3".
std::string format_term(const TermKey& key, const Rational& coeff);

// JSON encoders. Rationals are strings "p" or "p/q".
Json to_json(const Monomial& m);
Json to_json(const Polynomial& p);
Json to_json(const VectorField& w);
Json to_json(const TruncationWindow& win);
Json to_json(const SubspaceSpec& s);
Json to_json(const SolveOutcome& s);
Json to_json(const InnerSolution& s);
Json to_json(const StabilizationReport& r);
Json to_json(const DerivationSpec& d);
Json to_json(const CohomologyDims& c);

// JSON decoders. `path` is the JSON pointer of `j` inside its document and
// prefixes every SchemaError.
Rational rational_from_json(const Json& j, const std::string& path = "");
Monomial monomial_from_json(const Json& j, const std::string& path = "");
Polynomial polynomial_from_json(const Json& j, const std::string& path = "");
VectorField field_from_json(const Json& j, const std::string& path = "");
TruncationWindow window_from_json(const Json& j, const std::string& path = "");
SubspaceSpec subspace_from_json(const Json& j, const std::string& path = "");
SolveOutcome solve_outcome_from_json(const Json& j, const std::string& path = "");
InnerSolution inner_solution_from_json(const Json& j, const std::string& path = "");
StabilizationReport stabilization_from_json(const Json& j, const std::string& path = "");
// Accepts {"family": "sl"|"L", "n": N, "values": [...]} or
// {"generators": [...], "values": [...]}; fields may be JSON objects or
// strings in the field grammar.
DerivationSpec derivation_from_json(const Json& j, const std::string& path = "");

// Parses text into a Json document, mapping syntax errors to SchemaError.
Json parse_json(std::string_view text);

}  // namespace vfalg
