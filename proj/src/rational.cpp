#include "vfalg/rational.hpp"

#include <cctype>

#include "vfalg/error.hpp"

namespace vfalg {

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                               : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-')
    throw InvalidArgument("malformed rational '" + std::string(text) + "'");
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

ParseError::ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected,
                       const std::string& message)
    : Error([&] {
        std::string s = "line " + std::to_string(line) + ", column " + std::to_string(column) +
                        ": " + message;
        if (!expected.empty()) {
          s += " (expected one of:";
          for (const auto& e : expected) s += " " + e;
          s += ")";
        }
        return s;
      }()),
      line_(line),
      column_(column),
      expected_(std::move(expected)),
      detail_(message) {}

}  // namespace vfalg
