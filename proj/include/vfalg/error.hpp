#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace vfalg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad argument to an operation (n < 2, dimension mismatch, empty range...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected,
             const std::string& message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }
  const std::string& detail() const { return detail_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
  std::string detail_;
};

// A term left a truncation window, or an image escaped a declared span.
// `term` is the offending term in field grammar.
class WindowViolation : public Error {
 public:
  WindowViolation(std::string term, const std::string& message)
      : Error(message), term_(std::move(term)) {}
  const std::string& term() const { return term_; }

 private:
  std::string term_;
};

// Derivation data that violates the derivation rule on a generator relation.
class InconsistentSpec : public Error {
 public:
  using Error::Error;
};

// JSON input that does not match the documented schema. `path` is a JSON
// pointer to the offending node.
class SchemaError : public Error {
 public:
  SchemaError(std::string path, const std::string& message)
      : Error(path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace vfalg
