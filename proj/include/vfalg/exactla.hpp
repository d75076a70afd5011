#pragma once

// Dense exact linear algebra over Q. Row reduction always pivots on the
// leftmost nonzero column, so echelon forms and kernel bases are canonical.

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "vfalg/rational.hpp"

namespace vfalg {

using RationalVector = std::vector<Rational>;

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  // Throws InvalidArgument when entries.size() != rows * cols.
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static RationalMatrix identity(std::size_t n);
  // Builds from row vectors; all rows must share the given width.
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<Rational>& entries() const { return entries_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  RationalVector row(std::size_t r) const;
  RationalVector multiply(const RationalVector& v) const;
  bool is_zero() const;

  bool operator==(const RationalMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

// Sparse row: (column, value) pairs, strictly increasing columns, no zeros.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

SparseRow to_sparse(const RationalVector& v);

// Incrementally maintained reduced row echelon form. Rows are inserted one at
// a time; the stored pivot rows are always fully reduced against each other.
class Echelon {
 public:
  explicit Echelon(std::size_t cols) : cols_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return pivots_.size(); }

  // Reduces `row` by the current pivot rows.
  SparseRow reduce(const SparseRow& row) const;

  // Inserts a row. Returns the new pivot column, or nullopt if the row was
  // already in the span.
  std::optional<std::size_t> insert(const SparseRow& row);

  bool in_span(const SparseRow& row) const { return reduce(row).empty(); }

  // Pivot rows keyed by pivot column.
  const std::map<std::size_t, SparseRow>& pivot_rows() const { return pivots_; }

  RationalMatrix to_matrix() const;
  // Canonical kernel basis of the inserted rows (see kernel()).
  std::vector<RationalVector> kernel_basis() const;

 private:
  std::size_t cols_;
  std::map<std::size_t, SparseRow> pivots_;
};

// Reduced row echelon form; same shape as the input, zero rows at the bottom.
RationalMatrix rref(const RationalMatrix& m);
std::size_t rank(const RationalMatrix& m);

// One basis vector per free column f of rref(m): 1 at f, minus the pivot
// row entries at f in the pivot columns, zero elsewhere. Ordered by f.
std::vector<RationalVector> kernel(const RationalMatrix& m);

enum class SolveKind { unique, underdetermined, inconsistent };

struct SolveOutcome {
  SolveKind kind = SolveKind::inconsistent;
  // Free variables set to zero. Absent when inconsistent.
  std::optional<RationalVector> particular;
  std::vector<RationalVector> kernel_basis;
  // Index of the first row (in input order) that cannot be satisfied
  // together with the rows before it.
  std::optional<std::size_t> inconsistent_row;

  bool operator==(const SolveOutcome&) const = default;
};

// Throws InvalidArgument if b.size() != m.rows().
SolveOutcome solve(const RationalMatrix& m, const RationalVector& b);
// Same as solve() for a system given as sparse rows over `cols` unknowns.
SolveOutcome solve(const std::vector<SparseRow>& rows, const RationalVector& b, std::size_t cols);

const char* to_string(SolveKind kind);

}  // namespace vfalg
