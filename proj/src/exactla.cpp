#include "vfalg/exactla.hpp"

#include <algorithm>
#include <string>

#include "vfalg/error.hpp"

namespace vfalg {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols)
    throw InvalidArgument("matrix entry count " + std::to_string(entries_.size()) +
                          " does not match " + std::to_string(rows) + "x" + std::to_string(cols));
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows, std::size_t cols) {
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InvalidArgument("ragged row in matrix construction");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalVector RationalMatrix::row(std::size_t r) const {
  return RationalVector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                        entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RationalVector RationalMatrix::multiply(const RationalVector& v) const {
  if (v.size() != cols_) throw InvalidArgument("vector length does not match matrix columns");
  RationalVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (v[c] != 0 && (*this)(r, c) != 0) out[r] += (*this)(r, c) * v[c];
  return out;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& q) { return q == 0; });
}

SparseRow to_sparse(const RationalVector& v) {
  SparseRow out;
  for (std::size_t c = 0; c < v.size(); ++c)
    if (v[c] != 0) out.emplace_back(c, v[c]);
  return out;
}

namespace {

const Rational* find_entry(const SparseRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

// a - factor * b, merged in column order.
SparseRow axpy(const SparseRow& a, const Rational& factor, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      out.emplace_back(ib->first, -factor * ib->second);
      ++ib;
    } else {
      Rational v = ia->second - factor * ib->second;
      if (v != 0) out.emplace_back(ia->first, std::move(v));
      ++ia;
      ++ib;
    }
  }
  return out;
}

}  // namespace

SparseRow Echelon::reduce(const SparseRow& row) const {
  // Pivot rows vanish at every other pivot column, so the multipliers are
  // just the entries of `row` at pivot columns.
  SparseRow out = row;
  for (const auto& [col, value] : row) {
    auto it = pivots_.find(col);
    if (it == pivots_.end()) continue;
    const Rational* current = find_entry(out, col);
    if (current == nullptr) continue;
    const Rational factor = *current;
    out = axpy(out, factor, it->second);
  }
  return out;
}

std::optional<std::size_t> Echelon::insert(const SparseRow& row) {
  for (const auto& e : row)
    if (e.first >= cols_) throw InvalidArgument("sparse row column out of range");
  SparseRow r = reduce(row);
  if (r.empty()) return std::nullopt;
  const std::size_t pivot = r.front().first;
  const Rational lead = r.front().second;
  for (auto& e : r) e.second /= lead;
  for (auto& [col, prow] : pivots_) {
    const Rational* hit = find_entry(prow, pivot);
    if (hit == nullptr) continue;
    const Rational factor = *hit;
    prow = axpy(prow, factor, r);
  }
  pivots_.emplace(pivot, std::move(r));
  return pivot;
}

RationalMatrix Echelon::to_matrix() const {
  RationalMatrix m(pivots_.size(), cols_);
  std::size_t r = 0;
  for (const auto& [col, prow] : pivots_) {
    for (const auto& [c, v] : prow) m(r, c) = v;
    ++r;
  }
  return m;
}

namespace {

Echelon echelon_of(const RationalMatrix& m) {
  Echelon e(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) e.insert(to_sparse(m.row(r)));
  return e;
}

std::vector<RationalVector> kernel_from(const Echelon& e, std::size_t cols) {
  std::vector<RationalVector> out;
  const auto& piv = e.pivot_rows();
  for (std::size_t f = 0; f < cols; ++f) {
    if (piv.count(f)) continue;
    RationalVector v(cols);
    v[f] = 1;
    for (const auto& [p, prow] : piv) {
      const Rational* hit = find_entry(prow, f);
      if (hit != nullptr) v[p] = -*hit;
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

RationalMatrix rref(const RationalMatrix& m) {
  const Echelon e = echelon_of(m);
  RationalMatrix out(m.rows(), m.cols());
  std::size_t r = 0;
  for (const auto& [col, prow] : e.pivot_rows()) {
    for (const auto& [c, v] : prow) out(r, c) = v;
    ++r;
  }
  return out;
}

std::size_t rank(const RationalMatrix& m) { return echelon_of(m).rank(); }

std::vector<RationalVector> kernel(const RationalMatrix& m) {
  return kernel_from(echelon_of(m), m.cols());
}

std::vector<RationalVector> Echelon::kernel_basis() const { return kernel_from(*this, cols_); }

SolveOutcome solve(const RationalMatrix& m, const RationalVector& b) {
  if (b.size() != m.rows())
    throw InvalidArgument("right-hand side has length " + std::to_string(b.size()) + ", expected " +
                          std::to_string(m.rows()));
  std::vector<SparseRow> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(to_sparse(m.row(r)));
  return solve(rows, b, m.cols());
}

SolveOutcome solve(const std::vector<SparseRow>& rows, const RationalVector& b, std::size_t cols) {
  if (b.size() != rows.size())
    throw InvalidArgument("right-hand side has length " + std::to_string(b.size()) + ", expected " +
                          std::to_string(rows.size()));
  const std::size_t n = cols;
  Echelon aug(n + 1);
  SolveOutcome out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    SparseRow row = rows[r];
    for (const auto& e : row)
      if (e.first >= n) throw InvalidArgument("sparse row column out of range");
    if (b[r] != 0) row.emplace_back(n, b[r]);
    auto pivot = aug.insert(row);
    if (pivot && *pivot == n) {
      out.kind = SolveKind::inconsistent;
      out.inconsistent_row = r;
      return out;
    }
  }
  RationalVector x(n);
  for (const auto& [p, prow] : aug.pivot_rows()) {
    const Rational* rhs = find_entry(prow, n);
    if (rhs != nullptr) x[p] = *rhs;
  }
  // With no pivot in the augmented column, the pivot rows restricted to the
  // first n columns are exactly rref(m).
  Echelon coeff(n);
  for (const auto& [p, prow] : aug.pivot_rows()) {
    SparseRow trimmed;
    for (const auto& e : prow)
      if (e.first < n) trimmed.push_back(e);
    coeff.insert(trimmed);
  }
  out.kernel_basis = kernel_from(coeff, n);
  out.particular = std::move(x);
  out.kind = out.kernel_basis.empty() ? SolveKind::unique : SolveKind::underdetermined;
  return out;
}

const char* to_string(SolveKind kind) {
  switch (kind) {
    case SolveKind::unique:
      return "unique";
    case SolveKind::underdetermined:
      return "underdetermined";
    case SolveKind::inconsistent:
      return "inconsistent";
  }
  return "?";
}

}  // namespace vfalg
