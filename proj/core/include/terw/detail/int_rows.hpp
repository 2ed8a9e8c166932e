#pragma once

// Integer-row elimination core shared by rref/rank/kernel and SpanBasis.
//
// A PivotTableau holds the row space of everything inserted so far in a
// canonical form: rows are primitive integer vectors (content 1, leading
// entry positive), sorted by leading column, and fully reduced against each
// other. Dividing each row by its leading entry recovers the unique rational
// RREF, so two tableaux over the same row space are identical. All updates
// are fraction-free (multiply-and-subtract followed by content stripping),
// which keeps the arithmetic in small integers.

#include <vector>

#include "terw/rational.hpp"

namespace terw::detail {

using IntRow = std::vector<Int>;

// Divides the row by the gcd of its entries and makes the leading nonzero
// entry positive. A zero row is left untouched.
void make_primitive(IntRow& row);

// Clears denominators: returns the primitive integer row with the same
// direction as the rational input.
IntRow to_int_row(const std::vector<Rational>& v);

class PivotTableau {
 public:
  explicit PivotTableau(int cols) : cols_(cols) {}

  int cols() const { return cols_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  // Reduces the candidate against the tableau. If anything survives, the
  // remainder joins as a new pivot row (back-eliminating its column from
  // the others) and the call returns true; otherwise the candidate was
  // already in the row space.
  bool insert(IntRow cand);
  bool insert(const std::vector<Rational>& cand);

  bool contains(const std::vector<Rational>& v) const;

  // Row i of the canonical integer form and its leading column.
  const IntRow& row(int i) const { return rows_[static_cast<std::size_t>(i)]; }
  int lead(int i) const { return leads_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& leads() const { return leads_; }

  friend bool operator==(const PivotTableau& a, const PivotTableau& b) {
    return a.cols_ == b.cols_ && a.rows_ == b.rows_;
  }

 private:
  void reduce(IntRow& cand) const;

  int cols_;
  std::vector<IntRow> rows_;
  std::vector<int> leads_;
};

}  // namespace terw::detail
