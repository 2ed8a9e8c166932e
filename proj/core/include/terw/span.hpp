#pragma once

// Linear spans of matrices and the multiplicative closure that realizes a
// matrix algebra as a concrete subspace. Matrices are flattened row-major
// into vectors over the rationals; the span lives in a PivotTableau, so its
// canonical form (and hence dimension and membership) is independent of
// insertion order.

#include <vector>

#include "terw/detail/int_rows.hpp"
#include "terw/qmatrix.hpp"

namespace terw {

class SpanBasis {
 public:
  SpanBasis(int rows, int cols);

  int matrix_rows() const { return rows_; }
  int matrix_cols() const { return cols_; }
  int dimension() const { return tab_.rank(); }

  // Returns true when the matrix enlarged the span.
  bool insert(const QMatrix& m);
  bool contains(const QMatrix& m) const;

  friend bool operator==(const SpanBasis& a, const SpanBasis& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.tab_ == b.tab_;
  }

 private:
  std::vector<Rational> flatten(const QMatrix& m) const;

  int rows_, cols_;
  detail::PivotTableau tab_;
};

struct ClosureResult {
  SpanBasis span;
  int products_formed = 0;  // multiplications performed while saturating
};

// Smallest subspace containing the identity and the generators that is
// closed under multiplication: the unital algebra they generate. Saturation
// multiplies each newly admitted basis member by every generator on the
// right in FIFO order, which reaches the span of all words in the
// generators. Generators must be square and of equal size.
ClosureResult span_closure(const std::vector<QMatrix>& generators);

}  // namespace terw
