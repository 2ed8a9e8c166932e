#pragma once

// Dense matrices over the rationals with exact elimination. Everything is
// deterministic: reduced row echelon forms are the unique canonical ones,
// kernel bases come out of the RREF free-column construction in column
// order. Shape mismatches throw std::invalid_argument.

#include <initializer_list>
#include <vector>

#include "terw/rational.hpp"

namespace terw {

class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols)
      : rows_(rows), cols_(cols),
        d_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

  static QMatrix identity(int n);
  static QMatrix from_rows(std::initializer_list<std::initializer_list<Rational>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& at(int i, int j) {
    return d_[static_cast<std::size_t>(i) * cols_ + static_cast<std::size_t>(j)];
  }
  const Rational& at(int i, int j) const {
    return d_[static_cast<std::size_t>(i) * cols_ + static_cast<std::size_t>(j)];
  }
  const std::vector<Rational>& data() const { return d_; }

  bool is_zero() const;
  bool is_integer() const;  // every entry has denominator 1
  Rational trace() const;
  QMatrix transpose() const;

  // Entrywise (Hadamard) product.
  QMatrix hadamard(const QMatrix& o) const;

  std::vector<Rational> apply(const std::vector<Rational>& v) const;

  friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator*(const Rational& s, const QMatrix& a);
  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.d_ == b.d_;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> d_;
};

struct RrefResult {
  QMatrix form;                 // same shape as the input, zero rows trailing
  std::vector<int> pivot_cols;  // ascending
};

RrefResult rref_with_pivots(const QMatrix& m);
QMatrix rref(const QMatrix& m);
int rank(const QMatrix& m);

// Basis of { v : M v = 0 }, one vector per free column of the RREF, in
// column order; entry at the free column is 1. A matrix with no rows has
// the full space as kernel.
std::vector<std::vector<Rational>> kernel_basis(const QMatrix& m);

// Coefficients of det(tI - M), index k holding the t^k coefficient
// (monic, size n+1). Exact Faddeev-LeVerrier; intended for small matrices.
std::vector<Rational> characteristic_polynomial(const QMatrix& m);

}  // namespace terw
