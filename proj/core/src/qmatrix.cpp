#include "terw/qmatrix.hpp"

#include <cstddef>
#include <stdexcept>

#include "terw/detail/int_rows.hpp"

namespace terw {
namespace detail {

void make_primitive(IntRow& row) {
  Int g = 0;
  for (const Int& e : row) {
    if (sgn(e) == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
    if (g == 1) break;
  }
  if (sgn(g) == 0) return;
  int lead_sign = 0;
  for (const Int& e : row) {
    if (sgn(e) != 0) {
      lead_sign = sgn(e);
      break;
    }
  }
  if (lead_sign < 0) mpz_neg(g.get_mpz_t(), g.get_mpz_t());
  if (g == 1) return;
  for (Int& e : row)
    if (sgn(e) != 0) mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), g.get_mpz_t());
}

IntRow to_int_row(const std::vector<Rational>& v) {
  Int scale = 1;
  for (const Rational& r : v)
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), r.get_den().get_mpz_t());
  IntRow out(v.size());
  Int t;
  for (std::size_t i = 0; i < v.size(); ++i) {
    mpz_divexact(t.get_mpz_t(), scale.get_mpz_t(),
                 mpq_denref(v[i].get_mpq_t()));
    mpz_mul(out[i].get_mpz_t(), t.get_mpz_t(), mpq_numref(v[i].get_mpq_t()));
  }
  make_primitive(out);
  return out;
}

void PivotTableau::reduce(IntRow& cand) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const int lead = leads_[r];
    if (sgn(cand[static_cast<std::size_t>(lead)]) == 0) continue;
    const IntRow& row = rows_[r];
    const Int piv = row[static_cast<std::size_t>(lead)];
    const Int f = cand[static_cast<std::size_t>(lead)];
    for (std::size_t j = 0; j < cand.size(); ++j) {
      const Int& rj = row[j];
      Int& cj = cand[j];
      if (sgn(rj) == 0) {
        if (sgn(cj) != 0) mpz_mul(cj.get_mpz_t(), cj.get_mpz_t(), piv.get_mpz_t());
      } else if (sgn(cj) == 0) {
        mpz_mul(cj.get_mpz_t(), rj.get_mpz_t(), f.get_mpz_t());
        mpz_neg(cj.get_mpz_t(), cj.get_mpz_t());
      } else {
        mpz_mul(cj.get_mpz_t(), cj.get_mpz_t(), piv.get_mpz_t());
        mpz_submul(cj.get_mpz_t(), rj.get_mpz_t(), f.get_mpz_t());
      }
    }
    make_primitive(cand);
  }
}

bool PivotTableau::insert(IntRow cand) {
  if (static_cast<int>(cand.size()) != cols_)
    throw std::invalid_argument("tableau row length mismatch");
  reduce(cand);
  int lead = -1;
  for (std::size_t j = 0; j < cand.size(); ++j)
    if (sgn(cand[j]) != 0) {
      lead = static_cast<int>(j);
      break;
    }
  if (lead < 0) return false;
  make_primitive(cand);

  const Int& piv = cand[static_cast<std::size_t>(lead)];
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    IntRow& row = rows_[r];
    const Int f = row[static_cast<std::size_t>(lead)];
    if (sgn(f) == 0) continue;
    for (std::size_t j = 0; j < row.size(); ++j) {
      const Int& cj = cand[j];
      Int& rj = row[j];
      if (sgn(cj) == 0) {
        if (sgn(rj) != 0) mpz_mul(rj.get_mpz_t(), rj.get_mpz_t(), piv.get_mpz_t());
      } else if (sgn(rj) == 0) {
        mpz_mul(rj.get_mpz_t(), cj.get_mpz_t(), f.get_mpz_t());
        mpz_neg(rj.get_mpz_t(), rj.get_mpz_t());
      } else {
        mpz_mul(rj.get_mpz_t(), rj.get_mpz_t(), piv.get_mpz_t());
        mpz_submul(rj.get_mpz_t(), cj.get_mpz_t(), f.get_mpz_t());
      }
    }
    make_primitive(row);
  }

  std::size_t pos = 0;
  while (pos < leads_.size() && leads_[pos] < lead) ++pos;
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(cand));
  leads_.insert(leads_.begin() + static_cast<std::ptrdiff_t>(pos), lead);
  return true;
}

bool PivotTableau::insert(const std::vector<Rational>& cand) {
  return insert(to_int_row(cand));
}

bool PivotTableau::contains(const std::vector<Rational>& v) const {
  IntRow cand = to_int_row(v);
  reduce(cand);
  for (const Int& e : cand)
    if (sgn(e) != 0) return false;
  return true;
}

}  // namespace detail

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(
    std::initializer_list<std::initializer_list<Rational>> rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
  QMatrix m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c)
      throw std::invalid_argument("ragged initializer rows");
    int j = 0;
    for (const Rational& v : row) m.at(i, j++) = v;
    ++i;
  }
  return m;
}

bool QMatrix::is_zero() const {
  for (const Rational& v : d_)
    if (sgn(v) != 0) return false;
  return true;
}

bool QMatrix::is_integer() const {
  for (const Rational& v : d_)
    if (mpz_cmp_ui(mpq_denref(v.get_mpq_t()), 1) != 0) return false;
  return true;
}

Rational QMatrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
  Rational t = 0;
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

QMatrix QMatrix::transpose() const {
  QMatrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

QMatrix QMatrix::hadamard(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("hadamard shape mismatch");
  QMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < d_.size(); ++i)
    if (sgn(d_[i]) != 0 && sgn(o.d_[i]) != 0) m.d_[i] = d_[i] * o.d_[i];
  return m;
}

std::vector<Rational> QMatrix::apply(const std::vector<Rational>& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("apply length mismatch");
  std::vector<Rational> out(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i) {
    Rational acc = 0;
    for (int j = 0; j < cols_; ++j) {
      const Rational& a = at(i, j);
      if (sgn(a) != 0 && sgn(v[static_cast<std::size_t>(j)]) != 0)
        acc += a * v[static_cast<std::size_t>(j)];
    }
    out[static_cast<std::size_t>(i)] = std::move(acc);
  }
  return out;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("addition shape mismatch");
  QMatrix m(a.rows_, a.cols_);
  for (std::size_t i = 0; i < m.d_.size(); ++i) m.d_[i] = a.d_[i] + b.d_[i];
  return m;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("subtraction shape mismatch");
  QMatrix m(a.rows_, a.cols_);
  for (std::size_t i = 0; i < m.d_.size(); ++i) m.d_[i] = a.d_[i] - b.d_[i];
  return m;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_)
    throw std::invalid_argument("multiplication shape mismatch");
  QMatrix out(a.rows_, b.cols_);
  const int n = a.rows_, k_max = a.cols_, m = b.cols_;

  if (a.is_integer() && b.is_integer()) {
    // Numerator-only accumulation; much cheaper than canonicalizing
    // rationals in the inner loop.
    std::vector<Int> acc(static_cast<std::size_t>(m));
    for (int i = 0; i < n; ++i) {
      for (Int& e : acc) e = 0;
      for (int k = 0; k < k_max; ++k) {
        const mpq_srcptr aik = a.at(i, k).get_mpq_t();
        if (mpq_sgn(aik) == 0) continue;
        for (int j = 0; j < m; ++j) {
          const mpq_srcptr bkj = b.at(k, j).get_mpq_t();
          if (mpq_sgn(bkj) == 0) continue;
          mpz_addmul(acc[static_cast<std::size_t>(j)].get_mpz_t(),
                     mpq_numref(aik), mpq_numref(bkj));
        }
      }
      for (int j = 0; j < m; ++j)
        out.at(i, j) = Rational(acc[static_cast<std::size_t>(j)]);
    }
    return out;
  }

  for (int i = 0; i < n; ++i)
    for (int k = 0; k < k_max; ++k) {
      const Rational& aik = a.at(i, k);
      if (sgn(aik) == 0) continue;
      for (int j = 0; j < m; ++j) {
        const Rational& bkj = b.at(k, j);
        if (sgn(bkj) != 0) out.at(i, j) += aik * bkj;
      }
    }
  return out;
}

QMatrix operator*(const Rational& s, const QMatrix& a) {
  QMatrix m(a.rows_, a.cols_);
  for (std::size_t i = 0; i < m.d_.size(); ++i)
    if (sgn(a.d_[i]) != 0) m.d_[i] = s * a.d_[i];
  return m;
}

RrefResult rref_with_pivots(const QMatrix& m) {
  detail::PivotTableau tab(m.cols());
  std::vector<Rational> row(static_cast<std::size_t>(m.cols()));
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) row[static_cast<std::size_t>(j)] = m.at(i, j);
    tab.insert(row);
  }
  RrefResult res;
  res.form = QMatrix(m.rows(), m.cols());
  for (int r = 0; r < tab.rank(); ++r) {
    const detail::IntRow& ir = tab.row(r);
    const Int& piv = ir[static_cast<std::size_t>(tab.lead(r))];
    for (int j = 0; j < m.cols(); ++j) {
      if (sgn(ir[static_cast<std::size_t>(j)]) == 0) continue;
      res.form.at(r, j) = Rational(ir[static_cast<std::size_t>(j)], piv);
      res.form.at(r, j).canonicalize();
    }
    res.pivot_cols.push_back(tab.lead(r));
  }
  return res;
}

QMatrix rref(const QMatrix& m) { return rref_with_pivots(m).form; }

int rank(const QMatrix& m) {
  detail::PivotTableau tab(m.cols());
  std::vector<Rational> row(static_cast<std::size_t>(m.cols()));
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) row[static_cast<std::size_t>(j)] = m.at(i, j);
    tab.insert(row);
  }
  return tab.rank();
}

std::vector<std::vector<Rational>> kernel_basis(const QMatrix& m) {
  const RrefResult r = rref_with_pivots(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int p : r.pivot_cols) is_pivot[static_cast<std::size_t>(p)] = true;

  std::vector<std::vector<Rational>> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<Rational> v(static_cast<std::size_t>(m.cols()));
    v[static_cast<std::size_t>(f)] = 1;
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
      v[static_cast<std::size_t>(r.pivot_cols[i])] =
          -r.form.at(static_cast<int>(i), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Rational> characteristic_polynomial(const QMatrix& m) {
  if (!m.is_square())
    throw std::invalid_argument("characteristic polynomial of non-square matrix");
  const int n = m.rows();
  std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
  coeffs[static_cast<std::size_t>(n)] = 1;
  QMatrix mk = m;
  for (int k = 1; k <= n; ++k) {
    const Rational c = -mk.trace() / k;
    coeffs[static_cast<std::size_t>(n - k)] = c;
    if (k < n) {
      QMatrix shifted = mk;
      for (int i = 0; i < n; ++i) shifted.at(i, i) += c;
      mk = m * shifted;
    }
  }
  return coeffs;
}

}  // namespace terw
