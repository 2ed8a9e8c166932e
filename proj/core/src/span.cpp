#include "terw/span.hpp"

#include <deque>
#include <stdexcept>

namespace terw {

SpanBasis::SpanBasis(int rows, int cols)
    : rows_(rows), cols_(cols), tab_(rows * cols) {}

std::vector<Rational> SpanBasis::flatten(const QMatrix& m) const {
  if (m.rows() != rows_ || m.cols() != cols_)
    throw std::invalid_argument("span member shape mismatch");
  return m.data();
}

bool SpanBasis::insert(const QMatrix& m) { return tab_.insert(flatten(m)); }

bool SpanBasis::contains(const QMatrix& m) const {
  return tab_.contains(flatten(m));
}

ClosureResult span_closure(const std::vector<QMatrix>& generators) {
  if (generators.empty())
    throw std::invalid_argument("closure needs at least one generator");
  const int n = generators.front().rows();
  for (const QMatrix& g : generators)
    if (!g.is_square() || g.rows() != n)
      throw std::invalid_argument("closure generators must be square and equal-sized");

  ClosureResult res{SpanBasis(n, n), 0};
  std::deque<QMatrix> pending;

  res.span.insert(QMatrix::identity(n));
  for (const QMatrix& g : generators)
    if (res.span.insert(g)) pending.push_back(g);

  // Every admitted member gets one round of right-multiplication by the
  // generators; members rejected as linear combinations need none, since
  // their products are combinations of products already scheduled.
  while (!pending.empty()) {
    const QMatrix m = std::move(pending.front());
    pending.pop_front();
    for (const QMatrix& g : generators) {
      QMatrix p = m * g;
      ++res.products_formed;
      if (res.span.insert(p)) pending.push_back(std::move(p));
    }
  }
  return res;
}

}  // namespace terw
