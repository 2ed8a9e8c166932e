#include "terw/vpoly.hpp"

#include <stdexcept>

#include "terw/qmatrix.hpp"
#include "terw/scheme.hpp"

namespace terw {

Rational VPolynomial::eval(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::vector<VPolynomial> v_family(int D, int upto) {
  if (D < 1 || upto < 0 || upto > D)
    throw std::invalid_argument("v_family needs 0 <= upto <= D");
  std::vector<VPolynomial> v;
  v.push_back({D, 0, {Rational(1)}});
  if (upto >= 1) v.push_back({D, 1, {Rational(0), Rational(1)}});
  for (int i = 1; i < upto; ++i) {
    // t v_i = (D-i+1) v_{i-1} + (i+1) v_{i+1}
    std::vector<Rational> next(static_cast<std::size_t>(i) + 2);
    const auto& vi = v[static_cast<std::size_t>(i)].coeffs;
    const auto& vm = v[static_cast<std::size_t>(i) - 1].coeffs;
    for (std::size_t m = 0; m < vi.size(); ++m) next[m + 1] = vi[m];
    for (std::size_t m = 0; m < vm.size(); ++m) next[m] -= Rational(D - i + 1) * vm[m];
    for (Rational& c : next) c /= i + 1;
    v.push_back({D, i + 1, std::move(next)});
  }
  return v;
}

VPolynomial v_poly(int D, int i) { return v_family(D, i).back(); }

Rational krawtchouk_eval(int i, const Rational& t, const Rational& q, int n) {
  if (n < 1) throw std::invalid_argument("krawtchouk_eval needs n >= 1");
  if (i < 0 || i > n) throw std::invalid_argument("krawtchouk_eval needs 0 <= i <= n");
  if (sgn(q) == 0) throw std::invalid_argument("krawtchouk_eval needs q != 0");

  Rational sum = 0;
  Rational term = 1;  // (-q)^j C(i,j) C(t,j) / C(n,j), built incrementally
  for (int j = 0;; ++j) {
    sum += term;
    if (j == i) break;
    term *= -q;
    term *= Rational(i - j);  // C(i,j) -> C(i,j+1) carries 1/(j+1)
    term *= t - j;            // C(t,j) -> C(t,j+1) carries another
    term /= Rational(j + 1) * Rational(j + 1);
    term *= binomial(n, j);
    term /= binomial(n, j + 1);
  }
  return sum;
}

Verdict v_eval_identity_check(int D) {
  const std::vector<VPolynomial> v = v_family(D, D);
  Int fact = 1;
  for (int i = 0; i <= D; ++i) {
    if (i > 0) fact *= i;
    if (v[static_cast<std::size_t>(i)].coeffs.back() != Rational(Int(1), fact))
      return Verdict::fail("leading coefficient of v_" + std::to_string(i) +
                           " is not 1/i!");
    if (v[static_cast<std::size_t>(i)].eval(D) != binomial(D, i))
      return Verdict::fail("v_i(D) != C(D,i) at i=" + std::to_string(i));
    // Degree-i polynomials agreeing at the D+1 points t = D-2j coincide.
    for (int j = 0; j <= D; ++j) {
      const Rational lhs = v[static_cast<std::size_t>(i)].eval(D - 2 * j);
      const Rational rhs =
          binomial(D, i) * krawtchouk_eval(i, j, 2, D);
      if (lhs != rhs)
        return Verdict::fail("v_i vs scaled Krawtchouk mismatch at (i=" +
                             std::to_string(i) + ", j=" + std::to_string(j) + ")");
    }
  }
  return Verdict::pass();
}

Verdict v_top_values_check(int D) {
  const VPolynomial v = v_poly(D, D - 1);
  for (int n = 0; n <= D; ++n) {
    const Rational want = Rational(n % 2 == 0 ? 1 : -1) * (D - 2 * n);
    if (v.eval(D - 2 * n) != want)
      return Verdict::fail("v_{D-1}(D-2n) != (-1)^n (D-2n) at n=" + std::to_string(n));
  }
  return Verdict::pass();
}

Verdict distance_matrix_identity_check(const GraphContext& ctx) {
  if (ctx.family() != Family::hypercube)
    throw std::invalid_argument("distance matrix identity is a hypercube check");
  const int D = ctx.D();
  const int n = ctx.vertex_count();
  const QMatrix a = adjacency_matrix(ctx);

  // Streaming compare of v_i(A) against the distance-i indicator; the
  // recurrence below reproduces exactly the defining three-term relation.
  QMatrix prev = QMatrix::identity(n);
  QMatrix cur = a;
  for (int i = 0; i <= D; ++i) {
    const QMatrix& vi = i == 0 ? prev : cur;
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        const int dist = ctx.distance(ctx.vertices()[static_cast<std::size_t>(r)],
                                      ctx.vertices()[static_cast<std::size_t>(c)]);
        if (vi.at(r, c) != (dist == i ? 1 : 0))
          return Verdict::fail("v_i(A) != A_i at i=" + std::to_string(i));
      }
    if (i >= 1 && i < D) {
      QMatrix next = a * cur - Rational(D - i + 1) * prev;
      next = Rational(Int(1), Int(i + 1)) * next;
      prev = std::move(cur);
      cur = std::move(next);
    }
  }

  // Dual side: v_i evaluated at the dual adjacency's diagonal values gives
  // the dual distance matrices, i.e. v_i(D - 2w) = |X| (E_i coefficient).
  const SchemeData s(ctx);
  const std::vector<VPolynomial> v = v_family(D, D);
  for (int i = 0; i <= D; ++i)
    for (int w = 0; w <= D; ++w)
      if (v[static_cast<std::size_t>(i)].eval(D - 2 * w) !=
          s.n() * s.ecoef(i)[static_cast<std::size_t>(w)])
        return Verdict::fail("v_i(A*) != dual distance matrix at (i=" +
                             std::to_string(i) + ", w=" + std::to_string(w) + ")");
  return Verdict::pass();
}

}  // namespace terw
