#pragma once

// The polynomial family v_0, v_1, ... attached to the hypercube H(D,2):
// v_0 = 1, v_1 = t, and t v_i = (D-i+1) v_{i-1} + (i+1) v_{i+1}. Applied to
// the adjacency matrix they produce the distance matrices; evaluated at the
// dual eigenvalues they produce scaled Krawtchouk values. Everything here
// is exact rational arithmetic.

#include <vector>

#include "terw/bitvec.hpp"
#include "terw/rational.hpp"
#include "terw/verdict.hpp"

namespace terw {

struct VPolynomial {
  int D = 0;
  int index = 0;
  std::vector<Rational> coeffs;  // monomial basis, coeffs[k] multiplies t^k

  Rational eval(const Rational& t) const;
};

// v_0..v_upto for H(D,2); 0 <= upto <= D.
std::vector<VPolynomial> v_family(int D, int upto);
VPolynomial v_poly(int D, int i);

// K_i(t; q, n) = sum_j (-q)^j C(i,j) C(t,j) / C(n,j) with C(t,j) the
// falling-factorial binomial, so t may be any rational. Requires n >= 1,
// 0 <= i <= n, q != 0.
Rational krawtchouk_eval(int i, const Rational& t, const Rational& q, int n);

// v_i(t) = C(D,i) K_i((D-t)/2; 2, D) as polynomials in t: both sides have
// degree i <= D, so agreement on the D+1 points t = D-2j proves the
// identity. Also pins the leading coefficient 1/i! and v_i(D) = C(D,i).
Verdict v_eval_identity_check(int D);

// Endpoint values of the second-highest polynomial:
// v_{D-1}(D-2n) = (-1)^n (D-2n) for n = 0..D.
Verdict v_top_values_check(int D);

// For the hypercube context: v_i(A) equals the distance-i matrix for
// i = 0..D (dense recurrence, compared entrywise), and v_i applied to the
// dual adjacency reproduces the dual distance matrices (checked on
// idempotent coefficients). Throws for a halved-cube context.
Verdict distance_matrix_identity_check(const GraphContext& ctx);

}  // namespace terw
