#pragma once

// Distance-regular structure of the two graph families: intersection
// numbers, eigenvalues, primitive idempotents, and the dual (Q-polynomial)
// side. The scheme is carried in coefficient form: a matrix that is a
// function of distance is the coefficient vector of its expansion over the
// distance matrices A_0..A_d. Multiplication by the adjacency matrix is
// tridiagonal in that basis, which keeps idempotent construction at O(d^2)
// rationals instead of O(n^2). counted_intersection_check ties the
// coefficient picture to the actual graph by exhaustive neighbour counting.

#include <vector>

#include "terw/bitvec.hpp"
#include "terw/qmatrix.hpp"
#include "terw/rational.hpp"
#include "terw/verdict.hpp"

namespace terw {

struct IntersectionArray {
  // a[i], b[i], c[i] for i = 0..d, with b[d] = 0 and c[0] = 0.
  std::vector<Int> a, b, c;
  int d() const { return static_cast<int>(a.size()) - 1; }

  friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;
};

IntersectionArray closed_form_intersection_numbers(int D, Family family);

// Recounts every a_i, b_i, c_i over all ordered vertex pairs and checks the
// counts are constant per distance and equal to the closed forms. This is
// the bridge that justifies doing scheme arithmetic on coefficients.
Verdict counted_intersection_check(const GraphContext& ctx);

std::vector<Rational> eigenvalues_closed_form(int D, Family family);

class SchemeData {
 public:
  explicit SchemeData(const GraphContext& ctx);

  int d() const { return static_cast<int>(theta_.size()) - 1; }
  long n() const { return n_; }
  Family family() const { return family_; }
  int D() const { return D_; }
  const IntersectionArray& intersection() const { return ia_; }
  const std::vector<Rational>& eigenvalues() const { return theta_; }

  // ecoef(i)[j] is the coefficient of the distance-j matrix in E_i.
  const std::vector<Rational>& ecoef(int i) const {
    return ecoef_[static_cast<std::size_t>(i)];
  }

  // Coefficients of A * M for M given by coefficients u (three-term).
  std::vector<Rational> apply_adjacency(const std::vector<Rational>& u) const;

  // rank E_i = trace E_i = n * ecoef(i)[0]; asserted integral and positive.
  Int idempotent_rank(int i) const;

  // Resolution of identity, eigenvector property, and pairwise products
  // E_i E_j = delta_ij E_i, all in coefficient space.
  Verdict coefficient_invariants() const;

 private:
  int D_;
  Family family_;
  long n_;
  IntersectionArray ia_;
  std::vector<Rational> theta_;
  std::vector<std::vector<Rational>> ecoef_;
};

// Dense materializations (memory is the caller's budget: n^2 rationals).
QMatrix adjacency_matrix(const GraphContext& ctx);
QMatrix distance_matrix(const GraphContext& ctx, int i);
QMatrix idempotent_matrix(const GraphContext& ctx, const SchemeData& s, int i);

// Dual adjacency with respect to the base vertex x: the diagonal matrix
// with (y,y) entry D - 2 w(x + y) for both families. dual_adjacency_check
// verifies this equals |X| E_1 compressed to the diagonal, i.e. that
// |X| ecoef(1)[j] matches the closed form on each shell.
QMatrix dual_adjacency(const GraphContext& ctx);
Verdict dual_adjacency_check(const GraphContext& ctx, const SchemeData& s);

// Dual distance matrices: diagonal, (y,y) entry |X| (E_i)_{x,y}.
QMatrix dual_distance_matrix(const GraphContext& ctx, const SchemeData& s, int i);

struct DualParameters {
  // astar[i] for i = 0..d; bstar[i] for i = 0..d-1; cstar[i] for i = 1..d
  // stored at their natural indices (bstar[d] = cstar[0] = 0).
  std::vector<Rational> astar, bstar, cstar;

  friend bool operator==(const DualParameters&, const DualParameters&) = default;
};

DualParameters closed_form_dual_parameters(int D, Family family);

struct QPolyOutcome {
  Verdict verdict;
  DualParameters dual;
};

// Expands each E_i o E_1 (entrywise product) over E_0..E_d by an exact
// linear solve in coefficient space, asserts the tridiagonal support that
// makes the scheme Q-polynomial, extracts the dual intersection numbers,
// and compares them to the closed forms.
QPolyOutcome q_polynomial_check(const GraphContext& ctx, const SchemeData& s);

struct SpectralData {
  std::vector<Rational> eigenvalues;
  std::vector<Int> multiplicities;  // from idempotent traces; sum to |X|
};

SpectralData spectral_data(const GraphContext& ctx, const SchemeData& s);

// Independent multiplicity computation: m_i = |X| - rank(A - theta_i I)
// over the rationals. Dense elimination; meant for |X| up to a few hundred.
Verdict spectrum_rank_check(const GraphContext& ctx, const SchemeData& s);

// Halved-cube adjacency equals the cube's distance-2 matrix restricted to
// even-weight words, with cube distances recomputed by breadth-first
// search; the even-to-odd block of the distance-2 matrix vanishes.
Verdict adjacency_restriction_check(int D);

// Halved-cube idempotents arise by folding the cube's:
// E_i = (bold E_i + bold E_{D-i}) restricted, the middle one unpaired for
// even D. Verified as an identity of idempotent coefficients; for D <= 8
// also entrywise on materialized matrices.
Verdict idempotent_folding_check(int D);

// The halved cube's dual adjacency is the restriction of the cube's, and
// both match their |X| E_1 diagonals.
Verdict dual_restriction_check(int D);

}  // namespace terw
