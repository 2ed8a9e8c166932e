#pragma once

// Irreducible modules of the subconstituent algebra T(x) generated by the
// adjacency matrix A and the dual adjacency A* of a hypercube or halved
// cube. Everything is organized around shells (spheres about the base
// vertex): basis vectors of an irreducible module are supported on single
// shells, A acts tridiagonally across consecutive shells, A* acts as the
// scalar D - 2s on shell s (cube) or D - 4s (halved cube).
//
// Tridiagonal data is stored in a fixed convention:
//   A w_i = gamma[i-1] w_{i-1} + alpha[i] w_i + beta[i] w_{i+1}
// with beta the subdiagonal of the representing matrix (size dim-1) and
// gamma the superdiagonal (gamma[i] is the coefficient pulling w_{i+1}
// down to w_i). Bases are normalized so the beta entries equal the model's.

#include <vector>

#include "terw/bitvec.hpp"
#include "terw/qmatrix.hpp"
#include "terw/rational.hpp"
#include "terw/verdict.hpp"

namespace terw {

struct TridiagonalModel {
  char family = 'L';  // 'L' (cube), 'M' or 'N' (halved cube)
  int D = 0;
  int k = 0;  // endpoint: lowest shell the module touches is floor over family
  std::vector<Rational> alpha;       // size dim
  std::vector<Rational> beta;        // size dim-1
  std::vector<Rational> gamma;       // size dim-1
  std::vector<Rational> theta_star;  // size dim, the A* scalars

  int dim() const { return static_cast<int>(alpha.size()); }
  QMatrix representing_matrix() const;  // tridiagonal dim x dim

  friend bool operator==(const TridiagonalModel&, const TridiagonalModel&) = default;
};

// Closed-form models. model_L: endpoints 0 <= k <= D/2, dimension D-2k+1.
// model_M: even k, 0 <= k <= floor(D/2), dimension floor(D/2)-k+1.
// model_N: even k, 2 <= k <= ceil(D/2), dimension ceil(D/2)-k+1.
// Invalid (D, k) throw std::invalid_argument.
TridiagonalModel model_L(int D, int k);
TridiagonalModel model_M(int D, int k);
TridiagonalModel model_N(int D, int k);

// How many copies of each module the standard module contains.
Int multiplicity_L(int D, int k);  // (D-2k+1)/(D-k+1) * C(D,k); also for M_k
Int multiplicity_N(int D, int k);  // (D-2k+3)/(D-k+2) * C(D,k-1)

// dim T(x): C(D+3,3) for the cube,
// C(floor(D/2)+3, 3) + C(ceil(D/2)+1, 3) for the halved cube.
Int algebra_dimension_formula(int D, Family family);

// A vector supported on a single shell, coordinates following the order of
// GraphContext::shells()[shell].
struct ShellVector {
  int shell = 0;
  std::vector<Rational> coords;
};

// One concrete irreducible module inside the standard module: basis[i]
// realizes w_i of the model.
struct ModuleInstance {
  TridiagonalModel model;
  std::vector<ShellVector> basis;

  int dim() const { return static_cast<int>(basis.size()); }
};

// Raising, lowering and flat parts of the adjacency matrix with respect to
// the base vertex: A = R + L + F where R maps shell s into shell s+1, L
// into s-1, F within s. F = 0 for the hypercube. Dense n x n matrices.
struct RaisingLowering {
  QMatrix R, L, F;
};
RaisingLowering raising_lowering(const GraphContext& ctx);

struct CubeDecomposition {
  int D = 0;
  // by_endpoint[k] holds the instances with endpoint k, in kernel order.
  std::vector<std::vector<ModuleInstance>> by_endpoint;
  Verdict models_ok;          // representing matrices match model_L(D,k)
  Verdict multiplicities_ok;  // kernel dimensions match multiplicity_L
  Verdict completeness_ok;    // per-shell bases have full rank
};

// Splits the standard module of the hypercube: for each endpoint k the
// lowest-shell vectors are ker(L restricted to shell k), each kernel vector
// generates one instance by repeated raising with subdiagonal normalized to
// beta, and the lowering/closure relations are verified exactly.
CubeDecomposition decompose_hypercube(const GraphContext& cube_ctx);

struct RestrictionResult {
  ModuleInstance instance;  // empty basis when the intersection is zero
  Verdict verdict;          // representing-matrix checks against the target model
};

// Intersects a cube instance with the even-weight subspace: keeps the
// even-offset basis vectors for even endpoints (giving an M_k module) and
// the odd-offset ones for odd endpoints (giving N_{k+1}), renormalized so
// the subdiagonal matches the target model. The intersection is zero
// exactly for endpoint D/2 with D/2 odd. The two contexts must share D and
// base vertex.
RestrictionResult restrict_to_halved(const ModuleInstance& cube_instance,
                                     const GraphContext& halved_ctx,
                                     const GraphContext& cube_ctx);

// The even-weight intersection of each cube module instance is spanned by
// exactly its basis vectors on even-weight shells: stacking the coordinates
// of the off-parity vectors as linear functionals, their joint kernel must
// be the coordinate subspace of the in-parity offsets.
Verdict basis_split_check(const GraphContext& cube_ctx, const CubeDecomposition& dec);

struct ModuleClassCount {
  char family;
  int k;
  int dim;
  Int count;     // instances found
  Int expected;  // multiplicity formula
};

struct HalvedDecomposition {
  int D = 0;
  std::vector<ModuleInstance> instances;  // endpoint-major order
  std::vector<ModuleClassCount> classes;  // (family, k) ascending, M before N
  Verdict models_ok;
  Verdict multiplicities_ok;  // counts match formulas; total dims = 2^(D-1)
  Verdict completeness_ok;    // per-shell full rank over the halved cube
};

// Decomposes the halved cube's standard module by restricting the cube
// decomposition for the same base vertex. The second overload reuses an
// already computed cube decomposition.
HalvedDecomposition decompose_halved(const GraphContext& halved_ctx);
HalvedDecomposition decompose_halved(const GraphContext& halved_ctx,
                                     const GraphContext& cube_ctx,
                                     const CubeDecomposition& cube);

struct ClassificationOutcome {
  Verdict verdict;
  // Sum over classes of dim^2; equals dim T(x) when the classes are
  // pairwise non-isomorphic and the decomposition is complete.
  Int wedderburn_dimension;
};

// Checks the class list is exactly { M_k : k even <= floor(D/2) } union
// { N_k : k even, 2 <= k <= ceil(D/2) }, that instances within a class
// share their model, and that distinct classes have distinct models
// (different dimension, alpha, or theta_star).
ClassificationOutcome classify_modules(const HalvedDecomposition& dec);

// Spectrum of the model's representing matrix is a sub(multi)set of the
// graph's eigenvalues: the characteristic polynomial factors exactly into
// distinct linear factors t - theta over the given eigenvalue list.
Verdict model_spectrum_check(const TridiagonalModel& model,
                             const std::vector<Rational>& eigenvalues);

}  // namespace terw
