#include "terw/modules.hpp"

#include <algorithm>
#include <stdexcept>

#include "terw/detail/int_rows.hpp"

namespace terw {
namespace {

// Shell-local application of the adjacency matrix: one pass over the
// support of a shell vector, split into the components one shell down, on
// the same shell, and one shell up. This is the only way A touches module
// bases, so decompositions never materialize |X| x |X| matrices.
struct ShellOps {
  const GraphContext& ctx;
  std::vector<int> pos;  // position of each vertex inside its shell

  explicit ShellOps(const GraphContext& c) : ctx(c), pos(c.vertex_count()) {
    for (const auto& sh : c.shells())
      for (std::size_t p = 0; p < sh.size(); ++p)
        pos[static_cast<std::size_t>(sh[p])] = static_cast<int>(p);
  }

  struct Split {
    std::vector<Rational> down, same, up;
  };

  Split apply_split(const ShellVector& v) const {
    const int s = v.shell;
    const auto& shells = ctx.shells();
    Split out;
    if (s > 0) out.down.resize(shells[static_cast<std::size_t>(s) - 1].size());
    out.same.resize(shells[static_cast<std::size_t>(s)].size());
    if (s < ctx.diameter())
      out.up.resize(shells[static_cast<std::size_t>(s) + 1].size());

    const auto& here = shells[static_cast<std::size_t>(s)];
    for (std::size_t p = 0; p < v.coords.size(); ++p) {
      const Rational& coeff = v.coords[p];
      if (sgn(coeff) == 0) continue;
      const BitVector vb = ctx.vertices()[static_cast<std::size_t>(here[p])];
      for (const std::uint64_t m : ctx.neighbor_masks()) {
        const int u = ctx.index_of(BitVector{vb.bits ^ m});
        const int su = ctx.shell_of(u);
        const auto pu = static_cast<std::size_t>(pos[static_cast<std::size_t>(u)]);
        if (su == s - 1)
          out.down[pu] += coeff;
        else if (su == s)
          out.same[pu] += coeff;
        else
          out.up[pu] += coeff;
      }
    }
    return out;
  }
};

bool all_zero(const std::vector<Rational>& v) {
  for (const Rational& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

bool equals_scaled(const std::vector<Rational>& v, const Rational& s,
                   const std::vector<Rational>& w) {
  if (v.size() != w.size()) return false;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != s * w[i]) return false;
  return true;
}

void make_vector_primitive(std::vector<Rational>& v) {
  detail::IntRow r = detail::to_int_row(v);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = Rational(r[i]);
}

// Walks the chain w_{i+1} = (up part of A w_i) / beta_i starting from a
// bottom vector, verifying every entry of the representing matrix against
// the model: down part gamma_{i-1} w_{i-1} (zero at the bottom), same-shell
// part alpha_i w_i, and a vanishing up part at the top. shell_step is 1 for
// the cube, 2 for cube-shell bookkeeping of restricted modules.
Verdict grow_chain(const ShellOps& ops, const TridiagonalModel& model,
                   ShellVector bottom, int shell_step,
                   std::vector<ShellVector>& out_basis, const std::string& tag) {
  const int dim = model.dim();
  out_basis.clear();
  out_basis.push_back(std::move(bottom));
  for (int i = 0; i < dim; ++i) {
    const ShellVector& wi = out_basis[static_cast<std::size_t>(i)];
    const ShellOps::Split sp = ops.apply_split(wi);

    if (i == 0) {
      if (!all_zero(sp.down))
        return Verdict::fail(tag + ": bottom vector not annihilated by lowering");
    } else if (!equals_scaled(sp.down, model.gamma[static_cast<std::size_t>(i) - 1],
                              out_basis[static_cast<std::size_t>(i) - 1].coords)) {
      return Verdict::fail(tag + ": lowering coefficient differs from gamma_" +
                           std::to_string(i - 1));
    }

    if (!equals_scaled(sp.same, model.alpha[static_cast<std::size_t>(i)], wi.coords))
      return Verdict::fail(tag + ": flat coefficient differs from alpha_" +
                           std::to_string(i));

    if (i == dim - 1) {
      if (!all_zero(sp.up))
        return Verdict::fail(tag + ": top vector not annihilated by raising");
    } else {
      if (all_zero(sp.up))
        return Verdict::fail(tag + ": chain dies before reaching the model dimension");
      ShellVector next;
      next.shell = wi.shell + 1;
      next.coords = std::move(sp.up);
      const Rational inv_beta = 1 / model.beta[static_cast<std::size_t>(i)];
      for (Rational& c : next.coords) c *= inv_beta;
      out_basis.push_back(std::move(next));
    }
  }
  (void)shell_step;
  return Verdict::pass();
}

Verdict check_theta_star(const GraphContext& ctx, const TridiagonalModel& model,
                         const std::vector<ShellVector>& basis, const std::string& tag) {
  const int step = ctx.family() == Family::hypercube ? 2 : 4;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (model.theta_star[i] != ctx.D() - step * basis[i].shell)
      return Verdict::fail(tag + ": dual eigenvalue differs from theta*_" +
                           std::to_string(i));
  return Verdict::pass();
}

// Full-rank check for the union of shell-s basis vectors of all instances.
Verdict shell_completeness(const GraphContext& ctx,
                           const std::vector<const ModuleInstance*>& instances) {
  const auto& shells = ctx.shells();
  for (int s = 0; s <= ctx.diameter(); ++s) {
    const int size = static_cast<int>(shells[static_cast<std::size_t>(s)].size());
    detail::PivotTableau tab(size);
    int count = 0;
    for (const ModuleInstance* inst : instances)
      for (const ShellVector& v : inst->basis) {
        if (v.shell != s) continue;
        ++count;
        if (!tab.insert(v.coords))
          return Verdict::fail("dependent basis vectors on shell " + std::to_string(s));
      }
    if (count != size || tab.rank() != size)
      return Verdict::fail("shell " + std::to_string(s) + " spans rank " +
                           std::to_string(tab.rank()) + " of " + std::to_string(size));
  }
  return Verdict::pass();
}

}  // namespace

QMatrix TridiagonalModel::representing_matrix() const {
  const int n = dim();
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    m.at(i, i) = alpha[static_cast<std::size_t>(i)];
    if (i + 1 < n) {
      m.at(i + 1, i) = beta[static_cast<std::size_t>(i)];
      m.at(i, i + 1) = gamma[static_cast<std::size_t>(i)];
    }
  }
  return m;
}

TridiagonalModel model_L(int D, int k) {
  if (k < 0 || 2 * k > D)
    throw std::invalid_argument("model_L needs 0 <= k <= D/2");
  TridiagonalModel m{'L', D, k, {}, {}, {}, {}};
  const int d = D - 2 * k;
  for (int i = 0; i <= d; ++i) {
    m.alpha.emplace_back(0);
    m.theta_star.emplace_back(D - 2 * (i + k));
  }
  for (int i = 0; i < d; ++i) m.beta.emplace_back(i + 1);
  for (int i = 1; i <= d; ++i) m.gamma.emplace_back(D - i - 2 * k + 1);
  return m;
}

TridiagonalModel model_M(int D, int k) {
  if (k < 0 || k % 2 != 0 || k > D / 2)
    throw std::invalid_argument("model_M needs even k with 0 <= k <= floor(D/2)");
  TridiagonalModel m{'M', D, k, {}, {}, {}, {}};
  const int d = D / 2 - k;
  for (int i = 0; i <= d; ++i) {
    m.alpha.emplace_back(Rational(2 * i) * (D - 2 * i - 2 * k) - k);
    m.theta_star.emplace_back(D - 2 * (2 * i + k));
  }
  for (int i = 0; i < d; ++i) m.beta.emplace_back(Rational(i + 1) * (2 * i + 1));
  for (int i = 1; i <= d; ++i)
    m.gamma.push_back(Rational(D - 2 * i - 2 * k + 1) * (D - 2 * i - 2 * k + 2) / 2);
  return m;
}

TridiagonalModel model_N(int D, int k) {
  if (k < 2 || k % 2 != 0 || k > (D + 1) / 2)
    throw std::invalid_argument("model_N needs even k with 2 <= k <= ceil(D/2)");
  TridiagonalModel m{'N', D, k, {}, {}, {}, {}};
  const int d = (D + 1) / 2 - k;
  for (int i = 0; i <= d; ++i) {
    m.alpha.emplace_back(Rational(2 * i + 1) * (D - 2 * i - 2 * k + 1) - k + 1);
    m.theta_star.emplace_back(D - 2 * (2 * i + k));
  }
  for (int i = 0; i < d; ++i) m.beta.emplace_back(Rational(i + 1) * (2 * i + 3));
  for (int i = 1; i <= d; ++i)
    m.gamma.push_back(Rational(D - 2 * i - 2 * k + 2) * (D - 2 * i - 2 * k + 3) / 2);
  return m;
}

Int multiplicity_L(int D, int k) {
  if (k < 0 || 2 * k > D)
    throw std::invalid_argument("multiplicity_L needs 0 <= k <= D/2");
  return to_integer(Rational(D - 2 * k + 1) / (D - k + 1) * Rational(binomial(D, k)));
}

Int multiplicity_N(int D, int k) {
  if (k < 2 || k % 2 != 0 || k > (D + 1) / 2)
    throw std::invalid_argument("multiplicity_N needs even k with 2 <= k <= ceil(D/2)");
  return to_integer(Rational(D - 2 * k + 3) / (D - k + 2) * Rational(binomial(D, k - 1)));
}

Int algebra_dimension_formula(int D, Family family) {
  if (family == Family::hypercube) return binomial(D + 3, 3);
  return binomial(D / 2 + 3, 3) + binomial((D + 1) / 2 + 1, 3);
}

RaisingLowering raising_lowering(const GraphContext& ctx) {
  const int n = ctx.vertex_count();
  RaisingLowering rl{QMatrix(n, n), QMatrix(n, n), QMatrix(n, n)};
  for (int v = 0; v < n; ++v) {
    const BitVector vb = ctx.vertices()[static_cast<std::size_t>(v)];
    const int sv = ctx.shell_of(v);
    for (const std::uint64_t m : ctx.neighbor_masks()) {
      const int u = ctx.index_of(BitVector{vb.bits ^ m});
      const int su = ctx.shell_of(u);
      if (su == sv + 1)
        rl.R.at(u, v) = 1;
      else if (su == sv - 1)
        rl.L.at(u, v) = 1;
      else
        rl.F.at(u, v) = 1;
    }
  }
  return rl;
}

CubeDecomposition decompose_hypercube(const GraphContext& ctx) {
  if (ctx.family() != Family::hypercube)
    throw std::invalid_argument("decompose_hypercube needs a hypercube context");
  const int D = ctx.D();
  const ShellOps ops(ctx);
  const auto& shells = ctx.shells();

  CubeDecomposition dec;
  dec.D = D;
  dec.by_endpoint.resize(static_cast<std::size_t>(D / 2) + 1);

  for (int k = 0; k <= D / 2; ++k) {
    const auto& shell_k = shells[static_cast<std::size_t>(k)];
    const int cols = static_cast<int>(shell_k.size());

    // Lowering block from shell k to shell k-1; its kernel holds the
    // bottom vectors of every module with endpoint k.
    QMatrix lower_block(k == 0 ? 0 : static_cast<int>(shells[static_cast<std::size_t>(k) - 1].size()),
                        cols);
    if (k > 0) {
      for (int c = 0; c < cols; ++c) {
        const BitVector vb = ctx.vertices()[static_cast<std::size_t>(shell_k[static_cast<std::size_t>(c)])];
        for (const std::uint64_t m : ctx.neighbor_masks()) {
          const int u = ctx.index_of(BitVector{vb.bits ^ m});
          if (ctx.shell_of(u) == k - 1)
            lower_block.at(ops.pos[static_cast<std::size_t>(u)], c) = 1;
        }
      }
    }
    const std::vector<std::vector<Rational>> kern = kernel_basis(lower_block);

    if (Int(static_cast<long>(kern.size())) != multiplicity_L(D, k))
      dec.multiplicities_ok.merge(Verdict::fail(
          "endpoint " + std::to_string(k) + ": kernel dimension " +
          std::to_string(kern.size()) + " differs from the multiplicity formula"));

    const TridiagonalModel model = model_L(D, k);
    auto& bucket = dec.by_endpoint[static_cast<std::size_t>(k)];
    for (std::size_t idx = 0; idx < kern.size(); ++idx) {
      ModuleInstance inst;
      inst.model = model;
      ShellVector bottom{k, kern[idx]};
      make_vector_primitive(bottom.coords);
      const std::string tag =
          "L_" + std::to_string(k) + "[" + std::to_string(idx) + "]";
      Verdict v = grow_chain(ops, model, std::move(bottom), 1, inst.basis, tag);
      if (v.ok) v = check_theta_star(ctx, model, inst.basis, tag);
      dec.models_ok.merge(v);
      bucket.push_back(std::move(inst));
    }
  }

  std::vector<const ModuleInstance*> all;
  for (const auto& bucket : dec.by_endpoint)
    for (const ModuleInstance& inst : bucket) all.push_back(&inst);
  dec.completeness_ok = shell_completeness(ctx, all);
  return dec;
}

RestrictionResult restrict_to_halved(const ModuleInstance& cube_instance,
                                     const GraphContext& halved_ctx,
                                     const GraphContext& cube_ctx) {
  if (halved_ctx.family() != Family::halved_cube ||
      cube_ctx.family() != Family::hypercube ||
      halved_ctx.D() != cube_ctx.D() ||
      !(halved_ctx.base() == cube_ctx.base()))
    throw std::invalid_argument("restriction needs matching cube and halved contexts");

  const int D = cube_ctx.D();
  const int k = cube_instance.model.k;
  const int d = cube_instance.dim() - 1;
  const int start = k % 2 == 0 ? 0 : 1;

  RestrictionResult res;
  if (start > d) {
    // Odd endpoint D/2: the module lives entirely on odd shells.
    res.instance.model = TridiagonalModel{'N', D, k + 1, {}, {}, {}, {}};
    return res;
  }

  const TridiagonalModel target =
      k % 2 == 0 ? model_M(D, k) : model_N(D, k + 1);
  const int m = target.dim();
  if ((d - start) / 2 + 1 != m)
    throw std::logic_error("restricted dimension disagrees with the target model");

  // Even cube shells and halved shells list the same words in the same
  // ascending order, so coordinates transfer positionally.
  const ShellVector& src = cube_instance.basis[static_cast<std::size_t>(start)];
  ShellVector bottom;
  bottom.shell = src.shell / 2;
  bottom.coords = src.coords;
  if (halved_ctx.shells()[static_cast<std::size_t>(bottom.shell)].size() != bottom.coords.size())
    throw std::logic_error("cube and halved shell sizes disagree");
  make_vector_primitive(bottom.coords);

  const ShellOps ops(halved_ctx);
  const std::string tag = std::string(1, target.family) + "_" +
                          std::to_string(target.k) + " from L_" + std::to_string(k);
  res.instance.model = target;
  res.verdict = grow_chain(ops, target, std::move(bottom), 2, res.instance.basis, tag);
  if (res.verdict.ok)
    res.verdict = check_theta_star(halved_ctx, target, res.instance.basis, tag);
  return res;
}

Verdict basis_split_check(const GraphContext& cube_ctx, const CubeDecomposition& dec) {
  const int base_par = hamming_weight(cube_ctx.base()) % 2;
  for (std::size_t k = 0; k < dec.by_endpoint.size(); ++k) {
    for (const ModuleInstance& inst : dec.by_endpoint[k]) {
      const int dim = inst.dim();
      std::vector<int> in_offsets, out_offsets;
      for (int i = 0; i < dim; ++i)
        ((inst.basis[static_cast<std::size_t>(i)].shell + base_par) % 2 == 0
             ? in_offsets
             : out_offsets)
            .push_back(i);

      int rows = 0;
      for (int i : out_offsets)
        rows += static_cast<int>(inst.basis[static_cast<std::size_t>(i)].coords.size());
      QMatrix odd_part(rows, dim);
      int row0 = 0;
      for (int i : out_offsets) {
        const auto& coords = inst.basis[static_cast<std::size_t>(i)].coords;
        for (std::size_t p = 0; p < coords.size(); ++p)
          odd_part.at(row0 + static_cast<int>(p), i) = coords[p];
        row0 += static_cast<int>(coords.size());
      }

      const auto kern = kernel_basis(odd_part);
      if (kern.size() != in_offsets.size())
        return Verdict::fail("even-weight intersection has wrong dimension at endpoint " +
                             std::to_string(k));
      for (std::size_t m = 0; m < kern.size(); ++m)
        for (int i = 0; i < dim; ++i) {
          const Rational want = i == in_offsets[m] ? 1 : 0;
          if (kern[m][static_cast<std::size_t>(i)] != want)
            return Verdict::fail("even-weight intersection not spanned by in-parity "
                                 "basis vectors at endpoint " + std::to_string(k));
        }
    }
  }
  return Verdict::pass();
}

HalvedDecomposition decompose_halved(const GraphContext& halved_ctx) {
  if (halved_ctx.family() != Family::halved_cube)
    throw std::invalid_argument("decompose_halved needs a halved-cube context");
  const GraphContext cube_ctx(halved_ctx.D(), Family::hypercube, halved_ctx.base());
  return decompose_halved(halved_ctx, cube_ctx, decompose_hypercube(cube_ctx));
}

HalvedDecomposition decompose_halved(const GraphContext& halved_ctx,
                                     const GraphContext& cube_ctx,
                                     const CubeDecomposition& cube) {
  if (halved_ctx.family() != Family::halved_cube)
    throw std::invalid_argument("decompose_halved needs a halved-cube context");
  const int D = halved_ctx.D();

  HalvedDecomposition dec;
  dec.D = D;
  dec.models_ok = cube.models_ok;
  dec.multiplicities_ok = cube.multiplicities_ok;

  for (int k = 0; k <= D / 2; ++k) {
    for (const ModuleInstance& inst : cube.by_endpoint[static_cast<std::size_t>(k)]) {
      RestrictionResult res = restrict_to_halved(inst, halved_ctx, cube_ctx);
      dec.models_ok.merge(res.verdict);
      const bool expect_empty = k % 2 == 1 && 2 * k == D;
      if ((res.instance.dim() == 0) != expect_empty)
        dec.models_ok.merge(Verdict::fail(
            "endpoint " + std::to_string(k) +
            ": unexpected intersection with the even-weight subspace"));
      if (res.instance.dim() > 0) dec.instances.push_back(std::move(res.instance));
    }
  }

  // Tally instances into classes and compare with the multiplicity formulas.
  for (int k = 0; k <= D / 2; k += 2) {
    ModuleClassCount c{'M', k, model_M(D, k).dim(), 0, multiplicity_L(D, k)};
    dec.classes.push_back(std::move(c));
  }
  for (int k = 2; k <= (D + 1) / 2; k += 2) {
    ModuleClassCount c{'N', k, model_N(D, k).dim(), 0, multiplicity_N(D, k)};
    if (c.expected != multiplicity_L(D, k - 1))
      throw std::logic_error("inconsistent multiplicity formulas for N_k");
    dec.classes.push_back(std::move(c));
  }
  std::sort(dec.classes.begin(), dec.classes.end(),
            [](const ModuleClassCount& a, const ModuleClassCount& b) {
              return a.family != b.family ? a.family < b.family : a.k < b.k;
            });

  Int total_dim = 0;
  for (const ModuleInstance& inst : dec.instances) {
    total_dim += inst.dim();
    bool matched = false;
    for (ModuleClassCount& c : dec.classes)
      if (c.family == inst.model.family && c.k == inst.model.k) {
        c.count += 1;
        matched = true;
        break;
      }
    if (!matched)
      dec.multiplicities_ok.merge(Verdict::fail("instance outside the predicted classes"));
  }
  for (const ModuleClassCount& c : dec.classes)
    if (c.count != c.expected)
      dec.multiplicities_ok.merge(Verdict::fail(
          std::string(1, c.family) + "_" + std::to_string(c.k) + ": found " +
          c.count.get_str() + " instances, formula expects " + c.expected.get_str()));
  if (total_dim != Int(1) << (D - 1))
    dec.multiplicities_ok.merge(
        Verdict::fail("module dimensions do not sum to 2^(D-1)"));

  std::vector<const ModuleInstance*> all;
  for (const ModuleInstance& inst : dec.instances) all.push_back(&inst);
  dec.completeness_ok = shell_completeness(halved_ctx, all);
  dec.completeness_ok.merge(cube.completeness_ok);
  return dec;
}

ClassificationOutcome classify_modules(const HalvedDecomposition& dec) {
  ClassificationOutcome out;
  out.wedderburn_dimension = 0;

  // Predicted class list: M_k for even k up to floor(D/2), N_k for even k
  // in [2, ceil(D/2)] — nothing else, nothing missing.
  std::vector<std::pair<char, int>> want;
  for (int k = 0; k <= dec.D / 2; k += 2) want.emplace_back('M', k);
  for (int k = 2; k <= (dec.D + 1) / 2; k += 2) want.emplace_back('N', k);
  std::vector<std::pair<char, int>> got;
  for (const ModuleClassCount& c : dec.classes) {
    got.emplace_back(c.family, c.k);
    if (c.count <= 0)
      out.verdict.merge(Verdict::fail("predicted class with no instances"));
  }
  std::sort(want.begin(), want.end());
  std::sort(got.begin(), got.end());
  if (want != got)
    out.verdict.merge(Verdict::fail("class list differs from the classification"));

  // Instances within a class share one model; across classes the models
  // are non-isomorphic (they differ in dimension, alpha, or theta*).
  std::vector<TridiagonalModel> reps;
  for (const ModuleClassCount& c : dec.classes) {
    const TridiagonalModel model =
        c.family == 'M' ? model_M(dec.D, c.k) : model_N(dec.D, c.k);
    for (const ModuleInstance& inst : dec.instances)
      if (inst.model.family == c.family && inst.model.k == c.k &&
          !(inst.model == model))
        out.verdict.merge(Verdict::fail("instance model differs within its class"));
    reps.push_back(model);
    out.wedderburn_dimension += Int(model.dim()) * Int(model.dim());
  }
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j)
      if (reps[i].dim() == reps[j].dim() && reps[i].alpha == reps[j].alpha &&
          reps[i].theta_star == reps[j].theta_star)
        out.verdict.merge(Verdict::fail("two distinct classes share a model"));
  return out;
}

Verdict model_spectrum_check(const TridiagonalModel& model,
                             const std::vector<Rational>& eigenvalues) {
  const std::vector<Rational> p = characteristic_polynomial(model.representing_matrix());
  std::vector<Rational> roots;
  for (const Rational& t : eigenvalues) {
    Rational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
    if (sgn(acc) == 0) roots.push_back(t);
  }
  if (static_cast<int>(roots.size()) != model.dim())
    return Verdict::fail("model spectrum is not contained in the graph spectrum");

  std::vector<Rational> prod{Rational(1)};
  for (const Rational& r : roots) {
    std::vector<Rational> next(prod.size() + 1);
    for (std::size_t i = 0; i < prod.size(); ++i) {
      next[i + 1] += prod[i];
      next[i] -= r * prod[i];
    }
    prod = std::move(next);
  }
  if (prod != p)
    return Verdict::fail("characteristic polynomial has repeated eigenvalues");
  return Verdict::pass();
}

}  // namespace terw
