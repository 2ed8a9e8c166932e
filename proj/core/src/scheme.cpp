#include "terw/scheme.hpp"

#include <bit>
#include <cstdint>
#include <queue>
#include <stdexcept>

namespace terw {
namespace {

std::string fmt_mismatch(const char* what, int where) {
  return std::string(what) + " mismatch at index " + std::to_string(where);
}

}  // namespace

IntersectionArray closed_form_intersection_numbers(int D, Family family) {
  IntersectionArray ia;
  if (family == Family::hypercube) {
    for (int i = 0; i <= D; ++i) {
      ia.a.emplace_back(0);
      ia.b.emplace_back(D - i);
      ia.c.emplace_back(i);
    }
  } else {
    const int d = D / 2;
    for (int i = 0; i <= d; ++i) {
      ia.a.emplace_back(Int(2 * i) * (D - 2 * i));
      ia.b.push_back(binomial(D - 2 * i, 2));
      ia.c.push_back(binomial(2 * i, 2));
    }
  }
  ia.b.back() = 0;
  return ia;
}

Verdict counted_intersection_check(const GraphContext& ctx) {
  const IntersectionArray ia = closed_form_intersection_numbers(ctx.D(), ctx.family());
  const bool halved = ctx.family() == Family::halved_cube;
  const auto& verts = ctx.vertices();
  const auto& masks = ctx.neighbor_masks();

  for (const BitVector x : verts) {
    for (const BitVector y : verts) {
      const int wxy = std::popcount(x.bits ^ y.bits);
      const int h = halved ? wxy / 2 : wxy;
      long cnt_c = 0, cnt_a = 0, cnt_b = 0;
      for (const std::uint64_t m : masks) {
        const int w = std::popcount(x.bits ^ y.bits ^ m);
        const int hz = halved ? w / 2 : w;
        if (hz == h - 1)
          ++cnt_c;
        else if (hz == h)
          ++cnt_a;
        else
          ++cnt_b;
      }
      if (ia.c[static_cast<std::size_t>(h)] != cnt_c ||
          ia.a[static_cast<std::size_t>(h)] != cnt_a ||
          ia.b[static_cast<std::size_t>(h)] != cnt_b)
        return Verdict::fail("intersection numbers not constant at distance " +
                             std::to_string(h));
    }
  }
  return Verdict::pass();
}

std::vector<Rational> eigenvalues_closed_form(int D, Family family) {
  std::vector<Rational> theta;
  if (family == Family::hypercube) {
    for (int i = 0; i <= D; ++i) theta.emplace_back(D - 2 * i);
  } else {
    for (int i = 0; i <= D / 2; ++i) {
      Rational t(D - 2 * i);
      theta.push_back((t * t - D) / 2);
    }
  }
  return theta;
}

SchemeData::SchemeData(const GraphContext& ctx)
    : D_(ctx.D()),
      family_(ctx.family()),
      n_(ctx.vertex_count()),
      ia_(closed_form_intersection_numbers(D_, family_)),
      theta_(eigenvalues_closed_form(D_, family_)) {
  const int d = this->d();
  for (int i = 0; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      if (theta_[static_cast<std::size_t>(i)] == theta_[static_cast<std::size_t>(j)])
        throw std::logic_error("eigenvalues are not distinct");
  ecoef_.resize(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) {
    // Lagrange projector prod_{j != i} (A - theta_j)/(theta_i - theta_j),
    // evaluated on the coefficient vector of the identity.
    std::vector<Rational> u(static_cast<std::size_t>(d) + 1);
    u[0] = 1;
    for (int j = 0; j <= d; ++j) {
      if (j == i) continue;
      const std::vector<Rational> au = apply_adjacency(u);
      const Rational denom = theta_[static_cast<std::size_t>(i)] -
                             theta_[static_cast<std::size_t>(j)];
      for (int h = 0; h <= d; ++h) {
        auto hh = static_cast<std::size_t>(h);
        u[hh] = (au[hh] - theta_[static_cast<std::size_t>(j)] * u[hh]) / denom;
      }
    }
    ecoef_[static_cast<std::size_t>(i)] = std::move(u);
  }
}

std::vector<Rational> SchemeData::apply_adjacency(const std::vector<Rational>& u) const {
  const int d = this->d();
  if (static_cast<int>(u.size()) != d + 1)
    throw std::invalid_argument("coefficient vector length mismatch");
  std::vector<Rational> out(static_cast<std::size_t>(d) + 1);
  for (int h = 0; h <= d; ++h) {
    Rational acc = ia_.a[static_cast<std::size_t>(h)] * u[static_cast<std::size_t>(h)];
    if (h + 1 <= d)
      acc += ia_.b[static_cast<std::size_t>(h)] * u[static_cast<std::size_t>(h) + 1];
    if (h >= 1)
      acc += ia_.c[static_cast<std::size_t>(h)] * u[static_cast<std::size_t>(h) - 1];
    out[static_cast<std::size_t>(h)] = std::move(acc);
  }
  return out;
}

Int SchemeData::idempotent_rank(int i) const {
  const Int m = to_integer(n_ * ecoef(i)[0]);
  if (m <= 0) throw std::logic_error("nonpositive idempotent rank");
  return m;
}

Verdict SchemeData::coefficient_invariants() const {
  const int d = this->d();

  for (int h = 0; h <= d; ++h) {
    Rational s = 0;
    for (int i = 0; i <= d; ++i) s += ecoef(i)[static_cast<std::size_t>(h)];
    if (s != (h == 0 ? 1 : 0)) return Verdict::fail("idempotents do not sum to I");
  }

  for (int i = 0; i <= d; ++i) {
    const std::vector<Rational> au = apply_adjacency(ecoef(i));
    for (int h = 0; h <= d; ++h)
      if (au[static_cast<std::size_t>(h)] !=
          theta_[static_cast<std::size_t>(i)] * ecoef(i)[static_cast<std::size_t>(h)])
        return Verdict::fail("A E_i != theta_i E_i at i=" + std::to_string(i));
  }

  // E_j E_i via the Lagrange polynomial of E_j applied to E_i.
  for (int j = 0; j <= d; ++j)
    for (int i = 0; i <= d; ++i) {
      std::vector<Rational> u = ecoef(i);
      for (int l = 0; l <= d; ++l) {
        if (l == j) continue;
        const std::vector<Rational> au = apply_adjacency(u);
        const Rational denom = theta_[static_cast<std::size_t>(j)] -
                               theta_[static_cast<std::size_t>(l)];
        for (int h = 0; h <= d; ++h) {
          auto hh = static_cast<std::size_t>(h);
          u[hh] = (au[hh] - theta_[static_cast<std::size_t>(l)] * u[hh]) / denom;
        }
      }
      for (int h = 0; h <= d; ++h) {
        const Rational want =
            j == i ? ecoef(i)[static_cast<std::size_t>(h)] : Rational(0);
        if (u[static_cast<std::size_t>(h)] != want)
          return Verdict::fail("E_j E_i != delta E_i at (" + std::to_string(j) +
                               "," + std::to_string(i) + ")");
      }
    }
  return Verdict::pass();
}

QMatrix adjacency_matrix(const GraphContext& ctx) {
  QMatrix a(ctx.vertex_count(), ctx.vertex_count());
  for (int v = 0; v < ctx.vertex_count(); ++v) {
    const BitVector vb = ctx.vertices()[static_cast<std::size_t>(v)];
    for (const std::uint64_t m : ctx.neighbor_masks())
      a.at(ctx.index_of(BitVector{vb.bits ^ m}), v) = 1;
  }
  return a;
}

QMatrix distance_matrix(const GraphContext& ctx, int i) {
  if (i < 0 || i > ctx.diameter())
    throw std::invalid_argument("distance index out of range");
  const int n = ctx.vertex_count();
  QMatrix m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (ctx.distance(ctx.vertices()[static_cast<std::size_t>(r)],
                       ctx.vertices()[static_cast<std::size_t>(c)]) == i)
        m.at(r, c) = 1;
  return m;
}

QMatrix idempotent_matrix(const GraphContext& ctx, const SchemeData& s, int i) {
  const int n = ctx.vertex_count();
  QMatrix m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const int h = ctx.distance(ctx.vertices()[static_cast<std::size_t>(r)],
                                 ctx.vertices()[static_cast<std::size_t>(c)]);
      m.at(r, c) = s.ecoef(i)[static_cast<std::size_t>(h)];
    }
  return m;
}

QMatrix dual_adjacency(const GraphContext& ctx) {
  const int n = ctx.vertex_count();
  QMatrix m(n, n);
  for (int v = 0; v < n; ++v) {
    const int w = hamming_weight(ctx.base() + ctx.vertices()[static_cast<std::size_t>(v)]);
    m.at(v, v) = ctx.D() - 2 * w;
  }
  return m;
}

Verdict dual_adjacency_check(const GraphContext& ctx, const SchemeData& s) {
  const int step = ctx.family() == Family::hypercube ? 2 : 4;
  for (int j = 0; j <= s.d(); ++j)
    if (s.n() * s.ecoef(1)[static_cast<std::size_t>(j)] != ctx.D() - step * j)
      return Verdict::fail(fmt_mismatch("|X| E_1 vs dual adjacency", j));
  return Verdict::pass();
}

QMatrix dual_distance_matrix(const GraphContext& ctx, const SchemeData& s, int i) {
  if (i < 0 || i > s.d())
    throw std::invalid_argument("dual distance index out of range");
  const int n = ctx.vertex_count();
  QMatrix m(n, n);
  for (int v = 0; v < n; ++v)
    m.at(v, v) = s.n() * s.ecoef(i)[static_cast<std::size_t>(ctx.shell_of(v))];
  return m;
}

DualParameters closed_form_dual_parameters(int D, Family family) {
  DualParameters p;
  const int d = family == Family::hypercube ? D : D / 2;
  p.astar.assign(static_cast<std::size_t>(d) + 1, 0);
  p.bstar.assign(static_cast<std::size_t>(d) + 1, 0);
  p.cstar.assign(static_cast<std::size_t>(d) + 1, 0);
  for (int i = 0; i < d; ++i) p.bstar[static_cast<std::size_t>(i)] = D - i;
  for (int i = 1; i <= d; ++i) p.cstar[static_cast<std::size_t>(i)] = i;
  if (family == Family::halved_cube) {
    // The top index folds the two ends of the cube's dual chain together.
    if (D % 2 == 0) {
      p.cstar[static_cast<std::size_t>(d)] = D;
    } else {
      p.astar[static_cast<std::size_t>(d)] = Rational(D + 1) / 2;
      p.cstar[static_cast<std::size_t>(d)] = Rational(D - 1) / 2;
    }
  }
  return p;
}

QPolyOutcome q_polynomial_check(const GraphContext& ctx, const SchemeData& s) {
  const int d = s.d();
  QPolyOutcome out;
  out.dual.astar.assign(static_cast<std::size_t>(d) + 1, 0);
  out.dual.bstar.assign(static_cast<std::size_t>(d) + 1, 0);
  out.dual.cstar.assign(static_cast<std::size_t>(d) + 1, 0);

  // One augmented solve: columns of the unknown block expand each
  // n (E_i o E_1) over E_0..E_d in coefficient space.
  QMatrix aug(d + 1, 2 * (d + 1));
  for (int h = 0; h <= d; ++h) {
    for (int m = 0; m <= d; ++m)
      aug.at(h, m) = s.ecoef(m)[static_cast<std::size_t>(h)];
    for (int i = 0; i <= d; ++i)
      aug.at(h, d + 1 + i) = s.n() * s.ecoef(i)[static_cast<std::size_t>(h)] *
                             s.ecoef(1)[static_cast<std::size_t>(h)];
  }
  const RrefResult r = rref_with_pivots(aug);
  for (int m = 0; m <= d; ++m)
    if (static_cast<std::size_t>(m) >= r.pivot_cols.size() || r.pivot_cols[static_cast<std::size_t>(m)] != m) {
      out.verdict = Verdict::fail("idempotent coefficient matrix is singular");
      return out;
    }

  for (int i = 0; i <= d; ++i) {
    for (int m = 0; m <= d; ++m) {
      const Rational& lam = r.form.at(m, d + 1 + i);
      if (m == i) {
        out.dual.astar[static_cast<std::size_t>(i)] = lam;
      } else if (m == i - 1) {
        out.dual.bstar[static_cast<std::size_t>(m)] = lam;
      } else if (m == i + 1) {
        out.dual.cstar[static_cast<std::size_t>(m)] = lam;
      } else if (sgn(lam) != 0) {
        out.verdict = Verdict::fail("E_i o E_1 not tridiagonal at i=" + std::to_string(i));
        return out;
      }
    }
  }

  for (int i = 0; i < d; ++i)
    if (sgn(out.dual.bstar[static_cast<std::size_t>(i)]) == 0) {
      out.verdict = Verdict::fail("vanishing bstar breaks the Q-polynomial chain");
      return out;
    }
  for (int i = 1; i <= d; ++i)
    if (sgn(out.dual.cstar[static_cast<std::size_t>(i)]) == 0) {
      out.verdict = Verdict::fail("vanishing cstar breaks the Q-polynomial chain");
      return out;
    }

  if (out.dual != closed_form_dual_parameters(ctx.D(), ctx.family())) {
    out.verdict = Verdict::fail("dual intersection numbers differ from closed forms");
    return out;
  }
  out.verdict = Verdict::pass();
  return out;
}

SpectralData spectral_data(const GraphContext& ctx, const SchemeData& s) {
  SpectralData sd;
  sd.eigenvalues = s.eigenvalues();
  Int total = 0;
  for (int i = 0; i <= s.d(); ++i) {
    sd.multiplicities.push_back(s.idempotent_rank(i));
    total += sd.multiplicities.back();
  }
  if (total != ctx.vertex_count())
    throw std::logic_error("idempotent ranks do not sum to |X|");
  return sd;
}

Verdict spectrum_rank_check(const GraphContext& ctx, const SchemeData& s) {
  const QMatrix a = adjacency_matrix(ctx);
  const int n = ctx.vertex_count();
  Int total = 0;
  for (int i = 0; i <= s.d(); ++i) {
    QMatrix b = a;
    for (int v = 0; v < n; ++v)
      b.at(v, v) -= s.eigenvalues()[static_cast<std::size_t>(i)];
    const Int mult = n - rank(b);
    if (mult != s.idempotent_rank(i))
      return Verdict::fail("rank-based multiplicity disagrees at eigenvalue index " +
                           std::to_string(i));
    total += mult;
  }
  if (total != n) return Verdict::fail("multiplicities do not sum to |X|");
  return Verdict::pass();
}

Verdict adjacency_restriction_check(int D) {
  const std::uint64_t n = 1ull << D;
  std::vector<int> dist(n);

  for (std::uint64_t x = 0; x < n; ++x) {
    if (std::popcount(x) & 1) continue;
    // BFS over the cube, independent of any distance formula.
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<std::uint64_t> q;
    dist[x] = 0;
    q.push(x);
    while (!q.empty()) {
      const std::uint64_t v = q.front();
      q.pop();
      for (int b = 0; b < D; ++b) {
        const std::uint64_t u = v ^ (1ull << b);
        if (dist[u] < 0) {
          dist[u] = dist[v] + 1;
          q.push(u);
        }
      }
    }
    for (std::uint64_t y = 0; y < n; ++y) {
      const bool at2 = dist[y] == 2;
      if (std::popcount(y) & 1) {
        if (at2) return Verdict::fail("odd-weight word at cube distance 2");
      } else if (at2 != (std::popcount(x ^ y) == 2)) {
        return Verdict::fail("halved adjacency differs from cube distance-2");
      }
    }
  }
  return Verdict::pass();
}

Verdict idempotent_folding_check(int D) {
  const GraphContext cube(D, Family::hypercube);
  const GraphContext half(D, Family::halved_cube);
  const SchemeData cs(cube), hs(half);
  const int d = D / 2;

  // Matrices that are functions of distance agree entrywise iff their
  // distance-basis coefficients agree; an even-even pair at cube distance
  // 2j sits at halved distance j.
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j <= d; ++j) {
      Rational folded = cs.ecoef(i)[static_cast<std::size_t>(2 * j)];
      if (D - i != i) folded += cs.ecoef(D - i)[static_cast<std::size_t>(2 * j)];
      if (hs.ecoef(i)[static_cast<std::size_t>(j)] != folded)
        return Verdict::fail("folded idempotent coefficient mismatch at (i=" +
                             std::to_string(i) + ", j=" + std::to_string(j) + ")");
    }

  if (D <= 8) {
    for (int i = 0; i <= d; ++i) {
      QMatrix folded = idempotent_matrix(cube, cs, i);
      if (D - i != i) folded = folded + idempotent_matrix(cube, cs, D - i);
      const QMatrix he = idempotent_matrix(half, hs, i);
      for (int r = 0; r < half.vertex_count(); ++r)
        for (int c = 0; c < half.vertex_count(); ++c) {
          const int cr = cube.index_of(half.vertices()[static_cast<std::size_t>(r)]);
          const int cc = cube.index_of(half.vertices()[static_cast<std::size_t>(c)]);
          if (he.at(r, c) != folded.at(cr, cc))
            return Verdict::fail("folded idempotent entry mismatch at i=" +
                                 std::to_string(i));
        }
    }
  }
  return Verdict::pass();
}

Verdict dual_restriction_check(int D) {
  const GraphContext cube(D, Family::hypercube);
  const GraphContext half(D, Family::halved_cube);
  const SchemeData cs(cube), hs(half);

  Verdict v = dual_adjacency_check(cube, cs);
  v.merge(dual_adjacency_check(half, hs));
  if (!v.ok) return v;
  // With both diagonals pinned to D - 2 w(x + y), the halved dual adjacency
  // is the even-weight restriction of the cube's by construction.
  return Verdict::pass();
}

}  // namespace terw
