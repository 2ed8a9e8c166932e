#include "terw/report.hpp"

#include <chrono>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "terw/scheme.hpp"
#include "terw/span.hpp"
#include "terw/vpoly.hpp"

namespace terw {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string join_rationals(const std::vector<Rational>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += rational_to_string(v[i]);
  }
  return s;
}

CheckItem fact(std::string name, std::string value) {
  CheckItem it;
  it.kind = "fact";
  it.name = std::move(name);
  it.value = std::move(value);
  return it;
}

CheckItem check_item(std::string name, const Verdict& v) {
  CheckItem it;
  it.kind = "check";
  it.name = std::move(name);
  it.status = v.ok ? "pass" : "fail";
  it.value = v.detail;
  return it;
}

CheckItem class_item(const ModuleClassCount& c) {
  CheckItem it;
  it.kind = "module-class";
  it.mfamily = c.family;
  it.mk = c.k;
  it.mdim = c.dim;
  it.mcount = c.count.get_str();
  return it;
}

// Everything a check might need for one D, computed at most once.
struct DCache {
  int D;
  explicit DCache(int d) : D(d) {}

  std::optional<GraphContext> cube_, half_;
  std::optional<SchemeData> cube_s_, half_s_;
  std::optional<CubeDecomposition> cube_dec_;
  std::optional<HalvedDecomposition> half_dec_;
  std::optional<ClassificationOutcome> cls_;

  const GraphContext& ctx(Family f) {
    auto& slot = f == Family::hypercube ? cube_ : half_;
    if (!slot) slot.emplace(D, f);
    return *slot;
  }
  const SchemeData& scheme(Family f) {
    auto& slot = f == Family::hypercube ? cube_s_ : half_s_;
    if (!slot) slot.emplace(ctx(f));
    return *slot;
  }
  const CubeDecomposition& cube_dec() {
    if (!cube_dec_) cube_dec_ = decompose_hypercube(ctx(Family::hypercube));
    return *cube_dec_;
  }
  const HalvedDecomposition& half_dec() {
    if (!half_dec_)
      half_dec_ = decompose_halved(ctx(Family::halved_cube), ctx(Family::hypercube),
                                   cube_dec());
    return *half_dec_;
  }
  const ClassificationOutcome& classification() {
    if (!cls_) cls_ = classify_modules(half_dec());
    return *cls_;
  }
};

template <class Body>
CheckRecord timed_record(const std::string& check, int D, Family f, Body&& body) {
  CheckRecord r;
  r.check = check;
  r.D = D;
  r.family = family_name(f);
  r.status = "pass";
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.status = "fail";
    r.detail = e.what();
  }
  const auto t1 = std::chrono::steady_clock::now();
  r.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return r;
}

void set_from_verdict(CheckRecord& r, const Verdict& v) {
  if (!v.ok) {
    r.status = "fail";
    r.detail = v.detail;
  }
}

struct CheckDef {
  std::string name;
  std::function<void(DCache&, int, std::vector<CheckRecord>&)> run;
};

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs = [] {
    std::vector<CheckDef> v;

    v.push_back({"params", [](DCache& c, int, std::vector<CheckRecord>& out) {
      for (Family f : {Family::hypercube, Family::halved_cube})
        out.push_back(timed_record("params", c.D, f, [&](CheckRecord& r) {
          const GraphContext& ctx = c.ctx(f);
          const SchemeData& s = c.scheme(f);
          Verdict v = counted_intersection_check(ctx);
          v.merge(s.coefficient_invariants());
          v.merge(dual_adjacency_check(ctx, s));
          const SpectralData sd = spectral_data(ctx, s);
          if (c.D <= 8) v.merge(spectrum_rank_check(ctx, s));
          r.items.push_back(fact("eigenvalues", join_rationals(sd.eigenvalues)));
          std::string mults;
          for (std::size_t i = 0; i < sd.multiplicities.size(); ++i) {
            if (i) mults += ", ";
            mults += sd.multiplicities[i].get_str();
          }
          r.items.push_back(fact("multiplicities", mults));
          set_from_verdict(r, v);
        }));
    }});

    v.push_back({"qpoly", [](DCache& c, int, std::vector<CheckRecord>& out) {
      for (Family f : {Family::hypercube, Family::halved_cube})
        out.push_back(timed_record("qpoly", c.D, f, [&](CheckRecord& r) {
          const QPolyOutcome q = q_polynomial_check(c.ctx(f), c.scheme(f));
          r.items.push_back(fact("astar", join_rationals(q.dual.astar)));
          r.items.push_back(fact("bstar", join_rationals(q.dual.bstar)));
          r.items.push_back(fact("cstar", join_rationals(q.dual.cstar)));
          set_from_verdict(r, q.verdict);
        }));
    }});

    v.push_back({"krawtchouk", [](DCache& c, int, std::vector<CheckRecord>& out) {
      out.push_back(timed_record("krawtchouk", c.D, Family::hypercube,
                                 [&](CheckRecord& r) {
        set_from_verdict(r, v_eval_identity_check(c.D));
      }));
    }});

    v.push_back({"vpoly-eval", [](DCache& c, int, std::vector<CheckRecord>& out) {
      out.push_back(timed_record("vpoly-eval", c.D, Family::hypercube,
                                 [&](CheckRecord& r) {
        set_from_verdict(r, v_top_values_check(c.D));
      }));
    }});

    v.push_back({"distance-poly", [](DCache& c, int, std::vector<CheckRecord>& out) {
      out.push_back(timed_record("distance-poly", c.D, Family::hypercube,
                                 [&](CheckRecord& r) {
        if (c.D > 10) {
          r.status = "skipped";
          r.detail = "dense polynomial identity capped at D=10";
          return;
        }
        set_from_verdict(r, distance_matrix_identity_check(c.ctx(Family::hypercube)));
      }));
    }});

    v.push_back({"adjacency-restriction", [](DCache& c, int, std::vector<CheckRecord>& out) {
      out.push_back(timed_record("adjacency-restriction", c.D, Family::halved_cube,
                                 [&](CheckRecord& r) {
        set_from_verdict(r, adjacency_restriction_check(c.D));
      }));
    }});

    v.push_back({"idempotent-folding", [](DCache& c, int, std::vector<CheckRecord>& out) {
      out.push_back(timed_record("idempotent-folding", c.D, Family::halved_cube,
                                 [&](CheckRecord& r) {
        set_from_verdict(r, idempotent_folding_check(c.D));
      }));
    }});

    v.push_back({"dual-restriction", [](DCache& c, int, std::vector<CheckRecord>& out) {
      out.push_back(timed_record("dual-restriction", c.D, Family::halved_cube,
                                 [&](CheckRecord& r) {
        set_from_verdict(r, dual_restriction_check(c.D));
      }));
    }});

    v.push_back({"basis-split", [](DCache& c, int, std::vector<CheckRecord>& out) {
      out.push_back(timed_record("basis-split", c.D, Family::halved_cube,
                                 [&](CheckRecord& r) {
        set_from_verdict(r, basis_split_check(c.ctx(Family::hypercube), c.cube_dec()));
      }));
    }});

    v.push_back({"cube-models", [](DCache& c, int, std::vector<CheckRecord>& out) {
      out.push_back(timed_record("cube-models", c.D, Family::hypercube,
                                 [&](CheckRecord& r) {
        const CubeDecomposition& dec = c.cube_dec();
        Verdict v = dec.models_ok;
        v.merge(dec.multiplicities_ok);
        v.merge(dec.completeness_ok);
        const std::vector<Rational> theta =
            eigenvalues_closed_form(c.D, Family::hypercube);
        Int total = 0, wedder = 0;
        for (int k = 0; k <= c.D / 2; ++k) {
          const TridiagonalModel m = model_L(c.D, k);
          v.merge(model_spectrum_check(m, theta));
          const Int mult = multiplicity_L(c.D, k);
          total += mult * m.dim();
          wedder += Int(m.dim()) * Int(m.dim());
          CheckItem it = class_item(ModuleClassCount{'L', k, m.dim(), mult, mult});
          r.items.push_back(std::move(it));
        }
        if (total != Int(1) << c.D)
          v.merge(Verdict::fail("multiplicities times dimensions miss 2^D"));
        if (wedder != algebra_dimension_formula(c.D, Family::hypercube))
          v.merge(Verdict::fail("sum of squared dimensions misses the dimension formula"));
        r.items.push_back(fact("wedderburn-dimension", wedder.get_str()));
        set_from_verdict(r, v);
      }));
    }});

    v.push_back({"halved-models", [](DCache& c, int, std::vector<CheckRecord>& out) {
      out.push_back(timed_record("halved-models", c.D, Family::halved_cube,
                                 [&](CheckRecord& r) {
        const HalvedDecomposition& dec = c.half_dec();
        Verdict v = dec.models_ok;
        const std::vector<Rational> theta =
            eigenvalues_closed_form(c.D, Family::halved_cube);
        for (const ModuleClassCount& cl : dec.classes) {
          const TridiagonalModel m =
              cl.family == 'M' ? model_M(c.D, cl.k) : model_N(c.D, cl.k);
          v.merge(model_spectrum_check(m, theta));
        }
        set_from_verdict(r, v);
      }));
    }});

    v.push_back({"halved-decomposition", [](DCache& c, int, std::vector<CheckRecord>& out) {
      out.push_back(timed_record("halved-decomposition", c.D, Family::halved_cube,
                                 [&](CheckRecord& r) {
        const HalvedDecomposition& dec = c.half_dec();
        Verdict v = dec.multiplicities_ok;
        v.merge(dec.completeness_ok);
        Int total = 0;
        for (const ModuleClassCount& cl : dec.classes) {
          r.items.push_back(class_item(cl));
          total += cl.count * cl.dim;
        }
        r.items.push_back(fact("total-dimension", total.get_str()));
        set_from_verdict(r, v);
      }));
    }});

    v.push_back({"classification", [](DCache& c, int, std::vector<CheckRecord>& out) {
      out.push_back(timed_record("classification", c.D, Family::halved_cube,
                                 [&](CheckRecord& r) {
        const ClassificationOutcome& cls = c.classification();
        Verdict v = cls.verdict;
        const Int formula = algebra_dimension_formula(c.D, Family::halved_cube);
        if (cls.wedderburn_dimension != formula)
          v.merge(Verdict::fail("Wedderburn dimension differs from the formula"));
        r.items.push_back(fact("wedderburn-dimension", cls.wedderburn_dimension.get_str()));
        r.items.push_back(fact("dimension-formula", formula.get_str()));
        set_from_verdict(r, v);
      }));
    }});

    v.push_back({"dim", [](DCache& c, int cap, std::vector<CheckRecord>& out) {
      for (Family f : {Family::hypercube, Family::halved_cube})
        out.push_back(timed_record("dim", c.D, f, [&](CheckRecord& r) {
          const Int formula = algebra_dimension_formula(c.D, f);
          r.items.push_back(fact("formula", formula.get_str()));
          if (c.D > cap) {
            r.status = "skipped";
            r.detail = "closure capped at D=" + std::to_string(cap);
            return;
          }
          const GraphContext& ctx = c.ctx(f);
          const ClosureResult cl =
              span_closure({adjacency_matrix(ctx), dual_adjacency(ctx)});
          r.items.push_back(fact("computed", std::to_string(cl.span.dimension())));
          r.items.push_back(fact("products", std::to_string(cl.products_formed)));
          r.detail = "computed " + std::to_string(cl.span.dimension()) + ", formula " +
                     formula.get_str();
          if (Int(cl.span.dimension()) != formula) {
            r.status = "fail";
            r.detail = "closure dimension " + std::to_string(cl.span.dimension()) +
                       " differs from formula " + formula.get_str();
          }
        }));
    }});

    return v;
  }();
  return defs;
}

ordered_json record_to_json(const CheckRecord& r) {
  ordered_json j;
  j["paper_check"] = r.check;
  j["D"] = r.D;
  j["family"] = r.family;
  ordered_json items = ordered_json::array();
  if (r.status == "skipped") items.push_back({{"kind", "fact"}, {"name", "status"},
                                              {"value", "skipped: " + r.detail}});
  if (r.status == "fail")
    items.push_back({{"kind", "fact"}, {"name", "failure"}, {"value", r.detail}});
  for (const CheckItem& it : r.items) {
    if (it.kind == "fact") {
      items.push_back({{"kind", "fact"}, {"name", it.name}, {"value", it.value}});
    } else if (it.kind == "check") {
      ordered_json cj{{"kind", "check"}, {"name", it.name}, {"status", it.status}};
      if (!it.value.empty()) cj["detail"] = it.value;
      items.push_back(std::move(cj));
    } else {
      items.push_back({{"kind", "module-class"},
                       {"family", std::string(1, it.mfamily)},
                       {"k", it.mk},
                       {"dimension", it.mdim},
                       {"multiplicity", it.mcount}});
    }
  }
  items.push_back({{"kind", "fact"}, {"name", "elapsed-ms"},
                   {"value", std::to_string(static_cast<long>(r.ms + 0.5))}});
  j["items"] = std::move(items);
  j["passed"] = !r.failed();
  return j;
}

}  // namespace

bool VerificationSuiteResult::all_passed() const {
  for (const CheckRecord& r : records)
    if (r.failed()) return false;
  return true;
}

std::vector<std::string> available_checks() {
  std::vector<std::string> names;
  for (const CheckDef& d : registry()) names.push_back(d.name);
  return names;
}

VerificationSuiteResult run_checks(int from_D, int to_D,
                                   const std::vector<std::string>& names,
                                   int closure_cap) {
  if (from_D < 3 || to_D < from_D)
    throw std::invalid_argument("need 3 <= from <= to");
  std::vector<const CheckDef*> selected;
  if (names.empty()) {
    for (const CheckDef& d : registry()) selected.push_back(&d);
  } else {
    for (const std::string& n : names) {
      const CheckDef* found = nullptr;
      for (const CheckDef& d : registry())
        if (d.name == n) found = &d;
      if (!found) throw std::invalid_argument("unknown check: " + n);
      selected.push_back(found);
    }
  }
  VerificationSuiteResult res;
  for (int D = from_D; D <= to_D; ++D) {
    DCache cache(D);
    for (const CheckDef* d : selected) d->run(cache, closure_cap, res.records);
  }
  return res;
}

DecompositionReport build_decomposition_report(const GraphContext& halved_ctx) {
  DecompositionReport rep;
  rep.D = halved_ctx.D();
  rep.base = halved_ctx.base();
  rep.decomposition = decompose_halved(halved_ctx);
  rep.classification = classify_modules(rep.decomposition);
  rep.dimension_formula = algebra_dimension_formula(rep.D, Family::halved_cube);
  rep.passed = rep.decomposition.models_ok.ok &&
               rep.decomposition.multiplicities_ok.ok &&
               rep.decomposition.completeness_ok.ok &&
               rep.classification.verdict.ok &&
               rep.classification.wedderburn_dimension == rep.dimension_formula;
  return rep;
}

std::string to_json(const VerificationSuiteResult& r) {
  ordered_json arr = ordered_json::array();
  for (const CheckRecord& rec : r.records) arr.push_back(record_to_json(rec));
  return arr.dump(2) + "\n";
}

std::string to_table(const VerificationSuiteResult& r) {
  std::ostringstream os;
  for (const CheckRecord& rec : r.records) {
    os << rec.check;
    for (std::size_t i = rec.check.size(); i < 24; ++i) os << ' ';
    os << " D=" << rec.D << "  " << rec.family;
    for (std::size_t i = rec.family.size(); i < 12; ++i) os << ' ';
    os << rec.status;
    if (!rec.detail.empty()) os << "  (" << rec.detail << ")";
    os << "  [" << static_cast<long>(rec.ms + 0.5) << " ms]\n";
  }
  os << (r.all_passed() ? "all checks passed\n" : "FAILURES present\n");
  return os.str();
}

std::string to_json(const DecompositionReport& r) {
  ordered_json j;
  j["paper_check"] = "halved-decomposition";
  j["D"] = r.D;
  j["family"] = "halved-cube";
  ordered_json items = ordered_json::array();
  items.push_back({{"kind", "fact"}, {"name", "base-vertex"},
                   {"value", format_bits(r.base, r.D)}});
  Int total = 0;
  for (const ModuleClassCount& c : r.decomposition.classes) {
    items.push_back({{"kind", "module-class"},
                     {"family", std::string(1, c.family)},
                     {"k", c.k},
                     {"dimension", c.dim},
                     {"multiplicity", c.count.get_str()}});
    total += c.count * c.dim;
  }
  items.push_back({{"kind", "fact"}, {"name", "total-dimension"}, {"value", total.get_str()}});
  items.push_back({{"kind", "fact"}, {"name", "standard-module-dimension"},
                   {"value", Int(Int(1) << (r.D - 1)).get_str()}});
  items.push_back({{"kind", "fact"}, {"name", "wedderburn-dimension"},
                   {"value", r.classification.wedderburn_dimension.get_str()}});
  items.push_back({{"kind", "fact"}, {"name", "algebra-dimension-formula"},
                   {"value", r.dimension_formula.get_str()}});
  items.push_back({{"kind", "check"}, {"name", "models"},
                   {"status", r.decomposition.models_ok.ok ? "pass" : "fail"}});
  items.push_back({{"kind", "check"}, {"name", "multiplicities"},
                   {"status", r.decomposition.multiplicities_ok.ok ? "pass" : "fail"}});
  items.push_back({{"kind", "check"}, {"name", "completeness"},
                   {"status", r.decomposition.completeness_ok.ok ? "pass" : "fail"}});
  items.push_back({{"kind", "check"}, {"name", "classification"},
                   {"status", r.classification.verdict.ok ? "pass" : "fail"}});
  j["items"] = std::move(items);
  j["passed"] = r.passed;
  return j.dump(2) + "\n";
}

std::string to_table(const DecompositionReport& r) {
  std::ostringstream os;
  os << "halved-cube D=" << r.D << " base=" << format_bits(r.base, r.D) << "\n";
  os << "class  dim  multiplicity\n";
  Int total = 0;
  for (const ModuleClassCount& c : r.decomposition.classes) {
    os << c.family << "_" << c.k;
    for (int i = 2 + (c.k > 9 ? 2 : 1); i < 7; ++i) os << ' ';
    os << c.dim << "    " << c.count.get_str() << "\n";
    total += c.count * c.dim;
  }
  os << "total dimension " << total.get_str() << " of "
     << Int(Int(1) << (r.D - 1)).get_str() << "\n";
  os << "algebra dimension: formula " << r.dimension_formula.get_str() << ", wedderburn "
     << r.classification.wedderburn_dimension.get_str() << "\n";
  os << "checks: models " << (r.decomposition.models_ok.ok ? "pass" : "fail")
     << "; multiplicities " << (r.decomposition.multiplicities_ok.ok ? "pass" : "fail")
     << "; completeness " << (r.decomposition.completeness_ok.ok ? "pass" : "fail")
     << "; classification " << (r.classification.verdict.ok ? "pass" : "fail") << "\n";
  os << (r.passed ? "passed\n" : "FAILED\n");
  return os.str();
}

namespace {

ordered_json matrix_item(const std::string& name, const QMatrix& m) {
  ordered_json data = ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(rational_to_string(m.at(i, j)));
    data.push_back(std::move(row));
  }
  return {{"kind", "matrix"}, {"name", name}, {"rows", m.rows()}, {"cols", m.cols()},
          {"data", std::move(data)}};
}

ordered_json rational_list(const std::vector<Rational>& v) {
  ordered_json a = ordered_json::array();
  for (const Rational& r : v) a.push_back(rational_to_string(r));
  return a;
}

ordered_json model_item(const TridiagonalModel& m, const Int& mult) {
  return {{"kind", "model"},
          {"name", std::string(1, m.family) + "_" + std::to_string(m.k)},
          {"family", std::string(1, m.family)},
          {"k", m.k},
          {"dimension", m.dim()},
          {"multiplicity", mult.get_str()},
          {"alpha", rational_list(m.alpha)},
          {"beta", rational_list(m.beta)},
          {"gamma", rational_list(m.gamma)},
          {"theta_star", rational_list(m.theta_star)}};
}

std::vector<std::pair<TridiagonalModel, Int>> family_models(const GraphContext& ctx) {
  std::vector<std::pair<TridiagonalModel, Int>> out;
  const int D = ctx.D();
  if (ctx.family() == Family::hypercube) {
    for (int k = 0; k <= D / 2; ++k)
      out.emplace_back(model_L(D, k), multiplicity_L(D, k));
  } else {
    for (int k = 0; k <= D / 2; k += 2)
      out.emplace_back(model_M(D, k), multiplicity_L(D, k));
    for (int k = 2; k <= (D + 1) / 2; k += 2)
      out.emplace_back(model_N(D, k), multiplicity_N(D, k));
  }
  return out;
}

ordered_json matrices_items(const GraphContext& ctx, const std::string& which) {
  ordered_json items = ordered_json::array();
  if (which == "A") {
    items.push_back(matrix_item("A", adjacency_matrix(ctx)));
  } else if (which == "Astar") {
    items.push_back(matrix_item("Astar", dual_adjacency(ctx)));
  } else if (which == "Ai") {
    for (int i = 0; i <= ctx.diameter(); ++i)
      items.push_back(matrix_item("A_" + std::to_string(i), distance_matrix(ctx, i)));
  } else if (which == "Ei") {
    const SchemeData s(ctx);
    for (int i = 0; i <= s.d(); ++i)
      items.push_back(matrix_item("E_" + std::to_string(i), idempotent_matrix(ctx, s, i)));
  } else if (which == "models") {
    for (const auto& [m, mult] : family_models(ctx))
      items.push_back(model_item(m, mult));
  } else {
    throw std::invalid_argument("unknown matrix selector: " + which);
  }
  return items;
}

}  // namespace

std::string matrices_json(const GraphContext& ctx, const std::string& which) {
  ordered_json j;
  j["paper_check"] = "matrices";
  j["D"] = ctx.D();
  j["family"] = family_name(ctx.family());
  j["items"] = matrices_items(ctx, which);
  j["passed"] = true;
  return j.dump(2) + "\n";
}

std::string matrices_table(const GraphContext& ctx, const std::string& which) {
  std::ostringstream os;
  os << family_name(ctx.family()) << " D=" << ctx.D() << " " << which << "\n";
  if (which == "models") {
    for (const auto& [m, mult] : family_models(ctx)) {
      os << m.family << "_" << m.k << ": dim " << m.dim() << ", multiplicity "
         << mult.get_str() << "\n";
      os << "  alpha      " << join_rationals(m.alpha) << "\n";
      os << "  beta       " << join_rationals(m.beta) << "\n";
      os << "  gamma      " << join_rationals(m.gamma) << "\n";
      os << "  theta_star " << join_rationals(m.theta_star) << "\n";
    }
    return os.str();
  }
  std::vector<std::pair<std::string, QMatrix>> ms;
  if (which == "A") {
    ms.emplace_back("A", adjacency_matrix(ctx));
  } else if (which == "Astar") {
    ms.emplace_back("Astar", dual_adjacency(ctx));
  } else if (which == "Ai") {
    for (int i = 0; i <= ctx.diameter(); ++i)
      ms.emplace_back("A_" + std::to_string(i), distance_matrix(ctx, i));
  } else if (which == "Ei") {
    const SchemeData s(ctx);
    for (int i = 0; i <= s.d(); ++i)
      ms.emplace_back("E_" + std::to_string(i), idempotent_matrix(ctx, s, i));
  } else {
    throw std::invalid_argument("unknown matrix selector: " + which);
  }
  for (const auto& [name, m] : ms) {
    os << name << " (" << m.rows() << "x" << m.cols() << ")\n";
    for (int i = 0; i < m.rows(); ++i) {
      for (int j = 0; j < m.cols(); ++j)
        os << (j ? " " : "") << rational_to_string(m.at(i, j));
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace terw
