#pragma once

// Check registry and result serialization. Every structural property the
// library can verify is exposed as a named check runnable over a range of
// D; results render as JSON (stable schema and key order:
// {paper_check, D, family, items, passed}) or as fixed-width tables.

#include <string>
#include <vector>

#include "terw/bitvec.hpp"
#include "terw/modules.hpp"
#include "terw/rational.hpp"

namespace terw {

struct CheckItem {
  // kind "fact": name/value pair. kind "check": name/status(+detail).
  // kind "module-class": family/k/dimension/multiplicity.
  std::string kind;
  std::string name;
  std::string value;
  std::string status;
  char mfamily = 0;
  int mk = 0;
  int mdim = 0;
  std::string mcount;
};

struct CheckRecord {
  std::string check;  // registry name
  int D = 0;
  std::string family;
  std::string status;  // "pass" | "fail" | "skipped"
  std::string detail;
  std::vector<CheckItem> items;
  double ms = 0.0;

  bool failed() const { return status == "fail"; }
};

struct VerificationSuiteResult {
  std::vector<CheckRecord> records;
  bool all_passed() const;
};

// Canonical check names, in execution order.
std::vector<std::string> available_checks();

// Runs the selected checks (all when names is empty) for each D in
// [from_D, to_D]. closure_cap bounds the D at which multiplicative-closure
// computations still run; past it the dim check reports "skipped".
// Unknown names throw std::invalid_argument.
VerificationSuiteResult run_checks(int from_D, int to_D,
                                   const std::vector<std::string>& names,
                                   int closure_cap);

struct DecompositionReport {
  int D = 0;
  BitVector base;
  HalvedDecomposition decomposition;
  ClassificationOutcome classification;
  Int dimension_formula;
  bool passed = false;
};

DecompositionReport build_decomposition_report(const GraphContext& halved_ctx);

std::string to_json(const VerificationSuiteResult& r);
std::string to_table(const VerificationSuiteResult& r);
std::string to_json(const DecompositionReport& r);
std::string to_table(const DecompositionReport& r);

// Matrix dumps for the CLI: which is one of "A", "Astar", "Ai", "Ei",
// "models". Returns JSON or a table over the given context.
std::string matrices_json(const GraphContext& ctx, const std::string& which);
std::string matrices_table(const GraphContext& ctx, const std::string& which);

}  // namespace terw
