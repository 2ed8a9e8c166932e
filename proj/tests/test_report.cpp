#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "terw/bitvec.hpp"
#include "terw/report.hpp"

using namespace terw;
using ordered_json = nlohmann::ordered_json;

TEST_CASE("check registry") {
  const std::vector<std::string> names = available_checks();
  CHECK(names.size() == 14);
  for (const char* expected :
       {"params", "qpoly", "krawtchouk", "vpoly-eval", "distance-poly",
        "adjacency-restriction", "idempotent-folding", "dual-restriction",
        "basis-split", "cube-models", "halved-models", "halved-decomposition",
        "classification", "dim"})
    CHECK(std::find(names.begin(), names.end(), expected) != names.end());
}

TEST_CASE("run_checks validates its input") {
  CHECK_THROWS_AS(run_checks(2, 3, {}, 8), std::invalid_argument);
  CHECK_THROWS_AS(run_checks(4, 3, {}, 8), std::invalid_argument);
  CHECK_THROWS_AS(run_checks(3, 3, {"no-such-check"}, 8), std::invalid_argument);
}

TEST_CASE("selected checks run per family and honour the closure cap") {
  const VerificationSuiteResult ran = run_checks(3, 3, {"dim"}, 8);
  REQUIRE(ran.records.size() == 2);
  CHECK(ran.records[0].family == "hypercube");
  CHECK(ran.records[1].family == "halved-cube");
  for (const CheckRecord& r : ran.records) {
    CHECK(r.status == "pass");
    CHECK(r.D == 3);
    CHECK(r.check == "dim");
  }
  CHECK(ran.all_passed());

  const VerificationSuiteResult capped = run_checks(3, 3, {"dim"}, 0);
  for (const CheckRecord& r : capped.records) CHECK(r.status == "skipped");
  CHECK(capped.all_passed());  // skipped is not failed
}

TEST_CASE("verification JSON round-trips byte-identically") {
  const VerificationSuiteResult res =
      run_checks(3, 4, {"params", "dim", "halved-decomposition"}, 8);
  const std::string text = to_json(res);
  const ordered_json parsed = ordered_json::parse(text);
  CHECK(parsed.dump(2) + "\n" == text);

  // Stable schema and key order on every record.
  for (const auto& rec : parsed) {
    std::vector<std::string> keys;
    for (auto it = rec.begin(); it != rec.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"paper_check", "D", "family", "items",
                                           "passed"});
    CHECK(rec["passed"].get<bool>());
  }
}

TEST_CASE("decomposition report for D=6") {
  const GraphContext ctx(6, Family::halved_cube);
  const DecompositionReport rep = build_decomposition_report(ctx);
  CHECK(rep.passed);
  CHECK(rep.dimension_formula == 24);

  const std::string table = to_table(rep);
  CHECK(table.find("total dimension 32 of 32") != std::string::npos);
  CHECK(table.find("M_2") != std::string::npos);

  const std::string text = to_json(rep);
  const ordered_json parsed = ordered_json::parse(text);
  CHECK(parsed.dump(2) + "\n" == text);
  CHECK(parsed["paper_check"] == "halved-decomposition");
  CHECK(parsed["D"] == 6);
  CHECK(parsed["passed"].get<bool>());

  // The JSON carries no timing facts, so a rerun is byte-identical.
  CHECK(to_json(build_decomposition_report(ctx)) == text);

  int classes = 0;
  for (const auto& item : parsed["items"])
    if (item["kind"] == "module-class") {
      ++classes;
      CHECK(item["multiplicity"].is_string());
    }
  CHECK(classes == 3);
}

TEST_CASE("matrix dumps") {
  const GraphContext ctx(3, Family::halved_cube);
  const std::string text = matrices_json(ctx, "A");
  const ordered_json parsed = ordered_json::parse(text);
  CHECK(parsed.dump(2) + "\n" == text);
  REQUIRE(parsed["items"].size() == 1);
  CHECK(parsed["items"][0]["rows"] == 4);
  CHECK(parsed["items"][0]["data"][0][1] == "1");
  CHECK(parsed["items"][0]["data"][0][0] == "0");

  const std::string models = matrices_table(ctx, "models");
  CHECK(models.find("M_0") != std::string::npos);
  CHECK(models.find("N_2") != std::string::npos);

  const std::string ei = matrices_json(ctx, "Ei");
  const ordered_json eis = ordered_json::parse(ei);
  CHECK(eis["items"].size() == 2);  // K4 has diameter 1: E_0 and E_1
  CHECK_THROWS_AS(matrices_json(ctx, "B"), std::invalid_argument);
  CHECK_THROWS_AS(matrices_table(ctx, "B"), std::invalid_argument);
}

TEST_CASE("rational wire format") {
  CHECK(rational_to_string(Rational(-1, 2)) == "-1/2");
  CHECK(rational_to_string(Rational(4)) == "4");
  CHECK(rational_from_string("7/2") == Rational(7, 2));
  CHECK(rational_from_string("-4/8") == Rational(-1, 2));
  CHECK_THROWS_AS(rational_from_string("x"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
}

TEST_CASE("failing checks surface in the suite result") {
  // A sanity guard on the plumbing: every record from a healthy range passes.
  const VerificationSuiteResult res = run_checks(3, 3, {}, 3);
  CHECK(res.all_passed());
  bool saw_products = false;
  for (const CheckRecord& r : res.records)
    for (const CheckItem& it : r.items)
      if (it.name == "products") saw_products = true;
  CHECK(saw_products);
}
