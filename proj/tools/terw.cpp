// Command-line front end: decompose standard modules, run verification
// checks over a range of D, or dump the matrices and tridiagonal models.
// Exit codes: 0 everything passed, 1 a check failed, 2 usage error.

#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "terw/bitvec.hpp"
#include "terw/report.hpp"

namespace {

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
  f << text;
}

terw::Family parse_family(const std::string& s) {
  if (s == "halved") return terw::Family::halved_cube;
  if (s == "cube") return terw::Family::hypercube;
  throw std::invalid_argument("unknown family: " + s + " (expected halved or cube)");
}

void require_d_range(int D) {
  if (D < 3 || D > 12)
    throw std::invalid_argument("D must lie in [3, 12], got " + std::to_string(D));
}

int run_decompose(int D, const std::string& base_bits, const std::string& format,
                  const std::string& out_path) {
  require_d_range(D);
  terw::BitVector base{0};
  if (!base_bits.empty()) base = terw::parse_bits(base_bits, D);
  const terw::GraphContext ctx(D, terw::Family::halved_cube, base);
  const terw::DecompositionReport rep = terw::build_decomposition_report(ctx);
  emit(format == "json" ? terw::to_json(rep) : terw::to_table(rep), out_path);
  return rep.passed ? 0 : 1;
}

int run_verify(int from, int to, const std::vector<std::string>& checks,
               int closure_cap, const std::string& format,
               const std::string& out_path) {
  require_d_range(from);
  require_d_range(to);
  if (to < from) throw std::invalid_argument("--to must be at least --from");
  const terw::VerificationSuiteResult res =
      terw::run_checks(from, to, checks, closure_cap);
  emit(format == "json" ? terw::to_json(res) : terw::to_table(res), out_path);
  return res.all_passed() ? 0 : 1;
}

int run_matrices(int D, const std::string& which, const std::string& family,
                 const std::string& base_bits, const std::string& format,
                 const std::string& out_path) {
  require_d_range(D);
  const terw::Family fam = parse_family(family);
  terw::BitVector base{0};
  if (!base_bits.empty()) base = terw::parse_bits(base_bits, D);
  const terw::GraphContext ctx(D, fam, base);
  emit(format == "json" ? terw::matrices_json(ctx, which)
                        : terw::matrices_table(ctx, which),
       out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact subconstituent-algebra computations for the hypercube "
               "H(D,2) and the halved cube 1/2 H(D,2)"};
  app.require_subcommand(1);

  std::string format = "table", out_path, base_bits, which = "A",
              family = "halved";
  int D = 0, from = 0, to = -1, closure_cap = 8;
  std::vector<std::string> checks;

  CLI::App* dec = app.add_subcommand(
      "decompose", "Decompose the halved cube's standard module into "
                   "irreducible modules and verify the classification");
  dec->add_option("--d", D, "Dimension D, 3..12")->required();
  dec->add_option("--base", base_bits,
                  "Base vertex as a bit string of length D (even weight); "
                  "default all zeros");
  dec->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "table"}));
  dec->add_option("--out", out_path, "Write output to a file instead of stdout");

  CLI::App* ver = app.add_subcommand(
      "verify", "Run structural checks for each D in a range");
  ver->add_option("--from", from, "Smallest D, 3..12")->required();
  ver->add_option("--to", to, "Largest D; defaults to --from");
  ver->add_option("--checks", checks,
                  "Comma-separated check names (default: all)")
      ->delimiter(',');
  ver->add_option("--closure-cap", closure_cap,
                  "Largest D for which multiplicative-closure checks run "
                  "instead of being skipped");
  ver->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "table"}));
  ver->add_option("--out", out_path, "Write output to a file instead of stdout");
  ver->add_flag_callback("--list-checks", [] {
    for (const std::string& n : terw::available_checks()) std::cout << n << "\n";
    std::exit(0);
  }, "List available check names and exit");

  CLI::App* mat = app.add_subcommand(
      "matrices", "Print adjacency, dual adjacency, distance matrices, "
                  "primitive idempotents, or the tridiagonal models");
  mat->add_option("--d", D, "Dimension D, 3..12")->required();
  mat->add_option("--which", which, "What to print")
      ->check(CLI::IsMember({"A", "Astar", "Ai", "Ei", "models"}));
  mat->add_option("--family", family, "Graph family")
      ->check(CLI::IsMember({"halved", "cube"}));
  mat->add_option("--base", base_bits,
                  "Base vertex bit string (affects Astar); default all zeros");
  mat->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "table"}));
  mat->add_option("--out", out_path, "Write output to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit cleanly, errors are usage
  }

  try {
    if (dec->parsed()) return run_decompose(D, base_bits, format, out_path);
    if (ver->parsed())
      return run_verify(from, to < 0 ? from : to, checks, closure_cap, format,
                        out_path);
    return run_matrices(D, which, family, base_bits, format, out_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
