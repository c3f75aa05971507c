// resgrass: batch driver for the split-space operator library.
//
// Subcommands:
//   check-identities  run the algebraic identity suites over random trials
//   diagonalize       Riccati-based block diagonalization of a JSON operator
//   demo              unbounded | cartan | cone | grassmann-orbit

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "resgrass/diagonalize.hpp"
#include "resgrass/grassmann.hpp"
#include "resgrass/json_io.hpp"
#include "resgrass/norms.hpp"
#include "resgrass/pathology.hpp"
#include "resgrass/random_inputs.hpp"
#include "resgrass/suites.hpp"

namespace {

using namespace resgrass;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitIoError = 2;

struct RunConfig {
  std::uint64_t seed = 42;
  Tolerances tol;
  std::string output;  // empty = stdout
  std::string format = "table";
  bool json() const { return format == "json"; }
};

std::uint64_t default_seed_from_env() {
  if (const char* env = std::getenv("RESGRASS_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0') return v;
  }
  return 42;
}

void add_common_flags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--seed", cfg.seed, "RNG seed (env RESGRASS_SEED overrides the default)");
  cmd->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "table"}));
  cmd->add_option("--output", cfg.output, "Write output to PATH instead of stdout");
  cmd->add_option("--tol-herm", cfg.tol.herm, "Skew-symmetry defect tolerance");
  cmd->add_option("--tol-unit", cfg.tol.unit, "Unitarity tolerance");
  cmd->add_option("--tol-exp", cfg.tol.exp, "Exponential/polar tolerance");
  cmd->add_option("--tol-pos", cfg.tol.pos, "Positivity tolerance");
  cmd->add_option("--tol-sing", cfg.tol.sing, "Singularity threshold");
  cmd->add_option("--tol-rank", cfg.tol.rank, "Relative SVD rank cutoff");
}

// "a+b[,c+d...]" -> list of splits
std::vector<SplitSpace> parse_sizes(const std::string& text) {
  std::vector<SplitSpace> sizes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto plus = item.find('+');
    if (plus == std::string::npos) throw BadParameters("sizes must look like 4+4,8+8");
    const int np = std::stoi(item.substr(0, plus));
    const int nm = std::stoi(item.substr(plus + 1));
    sizes.emplace_back(np, nm);
  }
  if (sizes.empty()) throw BadParameters("sizes list is empty");
  return sizes;
}

// "a..b" or "n"
std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int n = std::stoi(text);
    return {n, n};
  }
  return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

class Output {
 public:
  explicit Output(const RunConfig& cfg) {
    if (!cfg.output.empty()) {
      file_.open(cfg.output);
      if (!file_) throw Error("cannot open output file " + cfg.output);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

int cmd_check_identities(const RunConfig& cfg, const std::string& sizes_text, int trials) {
  const std::vector<SplitSpace> sizes = parse_sizes(sizes_text);
  const std::vector<SuiteResult> results = run_identity_suites(sizes, trials, cfg.seed);

  Output out(cfg);
  std::ostream& os = out.stream();
  bool all_pass = true;
  if (cfg.json()) {
    os << "{\"seed\":" << cfg.seed << ",\"trials\":" << trials << ",\"suites\":[";
    for (std::size_t i = 0; i < results.size(); ++i) {
      const SuiteResult& r = results[i];
      if (i) os << ',';
      os << "{\"name\":\"" << r.name << "\",\"size\":\"" << r.space.n_plus << '+'
         << r.space.n_minus << "\",\"max_error\":" << format_double(r.max_error)
         << ",\"tolerance\":" << format_double(r.tolerance)
         << ",\"pass\":" << (r.pass() ? "true" : "false") << '}';
      all_pass = all_pass && r.pass();
    }
    os << "],\"pass\":" << (all_pass ? "true" : "false") << "}\n";
  } else {
    os << "identity suites (seed " << cfg.seed << ", " << trials << " trials per size)\n";
    for (const SuiteResult& r : results) {
      all_pass = all_pass && r.pass();
      char line[160];
      std::snprintf(line, sizeof(line), "  %-20s %2d+%-2d  max_error %.3e  tol %.0e  %s\n",
                    r.name.c_str(), r.space.n_plus, r.space.n_minus, r.max_error, r.tolerance,
                    r.pass() ? "pass" : "FAIL");
      os << line;
    }
  }
  return all_pass ? kExitOk : kExitCheckFailed;
}

int cmd_diagonalize(const RunConfig& cfg, const std::string& input, bool force, double tol,
                    int max_iter) {
  BlockOperator op = read_block_operator_file(input);
  RestrictedElement rho(std::move(op), cfg.tol);

  Output out(cfg);
  std::ostream& os = out.stream();
  try {
    if (force) {
      // report the raw iteration outcome without the polar step
      const RiccatiReport report = riccati_solve(rho, tol, max_iter, true);
      write_riccati_report(os, report);
      os << '\n';
      return kExitOk;
    }
    const BlockDiagonalization bd = block_diagonalize(rho, tol, max_iter, cfg.tol);
    os << "{\"report\":";
    write_riccati_report(os, bd.report);
    os << ",\"u\":";
    write_block_operator(os, bd.u.op());
    os << ",\"diag\":";
    write_block_operator(os, bd.diag.op());
    os << "}\n";
    return kExitOk;
  } catch (const GapViolation& e) {
    std::cerr << "GapViolation: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const NoConvergence& e) {
    std::cerr << "NoConvergence: " << e.what() << " (residual "
              << format_double(e.report.residual) << ")\n";
    return kExitCheckFailed;
  }
}

int demo_unbounded(const RunConfig& cfg, const std::string& range_text) {
  const auto [lo, hi] = parse_range(range_text);
  if (lo < 1 || hi < lo) throw BadParameters("unbounded: bad n range");
  const SplitSpace space(hi, hi);

  Output out(cfg);
  std::ostream& os = out.stream();
  if (cfg.json()) os << "{\"reports\":[";
  bool first = true;
  for (int n = lo; n <= hi; ++n) {
    const UnboundedFamily fam = build_unbounded_family(n, space);
    if (cfg.json()) {
      if (!first) os << ',';
      write_unbounded_report(os, fam.report);
      first = false;
    } else {
      char line[128];
      std::snprintf(line, sizeof(line), "  n %3d   ||exp rho_n||_res %10.6f   sqrt(n) %9.6f\n",
                    n, fam.report.res_norm, fam.report.lower_bound);
      if (first) os << "unbounded unitary family at size " << hi << '+' << hi << "\n";
      first = false;
      os << line;
    }
  }
  if (cfg.json()) os << "]}\n";
  return kExitOk;
}

int demo_cartan(const RunConfig& cfg, int n_pairs) {
  Output out(cfg);
  std::ostream& os = out.stream();
  std::vector<int> ns;
  for (int n = 2; n <= n_pairs; n *= 2) ns.push_back(n);
  if (ns.empty() || ns.back() != n_pairs) ns.push_back(n_pairs);

  if (cfg.json()) os << "{\"reports\":[";
  bool first = true;
  for (int n : ns) {
    const CartanReport r = cartan_witness(n, default_cartan_coeff);
    if (cfg.json()) {
      if (!first) os << ',';
      write_cartan_report(os, r);
    } else {
      if (first)
        os << "Cartan conjugation obstruction, coeff 1/k\n"
              "  any restricted conjugator needs off-diagonal mass >= ||J||_1 / (2 ||J||_2)\n";
      char line[160];
      std::snprintf(line, sizeof(line),
                    "  N %3d   ||J||_1 %9.5f   ||J||_2 %8.5f   lower bound %8.5f   "
                    "offblock %8.5f   %s\n",
                    r.N, r.j_s1, r.j_s2, r.j_s1 / (2.0 * r.j_s2), r.offblock_s2,
                    r.bound_ok ? "ok" : "VIOLATED");
      os << line;
    }
    first = false;
  }
  if (cfg.json()) os << "]}\n";
  return kExitOk;
}

int demo_cone(const RunConfig& cfg, int samples, const std::string& size_text) {
  const std::vector<SplitSpace> sizes = parse_sizes(size_text);
  const ConeSpanResult r = cone_span_demo(samples, sizes.front(), cfg.seed);

  Output out(cfg);
  std::ostream& os = out.stream();
  if (cfg.json()) {
    os << "{\"max_ratio\":" << format_double(r.max_ratio) << ",\"witness\":";
    write_block_operator(os, r.witness.op());
    os << "}\n";
  } else {
    os << "positive-cone norm comparison over " << samples << " samples\n";
    char line[160];
    std::snprintf(line, sizeof(line),
                  "  max predual/trace ratio %.12f  (bound 1+sqrt2 = %.12f)\n", r.max_ratio,
                  1.0 + std::sqrt(2.0));
    os << line;
    std::snprintf(line, sizeof(line), "  balanced rank-one witness ratio %.12f\n",
                  r.witness_ratio);
    os << line;
    os << "  only the trace-class part of the predual is spanned by the cone;\n"
          "  the off-diagonal norm excess stays within the constant 1+sqrt2.\n";
  }
  return kExitOk;
}

int demo_grassmann_orbit(const RunConfig& cfg, double gamma, const std::string& size_text,
                         int trials) {
  const SplitSpace space = parse_sizes(size_text).front();
  if (gamma == 0.0) throw BadParameters("grassmann-orbit: gamma must be nonzero");

  double max_err = 0.0;
  for (int t = 0; t < trials; ++t) {
    Rng rng = trial_rng(cfg.seed, static_cast<std::uint64_t>(t));
    const RestrictedElement a = random_off_diagonal(rng, space);
    const RestrictedElement b = random_off_diagonal(rng, space);
    const PullbackSides sides = pullback_check(gamma, a, b);
    max_err = std::max(max_err, std::abs(sides.lhs - sides.rhs));
  }

  Output out(cfg);
  std::ostream& os = out.stream();
  if (cfg.json()) {
    os << "{\"gamma\":" << format_double(gamma) << ",\"trials\":" << trials
       << ",\"max_error\":" << format_double(max_err)
       << ",\"pass\":" << (max_err < 1e-12 ? "true" : "false") << "}\n";
  } else {
    char line[160];
    std::snprintf(line, sizeof(line),
                  "pullback factor gamma/2 at gamma=%g over %d pairs: max |lhs-rhs| = %.3e\n",
                  gamma, trials, max_err);
    os << line;
  }
  return max_err < 1e-12 ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Operator-side toolkit for the restricted Grassmannian at finite truncation"};
  app.require_subcommand(1);

  RunConfig cfg;
  cfg.seed = default_seed_from_env();

  // check-identities
  auto* check = app.add_subcommand("check-identities", "Run the algebraic identity suites");
  std::string sizes = "4+4";
  int trials = 100;
  check->add_option("--sizes", sizes, "Comma-separated splits, e.g. 2+3,8+8");
  check->add_option("--trials", trials, "Trials per suite and size")->check(CLI::PositiveNumber);
  add_common_flags(check, cfg);

  // diagonalize
  auto* diag = app.add_subcommand("diagonalize", "Block-diagonalize a skew operator");
  std::string input;
  bool force = false;
  double riccati_tol = 1e-12;
  int max_iter = 200;
  diag->add_option("input", input, "BlockOperator JSON file")->required();
  diag->add_flag("--force", force, "Iterate even when the gap hypothesis fails");
  diag->add_option("--riccati-tol", riccati_tol, "Residual target");
  diag->add_option("--max-iter", max_iter, "Iteration cap");
  add_common_flags(diag, cfg);

  // demo
  auto* demo = app.add_subcommand("demo", "Built-in demonstrations");
  demo->require_subcommand(1);
  auto* unb = demo->add_subcommand("unbounded", "Norm growth of exp(rho_n)");
  std::string n_range = "1..16";
  unb->add_option("--n", n_range, "Rank or range, e.g. 1..64");
  add_common_flags(unb, cfg);

  auto* cart = demo->add_subcommand("cartan", "Cartan non-conjugacy obstruction");
  int cartan_n = 16;
  cart->add_option("--N", cartan_n, "Number of basis pairs")->check(CLI::PositiveNumber);
  add_common_flags(cart, cfg);

  auto* cone = demo->add_subcommand("cone", "Positive-cone norm ratios");
  int samples = 1000;
  std::string cone_size = "4+4";
  cone->add_option("--samples", samples, "Sample count")->check(CLI::PositiveNumber);
  cone->add_option("--size", cone_size, "Split, e.g. 4+4");
  add_common_flags(cone, cfg);

  auto* orbit = demo->add_subcommand("grassmann-orbit", "Pullback factor samples");
  double gamma = 1.0;
  std::string orbit_size = "3+3";
  int orbit_trials = 100;
  orbit->add_option("--gamma", gamma, "Central parameter");
  orbit->add_option("--size", orbit_size, "Split, e.g. 3+3");
  orbit->add_option("--trials", orbit_trials, "Pair count")->check(CLI::PositiveNumber);
  add_common_flags(orbit, cfg);

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check_identities(cfg, sizes, trials);
    if (diag->parsed()) return cmd_diagonalize(cfg, input, force, riccati_tol, max_iter);
    if (unb->parsed()) return demo_unbounded(cfg, n_range);
    if (cart->parsed()) return demo_cartan(cfg, cartan_n);
    if (cone->parsed()) return demo_cone(cfg, samples, cone_size);
    if (orbit->parsed()) return demo_grassmann_orbit(cfg, gamma, orbit_size, orbit_trials);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitIoError;
  } catch (const BadParameters& e) {
    std::cerr << "bad parameters: " << e.what() << "\n";
    return kExitIoError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIoError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIoError;
  }
  return kExitOk;
}
