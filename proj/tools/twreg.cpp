#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "twreg/cli/commands.hpp"

namespace {

std::optional<double> optional_flag(CLI::Option* opt, double value) {
  return opt->count() ? std::optional<double>(value) : std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace twreg::cli;
  CLI::App app{"Global regularity of second-order twisted differential operators"};
  app.require_subcommand(1);

  auto* classify = app.add_subcommand("classify", "Classify an operator document");
  std::string classify_path;
  double theta = 0.0, tol_zero = 0.0, tol_lambda = 0.0;
  classify->add_option("input", classify_path, "Operator document (JSON)")->required();
  auto* theta_opt = classify->add_option("--theta", theta, "Symplectic shift parameter");
  auto* tz_opt = classify->add_option("--tol-zero", tol_zero, "Relative zero tolerance");
  auto* tl_opt = classify->add_option("--tol-lambda", tol_lambda, "Odd-lattice tolerance for lambda");

  auto* specfun = app.add_subcommand("specfun", "Evaluate a special function");
  SpecfunArgs sf;
  std::string p_text = "0", q_text = "1", z_text = "0";
  int asym_terms = 0;
  specfun->add_option("function", sf.function, "phi, theta or airy")
      ->required()
      ->check(CLI::IsMember({"phi", "theta", "airy"}));
  specfun->add_option("--p", p_text, "Parameter p as re,im");
  specfun->add_option("--q", q_text, "Parameter q as re,im");
  specfun->add_option("--z", z_text, "Argument as re,im")->required();
  specfun->add_option("--which", sf.which, "Airy function")->check(CLI::IsMember({"ai", "bi"}));
  auto* asym_opt = specfun->add_option("--asym", asym_terms, "Use the expansion with N+1 terms");
  specfun->add_option("--eps", sf.eps, "Sector margin");

  auto* solve = app.add_subcommand("solve", "Tabulate a solution as CSV");
  std::string solve_path, c1_text = "1,0", c2_text = "0,0", grid_text = "-8:0.01:8", out_path;
  solve->add_option("input", solve_path, "Operator document (JSON)")->required();
  solve->add_option("--c1", c1_text, "Coefficient of u1 as re,im");
  solve->add_option("--c2", c2_text, "Coefficient of u2 as re,im");
  solve->add_option("--grid", grid_text, "lo:step:hi");
  solve->add_option("--out", out_path, "CSV output path (default: standard output)");

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  std::string suite = "default";
  std::uint64_t seed = twreg::verify::default_seed;
  int jobs = 1;
  verify->add_option("--suite", suite, "Suite name")->check(CLI::IsMember(twreg::verify::suite_names()));
  verify->add_option("--seed", seed, "Random seed");
  verify->add_option("--jobs", jobs, "Criteria run concurrently")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_input;
  }

  try {
    if (*classify) {
      return cmd_classify(classify_path,
                          {optional_flag(theta_opt, theta), optional_flag(tz_opt, tol_zero),
                           optional_flag(tl_opt, tol_lambda)},
                          std::cout, std::cerr);
    }
    if (*specfun) {
      sf.p = parse_complex(p_text);
      sf.q = parse_complex(q_text);
      sf.z = parse_complex(z_text);
      if (asym_opt->count()) sf.asym = asym_terms;
      return cmd_specfun(sf, std::cout, std::cerr);
    }
    if (*solve) {
      const auto c1 = parse_complex(c1_text), c2 = parse_complex(c2_text);
      const auto grid = parse_grid(grid_text);
      if (out_path.empty()) return cmd_solve(solve_path, c1, c2, grid, std::cout, std::cerr);
      std::ofstream out(out_path);
      if (!out) throw input_error("cannot write " + out_path);
      return cmd_solve(solve_path, c1, c2, grid, out, std::cerr);
    }
    return cmd_verify(suite, seed, jobs, std::cout, std::cerr);
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_input;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return exit_check_failed;
  }
}
