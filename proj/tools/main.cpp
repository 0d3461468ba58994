#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "jobs.hpp"
#include "phipade/errors.hpp"

namespace {

unsigned default_precision() {
  if (const char* env = std::getenv("PHIPADE_PRECISION")) {
    try {
      return static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      std::cerr << "ignoring malformed PHIPADE_PRECISION=" << env << "\n";
    }
  }
  return 50;
}

} // namespace

int main(int argc, char** argv) {
  using namespace phipade::cli;
  CLI::App app{"Phi-Pade summation of divergent power series"};
  app.require_subcommand(1);

  SumJob job;
  job.precision = default_precision();
  auto* sum = app.add_subcommand("sum", "build an approximant and evaluate it on a grid");
  auto* series_opt = sum->add_option("--series", job.series, "series JSON: inline, @file or - for stdin");
  auto* builtin_opt = sum->add_option("--builtin", job.builtin, "builtin series")
                          ->check(CLI::IsMember(builtin_names()));
  series_opt->excludes(builtin_opt);
  sum->add_option("--count", job.count, "builtin coefficient count (default 2n)");
  sum->add_option("--a", job.a, "Phi parameter a (e.g. 2/3)");
  sum->add_option("--b", job.b, "Phi parameter b");
  sum->add_option("--m", job.m, "Gevrey index m");
  sum->add_option("--mu", job.mu, "Gevrey offset mu");
  sum->add_option("--n", job.n, "order: the [n-1,n] approximant");
  sum->add_option("--grid", job.grid, "min:max:points:log|linear");
  sum->add_option("--precision", job.precision, "decimal digits")->check(CLI::Range(20u, 10000u));
  sum->add_option("--out", job.out, "output directory (default: stdout)");
  sum->add_option("--format", job.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  std::string example;
  std::string reproduce_out;
  unsigned reproduce_precision = default_precision();
  auto* reproduce = app.add_subcommand("reproduce", "regenerate an example's comparison table");
  reproduce->add_option("example", example, "zero-dim, euler-heisenberg, quartic, sextic or beta")->required();
  reproduce->add_option("--out", reproduce_out, "output directory (default: stdout)");
  reproduce->add_option("--precision", reproduce_precision, "decimal digits")->check(CLI::Range(20u, 10000u));

  unsigned verify_precision = default_precision();
  bool inject_fault = false;
  auto* verify = app.add_subcommand("verify", "run the oracle cross-checks");
  verify->add_option("--precision", verify_precision, "decimal digits")->check(CLI::Range(20u, 10000u));
  verify->add_flag("--inject-fault", inject_fault, "corrupt a coefficient (negative control)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*sum) return cmd_sum(job, std::cout, std::cerr);
    if (*reproduce) return cmd_reproduce(example, reproduce_precision, reproduce_out, std::cout, std::cerr);
    if (*verify) return cmd_verify(verify_precision, inject_fault, std::cout);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const phipade::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const phipade::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
