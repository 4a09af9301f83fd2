#include <cstdlib>
#include <string>

#include <CLI11.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "bimult/cli.hpp"

int main(int argc, char** argv) {
#ifdef _OPENMP
  if (const char* cap = std::getenv("BIMULT_THREADS")) {
    int n = std::atoi(cap);
    if (n > 0) omp_set_num_threads(n);
  }
#endif

  CLI::App app{"bilinear multiplier laboratory"};
  app.require_subcommand(1);

  std::string run_config, bench_config;
  CLI::App* run = app.add_subcommand("run", "execute the op named in a config file");
  run->add_option("config", run_config, "config file")->required();
  CLI::App* bench =
      app.add_subcommand("bench", "time the serial vs parallel operator paths");
  bench->add_option("config", bench_config, "config file")->required();
  CLI::App* ls = app.add_subcommand("list-symbols", "print the symbol catalogue");
  CLI::App* lc = app.add_subcommand("list-checks", "print the available checks");

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) return bimult::run_command(run_config);
  if (bench->parsed()) return bimult::bench_command(bench_config);
  if (ls->parsed()) return bimult::list_symbols_command();
  if (lc->parsed()) return bimult::list_checks_command();
  return bimult::kExitConfig;
}
