#include "reldens/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

struct Help {
  const char* name;
  const char* text;
};

constexpr Help kHelp[] = {
    {"density", "Partial densities of an integer set. CSV: N,density. Sets: ap:N:K, b:J, block-example, !X, X&Y"},
    {"independence", "Product-rule defect of a set family (--set, --mode exact|empirical) or of cosine sequences "
                     "(--alpha). CSV: set,density or sequence,upper,density"},
    {"erdos-kac", "Distinct prime factor statistics up to --n-max (--mode lnlnN|lnlnn). CSV: omega,count"},
    {"digit-clt", "Binary digit sums for n < 2^m (--m-terms). CSV: k,count,binomial"},
    {"weyl", "Weyl sum of Kronecker sequences (--alpha, --h, --n). CSV: N,magnitude"},
    {"qmc", "Equidistribution integral of prod u_j over Kronecker points. CSV: N,estimate"},
    {"cosine-clt", "Normalized cosine sums against Phi and the convolved arcsine law (--mode discrete|continuous, "
                   "--grid = convolution cells). CSV: z,empirical,convolution,phi"},
    {"lacunary", "Salem-Zygmund sums over an x grid (--mode geometric|power-plus|linear). CSV: x_statistic,count"},
    {"kac-clt", "Sums of f(2^k x) (--mode cos|cos-sum|sign|coboundary). CSV: x_statistic,count"},
    {"rademacher", "Rademacher series partial sums (--mode inverse|inverse-sqrt|zero|constant, --m-terms = k_max, "
                   "--grid = samples). CSV: t,S_quarter,S_half,S_full"},
};

}  // namespace

int main(int argc, char** argv) {
  reldens::cli::ExperimentConfig config;
  CLI::App app{"reldens: relative density and probabilistic number theory experiments"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.fallthrough();
  app.require_subcommand(0, 1);

  std::uint64_t n_max = 0, m_terms = 0, grid = 0, budget = 0;
  app.add_option("--n-max,--n", n_max, "Truncation point N");
  app.add_option("--m-terms", m_terms, "Number of terms / digits / k_max");
  app.add_option("--grid", grid, "Grid size");
  app.add_option("--set", config.sets, "Integer set (repeatable)");
  app.add_option("--alpha", config.alphas, "Frequency: golden, sqrt:K, p/q or decimal (repeatable)");
  app.add_option("--h", config.h, "Weyl coefficients, comma separated")->delimiter(',');
  app.add_option("--mode", config.mode, "Experiment variant");
  app.add_option("--format", config.format, "Data file format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--output", config.output, "Output path prefix; summary goes to stdout when omitted");
  app.add_option("--threads", config.threads, "Worker threads (results do not depend on it)");
  app.add_flag("--pilot", config.pilot, "Reduced sizes; with no subcommand runs every experiment");
  app.add_option("--memory-budget", budget, "Memory budget in bytes (also RELDENS_MEMORY_BUDGET)");

  for (const auto& h : kHelp) app.add_subcommand(h.name, h.text);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (const auto subs = app.get_subcommands(); !subs.empty()) config.subcommand = subs.front()->get_name();
  if (app.count("--n-max")) config.n_max = n_max;
  if (app.count("--m-terms")) config.m_terms = m_terms;
  if (app.count("--grid")) config.grid = grid;
  if (app.count("--memory-budget")) config.memory_budget = budget;
  if (config.subcommand.empty() && !config.pilot) {
    std::cerr << app.help();
    return 2;
  }
  return reldens::cli::run(config, std::cout, std::cerr);
}
