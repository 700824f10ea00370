// Command-line entry point; all behavior lives in cli_run.
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "uncross/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"uncrossing partial order toolkit"};
  app.require_subcommand(1);
  uncross::CliConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-n", cfg.n, "number of chords (2n boundary points)");
    sub->add_option("--seed", cfg.seed, "seed for randomized suites");
    sub->add_option("--budget", cfg.budget, "time budget in seconds");
    sub->add_option("--jobs", cfg.jobs, "worker threads (0 = all)");
    sub->add_option("-o,--output", cfg.output, "output path (default stdout)");
  };

  CLI::App* build = app.add_subcommand("build", "construct the poset and write JSON");
  add_common(build);
  build->add_flag("--bottom", cfg.bottom, "adjoin the bottom element");

  CLI::App* verify = app.add_subcommand("verify", "run verification checks");
  add_common(verify);
  verify->add_option("--checks", cfg.checks, "comma-separated check names")
      ->delimiter(',');

  CLI::App* exp = app.add_subcommand("export-dot", "write the Hasse diagram as DOT");
  add_common(exp);
  exp->add_flag("--bottom", cfg.bottom, "adjoin the bottom element");

  CLI::App* mob = app.add_subcommand("mobius", "mobius value of one interval");
  add_common(mob);
  mob->add_flag("--bottom", cfg.bottom, "adjoin the bottom element");
  mob->add_option("x", cfg.x, "lower element id")->required();
  mob->add_option("y", cfg.y, "upper element id")->required();

  CLI::App* shell = app.add_subcommand("shelling", "check the n=3 edge labeling");
  add_common(shell);

  CLI::App* demo = app.add_subcommand("medial-demo", "show diagram resolution on one matching");
  add_common(demo);
  demo->add_option("-m,--matching", cfg.matching_json, "matching as a JSON partner array");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  return uncross::cli_run(cfg, std::cout, std::cerr);
}
