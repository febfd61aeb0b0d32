// coincidence-lab: compute coincidence classes, enumerate affine torus
// coincidences and render deformability verdicts from JSON scenario files.

#include "coincidence/scenario.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace cs = coincidence::scenario;

int main(int argc, char **argv) {
  CLI::App app{"Lefschetz coincidence classes and deformability verdicts"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string output;
  bool quiet = false;
  app.add_option("--output,-o", output, "Write the report here (default stdout)");
  app.add_flag("--quiet,-q", quiet, "Print nothing on success");

  std::string file;
  auto *cls = app.add_subcommand("class", "Compute the coincidence class");
  cls->add_option("file", file, "Scenario JSON")->required();
  auto *solve = app.add_subcommand("solve", "Enumerate affine torus coincidences");
  solve->add_option("file", file, "Scenario JSON")->required();
  auto *decide = app.add_subcommand("decide", "Decide deformability");
  decide->add_option("file", file, "Scenario JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e);
  }

  const cs::Command cmd = cls->parsed()     ? cs::Command::Class
                          : solve->parsed() ? cs::Command::Solve
                                            : cs::Command::Decide;
  const auto outcome = cs::run(cmd, file);
  if (outcome.exit_code != 0) {
    std::cerr << "coincidence-lab: " << outcome.message << '\n';
    return outcome.exit_code;
  }

  if (!output.empty()) {
    std::ofstream out(output, std::ios::binary);
    if (!(out << outcome.report)) {
      std::cerr << "coincidence-lab: cannot write " << output << '\n';
      return 1;
    }
    if (!quiet)
      std::cerr << "wrote " << output << '\n';
  } else if (!quiet) {
    std::cout << outcome.report;
  }
  return 0;
}
