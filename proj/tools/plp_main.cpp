// plp: evaluate prioritized extended logic programs.
//
//   plp solve FILE --semantics S [--engine E] [--coherence] [--trace]
//                  [--format text|json] [--max-atoms N]

#include <iostream>

#include <CLI11.hpp>

#include "cli/solve.hpp"

int main(int argc, char** argv) {
  using namespace plp::cli;

  CLI::App app{"Well-founded and prioritized well-founded semantics for extended logic programs"};
  app.require_subcommand(1);

  RunConfig config;
  std::string semantics = "wfs-pr";
  std::string engine;
  std::string format = "text";

  CLI::App* solve_cmd = app.add_subcommand("solve", "Compute the conclusions of a program");
  solve_cmd->add_option("file", config.input_path, "Program file (.lp)")->required();
  solve_cmd->add_option("--semantics,-s", semantics, "wfs | wfs-star | wfs-pr | answer | pp-answer | diff")
      ->check(CLI::IsMember({"wfs", "wfs-star", "wfs-pr", "answer", "pp-answer", "diff"}))
      ->capture_default_str();
  solve_cmd->add_option("--engine,-e", engine, "declarative | incremental (wfs-pr only)")
      ->check(CLI::IsMember({"declarative", "incremental"}));
  solve_cmd->add_flag("--coherence", config.coherence, "Coherence variant of the safeness test");
  solve_cmd->add_flag("--trace", config.trace, "Print every iteration step");
  solve_cmd->add_option("--format,-f", format, "text | json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  solve_cmd->add_option("--max-atoms", config.max_atoms, "Answer-set enumeration guard (branching literals)")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_code::program_error;
  }

  config.semantics = *parse_semantics(semantics);
  if (!engine.empty()) config.engine = engine == "incremental" ? plp::Engine::incremental : plp::Engine::declarative;
  config.format = format == "json" ? OutputFormat::json : OutputFormat::text;
  return solve(config, std::cout, std::cerr);
}
