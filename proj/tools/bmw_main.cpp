#include "bmw/cli.hpp"
#include "bmw/config.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
  CLI::App app{"Block-Markov wiretap toolkit"};
  app.require_subcommand(0, 1);
  app.footer(bmw::cli_usage());

  const std::vector<std::string> commands = {
      "rate", "decode-set", "keyrate", "game", "optimize", "sweep", "simulate"};

  struct SubArgs {
    std::string config_path;
    std::string output_path;
  };
  std::vector<SubArgs> args(commands.size());
  std::vector<CLI::App*> subs;
  for (std::size_t i = 0; i < commands.size(); ++i) {
    CLI::App* sub = app.add_subcommand(commands[i]);
    sub->add_option("--config", args[i].config_path, "key=value config file")
        ->required();
    sub->add_option("--output", args[i].output_path, "CSV output path");
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return bmw::kExitUsage;
  }

  for (std::size_t i = 0; i < commands.size(); ++i) {
    if (!subs[i]->parsed()) continue;
    try {
      bmw::RunConfig config = bmw::RunConfig::load_file(args[i].config_path);
      if (!args[i].output_path.empty()) config.set("output", args[i].output_path);
      return bmw::dispatch(commands[i], config, std::cout, std::cerr);
    } catch (const bmw::config_error& e) {
      std::cerr << "config error: " << e.what() << "\n";
      return bmw::kExitUsage;
    }
  }

  std::cerr << bmw::cli_usage();
  return bmw::kExitUsage;
}
