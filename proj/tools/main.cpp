#include <iostream>

#include "CLI11.hpp"
#include "tauscope/cli.hpp"

int main(int argc, char** argv) {
  tauscope::cli::SessionConfig cfg;
  std::string field = "q";
  CLI::App app{"tauscope: torsion classes, silting and localisations of finite-dimensional algebras"};
  app.add_option("command", cfg.command, "census | tors | wide | silting | localise | verify | hasse | report")
      ->required()
      ->check(CLI::IsMember({"census", "tors", "wide", "silting", "localise", "verify", "hasse", "report"}));
  app.add_option("input", cfg.input, "presentation file")->required()->check(CLI::ExistingFile);
  app.add_option("--dim-cap", cfg.dimCap, "largest indecomposable dimension")->check(CLI::PositiveNumber);
  app.add_option("--count-cap", cfg.countCap, "largest number of indecomposables")->check(CLI::PositiveNumber);
  app.add_option("--length-cap", cfg.lengthCap, "longest path before declaring infinite dimension")
      ->check(CLI::PositiveNumber);
  app.add_option("--field", field, "q (rationals) or p:<prime>");
  app.add_option("--out", cfg.out, "write output here instead of stdout");
  app.add_option("--dot", cfg.dot, "write the torsion lattice as DOT here");
  app.add_option("--cache", cfg.cacheDir, "census cache directory");
  app.add_option("--seed", cfg.seed, "seed for sampled checks");
  CLI11_PARSE(app, argc, argv);

  if (cfg.cacheDir.empty())
    if (const char* env = std::getenv("TAUSCOPE_CACHE")) cfg.cacheDir = env;
  if (field.rfind("p:", 0) == 0) {
    try {
      cfg.prime = std::stoul(field.substr(2));
    } catch (const std::exception&) {
      std::cerr << "bad --field value '" << field << "'\n";
      return tauscope::cli::ParseFailed;
    }
  } else if (field != "q") {
    std::cerr << "bad --field value '" << field << "'\n";
    return tauscope::cli::ParseFailed;
  }
  return tauscope::cli::runCommand(cfg, std::cout, std::cerr);
}
