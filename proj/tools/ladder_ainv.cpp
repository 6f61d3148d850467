#include "ladder/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

int main(int argc, char **argv) {
  CLI::App app{"a-invariants of ladder determinantal rings"};
  app.require_subcommand(1);

  ladder::RunOptions options;
  std::string file;
  for (const char *name : {"a-invariant", "max-turns", "slalom", "oracle",
                           "hilbert", "validate", "render"}) {
    auto *sub = app.add_subcommand(name);
    sub->add_option("file", file, "problem file (JSON)")->required();
    sub->add_flag("--verify", options.verify,
                  "cross-check against the brute-force oracle");
    sub->add_flag("--json", options.json, "machine-readable output");
    sub->add_option("--coeffs", options.coeffs,
                    "number of Hilbert-function values")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--budget", options.budget, "oracle step budget")
        ->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : ladder::exit_code::invalid_input;
  }

  std::ifstream in(file, std::ios::binary);
  if (!in) {
    std::cerr << "cannot read " << file << "\n";
    return ladder::exit_code::invalid_input;
  }
  std::ostringstream text;
  text << in.rdbuf();

  const auto result = ladder::run_text(app.get_subcommands().front()->get_name(),
                                       text.str(), options);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
