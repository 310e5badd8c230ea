// hypertoric_cr: orbifold cohomology of a hypertoric variety from a JSON
// arrangement file.

#include "hypertoric/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  hypertoric::cli::Arguments args;
  CLI::App app{"Chen-Ruan cohomology ring of a hypertoric orbifold"};
  app.add_option("input", args.input, "arrangement JSON file")->required();
  app.add_option("--json", args.json_path, "write the result document here ('-' for stdout)");
  app.add_flag("--report", args.report, "print the text report (default unless --json is given)");
  app.add_flag("--affinize", args.pipeline.affinize,
               "replace non-simple offsets with random simple ones");
  app.add_option("--seed", args.pipeline.seed, "affinization seed (default 0)");
  app.add_option("--max-degree", args.pipeline.max_degree, "oracle degree bound, even (default 4n)");
  app.add_flag("--check-oracle", args.pipeline.check_oracle,
               "cross-check the Poincare polynomial by brute-force linear algebra");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return hypertoric::cli::kParseError;
  }
  return hypertoric::cli::run(args, std::cout, std::cerr);
}
