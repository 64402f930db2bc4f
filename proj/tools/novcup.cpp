#include <iostream>

#include <CLI11.hpp>

#include "novcup/cli/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Cup-length lower bounds for closed 1-forms on simplicial complexes"};
  novcup::CommandOptions o;
  std::string field;
  app.add_option("command", o.command, "validate | novikov | massey | survivors | cuplength | bound | example | selftest")
      ->required()
      ->check(CLI::IsMember({"validate", "novikov", "massey", "survivors", "cuplength", "bound", "example", "selftest"}));
  app.add_option("input", o.input, "input document, '-' for stdin, or example:<name>");
  app.add_option("--field", field, "Q, p or p^m; overrides the document");
  app.add_flag("--strict-dual-survivor", o.strict_dual, "take the second factor from the -xi survivors");
  app.add_option("--max-page", o.max_page, "truncate the spectral sequence after this page")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", o.seed, "seed for randomized cross-checks");
  app.add_flag("!--no-timing", o.timing, "omit the timing section");
  CLI11_PARSE(app, argc, argv);
  if (!field.empty()) o.field = field;
  if (o.input.empty() && o.command != "selftest") {
    std::cerr << "error: " << o.command << " needs an input\n";
    return 1;
  }
  return novcup::run_command(o, std::cout, std::cerr);
}
