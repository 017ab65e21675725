// Command-line front end: reads complex documents, prints key: value reports.
//
//   symtorsion validate <file> [--complex name]
//   symtorsion ranks <file> [--complex name]
//   symtorsion torsion <file> [--complex name] [--cutoff p/q]
//   symtorsion rel-torsion <file> --map <name> [--cutoff p/q]
//   symtorsion torus-example [--b p/q] [--tol float] [--cutoff p/q] [--grid n]
//
// Exit codes: 0 ok, 1 usage, 2 parse, 3 validation, 4 indeterminate, 5 i/o.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "symtorsion/commands.hpp"
#include "symtorsion/complex_io.hpp"
#include "symtorsion/errors.hpp"

namespace {

symt::Rational rational_option(const std::string& text, const char* flag) {
  try {
    return symt::parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError(flag, e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Novikov-ring torsion of based complexes"};
  app.require_subcommand(1);

  std::string file, complex, map_name, cutoff_text = "20", b_text = "1/5";
  double tol = 1e-10;
  int grid = 16;

  auto* validate = app.add_subcommand("validate", "check shapes and d^2 = 0");
  auto* ranks = app.add_subcommand("ranks", "cohomology ranks over the fraction field");
  auto* torsion = app.add_subcommand("torsion", "Milnor torsion of an acyclic complex");
  auto* rel = app.add_subcommand("rel-torsion", "torsion of the mapping cone of a chain map");
  auto* torus = app.add_subcommand("torus-example", "Floer complex and torsion of the torus example");

  for (auto* sub : {validate, ranks, torsion, rel}) sub->add_option("file", file, "complex document")->required();
  for (auto* sub : {validate, ranks, torsion}) sub->add_option("--complex", complex, "complex name (default: first)");
  for (auto* sub : {torsion, rel, torus}) {
    sub->add_option("--cutoff", cutoff_text, "truncation weight for series output (p/q)")->capture_default_str();
  }
  rel->add_option("--map", map_name, "chain map name")->required();
  torus->add_option("--b", b_text, "amplitude of lambda (p/q)")->capture_default_str();
  torus->add_option("--tol", tol, "Newton residual tolerance")->capture_default_str()->check(CLI::PositiveNumber);
  torus->add_option("--grid", grid, "Newton seeds per axis")->capture_default_str()->check(CLI::Range(1, 512));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(symt::ExitCode::Usage);
  }

  try {
    symt::Rational cutoff;
    try {
      cutoff = rational_option(cutoff_text, "--cutoff");
    } catch (const CLI::ValidationError& e) {
      std::cerr << "error: " << e.what() << "\ncategory: usage\n";
      return static_cast<int>(symt::ExitCode::Usage);
    }

    symt::Report report;
    if (*torus) {
      symt::TorusExampleOptions options;
      try {
        options.b = rational_option(b_text, "--b");
      } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\ncategory: usage\n";
        return static_cast<int>(symt::ExitCode::Usage);
      }
      options.tol = tol;
      options.cutoff = cutoff;
      options.grid = grid;
      options.parallel = false;  // one thread per invocation
      report = symt::torus_example_command(options);
    } else {
      const symt::ComplexDocument doc = symt::read_document(file);
      if (*validate) report = symt::validate_command(doc, complex);
      if (*ranks) report = symt::ranks_command(doc, complex);
      if (*torsion) report = symt::torsion_command(doc, complex, cutoff);
      if (*rel) report = symt::relative_torsion_command(doc, map_name, cutoff);
    }
    std::cout << report.render();
    return static_cast<int>(report.status);
  } catch (const std::exception& e) {
    const symt::ExitCode code = symt::exit_code_for(e);
    std::cerr << "error: " << e.what() << "\ncategory: " << symt::category_name(code) << '\n';
    return static_cast<int>(code);
  }
}
