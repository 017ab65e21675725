#pragma once

#include <exception>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symtorsion/complex_io.hpp"
#include "symtorsion/rational.hpp"
#include "symtorsion/torus.hpp"

// The operations behind the command-line tool. Each returns a report of
// "key: value" lines; the tool only reads files and maps errors to exit codes.
namespace symt {

enum class ExitCode : int {
  Ok = 0,
  Usage = 1,
  Parse = 2,
  Invalid = 3,        // failed validation, not acyclic, not a quasi-isomorphism, bad system
  Indeterminate = 4,  // undecidable pivot or leading term, numerical failure
  Io = 5,             // file missing or unreadable
};

ExitCode exit_code_for(const std::exception& e);
std::string category_name(ExitCode code);

inline const Rational kDefaultCutoff{20};

struct Report {
  std::vector<std::pair<std::string, std::string>> fields;
  ExitCode status = ExitCode::Ok;
  std::string document;  // appended after a blank line when non-empty

  void add(std::string key, std::string value) { fields.emplace_back(std::move(key), std::move(value)); }
  // First value stored under key, or "" when absent.
  std::string get(std::string_view key) const;
  std::string render() const;
};

// With an empty name the first complex of the document is used.
Report validate_command(const ComplexDocument& doc, std::string_view complex = {});
Report ranks_command(const ComplexDocument& doc, std::string_view complex = {});
Report torsion_command(const ComplexDocument& doc, std::string_view complex = {},
                       const Rational& cutoff = kDefaultCutoff);
Report relative_torsion_command(const ComplexDocument& doc, std::string_view map,
                                const Rational& cutoff = kDefaultCutoff);

struct TorusExampleOptions {
  Rational b{1, 5};
  double tol = 1e-10;
  Rational cutoff = kDefaultCutoff;
  int grid = 16;
  bool parallel = true;
};

Report torus_example_command(const TorusExampleOptions& options);

}  // namespace symt
