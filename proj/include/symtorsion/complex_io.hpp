#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "symtorsion/complex.hpp"

// Plain-text documents holding a lattice, one or more based complexes and
// optional graded maps between them. Grammar (one item per line, '#' starts a
// comment, blank lines ignored):
//
//   [group]
//   rank: <k>
//   phi: <rational> ...        (k values)
//   c1: <int> ...              (k values)
//   grading: z | z2 | z2n      (default z2; z2n falls back to z when N is unbounded)
//
//   [complex <name>]           (optional before the first module; name "main")
//   [module <degree>]
//   <generator>                (one or more names per line)
//   [differential]
//   <source> -> <target>: <literal>
//
//   [map <name>]
//   source: <complex>
//   target: <complex>
//   shift: <int>               (default 0)
//   <source gen> -> <target gen>: <literal>
//
// Names match [A-Za-z_][A-Za-z0-9_.']*. Literals use the grammar of
// literal.hpp. Every error is a ParseError carrying line and column.
namespace symt {

enum class GradingKind { Z, Z2, Z2N };

std::string to_string(GradingKind kind);

struct NamedComplex {
  std::string name;
  std::shared_ptr<const BasedComplex> complex;
};

struct NamedMap {
  std::string name;
  std::string source;
  std::string target;
  std::shared_ptr<const GradedMap> map;
};

struct ComplexDocument {
  LatticePtr lattice;
  GradingKind grading_kind = GradingKind::Z2;
  std::vector<NamedComplex> complexes;
  std::vector<NamedMap> maps;

  Grading grading() const;
  // Throws StructuralError when absent.
  const BasedComplex& complex(std::string_view name) const;
  const std::shared_ptr<const BasedComplex>& complex_ptr(std::string_view name) const;
  const NamedMap& map(std::string_view name) const;
};

bool operator==(const ComplexDocument& a, const ComplexDocument& b);

ComplexDocument parse_document(std::string_view text);

// Canonical text: sections in a fixed order, modules by ascending degree,
// generators within a degree in declaration order, entries ordered by the
// rendered positions of source then target, literals in canonical form.
std::string render_document(const ComplexDocument& doc);

// render_document(parse_document(text)).
std::string normalize_document(std::string_view text);

// Throws IoError when the file cannot be read, ParseError otherwise.
ComplexDocument read_document(const std::filesystem::path& path);

// Convenience: a single-complex document named "main".
ComplexDocument make_document(const BasedComplex& c, GradingKind kind);

}  // namespace symt
