#include "symtorsion/commands.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "symtorsion/errors.hpp"
#include "symtorsion/literal.hpp"
#include "symtorsion/torsion.hpp"

namespace symt {

namespace {

std::string fmt(double v, const char* spec = "%.13g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

const NamedComplex& pick(const ComplexDocument& doc, std::string_view name) {
  if (doc.complexes.empty()) throw InvalidComplex("document declares no complex");
  if (name.empty()) return doc.complexes.front();
  for (const auto& c : doc.complexes) {
    if (c.name == name) return c;
  }
  throw StructuralError("document has no complex '" + std::string(name) + "'");
}

// `key` holds the representative; the other fields go under `sub` + name.
void add_class(Report& r, const std::string& key, const std::string& sub, const WhiteheadClass& w,
               const Rational& cutoff) {
  r.add(key, format_literal(w.representative(cutoff)));
  r.add(sub + "numerator", format_literal(w.numerator()));
  r.add(sub + "denominator", format_literal(w.denominator()));
  r.add(sub + "leading_coefficient", to_string(w.leading_coefficient()));
  r.add(sub + "trivial", yes_no(w.is_trivial()));
  r.add(sub + "in_lambda0", yes_no(w.in_lambda0()));
}

}  // namespace

ExitCode exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return ExitCode::Parse;
  if (dynamic_cast<const IoError*>(&e)) return ExitCode::Io;
  if (dynamic_cast<const InvalidComplex*>(&e) || dynamic_cast<const NotAcyclic*>(&e) ||
      dynamic_cast<const InvalidSystem*>(&e) || dynamic_cast<const StructuralError*>(&e)) {
    return ExitCode::Invalid;
  }
  return ExitCode::Indeterminate;
}

std::string category_name(ExitCode code) {
  switch (code) {
    case ExitCode::Ok:
      return "ok";
    case ExitCode::Usage:
      return "usage";
    case ExitCode::Parse:
      return "parse";
    case ExitCode::Invalid:
      return "validate";
    case ExitCode::Indeterminate:
      return "indeterminate";
    case ExitCode::Io:
      return "io";
  }
  return "indeterminate";
}

std::string Report::get(std::string_view key) const {
  for (const auto& [k, v] : fields) {
    if (k == key) return v;
  }
  return {};
}

std::string Report::render() const {
  std::ostringstream out;
  for (const auto& [k, v] : fields) out << k << ": " << v << '\n';
  if (!document.empty()) out << '\n' << document;
  return out.str();
}

Report validate_command(const ComplexDocument& doc, std::string_view complex) {
  const NamedComplex& nc = pick(doc, complex);
  const ValidationReport v = validate(*nc.complex);
  Report r;
  r.add("complex", nc.name);
  r.add("generators", std::to_string(nc.complex->generators().size()));
  r.add("entries", std::to_string(nc.complex->entries().size()));
  r.add("valid", yes_no(v.valid));
  r.add("certified_below", to_string(v.certified_below));
  for (const auto& p : v.problems) r.add("problem", p);
  for (const auto& m : doc.maps) {
    if (m.source != nc.name || m.map->shift() != 0) continue;
    const ValidationReport mv = validate_chain_map(*m.map);
    r.add("map." + m.name + ".chain_map", yes_no(mv.valid));
    for (const auto& p : mv.problems) r.add("map." + m.name + ".problem", p);
  }
  if (!v.valid) r.status = ExitCode::Invalid;
  return r;
}

Report ranks_command(const ComplexDocument& doc, std::string_view complex) {
  const NamedComplex& nc = pick(doc, complex);
  require_valid(*nc.complex);
  const HomologyRanks h = homology_ranks(*nc.complex);
  const ParityCounts p = euler_parity(*nc.complex);
  Report r;
  r.add("complex", nc.name);
  for (const auto& [d, rank] : h.ranks) r.add("rank." + std::to_string(d), std::to_string(rank));
  r.add("acyclic", yes_no(h.acyclic()));
  r.add("euler_parity", std::to_string(p.even) + " " + std::to_string(p.odd));
  r.add("certified_below", to_string(h.certified_below));
  return r;
}

Report torsion_command(const ComplexDocument& doc, std::string_view complex, const Rational& cutoff) {
  const NamedComplex& nc = pick(doc, complex);
  const TorsionResult t = milnor_torsion_k1(*nc.complex);
  Report r;
  r.add("complex", nc.name);
  r.add("acyclic", "true");
  add_class(r, "torsion", "", t.k1.to_whitehead(), cutoff);
  r.add("certified_below", to_string(t.certified_below));
  r.add("cutoff", to_string(cutoff));
  return r;
}

Report relative_torsion_command(const ComplexDocument& doc, std::string_view map, const Rational& cutoff) {
  const NamedMap& m = doc.map(map);
  const TorsionResult t = relative_torsion_k1(*m.map);
  Report r;
  r.add("map", m.name);
  r.add("source", m.source);
  r.add("target", m.target);
  r.add("quasi_isomorphism", "true");
  add_class(r, "relative_torsion", "", t.k1.to_whitehead(), cutoff);
  r.add("certified_below", to_string(t.certified_below));
  r.add("cutoff", to_string(cutoff));
  return r;
}

Report torus_example_command(const TorusExampleOptions& options) {
  using namespace torus;
  const TorusSystem sys(options.b);
  require_valid_system(sys);
  OrbitSearchOptions search_options;
  search_options.tol = options.tol;
  search_options.grid = options.grid;
  search_options.parallel = options.parallel;
  const OrbitSearch search = find_orbits(sys, search_options);
  const ConnectingCount connecting = count_connecting(sys, search.orbits);

  Report r;
  r.add("b", to_string(options.b));
  r.add("newton_tolerance", fmt(options.tol, "%g"));
  r.add("grid", std::to_string(search.grid) + "x" + std::to_string(search.grid));
  r.add("exhaustive_up_to", "seed spacing 1/" + std::to_string(search.grid));
  r.add("seeds_converged", std::to_string(search.converged) + "/" + std::to_string(search.seeds));
  r.add("orbits", std::to_string(search.orbits.size()));
  for (std::size_t i = 0; i < search.orbits.size(); ++i) {
    const PeriodicOrbit& o = search.orbits[i];
    const std::string p = "orbit.x" + std::to_string(i);
    const Mat2& m = o.monodromy;
    const double tr = m.trace();
    // Coordinates within printing precision of 0 or 1 are shown as 0.
    auto circle = [](double v) { return v < 5e-13 || v > 1 - 5e-13 ? 0.0 : v; };
    r.add(p + ".position", fmt(circle(o.base.x), "%.12f") + " " + fmt(circle(o.base.y), "%.12f"));
    r.add(p + ".index", std::to_string(o.index));
    r.add(p + ".monodromy", fmt(m.a11, "%.10f") + " " + fmt(m.a12, "%.10f") + " " + fmt(m.a21, "%.10f") + " " +
                                fmt(m.a22, "%.10f"));
    r.add(p + ".det_one_minus_m", fmt(o.det_one_minus_m, "%.10f"));
    r.add(p + ".type", std::abs(tr) < 2 ? "elliptic" : (tr > 0 ? "positive hyperbolic" : "negative hyperbolic"));
    r.add(p + ".step_halving_error", fmt(o.richardson_error, "%.2e"));
  }
  r.add("connecting", std::to_string(connecting.total()));
  for (std::size_t i = 0; i < connecting.trajectories.size(); ++i) {
    const auto& t = connecting.trajectories[i];
    r.add("connecting." + std::to_string(i),
          "x" + std::to_string(t.from_orbit) + " -> x" + std::to_string(t.to_orbit) + " label " +
              std::to_string(t.label));
  }

  ComplexDocument doc;
  doc.lattice = Lattice::laurent();
  doc.grading_kind = GradingKind::Z2N;
  for (SignConvention conv : {SignConvention::Unsigned, SignConvention::Alternating}) {
    const BasedComplex c = assemble_floer(search.orbits, connecting, conv);
    const std::string name = to_string(conv);
    if (conv == SignConvention::Unsigned) {
      const ParityCounts p = euler_parity(c);
      r.add("euler_parity", std::to_string(p.even) + " " + std::to_string(p.odd));
    }
    const TorsionResult t = milnor_torsion_k1(c);
    add_class(r, "torsion." + name, "torsion." + name + ".", t.k1.to_whitehead(), options.cutoff);
    r.add("torsion." + name + ".certified_below", to_string(t.certified_below));
    doc.complexes.push_back({name, std::make_shared<const BasedComplex>(c)});
  }
  r.add("cutoff", to_string(options.cutoff));
  r.document = "# Floer complex of the torus example, b = " + to_string(options.b) +
               "\n# complex 'unsigned' counts trajectories with +1, 'alternating' with (-1)^label\n" +
               render_document(doc);
  return r;
}

}  // namespace symt
