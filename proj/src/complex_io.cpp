#include "symtorsion/complex_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "symtorsion/errors.hpp"
#include "symtorsion/literal.hpp"

namespace symt {

namespace {

bool is_space(char ch) { return ch == ' ' || ch == '\t' || ch == '\r'; }

bool is_name(std::string_view s) {
  if (s.empty()) return false;
  const auto first = static_cast<unsigned char>(s.front());
  if (!std::isalpha(first) && s.front() != '_') return false;
  return std::all_of(s.begin() + 1, s.end(), [](char ch) {
    const auto c = static_cast<unsigned char>(ch);
    return std::isalnum(c) || ch == '_' || ch == '.' || ch == '\'';
  });
}

// A piece of a line together with its 1-based column.
struct Span {
  std::string_view text;
  std::size_t column = 1;
};

Span trim(Span s) {
  while (!s.text.empty() && is_space(s.text.front())) {
    s.text.remove_prefix(1);
    ++s.column;
  }
  while (!s.text.empty() && is_space(s.text.back())) s.text.remove_suffix(1);
  return s;
}

Span sub(Span s, std::size_t pos, std::size_t len = std::string_view::npos) {
  return {s.text.substr(pos, len), s.column + pos};
}

std::vector<Span> split_ws(Span s) {
  std::vector<Span> out;
  std::size_t i = 0;
  while (i < s.text.size()) {
    while (i < s.text.size() && is_space(s.text[i])) ++i;
    std::size_t j = i;
    while (j < s.text.size() && !is_space(s.text[j])) ++j;
    if (j > i) out.push_back(sub(s, i, j - i));
    i = j;
  }
  return out;
}

template <typename Int>
std::optional<Int> parse_int(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  Int v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

struct PendingEntry {
  std::size_t line;
  Span source;
  Span target;
  Span literal;
};

struct PendingComplex {
  std::string name;
  std::size_t line;
  std::vector<std::pair<std::string, int>> generators;
  std::map<std::string, std::size_t> declared_at;  // name -> line
  std::vector<PendingEntry> entries;
};

struct PendingMap {
  std::string name;
  std::size_t line;
  std::optional<std::pair<std::string, Span>> source;
  std::optional<std::pair<std::string, Span>> target;
  std::size_t source_line = 0, target_line = 0;
  int shift = 0;
  bool has_shift = false;
  std::vector<PendingEntry> entries;
};

enum class Section { None, Group, Module, Differential, Map, ComplexHeader };

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ComplexDocument run() {
    try {
      return run_unchecked();
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(line_, 1, e.what());
    }
  }

 private:
  ComplexDocument run_unchecked() {
    std::size_t pos = 0;
    while (pos <= text_.size()) {
      std::size_t end = text_.find('\n', pos);
      if (end == std::string_view::npos) end = text_.size();
      ++line_;
      Span raw{text_.substr(pos, end - pos), 1};
      const auto hash = raw.text.find('#');
      if (hash != std::string_view::npos) raw.text = raw.text.substr(0, hash);
      const Span s = trim(raw);
      if (!s.text.empty()) handle(s);
      pos = end + 1;
    }
    if (!lattice_) {
      if (section_ == Section::Group) finish_group();
      else throw ParseError(line_, 1, "document has no [group] section");
    }
    return assemble();
  }

  [[noreturn]] void fail(std::size_t column, const std::string& what) const { throw ParseError(line_, column, what); }

  void handle(Span s) {
    if (s.text.front() == '[') {
      header(s);
      return;
    }
    switch (section_) {
      case Section::None:
        fail(s.column, "content before the first section; expected [group]");
      case Section::Group:
        group_line(s);
        return;
      case Section::ComplexHeader:
        fail(s.column, "expected [module <degree>] or [differential] after [complex]");
      case Section::Module:
        module_line(s);
        return;
      case Section::Differential:
        current_complex().entries.push_back(entry_line(s));
        return;
      case Section::Map:
        map_line(s);
        return;
    }
  }

  void header(Span s) {
    if (s.text.back() != ']') fail(s.column + s.text.size(), "expected ']' closing the section header");
    const Span inner = trim(sub(s, 1, s.text.size() - 2));
    const auto words = split_ws(inner);
    if (words.empty()) fail(s.column, "empty section header");
    const std::string_view kind = words[0].text;
    if (section_ == Section::Group) finish_group();

    auto arity = [&](std::size_t n, const char* usage) {
      if (words.size() != n) fail(words[0].column, std::string("expected ") + usage);
    };
    if (kind == "group") {
      arity(1, "[group]");
      if (lattice_ || group_seen_) fail(s.column, "duplicate [group] section");
      if (section_ != Section::None) fail(s.column, "[group] must come first");
      group_seen_ = true;
      section_ = Section::Group;
      return;
    }
    if (!lattice_) fail(s.column, "expected [group] before other sections");
    if (kind == "complex") {
      arity(2, "[complex <name>]");
      const Span name = words[1];
      if (!is_name(name.text)) fail(name.column, "invalid complex name '" + std::string(name.text) + "'");
      for (const auto& c : complexes_) {
        if (c.name == name.text) fail(name.column, "duplicate complex '" + std::string(name.text) + "'");
      }
      complexes_.push_back({std::string(name.text), line_, {}, {}, {}});
      section_ = Section::ComplexHeader;
    } else if (kind == "module") {
      arity(2, "[module <degree>]");
      ensure_complex(s.column);
      const auto d = parse_int<long long>(words[1].text);
      if (!d || *d < -1000000000LL || *d > 1000000000LL) {
        fail(words[1].column, "invalid degree '" + std::string(words[1].text) + "'");
      }
      module_degree_ = grading_.normalize(*d);
      section_ = Section::Module;
    } else if (kind == "differential") {
      arity(1, "[differential]");
      ensure_complex(s.column);
      section_ = Section::Differential;
    } else if (kind == "map") {
      arity(2, "[map <name>]");
      const Span name = words[1];
      if (!is_name(name.text)) fail(name.column, "invalid map name '" + std::string(name.text) + "'");
      for (const auto& m : maps_) {
        if (m.name == name.text) fail(name.column, "duplicate map '" + std::string(name.text) + "'");
      }
      maps_.push_back({std::string(name.text), line_, {}, {}, 0, 0, 0, false, {}});
      section_ = Section::Map;
    } else {
      fail(words[0].column, "unknown section '" + std::string(kind) + "'");
    }
  }

  void ensure_complex(std::size_t column) {
    if (section_ == Section::Map) fail(column, "module and differential sections after a map need a [complex] header");
    if (complexes_.empty()) complexes_.push_back({"main", line_, {}, {}, {}});
  }

  PendingComplex& current_complex() { return complexes_.back(); }

  // "key: value" with key a bare word
  std::pair<Span, Span> key_value(Span s) {
    const auto colon = s.text.find(':');
    if (colon == std::string_view::npos) fail(s.column, "expected '<key>: <value>'");
    return {trim(sub(s, 0, colon)), trim(sub(s, colon + 1))};
  }

  void group_line(Span s) {
    const auto [key, value] = key_value(s);
    const std::string k(key.text);
    if (k != "rank" && k != "phi" && k != "c1" && k != "grading") fail(key.column, "unknown group key '" + k + "'");
    if (group_keys_.count(k)) fail(key.column, "duplicate group key '" + k + "'");
    group_keys_[k] = {line_, value};
  }

  void finish_group() {
    auto missing = [&](const char* key) {
      if (!group_keys_.count(key)) throw ParseError(line_, 1, std::string("[group] is missing '") + key + "'");
    };
    missing("rank");
    const auto& [rank_line, rank_span] = group_keys_.at("rank");
    const auto rank = parse_int<long long>(rank_span.text);
    if (!rank || *rank < 0 || *rank > 64) {
      throw ParseError(rank_line, rank_span.column, "rank must be an integer in [0, 64]");
    }
    missing("phi");
    missing("c1");
    std::vector<Rational> phi;
    const auto& [phi_line, phi_span] = group_keys_.at("phi");
    for (const Span& w : split_ws(phi_span)) {
      try {
        phi.push_back(parse_rational(w.text));
      } catch (const std::invalid_argument& e) {
        throw ParseError(phi_line, w.column, e.what());
      }
    }
    if (phi.size() != static_cast<std::size_t>(*rank)) {
      throw ParseError(phi_line, phi_span.column, "phi has " + std::to_string(phi.size()) + " values, rank is " +
                                                      std::to_string(*rank));
    }
    std::vector<std::int64_t> c1;
    const auto& [c1_line, c1_span] = group_keys_.at("c1");
    for (const Span& w : split_ws(c1_span)) {
      const auto v = parse_int<std::int64_t>(w.text);
      if (!v) throw ParseError(c1_line, w.column, "invalid integer '" + std::string(w.text) + "'");
      c1.push_back(*v);
    }
    if (c1.size() != static_cast<std::size_t>(*rank)) {
      throw ParseError(c1_line, c1_span.column, "c1 has " + std::to_string(c1.size()) + " values, rank is " +
                                                    std::to_string(*rank));
    }
    lattice_ = std::make_shared<const Lattice>(std::move(phi), std::move(c1));
    if (auto it = group_keys_.find("grading"); it != group_keys_.end()) {
      const std::string_view g = it->second.second.text;
      if (g == "z") kind_ = GradingKind::Z;
      else if (g == "z2") kind_ = GradingKind::Z2;
      else if (g == "z2n") kind_ = GradingKind::Z2N;
      else throw ParseError(it->second.first, it->second.second.column, "grading must be z, z2 or z2n");
    }
    doc_grading();
  }

  void doc_grading() {
    ComplexDocument tmp;
    tmp.lattice = lattice_;
    tmp.grading_kind = kind_;
    grading_ = tmp.grading();
  }

  void module_line(Span s) {
    PendingComplex& c = current_complex();
    for (const Span& w : split_ws(s)) {
      if (!is_name(w.text)) fail(w.column, "invalid generator name '" + std::string(w.text) + "'");
      const std::string name(w.text);
      if (auto it = c.declared_at.find(name); it != c.declared_at.end()) {
        fail(w.column, "duplicate generator '" + name + "' (first declared on line " + std::to_string(it->second) + ")");
      }
      c.declared_at[name] = line_;
      c.generators.emplace_back(name, module_degree_);
    }
  }

  PendingEntry entry_line(Span s) {
    const auto arrow = s.text.find("->");
    if (arrow == std::string_view::npos) fail(s.column, "expected '<source> -> <target>: <literal>'");
    const Span source = trim(sub(s, 0, arrow));
    const Span rest = sub(s, arrow + 2);
    const auto colon = rest.text.find(':');
    if (colon == std::string_view::npos) fail(rest.column + rest.text.size(), "expected ':' before the entry value");
    const Span target = trim(sub(rest, 0, colon));
    const Span literal = trim(sub(rest, colon + 1));
    if (!is_name(source.text)) fail(source.column, "invalid generator name '" + std::string(source.text) + "'");
    if (!is_name(target.text)) fail(target.column, "invalid generator name '" + std::string(target.text) + "'");
    if (literal.text.empty()) fail(rest.column + colon + 1, "missing entry value");
    return {line_, source, target, literal};
  }

  void map_line(Span s) {
    PendingMap& m = maps_.back();
    if (s.text.find("->") != std::string_view::npos) {
      m.entries.push_back(entry_line(s));
      return;
    }
    const auto [key, value] = key_value(s);
    if (!m.entries.empty()) fail(key.column, "map keys must precede the entries");
    if (key.text == "source" || key.text == "target") {
      auto& slot = key.text == "source" ? m.source : m.target;
      if (slot) fail(key.column, "duplicate map key '" + std::string(key.text) + "'");
      if (!is_name(value.text)) fail(value.column, "invalid complex name '" + std::string(value.text) + "'");
      slot = std::make_pair(std::string(value.text), value);
      (key.text == "source" ? m.source_line : m.target_line) = line_;
    } else if (key.text == "shift") {
      if (m.has_shift) fail(key.column, "duplicate map key 'shift'");
      const auto v = parse_int<int>(value.text);
      if (!v || *v < -1000 || *v > 1000) fail(value.column, "invalid shift '" + std::string(value.text) + "'");
      m.shift = *v;
      m.has_shift = true;
    } else {
      fail(key.column, "unknown map key '" + std::string(key.text) + "'");
    }
  }

  NovikovElement literal(const PendingEntry& e) const { return parse_literal(e.literal.text, lattice_, e.line, e.literal.column); }

  static std::size_t lookup(const BasedComplex& c, const Span& name, std::size_t line, const std::string& where) {
    const auto idx = c.find(std::string(name.text));
    if (!idx) throw ParseError(line, name.column, "undeclared generator '" + std::string(name.text) + "' in " + where);
    return *idx;
  }

  ComplexDocument assemble() {
    ComplexDocument doc;
    doc.lattice = lattice_;
    doc.grading_kind = kind_;
    for (const PendingComplex& pc : complexes_) {
      auto c = std::make_shared<BasedComplex>(lattice_, grading_);
      // Generators are stored by degree, then declaration order, which is
      // the order render_document writes them in.
      auto generators = pc.generators;
      std::stable_sort(generators.begin(), generators.end(),
                       [](const auto& a, const auto& b) { return a.second < b.second; });
      for (const auto& [name, degree] : generators) c->add_generator(name, degree);
      std::map<EntryKey, std::size_t> seen;
      for (const PendingEntry& e : pc.entries) {
        const std::string where = "complex '" + pc.name + "'";
        const std::size_t s = lookup(*c, e.source, e.line, where);
        const std::size_t t = lookup(*c, e.target, e.line, where);
        if (auto [it, fresh] = seen.try_emplace({s, t}, e.line); !fresh) {
          throw ParseError(e.line, e.source.column, "duplicate entry (first on line " + std::to_string(it->second) + ")");
        }
        const int want = grading_.shift(c->generators()[s].degree, 1);
        if (c->generators()[t].degree != want) {
          throw ParseError(e.line, e.target.column,
                           "target '" + std::string(e.target.text) + "' has degree " +
                               std::to_string(c->generators()[t].degree) + ", expected " + std::to_string(want));
        }
        c->set_entry(s, t, literal(e));
      }
      doc.complexes.push_back({pc.name, std::move(c)});
    }
    for (const PendingMap& pm : maps_) {
      if (!pm.source) throw ParseError(pm.line, 1, "map '" + pm.name + "' has no source");
      if (!pm.target) throw ParseError(pm.line, 1, "map '" + pm.name + "' has no target");
      auto resolve = [&](const std::pair<std::string, Span>& ref, std::size_t line) {
        for (const auto& nc : doc.complexes) {
          if (nc.name == ref.first) return nc.complex;
        }
        throw ParseError(line, ref.second.column, "unknown complex '" + ref.first + "'");
      };
      auto src = resolve(*pm.source, pm.source_line);
      auto tgt = resolve(*pm.target, pm.target_line);
      auto m = std::make_shared<GradedMap>(src, tgt, pm.shift);
      std::map<EntryKey, std::size_t> seen;
      for (const PendingEntry& e : pm.entries) {
        const std::string where = "map '" + pm.name + "'";
        const std::size_t s = lookup(*src, e.source, e.line, where);
        const std::size_t t = lookup(*tgt, e.target, e.line, where);
        if (auto [it, fresh] = seen.try_emplace({s, t}, e.line); !fresh) {
          throw ParseError(e.line, e.source.column, "duplicate entry (first on line " + std::to_string(it->second) + ")");
        }
        const int want = grading_.shift(src->generators()[s].degree, pm.shift);
        if (tgt->generators()[t].degree != want) {
          throw ParseError(e.line, e.target.column,
                           "target '" + std::string(e.target.text) + "' has degree " +
                               std::to_string(tgt->generators()[t].degree) + ", expected " + std::to_string(want));
        }
        m->set_entry(s, t, literal(e));
      }
      doc.maps.push_back({pm.name, pm.source->first, pm.target->first, std::move(m)});
    }
    return doc;
  }

  std::string_view text_;
  std::size_t line_ = 0;
  Section section_ = Section::None;
  bool group_seen_ = false;
  std::map<std::string, std::pair<std::size_t, Span>> group_keys_;
  LatticePtr lattice_;
  GradingKind kind_ = GradingKind::Z2;
  Grading grading_;
  int module_degree_ = 0;
  std::vector<PendingComplex> complexes_;
  std::vector<PendingMap> maps_;
};

void render_entries(std::ostringstream& out, const SparseEntries& entries, const BasedComplex& src,
                    const BasedComplex& tgt, const std::vector<std::size_t>& src_pos,
                    const std::vector<std::size_t>& tgt_pos) {
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, std::string>> lines;
  for (const auto& [key, value] : entries) {
    lines.push_back({{src_pos[key.first], tgt_pos[key.second]},
                     src.generators()[key.first].name + " -> " + tgt.generators()[key.second].name + ": " +
                         format_literal(value)});
  }
  std::sort(lines.begin(), lines.end());
  for (const auto& [key, text] : lines) out << text << '\n';
}

// Rendered position of every generator: by degree, then declaration order.
std::vector<std::size_t> rendered_positions(const BasedComplex& c) {
  std::vector<std::size_t> pos(c.generators().size());
  std::size_t k = 0;
  for (int d : c.degrees()) {
    for (std::size_t i : c.basis(d)) pos[i] = k++;
  }
  return pos;
}

}  // namespace

std::string to_string(GradingKind kind) {
  switch (kind) {
    case GradingKind::Z:
      return "z";
    case GradingKind::Z2:
      return "z2";
    case GradingKind::Z2N:
      return "z2n";
  }
  return "z2";
}

Grading ComplexDocument::grading() const {
  switch (grading_kind) {
    case GradingKind::Z:
      return Grading::z();
    case GradingKind::Z2:
      return Grading::z2();
    case GradingKind::Z2N:
      return Grading::from_chern(lattice->minimal_chern_number());
  }
  return Grading::z2();
}

const std::shared_ptr<const BasedComplex>& ComplexDocument::complex_ptr(std::string_view name) const {
  for (const auto& c : complexes) {
    if (c.name == name) return c.complex;
  }
  throw StructuralError("document has no complex '" + std::string(name) + "'");
}

const BasedComplex& ComplexDocument::complex(std::string_view name) const { return *complex_ptr(name); }

const NamedMap& ComplexDocument::map(std::string_view name) const {
  for (const auto& m : maps) {
    if (m.name == name) return m;
  }
  throw StructuralError("document has no map '" + std::string(name) + "'");
}

bool operator==(const ComplexDocument& a, const ComplexDocument& b) {
  if (*a.lattice != *b.lattice || a.grading_kind != b.grading_kind) return false;
  if (a.complexes.size() != b.complexes.size() || a.maps.size() != b.maps.size()) return false;
  for (std::size_t i = 0; i < a.complexes.size(); ++i) {
    if (a.complexes[i].name != b.complexes[i].name || !(*a.complexes[i].complex == *b.complexes[i].complex)) {
      return false;
    }
  }
  for (std::size_t i = 0; i < a.maps.size(); ++i) {
    const auto& x = a.maps[i];
    const auto& y = b.maps[i];
    if (x.name != y.name || x.source != y.source || x.target != y.target || x.map->shift() != y.map->shift() ||
        x.map->entries() != y.map->entries()) {
      return false;
    }
  }
  return true;
}

ComplexDocument parse_document(std::string_view text) { return Parser(text).run(); }

std::string render_document(const ComplexDocument& doc) {
  std::ostringstream out;
  const Lattice& l = *doc.lattice;
  out << "[group]\nrank: " << l.rank() << "\nphi:";
  for (const auto& q : l.phi()) out << ' ' << to_string(q);
  out << "\nc1:";
  for (auto c : l.c1()) out << ' ' << c;
  out << "\ngrading: " << to_string(doc.grading_kind) << '\n';

  for (const auto& [name, c] : doc.complexes) {
    out << "\n[complex " << name << "]\n";
    for (int d : c->degrees()) {
      out << "[module " << d << "]\n";
      for (std::size_t i : c->basis(d)) out << c->generators()[i].name << '\n';
    }
    if (!c->entries().empty()) {
      out << "[differential]\n";
      const auto pos = rendered_positions(*c);
      render_entries(out, c->entries(), *c, *c, pos, pos);
    }
  }
  for (const auto& m : doc.maps) {
    out << "\n[map " << m.name << "]\nsource: " << m.source << "\ntarget: " << m.target << '\n';
    if (m.map->shift() != 0) out << "shift: " << m.map->shift() << '\n';
    render_entries(out, m.map->entries(), m.map->source(), m.map->target(), rendered_positions(m.map->source()),
                   rendered_positions(m.map->target()));
  }
  return out.str();
}

std::string normalize_document(std::string_view text) { return render_document(parse_document(text)); }

ComplexDocument read_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read '" + path.string() + "'");
  const std::string text = buf.str();
  return parse_document(text);
}

ComplexDocument make_document(const BasedComplex& c, GradingKind kind) {
  ComplexDocument doc;
  doc.lattice = c.lattice_ptr();
  doc.grading_kind = kind;
  if (!(doc.grading() == c.grading())) throw StructuralError("grading kind does not match the complex");
  doc.complexes.push_back({"main", std::make_shared<const BasedComplex>(c)});
  return doc;
}

}  // namespace symt
