#include "symtorsion/complex.hpp"

#include <algorithm>
#include <set>

#include "symtorsion/errors.hpp"
#include "symtorsion/literal.hpp"

namespace symt {

Grading Grading::from_chern(const ChernNumber& n) {
  if (n.unbounded()) return z();
  return {static_cast<int>(2 * *n.value)};
}

int Grading::normalize(long long degree) const {
  if (modulus == 0) return static_cast<int>(degree);
  long long m = modulus;
  return static_cast<int>(((degree % m) + m) % m);
}

// ---------------------------------------------------------------------------
// BasedComplex

BasedComplex::BasedComplex(LatticePtr lattice, Grading grading)
    : lattice_(std::move(lattice)), grading_(grading), zero_(NovikovElement::zero(lattice_)) {
  if (grading_.modulus < 0 || grading_.modulus % 2 != 0) {
    throw StructuralError("grading modulus must be 0 (Z) or even, got " + std::to_string(grading_.modulus));
  }
}

bool operator==(const BasedComplex& a, const BasedComplex& b) {
  return *a.lattice_ == *b.lattice_ && a.grading_ == b.grading_ && a.generators_ == b.generators_ &&
         a.entries_ == b.entries_;
}

BasedComplex BasedComplex::from_z2_matrices(const Matrix& d_even, const Matrix& d_odd,
                                            std::vector<std::string> even_names,
                                            std::vector<std::string> odd_names) {
  const std::size_t n0 = d_even.cols();
  const std::size_t n1 = d_even.rows();
  if (d_odd.rows() != n0 || d_odd.cols() != n1) {
    throw StructuralError("Z2 differential blocks have incompatible shapes");
  }
  if (even_names.empty()) {
    for (std::size_t i = 0; i < n0; ++i) even_names.push_back("e" + std::to_string(i));
  }
  if (odd_names.empty()) {
    for (std::size_t i = 0; i < n1; ++i) odd_names.push_back("o" + std::to_string(i));
  }
  if (even_names.size() != n0 || odd_names.size() != n1) throw StructuralError("wrong number of generator names");

  BasedComplex c(d_even.lattice_ptr(), Grading::z2());
  for (auto& n : even_names) c.add_generator(std::move(n), 0);
  for (auto& n : odd_names) c.add_generator(std::move(n), 1);
  for (std::size_t j = 0; j < n0; ++j) {
    for (std::size_t i = 0; i < n1; ++i) c.set_entry(j, n0 + i, d_even.at(i, j));
  }
  for (std::size_t j = 0; j < n1; ++j) {
    for (std::size_t i = 0; i < n0; ++i) c.set_entry(n0 + j, i, d_odd.at(i, j));
  }
  return c;
}

std::size_t BasedComplex::add_generator(std::string name, int degree) {
  if (index_.contains(name)) throw StructuralError("duplicate generator '" + name + "'");
  const std::size_t idx = generators_.size();
  index_.emplace(name, idx);
  generators_.push_back({std::move(name), grading_.normalize(degree)});
  return idx;
}

void BasedComplex::set_entry(std::size_t source, std::size_t target, NovikovElement value) {
  if (source >= generators_.size() || target >= generators_.size()) {
    throw StructuralError("differential entry refers to a missing generator");
  }
  require_same_lattice(*lattice_, value.lattice());
  const int expected = grading_.shift(generators_[source].degree, 1);
  if (generators_[target].degree != expected) {
    throw StructuralError("differential from '" + generators_[source].name + "' (degree " +
                          std::to_string(generators_[source].degree) + ") cannot reach '" +
                          generators_[target].name + "' (degree " + std::to_string(generators_[target].degree) +
                          ")");
  }
  if (value.is_exact_zero()) {
    entries_.erase({source, target});
  } else {
    entries_.insert_or_assign({source, target}, std::move(value));
  }
}

void BasedComplex::set_entry(const std::string& source, const std::string& target, NovikovElement value) {
  auto s = find(source);
  auto t = find(target);
  if (!s) throw StructuralError("undeclared generator '" + source + "'");
  if (!t) throw StructuralError("undeclared generator '" + target + "'");
  set_entry(*s, *t, std::move(value));
}

std::optional<std::size_t> BasedComplex::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const NovikovElement& BasedComplex::entry(std::size_t source, std::size_t target) const {
  auto it = entries_.find({source, target});
  return it == entries_.end() ? zero_ : it->second;
}

std::vector<int> BasedComplex::degrees() const {
  std::set<int> d;
  for (const auto& g : generators_) d.insert(g.degree);
  return {d.begin(), d.end()};
}

std::vector<std::size_t> BasedComplex::basis(int degree) const {
  degree = grading_.normalize(degree);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].degree == degree) out.push_back(i);
  }
  return out;
}

Matrix BasedComplex::differential(int degree) const {
  const auto cols = basis(degree);
  const auto rows = basis(grading_.shift(degree, 1));
  Matrix m(lattice_, rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) m.at(i, j) = entry(cols[j], rows[i]);
  }
  return m;
}

std::vector<std::size_t> BasedComplex::parity_basis(int parity) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (grading_.parity(generators_[i].degree) == parity) out.push_back(i);
  }
  std::stable_sort(out.begin(), out.end(),
                   [&](std::size_t a, std::size_t b) { return generators_[a].degree < generators_[b].degree; });
  return out;
}

BasedComplex::Z2View BasedComplex::z2() const {
  auto even = parity_basis(0);
  auto odd = parity_basis(1);
  Matrix d_even(lattice_, odd.size(), even.size());
  Matrix d_odd(lattice_, even.size(), odd.size());
  for (std::size_t i = 0; i < odd.size(); ++i) {
    for (std::size_t j = 0; j < even.size(); ++j) {
      d_even.at(i, j) = entry(even[j], odd[i]);
      d_odd.at(j, i) = entry(odd[i], even[j]);
    }
  }
  return {std::move(even), std::move(odd), std::move(d_even), std::move(d_odd)};
}

BasedComplex BasedComplex::relabeled(std::size_t index, const GroupElement& g) const {
  BasedComplex out(*this);
  for (auto& [key, value] : out.entries_) {
    if (key.first == index) value = value.shifted(g);
    if (key.second == index) value = value.shifted(-g);
  }
  return out;
}

// ---------------------------------------------------------------------------
// GradedMap

GradedMap::GradedMap(std::shared_ptr<const BasedComplex> source, std::shared_ptr<const BasedComplex> target,
                     int shift)
    : source_(std::move(source)), target_(std::move(target)), shift_(shift), zero_(NovikovElement::zero(source_->lattice_ptr())) {
  require_same_lattice(source_->lattice(), target_->lattice());
  if (!(source_->grading() == target_->grading())) throw StructuralError("map between differently graded complexes");
}

void GradedMap::set_entry(std::size_t source, std::size_t target, NovikovElement value) {
  const auto& sg = source_->generators();
  const auto& tg = target_->generators();
  if (source >= sg.size() || target >= tg.size()) throw StructuralError("map entry refers to a missing generator");
  require_same_lattice(source_->lattice(), value.lattice());
  const int expected = source_->grading().shift(sg[source].degree, shift_);
  if (tg[target].degree != expected) {
    throw StructuralError("map entry from '" + sg[source].name + "' to '" + tg[target].name +
                          "' does not have degree " + std::to_string(shift_));
  }
  if (value.is_exact_zero()) {
    entries_.erase({source, target});
  } else {
    entries_.insert_or_assign({source, target}, std::move(value));
  }
}

void GradedMap::set_entry(const std::string& source, const std::string& target, NovikovElement value) {
  auto s = source_->find(source);
  auto t = target_->find(target);
  if (!s) throw StructuralError("undeclared source generator '" + source + "'");
  if (!t) throw StructuralError("undeclared target generator '" + target + "'");
  set_entry(*s, *t, std::move(value));
}

const NovikovElement& GradedMap::entry(std::size_t source, std::size_t target) const {
  auto it = entries_.find({source, target});
  return it == entries_.end() ? zero_ : it->second;
}

Matrix GradedMap::matrix(int degree) const {
  const auto cols = source_->basis(degree);
  const auto rows = target_->basis(source_->grading().shift(degree, shift_));
  Matrix m(source_->lattice_ptr(), rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) m.at(i, j) = entry(cols[j], rows[i]);
  }
  return m;
}

GradedMap::Z2Blocks GradedMap::z2() const {
  const int s = ((shift_ % 2) + 2) % 2;
  auto block = [&](int parity) {
    auto cols = source_->parity_basis(parity);
    auto rows = target_->parity_basis((parity + s) % 2);
    Matrix m(source_->lattice_ptr(), rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < cols.size(); ++j) m.at(i, j) = entry(cols[j], rows[i]);
    }
    return m;
  };
  return {block(0), block(1)};
}

GradedMap GradedMap::from_z2_blocks(std::shared_ptr<const BasedComplex> source,
                                    std::shared_ptr<const BasedComplex> target, int shift, const Matrix& from_even,
                                    const Matrix& from_odd) {
  GradedMap f(source, target, shift);
  const int s = ((shift % 2) + 2) % 2;
  for (int parity : {0, 1}) {
    const Matrix& m = parity == 0 ? from_even : from_odd;
    auto cols = source->parity_basis(parity);
    auto rows = target->parity_basis((parity + s) % 2);
    if (m.rows() != rows.size() || m.cols() != cols.size()) throw StructuralError("map block has the wrong shape");
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < cols.size(); ++j) f.set_entry(cols[j], rows[i], m.at(i, j));
    }
  }
  return f;
}

// ---------------------------------------------------------------------------
// Checks and invariants

namespace {

void record_zero_matrix(const Matrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols,
                        const std::string& what, const std::vector<Generator>& row_gens,
                        const std::vector<Generator>& col_gens, ValidationReport& report) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& e = m.at(i, j);
      if (e.has_no_terms()) {
        report.certified_below = min_cutoff(report.certified_below, e.cutoff());
        continue;
      }
      report.valid = false;
      report.problems.push_back(what + " at (" + col_gens[cols[j]].name + " -> " + row_gens[rows[i]].name +
                                ") is " + format_literal(e));
    }
  }
}

}  // namespace

ValidationReport validate(const BasedComplex& c) {
  ValidationReport report;
  const auto& g = c.grading();
  for (int d : c.degrees()) {
    const int d1 = g.shift(d, 1);
    const int d2 = g.shift(d, 2);
    Matrix dd = c.differential(d1) * c.differential(d);
    record_zero_matrix(dd, c.basis(d2), c.basis(d), "d(d)", c.generators(), c.generators(), report);
  }
  return report;
}

void require_valid(const BasedComplex& c) {
  auto report = validate(c);
  if (report.valid) return;
  std::string msg = "d composed with d is not zero:";
  for (const auto& p : report.problems) msg += "\n  " + p;
  throw InvalidComplex(msg);
}

ValidationReport validate_chain_map(const GradedMap& f) {
  if (f.shift() != 0) throw StructuralError("a chain map must preserve degree");
  ValidationReport report;
  const auto& src = f.source();
  const auto& tgt = f.target();
  const auto& g = src.grading();
  for (int d : src.degrees()) {
    const int d1 = g.shift(d, 1);
    Matrix lhs = tgt.differential(d) * f.matrix(d);  // rows: tgt basis(d+1)
    Matrix rhs = f.matrix(d1) * src.differential(d);
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
      report.valid = false;
      report.problems.push_back("shape mismatch in degree " + std::to_string(d));
      continue;
    }
    record_zero_matrix(lhs - rhs, tgt.basis(d1), src.basis(d), "d f - f d", tgt.generators(), src.generators(),
                       report);
  }
  return report;
}

bool HomologyRanks::acyclic() const {
  return std::all_of(ranks.begin(), ranks.end(), [](const auto& kv) { return kv.second == 0; });
}

HomologyRanks homology_ranks(const BasedComplex& c) {
  HomologyRanks out;
  const auto& g = c.grading();
  std::map<int, std::size_t> rank_of_d;
  auto rank = [&](int d) -> std::size_t {
    d = g.normalize(d);
    if (auto it = rank_of_d.find(d); it != rank_of_d.end()) return it->second;
    auto cr = independent_columns(c.differential(d));
    out.certified_below = min_cutoff(out.certified_below, cr.certified_below);
    rank_of_d[d] = cr.pivot_columns.size();
    return cr.pivot_columns.size();
  };
  for (int d : c.degrees()) {
    const std::size_t n = c.basis(d).size();
    const std::size_t r_out = rank(d);
    const std::size_t r_in = rank(g.shift(d, -1));
    if (r_out + r_in > n) throw InvalidComplex("ranks exceed the module rank; d(d) is not zero");
    out.ranks[d] = n - r_out - r_in;
  }
  return out;
}

ParityCounts euler_parity(const BasedComplex& c) {
  ParityCounts p;
  for (const auto& gen : c.generators()) {
    if (c.grading().parity(gen.degree) == 0) {
      ++p.even;
    } else {
      ++p.odd;
    }
  }
  return p;
}

}  // namespace symt
