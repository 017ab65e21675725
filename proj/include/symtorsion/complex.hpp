#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "symtorsion/matrix.hpp"

namespace symt {

// Degrees live in Z (modulus 0) or in Z/m for an even modulus m (2 for the
// Z2 grading, 2N for the Z_{2N} grading).
struct Grading {
  int modulus = 2;

  static Grading z() { return {0}; }
  static Grading z2() { return {2}; }
  // Z_{2N}, or Z when N is unbounded.
  static Grading from_chern(const ChernNumber& n);

  int normalize(long long degree) const;
  int shift(int degree, int by) const { return normalize(static_cast<long long>(degree) + by); }
  int parity(int degree) const { return ((degree % 2) + 2) % 2; }

  friend bool operator==(const Grading&, const Grading&) = default;
};

struct Generator {
  std::string name;
  int degree = 0;

  friend bool operator==(const Generator&, const Generator&) = default;
};

// Index pair (source generator, target generator) of a sparse matrix entry.
using EntryKey = std::pair<std::size_t, std::size_t>;
using SparseEntries = std::map<EntryKey, NovikovElement>;

// Free graded cochain complex over the Novikov ring with a distinguished
// basis (the generators, in declaration order) and a degree +1 differential
// stored sparsely as d(source) = sum entry * target.
class BasedComplex {
 public:
  BasedComplex(LatticePtr lattice, Grading grading);

  // Builds a Z2-graded complex from block matrices: d_even maps the n0 even
  // generators to the n1 odd ones (n1 x n0), d_odd goes back (n0 x n1).
  // Generators are named e0.. and o0.. unless names are supplied.
  static BasedComplex from_z2_matrices(const Matrix& d_even, const Matrix& d_odd,
                                       std::vector<std::string> even_names = {},
                                       std::vector<std::string> odd_names = {});

  const LatticePtr& lattice_ptr() const noexcept { return lattice_; }
  const Lattice& lattice() const noexcept { return *lattice_; }
  const Grading& grading() const noexcept { return grading_; }
  const std::vector<Generator>& generators() const noexcept { return generators_; }
  const SparseEntries& entries() const noexcept { return entries_; }

  // Throws StructuralError on duplicate names.
  std::size_t add_generator(std::string name, int degree);
  // Throws StructuralError for unknown names or a target outside degree + 1.
  void set_entry(std::size_t source, std::size_t target, NovikovElement value);
  void set_entry(const std::string& source, const std::string& target, NovikovElement value);

  std::optional<std::size_t> find(const std::string& name) const;
  const NovikovElement& entry(std::size_t source, std::size_t target) const;

  // Distinct degrees carrying generators, ascending.
  std::vector<int> degrees() const;
  // Generator indices of one degree, in declaration order.
  std::vector<std::size_t> basis(int degree) const;
  // Rows: basis(degree + 1); columns: basis(degree).
  Matrix differential(int degree) const;

  // Collapse to the Z2 grading. Even/odd generator lists are ordered by
  // (degree, declaration order).
  struct Z2View {
    std::vector<std::size_t> even;
    std::vector<std::size_t> odd;
    Matrix d_even;  // odd x even
    Matrix d_odd;   // even x odd
  };
  Z2View z2() const;
  // Generator indices of one parity, ordered by (degree, declaration order).
  std::vector<std::size_t> parity_basis(int parity) const;

  // Replaces the lift of generator `index` by g * lift: column entries are
  // multiplied by g, row entries by g^{-1}.
  BasedComplex relabeled(std::size_t index, const GroupElement& g) const;

  // Value equality: lattice, grading, generators and entries.
  friend bool operator==(const BasedComplex& a, const BasedComplex& b);

 private:
  LatticePtr lattice_;
  Grading grading_;
  std::vector<Generator> generators_;
  std::map<std::string, std::size_t> index_;
  SparseEntries entries_;
  NovikovElement zero_;
};

// Graded module map between two based complexes over the same lattice and
// grading, raising degree by `shift` (0 for chain maps, -1 for homotopies).
class GradedMap {
 public:
  GradedMap(std::shared_ptr<const BasedComplex> source, std::shared_ptr<const BasedComplex> target, int shift = 0);

  const BasedComplex& source() const noexcept { return *source_; }
  const BasedComplex& target() const noexcept { return *target_; }
  const std::shared_ptr<const BasedComplex>& source_ptr() const noexcept { return source_; }
  const std::shared_ptr<const BasedComplex>& target_ptr() const noexcept { return target_; }
  int shift() const noexcept { return shift_; }
  const SparseEntries& entries() const noexcept { return entries_; }

  void set_entry(std::size_t source, std::size_t target, NovikovElement value);
  void set_entry(const std::string& source, const std::string& target, NovikovElement value);
  const NovikovElement& entry(std::size_t source, std::size_t target) const;

  // Rows: target.basis(degree + shift); columns: source.basis(degree).
  Matrix matrix(int degree) const;

  // Same map in the Z2 collapse: even_block maps source-even generators to
  // target generators of parity shift, odd_block likewise.
  struct Z2Blocks {
    Matrix from_even;
    Matrix from_odd;
  };
  Z2Blocks z2() const;

  // Assembles a map from Z2 blocks (rows/cols in z2() ordering).
  static GradedMap from_z2_blocks(std::shared_ptr<const BasedComplex> source,
                                  std::shared_ptr<const BasedComplex> target, int shift, const Matrix& from_even,
                                  const Matrix& from_odd);

 private:
  std::shared_ptr<const BasedComplex> source_;
  std::shared_ptr<const BasedComplex> target_;
  int shift_;
  SparseEntries entries_;
  NovikovElement zero_;
};

using ChainMap = GradedMap;

struct ValidationReport {
  bool valid = true;
  Cutoff certified_below;  // weakest cutoff at which a d∘d entry was accepted as zero
  std::vector<std::string> problems;
};

// Checks d∘d = 0 in every degree.
ValidationReport validate(const BasedComplex& c);
// Throws InvalidComplex listing the problems when validate() fails.
void require_valid(const BasedComplex& c);

// Checks d_target∘f = f∘d_source in every degree (f must have shift 0).
ValidationReport validate_chain_map(const GradedMap& f);

struct HomologyRanks {
  std::map<int, std::size_t> ranks;  // by degree
  Cutoff certified_below;

  bool acyclic() const;
};

// Ranks of cohomology over the fraction field, by leading-term pivoting.
HomologyRanks homology_ranks(const BasedComplex& c);

struct ParityCounts {
  std::size_t even = 0;
  std::size_t odd = 0;

  friend bool operator==(const ParityCounts&, const ParityCounts&) = default;
};

ParityCounts euler_parity(const BasedComplex& c);

}  // namespace symt
