#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "symtorsion/novikov.hpp"

namespace symt {

// Dense row-major matrix of Novikov elements over one lattice.
class Matrix {
 public:
  Matrix(LatticePtr lattice, std::size_t rows, std::size_t cols);

  static Matrix identity(LatticePtr lattice, std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const LatticePtr& lattice_ptr() const noexcept { return lattice_; }

  NovikovElement& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const NovikovElement& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix operator*(const Matrix& other) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix operator-() const;

  Matrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;

  // Every entry has no known terms (exactly zero, or zero below its cutoff).
  bool is_zero() const;
  // Minimum cutoff over all entries; empty when every entry is exact.
  Cutoff weakest_cutoff() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  LatticePtr lattice_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<NovikovElement> data_;
};

// det = numerator / denominator, both units of the Novikov ring when every
// pivot met during elimination had an unambiguous leading term.
struct DeterminantFraction {
  NovikovElement numerator;
  NovikovElement denominator;
};

// Division-free Gaussian elimination: each row update multiplies by the pivot,
// and those factors are collected in the denominator. Pivots are chosen among
// entries with a unique leading term. Throws IndeterminatePivot when a column
// has nonzero entries but none of them qualifies; a zero column yields
// numerator 0.
DeterminantFraction determinant(const Matrix& m);

struct ColumnRank {
  std::vector<std::size_t> pivot_columns;  // in the order they were selected
  Cutoff certified_below;                  // weakest cutoff at which a zero was accepted
};

// Greedy selection of linearly independent columns, scanning columns in
// `order` (all columns in natural order when empty). The number of selected
// columns is the rank over the fraction field.
ColumnRank independent_columns(const Matrix& m, std::span<const std::size_t> order = {});

}  // namespace symt
