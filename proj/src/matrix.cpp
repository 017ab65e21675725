#include "symtorsion/matrix.hpp"

#include <numeric>
#include <optional>
#include <string>

#include "symtorsion/errors.hpp"

namespace symt {

Matrix::Matrix(LatticePtr lattice, std::size_t rows, std::size_t cols)
    : lattice_(std::move(lattice)), rows_(rows), cols_(cols), data_(rows * cols, NovikovElement::zero(lattice_)) {}

Matrix Matrix::identity(LatticePtr lattice, std::size_t n) {
  Matrix m(lattice, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = NovikovElement::one(lattice);
  return m;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) {
    throw StructuralError("cannot multiply " + std::to_string(rows_) + "x" + std::to_string(cols_) + " by " +
                          std::to_string(other.rows_) + "x" + std::to_string(other.cols_));
  }
  require_same_lattice(*lattice_, *other.lattice_);
  Matrix out(lattice_, rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const auto& a = at(i, k);
      if (a.is_exact_zero()) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        const auto& b = other.at(k, j);
        if (b.is_exact_zero()) continue;
        out.at(i, j) = out.at(i, j) + a * b;
      }
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw StructuralError("matrix shapes differ in addition");
  Matrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + other.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& other) const { return *this + (-other); }

Matrix Matrix::operator-() const {
  Matrix out(*this);
  for (auto& e : out.data_) e = -e;
  return out;
}

Matrix Matrix::submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
  Matrix out(lattice_, rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) out.at(i, j) = at(rows[i], cols[j]);
  }
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& e : data_) {
    if (!e.has_no_terms()) return false;
  }
  return true;
}

Cutoff Matrix::weakest_cutoff() const {
  Cutoff c;
  for (const auto& e : data_) c = min_cutoff(c, e.cutoff());
  return c;
}

namespace {

// Among rows in `candidates` whose entry in column `col` has known terms,
// pick one with a unique leading term, preferring the sparsest entry.
// Returns nullopt when no candidate has known terms.
std::optional<std::size_t> choose_pivot(const Matrix& a, std::span<const std::size_t> candidates, std::size_t col) {
  std::optional<std::size_t> best;
  bool saw_nonzero = false;
  for (std::size_t r : candidates) {
    const auto& e = a.at(r, col);
    if (e.has_no_terms()) continue;
    saw_nonzero = true;
    if (!e.leading_term().is_unique()) continue;
    if (!best || e.terms().size() < a.at(*best, col).terms().size()) best = r;
  }
  if (saw_nonzero && !best) {
    throw IndeterminatePivot("column " + std::to_string(col) +
                             " has nonzero entries but none with a unique leading term");
  }
  return best;
}

// row_i <- pivot * row_i - a_i * row_p on columns [from, cols).
void eliminate(Matrix& a, std::size_t pivot_row, std::size_t row, std::size_t col, std::size_t from) {
  const NovikovElement pivot = a.at(pivot_row, col);
  const NovikovElement factor = a.at(row, col);
  for (std::size_t j = from; j < a.cols(); ++j) {
    a.at(row, j) = pivot * a.at(row, j) - factor * a.at(pivot_row, j);
  }
}

}  // namespace

DeterminantFraction determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw StructuralError("determinant of a non-square matrix");
  const auto& lat = m.lattice_ptr();
  const std::size_t n = m.rows();
  Matrix a = m;
  NovikovElement den = NovikovElement::one(lat);
  bool negate = false;

  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::size_t> rows(n - k);
    std::iota(rows.begin(), rows.end(), k);
    auto p = choose_pivot(a, rows, k);
    if (!p) {
      Cutoff c;
      for (std::size_t r = k; r < n; ++r) c = min_cutoff(c, a.at(r, k).cutoff());
      return {NovikovElement(lat, {}, c), den};
    }
    if (*p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(*p, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a.at(i, k).is_exact_zero()) continue;
      eliminate(a, k, i, k, k);
      den = den * a.at(k, k);
    }
  }

  NovikovElement num = NovikovElement::one(lat);
  for (std::size_t k = 0; k < n; ++k) num = num * a.at(k, k);
  return {negate ? -num : num, den};
}

ColumnRank independent_columns(const Matrix& m, std::span<const std::size_t> order) {
  std::vector<std::size_t> natural;
  if (order.empty()) {
    natural.resize(m.cols());
    std::iota(natural.begin(), natural.end(), 0);
    order = natural;
  }
  Matrix a = m;
  std::vector<std::size_t> free_rows(m.rows());
  std::iota(free_rows.begin(), free_rows.end(), 0);
  ColumnRank result;

  for (std::size_t col : order) {
    if (col >= m.cols()) throw StructuralError("column order refers to a missing column");
    auto p = choose_pivot(a, free_rows, col);
    if (!p) {
      for (std::size_t r : free_rows) result.certified_below = min_cutoff(result.certified_below, a.at(r, col).cutoff());
      continue;
    }
    result.pivot_columns.push_back(col);
    std::erase(free_rows, *p);
    for (std::size_t r : free_rows) {
      if (!a.at(r, col).is_exact_zero()) eliminate(a, *p, r, col, 0);
    }
  }
  return result;
}

}  // namespace symt
