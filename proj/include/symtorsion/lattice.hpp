#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <vector>

#include "symtorsion/rational.hpp"

namespace symt {

// An element of the free abelian group Z^k, written additively in the
// generator basis.
class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}
  GroupElement(std::initializer_list<std::int64_t> coords) : coords_(coords) {}

  static GroupElement identity(std::size_t rank) { return GroupElement(std::vector<std::int64_t>(rank, 0)); }
  static GroupElement generator(std::size_t rank, std::size_t i);

  std::size_t rank() const noexcept { return coords_.size(); }
  const std::vector<std::int64_t>& coords() const noexcept { return coords_; }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  bool is_identity() const noexcept;

  GroupElement operator+(const GroupElement& other) const;
  GroupElement operator-(const GroupElement& other) const;
  GroupElement operator-() const;
  GroupElement& operator+=(const GroupElement& other);

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  std::vector<std::int64_t> coords_;
};

// Minimal Chern number: the positive generator of the image of c1, or
// Unbounded when c1 vanishes identically.
struct ChernNumber {
  std::optional<std::int64_t> value;

  bool unbounded() const noexcept { return !value.has_value(); }
  friend bool operator==(const ChernNumber&, const ChernNumber&) = default;
};

// Gamma = Z^k together with the weighting homomorphism phi (rational values on
// generators) and the Chern homomorphism c1 (integer values on generators).
class Lattice {
 public:
  Lattice(std::vector<Rational> phi, std::vector<std::int64_t> c1);

  // Rank-1 lattice with phi(z) = 1, c1(z) = 0: the Laurent-series setting.
  static std::shared_ptr<const Lattice> laurent();

  std::size_t rank() const noexcept { return phi_.size(); }
  const std::vector<Rational>& phi() const noexcept { return phi_; }
  const std::vector<std::int64_t>& c1() const noexcept { return c1_; }

  Rational weight(const GroupElement& g) const;
  std::int64_t chern(const GroupElement& g) const;
  bool in_gamma0(const GroupElement& g) const { return chern(g) == 0; }
  ChernNumber minimal_chern_number() const;

  GroupElement identity() const { return GroupElement::identity(rank()); }

  friend bool operator==(const Lattice&, const Lattice&) = default;

 private:
  void check_rank(const GroupElement& g) const;

  std::vector<Rational> phi_;
  std::vector<std::int64_t> c1_;
};

using LatticePtr = std::shared_ptr<const Lattice>;

// Throws StructuralError unless both lattices are the same object or equal.
void require_same_lattice(const Lattice& a, const Lattice& b);

}  // namespace symt
