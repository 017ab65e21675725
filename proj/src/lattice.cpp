#include "symtorsion/lattice.hpp"

#include <cstdlib>
#include <numeric>
#include <string>

#include "symtorsion/errors.hpp"

namespace symt {

GroupElement GroupElement::generator(std::size_t rank, std::size_t i) {
  std::vector<std::int64_t> c(rank, 0);
  c.at(i) = 1;
  return GroupElement(std::move(c));
}

bool GroupElement::is_identity() const noexcept {
  for (auto c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

GroupElement GroupElement::operator+(const GroupElement& other) const {
  GroupElement out(*this);
  out += other;
  return out;
}

GroupElement GroupElement::operator-(const GroupElement& other) const { return *this + (-other); }

GroupElement GroupElement::operator-() const {
  GroupElement out(*this);
  for (auto& c : out.coords_) c = -c;
  return out;
}

GroupElement& GroupElement::operator+=(const GroupElement& other) {
  if (other.rank() != rank()) {
    throw StructuralError("group elements of rank " + std::to_string(rank()) + " and " +
                          std::to_string(other.rank()) + " cannot be combined");
  }
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Lattice::Lattice(std::vector<Rational> phi, std::vector<std::int64_t> c1) : phi_(std::move(phi)), c1_(std::move(c1)) {
  if (phi_.size() != c1_.size()) {
    throw StructuralError("lattice phi has " + std::to_string(phi_.size()) + " entries but c1 has " +
                          std::to_string(c1_.size()));
  }
}

std::shared_ptr<const Lattice> Lattice::laurent() {
  static const auto lattice = std::make_shared<const Lattice>(std::vector<Rational>{Rational(1)},
                                                              std::vector<std::int64_t>{0});
  return lattice;
}

void Lattice::check_rank(const GroupElement& g) const {
  if (g.rank() != rank()) {
    throw StructuralError("group element of rank " + std::to_string(g.rank()) + " in a lattice of rank " +
                          std::to_string(rank()));
  }
}

Rational Lattice::weight(const GroupElement& g) const {
  check_rank(g);
  Rational w = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (g[i] != 0) w += phi_[i] * g[i];
  }
  return w;
}

std::int64_t Lattice::chern(const GroupElement& g) const {
  check_rank(g);
  std::int64_t c = 0;
  for (std::size_t i = 0; i < rank(); ++i) c += c1_[i] * g[i];
  return c;
}

ChernNumber Lattice::minimal_chern_number() const {
  std::int64_t g = 0;
  for (auto c : c1_) g = std::gcd(g, std::llabs(c));
  if (g == 0) return ChernNumber{};
  return ChernNumber{g};
}

void require_same_lattice(const Lattice& a, const Lattice& b) {
  if (&a == &b) return;
  if (!(a == b)) throw StructuralError("operands live over different lattices");
}

}  // namespace symt
