#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "symtorsion/lattice.hpp"
#include "symtorsion/rational.hpp"

namespace symt {

// Weight bound of a truncated series. Empty means the series is exact (a
// finite sum known in full); a value w means terms of weight >= w are
// unknown, not zero.
using Cutoff = std::optional<Rational>;

// Minimum of two cutoffs with Exact treated as +infinity.
Cutoff min_cutoff(const Cutoff& a, const Cutoff& b);

std::string to_string(const Cutoff& c);

// Minimal-weight slice of a series. `Unique` is the leading term in the usual
// sense; `Ambiguous` means several support elements tie at the minimal
// weight (phi not injective on their differences).
struct LeadingTerm {
  enum class Kind { Zero, Unique, Ambiguous };

  Kind kind = Kind::Zero;
  Rational weight;
  std::vector<std::pair<GroupElement, Rational>> slice;

  bool is_zero() const noexcept { return kind == Kind::Zero; }
  bool is_unique() const noexcept { return kind == Kind::Unique; }
  bool is_ambiguous() const noexcept { return kind == Kind::Ambiguous; }

  // Only meaningful for Kind::Unique.
  const GroupElement& element() const { return slice.front().first; }
  const Rational& coefficient() const { return slice.front().second; }
};

// Element of the Novikov ring N(Gamma, phi, Q): a finitely supported series
// sum c_g g with exact rational coefficients, optionally truncated at a weight
// cutoff. Stored coefficients are never zero and, when truncated, every
// stored term sits strictly below the cutoff.
class NovikovElement {
 public:
  using TermMap = std::map<GroupElement, Rational>;

  explicit NovikovElement(LatticePtr lattice);
  NovikovElement(LatticePtr lattice, TermMap terms, Cutoff cutoff = {});

  static NovikovElement zero(LatticePtr lattice) { return NovikovElement(std::move(lattice)); }
  static NovikovElement one(LatticePtr lattice);
  static NovikovElement monomial(LatticePtr lattice, const Rational& coefficient, const GroupElement& g);
  static NovikovElement constant(LatticePtr lattice, const Rational& c);

  const Lattice& lattice() const noexcept { return *lattice_; }
  const LatticePtr& lattice_ptr() const noexcept { return lattice_; }
  const TermMap& terms() const noexcept { return terms_; }
  const Cutoff& cutoff() const noexcept { return cutoff_; }
  bool is_exact() const noexcept { return !cutoff_.has_value(); }

  // No known terms. For a truncated element this means "zero below the cutoff".
  bool has_no_terms() const noexcept { return terms_.empty(); }
  bool is_exact_zero() const noexcept { return terms_.empty() && is_exact(); }
  bool is_monomial() const noexcept { return terms_.size() == 1 && is_exact(); }

  std::optional<Rational> min_weight() const;
  LeadingTerm leading_term() const;

  // True iff every support element lies in Gamma_0 = ker c1.
  bool in_lambda0() const;

  // Drops terms at or above w and lowers the cutoff to w if that is tighter.
  NovikovElement truncated(const Rational& w) const;

  NovikovElement operator-() const;
  NovikovElement operator+(const NovikovElement& other) const;
  NovikovElement operator-(const NovikovElement& other) const;
  NovikovElement operator*(const NovikovElement& other) const;
  NovikovElement scaled(const Rational& q) const;
  // Multiplication by the monomial 1*g; exact and cutoff-shifting.
  NovikovElement shifted(const GroupElement& g) const;

  // b with this * b = 1 on every weight below `target` (the cutoff of b is
  // target - weight(leading element), further limited by this element's own
  // cutoff). Exact monomials invert exactly and ignore `target`.
  NovikovElement inverse(const Rational& target) const;

  // Agreement on all weights below the common cutoff.
  bool equal_below(const NovikovElement& other) const;

  // Structural identity: same terms and same cutoff.
  friend bool operator==(const NovikovElement& a, const NovikovElement& b);

 private:
  void prune();

  LatticePtr lattice_;
  TermMap terms_;
  Cutoff cutoff_;
};

inline NovikovElement invert(const NovikovElement& a, const Rational& target) { return a.inverse(target); }

}  // namespace symt
