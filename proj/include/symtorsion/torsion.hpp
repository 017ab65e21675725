#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "symtorsion/complex.hpp"

namespace symt {

class WhiteheadClass;

// Element of K1-bar(Lambda) = U(Lambda)/{±1}, realized through the
// determinant as a quotient numerator/denominator of units. Written
// additively: a + b multiplies representatives, -a inverts.
//
// Both parts are stored with positive leading coefficient, so two classes
// are equal iff num1*den2 and num2*den1 agree below their common cutoff.
class BasisChangeClass {
 public:
  // Throws NotAUnit unless both parts are nonzero with unique leading terms.
  BasisChangeClass(NovikovElement numerator, NovikovElement denominator);
  static BasisChangeClass of_unit(NovikovElement u);
  static BasisChangeClass zero(LatticePtr lattice);

  const NovikovElement& numerator() const noexcept { return num_; }
  const NovikovElement& denominator() const noexcept { return den_; }
  Cutoff certified_below() const { return min_cutoff(num_.cutoff(), den_.cutoff()); }

  bool is_trivial() const;
  WhiteheadClass to_whitehead() const;

  BasisChangeClass operator+(const BasisChangeClass& other) const;
  BasisChangeClass operator-(const BasisChangeClass& other) const;
  BasisChangeClass operator-() const;
  friend bool operator==(const BasisChangeClass& a, const BasisChangeClass& b);

 private:
  NovikovElement num_;
  NovikovElement den_;
};

// Element of Wh(Lambda) = U(Lambda)/{±Gamma}. The canonical representative
// num/den has its leading monomial at the identity with positive coefficient:
// num leads with q > 0, den leads with 1. Rational constants other than ±1
// survive the quotient, so q != 1 means the class is non-trivial.
class WhiteheadClass {
 public:
  WhiteheadClass(NovikovElement numerator, NovikovElement denominator);
  static WhiteheadClass zero(LatticePtr lattice);

  const NovikovElement& numerator() const noexcept { return num_; }
  const NovikovElement& denominator() const noexcept { return den_; }
  Cutoff certified_below() const { return min_cutoff(num_.cutoff(), den_.cutoff()); }

  bool is_trivial() const;
  // Leading coefficient q of the normalized representative (lt in U(Q)/±1).
  Rational leading_coefficient() const;
  // Representative lies in Lambda_0 (image of Wh(Lambda_0) -> Wh(Lambda)).
  bool in_lambda0() const { return num_.in_lambda0() && den_.in_lambda0(); }

  // num * den^{-1} as a series; exact when den is 1, otherwise truncated at
  // `cutoff` (further limited by the stored cutoffs).
  NovikovElement representative(const Rational& cutoff) const;

  WhiteheadClass operator+(const WhiteheadClass& other) const;
  WhiteheadClass operator-(const WhiteheadClass& other) const;
  WhiteheadClass operator-() const;
  friend bool operator==(const WhiteheadClass& a, const WhiteheadClass& b);

 private:
  NovikovElement num_;
  NovikovElement den_;
};

// Canonical Wh(Lambda) class of a unit u. Throws NotAUnit.
WhiteheadClass whitehead_normalize(const NovikovElement& u);

// A graded basis of a Z2-graded free module, given by the square matrices
// whose columns are the basis vectors in a fixed reference basis.
struct GradedBasis {
  Matrix even;
  Matrix odd;
};

// [b/c] = [b_even/c_even] - [b_odd/c_odd]. Throws NotAUnit when a transition
// is not invertible, StructuralError on shape mismatch.
BasisChangeClass basis_change_class(const GradedBasis& b, const GradedBasis& c);

// Column orders in which pivot columns of d_even and d_odd (see
// BasedComplex::Z2View) are searched; empty means natural order.
struct PivotOrder {
  std::vector<std::size_t> even;
  std::vector<std::size_t> odd;
};

struct TorsionResult {
  BasisChangeClass k1;
  Cutoff certified_below;  // weakest cutoff behind any zero/rank decision
};

// Milnor torsion of an acyclic based complex, in K1-bar. Uses pivot columns
// S_even of d_even and S_odd of d_odd:
//   tau = det(d_odd[even \ S_even, S_odd]) / det(d_even[odd \ S_odd, S_even]),
// so a two-term complex with d: odd -> even equal to a unit u has torsion u.
// Throws InvalidComplex, NotAcyclic or IndeterminatePivot.
TorsionResult milnor_torsion_k1(const BasedComplex& c, const PivotOrder& order = {});

WhiteheadClass milnor_torsion(const BasedComplex& c, const PivotOrder& order = {});

// Cone C_f = C_target ⊕ C_source[+1] with d_f = (d_t, (-1)^{k+1} f; 0, d_s),
// where k is the cone degree. Target generators come first, named
// "t.<name>", then source generators "s.<name>" one degree lower.
BasedComplex mapping_cone(const ChainMap& f);

// Milnor torsion of the cone with the concatenated basis. Throws NotAcyclic
// when f is not a quasi-isomorphism.
TorsionResult relative_torsion_k1(const ChainMap& f, const PivotOrder& order = {});
WhiteheadClass relative_torsion(const ChainMap& f, const PivotOrder& order = {});

// f - g == d_target H + H d_source entrywise (below cutoffs).
bool homotopy_equivalent(const ChainMap& f, const ChainMap& g, const GradedMap& h);

}  // namespace symt
