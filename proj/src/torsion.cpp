#include "symtorsion/torsion.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "symtorsion/errors.hpp"

namespace symt {

namespace {

const LeadingTerm& require_unit(const LeadingTerm& lt, const char* what) {
  if (lt.is_zero()) throw NotAUnit(std::string(what) + " is zero");
  if (lt.is_ambiguous()) throw NotAUnit(std::string(what) + " has no unique leading term");
  return lt;
}

NovikovElement positive_lead(NovikovElement x, const char* what) {
  const LeadingTerm lt = x.leading_term();
  require_unit(lt, what);
  return lt.coefficient() < 0 ? -x : x;
}

std::vector<std::size_t> complement(std::size_t n, const std::vector<std::size_t>& taken) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::find(taken.begin(), taken.end(), i) == taken.end()) out.push_back(i);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// BasisChangeClass

BasisChangeClass::BasisChangeClass(NovikovElement numerator, NovikovElement denominator)
    : num_(positive_lead(std::move(numerator), "numerator")),
      den_(positive_lead(std::move(denominator), "denominator")) {
  require_same_lattice(num_.lattice(), den_.lattice());
}

BasisChangeClass BasisChangeClass::of_unit(NovikovElement u) {
  auto one = NovikovElement::one(u.lattice_ptr());
  return BasisChangeClass(std::move(u), std::move(one));
}

BasisChangeClass BasisChangeClass::zero(LatticePtr lattice) {
  return BasisChangeClass(NovikovElement::one(lattice), NovikovElement::one(lattice));
}

bool BasisChangeClass::is_trivial() const { return num_.equal_below(den_); }

WhiteheadClass BasisChangeClass::to_whitehead() const { return WhiteheadClass(num_, den_); }

BasisChangeClass BasisChangeClass::operator+(const BasisChangeClass& other) const {
  return BasisChangeClass(num_ * other.num_, den_ * other.den_);
}

BasisChangeClass BasisChangeClass::operator-(const BasisChangeClass& other) const { return *this + (-other); }

BasisChangeClass BasisChangeClass::operator-() const { return BasisChangeClass(den_, num_); }

bool operator==(const BasisChangeClass& a, const BasisChangeClass& b) {
  return (a.num_ * b.den_).equal_below(b.num_ * a.den_);
}

// ---------------------------------------------------------------------------
// WhiteheadClass

WhiteheadClass::WhiteheadClass(NovikovElement numerator, NovikovElement denominator)
    : num_(NovikovElement::zero(numerator.lattice_ptr())), den_(num_) {
  require_same_lattice(numerator.lattice(), denominator.lattice());
  const LeadingTerm ln = numerator.leading_term();
  const LeadingTerm ld = denominator.leading_term();
  require_unit(ln, "numerator");
  require_unit(ld, "denominator");
  // Divide out ±g from each part; the ratio of |coefficients| stays in num.
  const Rational scale = Rational(ln.coefficient().sign()) / Rational(abs(ld.coefficient()));
  num_ = numerator.shifted(-ln.element()).scaled(scale);
  den_ = denominator.shifted(-ld.element()).scaled(Rational(1) / ld.coefficient());
}

WhiteheadClass WhiteheadClass::zero(LatticePtr lattice) {
  return WhiteheadClass(NovikovElement::one(lattice), NovikovElement::one(lattice));
}

bool WhiteheadClass::is_trivial() const { return num_.equal_below(den_); }

Rational WhiteheadClass::leading_coefficient() const { return num_.leading_term().coefficient(); }

NovikovElement WhiteheadClass::representative(const Rational& cutoff) const {
  if (den_ == NovikovElement::one(den_.lattice_ptr())) return num_;
  return num_ * den_.inverse(cutoff);
}

WhiteheadClass WhiteheadClass::operator+(const WhiteheadClass& other) const {
  return WhiteheadClass(num_ * other.num_, den_ * other.den_);
}

WhiteheadClass WhiteheadClass::operator-(const WhiteheadClass& other) const { return *this + (-other); }

WhiteheadClass WhiteheadClass::operator-() const { return WhiteheadClass(den_, num_); }

bool operator==(const WhiteheadClass& a, const WhiteheadClass& b) {
  return (a.num_ * b.den_).equal_below(b.num_ * a.den_);
}

WhiteheadClass whitehead_normalize(const NovikovElement& u) {
  return WhiteheadClass(u, NovikovElement::one(u.lattice_ptr()));
}

// ---------------------------------------------------------------------------
// Basis changes

BasisChangeClass basis_change_class(const GradedBasis& b, const GradedBasis& c) {
  auto check = [](const Matrix& x, const Matrix& y) {
    if (x.rows() != x.cols() || y.rows() != y.cols() || x.rows() != y.rows()) {
      throw StructuralError("graded bases must be square matrices of equal size");
    }
  };
  check(b.even, c.even);
  check(b.odd, c.odd);
  const auto be = determinant(b.even);
  const auto ce = determinant(c.even);
  const auto bo = determinant(b.odd);
  const auto co = determinant(c.odd);
  for (const auto* d : {&be, &ce, &bo, &co}) {
    if (d->numerator.has_no_terms()) throw NotAUnit("basis matrix is singular");
  }
  return BasisChangeClass(be.numerator * ce.denominator * bo.denominator * co.numerator,
                          be.denominator * ce.numerator * bo.numerator * co.denominator);
}

// ---------------------------------------------------------------------------
// Milnor torsion

TorsionResult milnor_torsion_k1(const BasedComplex& c, const PivotOrder& order) {
  const ValidationReport valid = validate(c);
  if (!valid.valid) {
    std::string msg = "d composed with d is not zero:";
    for (const auto& p : valid.problems) msg += "\n  " + p;
    throw InvalidComplex(msg);
  }
  const auto v = c.z2();
  const std::size_t n0 = v.even.size();
  const std::size_t n1 = v.odd.size();

  const ColumnRank s0 = independent_columns(v.d_even, order.even);
  const ColumnRank s1 = independent_columns(v.d_odd, order.odd);
  const std::size_t r0 = s0.pivot_columns.size();
  const std::size_t r1 = s1.pivot_columns.size();
  if (r0 + r1 != n0 || r0 + r1 != n1) {
    throw NotAcyclic("complex is not acyclic: even rank " + std::to_string(n0) + ", odd rank " +
                     std::to_string(n1) + ", differential ranks " + std::to_string(r0) + " and " +
                     std::to_string(r1));
  }

  const auto rows_even = complement(n0, s0.pivot_columns);
  const auto rows_odd = complement(n1, s1.pivot_columns);
  const auto a = determinant(v.d_odd.submatrix(rows_even, s1.pivot_columns));
  const auto b = determinant(v.d_even.submatrix(rows_odd, s0.pivot_columns));
  if (a.numerator.has_no_terms() || b.numerator.has_no_terms()) {
    throw IndeterminatePivot("selected pivot minor is singular below its cutoff");
  }

  BasisChangeClass k1(a.numerator * b.denominator, a.denominator * b.numerator);
  Cutoff cert = min_cutoff(valid.certified_below, min_cutoff(s0.certified_below, s1.certified_below));
  cert = min_cutoff(cert, k1.certified_below());
  return {std::move(k1), std::move(cert)};
}

WhiteheadClass milnor_torsion(const BasedComplex& c, const PivotOrder& order) {
  return milnor_torsion_k1(c, order).k1.to_whitehead();
}

// ---------------------------------------------------------------------------
// Cones and relative torsion

BasedComplex mapping_cone(const ChainMap& f) {
  if (f.shift() != 0) throw StructuralError("mapping cone needs a degree-0 chain map");
  const ValidationReport report = validate_chain_map(f);
  if (!report.valid) {
    std::string msg = "not a chain map:";
    for (const auto& p : report.problems) msg += "\n  " + p;
    throw InvalidComplex(msg);
  }
  const BasedComplex& src = f.source();
  const BasedComplex& tgt = f.target();
  const Grading& g = tgt.grading();

  BasedComplex cone(tgt.lattice_ptr(), g);
  const std::size_t offset = tgt.generators().size();
  for (const auto& gen : tgt.generators()) cone.add_generator("t." + gen.name, gen.degree);
  for (const auto& gen : src.generators()) cone.add_generator("s." + gen.name, g.shift(gen.degree, -1));

  for (const auto& [key, value] : tgt.entries()) cone.set_entry(key.first, key.second, value);
  for (const auto& [key, value] : src.entries()) cone.set_entry(offset + key.first, offset + key.second, value);
  for (const auto& [key, value] : f.entries()) {
    // source degree d sits in cone degree k = d - 1; the block carries (-1)^{k+1} = (-1)^d
    const int d = src.generators()[key.first].degree;
    cone.set_entry(offset + key.first, key.second, g.parity(d) == 0 ? value : -value);
  }
  return cone;
}

TorsionResult relative_torsion_k1(const ChainMap& f, const PivotOrder& order) {
  const BasedComplex cone = mapping_cone(f);
  try {
    return milnor_torsion_k1(cone, order);
  } catch (const NotAcyclic& e) {
    throw NotAcyclic(std::string("chain map is not a quasi-isomorphism; cone: ") + e.what());
  }
}

WhiteheadClass relative_torsion(const ChainMap& f, const PivotOrder& order) {
  return relative_torsion_k1(f, order).k1.to_whitehead();
}

bool homotopy_equivalent(const ChainMap& f, const ChainMap& g, const GradedMap& h) {
  if (f.shift() != 0 || g.shift() != 0 || h.shift() != -1) {
    throw StructuralError("homotopy check needs degree-0 maps and a degree -1 homotopy");
  }
  for (const GradedMap* m : {&g, &h}) {
    if (!(m->source() == f.source()) || !(m->target() == f.target())) {
      throw StructuralError("maps in a homotopy check must share source and target");
    }
  }
  const BasedComplex& src = f.source();
  const BasedComplex& tgt = f.target();
  const Grading& gr = src.grading();
  for (int d : src.degrees()) {
    const Matrix lhs = f.matrix(d) - g.matrix(d);
    const Matrix rhs = tgt.differential(gr.shift(d, -1)) * h.matrix(d) + h.matrix(gr.shift(d, 1)) * src.differential(d);
    if (!(lhs - rhs).is_zero()) return false;
  }
  return true;
}

}  // namespace symt
