#include "symtorsion/novikov.hpp"

#include "symtorsion/errors.hpp"
#include "symtorsion/kernels/convolution.hpp"

namespace symt {

Cutoff min_cutoff(const Cutoff& a, const Cutoff& b) {
  if (!a) return b;
  if (!b) return a;
  return *a < *b ? a : b;
}

std::string to_string(const Cutoff& c) { return c ? to_string(*c) : std::string("exact"); }

NovikovElement::NovikovElement(LatticePtr lattice) : lattice_(std::move(lattice)) {
  if (!lattice_) throw StructuralError("Novikov element without a lattice");
}

NovikovElement::NovikovElement(LatticePtr lattice, TermMap terms, Cutoff cutoff)
    : lattice_(std::move(lattice)), terms_(std::move(terms)), cutoff_(std::move(cutoff)) {
  if (!lattice_) throw StructuralError("Novikov element without a lattice");
  for (const auto& [g, c] : terms_) {
    if (g.rank() != lattice_->rank()) throw StructuralError("term rank does not match the lattice rank");
  }
  prune();
}

NovikovElement NovikovElement::one(LatticePtr lattice) {
  auto id = lattice->identity();
  return monomial(std::move(lattice), Rational(1), id);
}

NovikovElement NovikovElement::monomial(LatticePtr lattice, const Rational& coefficient, const GroupElement& g) {
  TermMap t;
  if (coefficient != 0) t.emplace(g, coefficient);
  return NovikovElement(std::move(lattice), std::move(t));
}

NovikovElement NovikovElement::constant(LatticePtr lattice, const Rational& c) {
  auto id = lattice->identity();
  return monomial(std::move(lattice), c, id);
}

void NovikovElement::prune() {
  std::erase_if(terms_, [this](const auto& kv) {
    return kv.second == 0 || (cutoff_ && lattice_->weight(kv.first) >= *cutoff_);
  });
}

std::optional<Rational> NovikovElement::min_weight() const {
  std::optional<Rational> best;
  for (const auto& [g, c] : terms_) {
    Rational w = lattice_->weight(g);
    if (!best || w < *best) best = std::move(w);
  }
  return best;
}

LeadingTerm NovikovElement::leading_term() const {
  LeadingTerm lt;
  auto w = min_weight();
  if (!w) return lt;
  lt.weight = *w;
  for (const auto& [g, c] : terms_) {
    if (lattice_->weight(g) == *w) lt.slice.emplace_back(g, c);
  }
  lt.kind = lt.slice.size() == 1 ? LeadingTerm::Kind::Unique : LeadingTerm::Kind::Ambiguous;
  return lt;
}

bool NovikovElement::in_lambda0() const {
  for (const auto& [g, c] : terms_) {
    if (!lattice_->in_gamma0(g)) return false;
  }
  return true;
}

NovikovElement NovikovElement::truncated(const Rational& w) const {
  return NovikovElement(lattice_, terms_, min_cutoff(cutoff_, w));
}

NovikovElement NovikovElement::operator-() const {
  NovikovElement out(*this);
  for (auto& [g, c] : out.terms_) c = -c;
  return out;
}

NovikovElement NovikovElement::operator+(const NovikovElement& other) const {
  require_same_lattice(*lattice_, *other.lattice_);
  TermMap t = terms_;
  for (const auto& [g, c] : other.terms_) {
    auto [it, inserted] = t.try_emplace(g, c);
    if (!inserted) it->second += c;
  }
  return NovikovElement(lattice_, std::move(t), min_cutoff(cutoff_, other.cutoff_));
}

NovikovElement NovikovElement::operator-(const NovikovElement& other) const { return *this + (-other); }

NovikovElement NovikovElement::operator*(const NovikovElement& other) const {
  require_same_lattice(*lattice_, *other.lattice_);
  if (is_exact_zero() || other.is_exact_zero()) return zero(lattice_);

  // Unknown part of one factor sits at or above its cutoff; the other factor
  // starts at its minimal weight (or its cutoff, if it has no known terms).
  auto lower = [](const NovikovElement& x) { return x.terms_.empty() ? *x.cutoff_ : *x.min_weight(); };
  Cutoff cut;
  if (cutoff_) cut = min_cutoff(cut, *cutoff_ + lower(other));
  if (other.cutoff_) cut = min_cutoff(cut, *other.cutoff_ + lower(*this));

  auto a = kernels::weighted_terms(*lattice_, terms_);
  auto b = kernels::weighted_terms(*lattice_, other.terms_);
  TermMap t = a.size() * b.size() >= kernels::kParallelConvolutionThreshold
                  ? kernels::convolve_parallel(a, b, cut)
                  : kernels::convolve_serial(a, b, cut);
  return NovikovElement(lattice_, std::move(t), std::move(cut));
}

NovikovElement NovikovElement::scaled(const Rational& q) const {
  if (q == 0) return NovikovElement(lattice_, {}, cutoff_);
  NovikovElement out(*this);
  for (auto& [g, c] : out.terms_) c *= q;
  return out;
}

NovikovElement NovikovElement::shifted(const GroupElement& g) const {
  TermMap t;
  for (const auto& [h, c] : terms_) t.emplace(h + g, c);
  Cutoff cut;
  if (cutoff_) cut = *cutoff_ + lattice_->weight(g);
  return NovikovElement(lattice_, std::move(t), std::move(cut));
}

NovikovElement NovikovElement::inverse(const Rational& target) const {
  const LeadingTerm lt = leading_term();
  if (lt.is_zero()) throw NotAUnit("cannot invert an element with no known terms");
  if (lt.is_ambiguous()) {
    throw AmbiguousLeadingTerm("cannot invert: " + std::to_string(lt.slice.size()) +
                               " support elements share the minimal weight " + to_string(lt.weight));
  }
  const GroupElement& g = lt.element();
  const Rational& c = lt.coefficient();
  if (is_monomial()) return monomial(lattice_, Rational(1) / c, -g);

  // this = c*g*(1 + r) with r supported at strictly positive weight.
  const NovikovElement normalized = shifted(-g).scaled(Rational(1) / c);
  const NovikovElement r = normalized - one(lattice_);
  const Rational rel_cut = normalized.cutoff_ ? std::min(target, *normalized.cutoff_) : target;

  // Fixed-point iteration s <- 1 - r*s gains at least min-weight(r) per step.
  const NovikovElement unit = one(lattice_).truncated(rel_cut);
  NovikovElement s = unit;
  if (auto delta = r.min_weight(); delta && *delta > 0) {
    for (;;) {
      NovikovElement next = (unit - (r * s)).truncated(rel_cut);
      if (next == s) break;
      s = std::move(next);
    }
  }
  return s.shifted(-g).scaled(Rational(1) / c);
}

bool NovikovElement::equal_below(const NovikovElement& other) const { return (*this - other).has_no_terms(); }

bool operator==(const NovikovElement& a, const NovikovElement& b) {
  return a.terms_ == b.terms_ && a.cutoff_ == b.cutoff_ && a.lattice() == b.lattice();
}

}  // namespace symt
