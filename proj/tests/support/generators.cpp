#include "support/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace symt::testing {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool coin(Rng& rng) { return uniform(rng, 0, 1) == 1; }

Rational random_rational(Rng& rng, int max_num, int max_den, bool nonzero) {
  for (;;) {
    const int p = uniform(rng, -max_num, max_num);
    const int q = uniform(rng, 1, max_den);
    if (nonzero && p == 0) continue;
    return Rational(p, q);
  }
}

LatticePtr laurent() { return Lattice::laurent(); }

LatticePtr plane() {
  static const LatticePtr l =
      std::make_shared<const Lattice>(std::vector<Rational>{Rational(1), Rational(1, 1009)}, std::vector<std::int64_t>{0, 2});
  return l;
}

LatticePtr random_lattice(Rng& rng) { return coin(rng) ? laurent() : plane(); }

GroupElement random_element(Rng& rng, const Lattice& lattice, int range) {
  std::vector<std::int64_t> v(lattice.rank());
  for (auto& x : v) x = uniform(rng, -range, range);
  return GroupElement(std::move(v));
}

NovikovElement random_poly(Rng& rng, const LatticePtr& lattice, int max_terms, int range) {
  NovikovElement::TermMap terms;
  const int n = uniform(rng, 0, max_terms);
  for (int i = 0; i < n; ++i) terms[random_element(rng, *lattice, range)] += random_rational(rng, 5, 3, true);
  return NovikovElement(lattice, std::move(terms));
}

NovikovElement random_nonzero_poly(Rng& rng, const LatticePtr& lattice, int max_terms, int range) {
  for (;;) {
    auto p = random_poly(rng, lattice, max_terms, range);
    if (!p.has_no_terms()) return p;
  }
}

NovikovElement random_unit(Rng& rng, const LatticePtr& lattice, int max_terms, int range) {
  for (;;) {
    auto p = random_nonzero_poly(rng, lattice, max_terms, range);
    if (p.leading_term().is_unique()) return p;
  }
}

NovikovElement random_lambda0_unit(Rng& rng, const LatticePtr& lattice) {
  // Leading monomial +-g0 with g0 in Gamma_0, then higher terms in Gamma_0.
  auto in_gamma0 = [&](int range) {
    for (;;) {
      GroupElement g = random_element(rng, *lattice, range);
      if (lattice->in_gamma0(g)) return g;
    }
  };
  const GroupElement lead = in_gamma0(2);
  NovikovElement::TermMap terms;
  terms[lead] = coin(rng) ? Rational(1) : Rational(-1);
  const int extra = uniform(rng, 0, 2);
  for (int i = 0; i < extra; ++i) {
    const GroupElement g = in_gamma0(3);
    if (lattice->weight(g) > lattice->weight(lead)) terms[g] += random_rational(rng, 5, 3, true);
  }
  return NovikovElement(lattice, std::move(terms));
}

NovikovElement random_monomial_unit(Rng& rng, const LatticePtr& lattice, bool unit_coefficient) {
  const Rational c = unit_coefficient ? Rational(coin(rng) ? 1 : -1) : random_rational(rng, 4, 3, true);
  return NovikovElement::monomial(lattice, c, random_element(rng, *lattice, 2));
}

Transition random_transition(Rng& rng, const LatticePtr& lattice, std::size_t n, DiagonalKind kind,
                             const Rational& cutoff, bool with_inverse) {
  Matrix p(lattice, n, n), pinv(lattice, n, n);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  int parity = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) parity += perm[i] > perm[j];
  }
  for (std::size_t i = 0; i < n; ++i) {
    p.at(perm[i], i) = NovikovElement::one(lattice);
    pinv.at(i, perm[i]) = NovikovElement::one(lattice);
  }
  NovikovElement det = NovikovElement::constant(lattice, parity % 2 == 0 ? Rational(1) : Rational(-1));

  Matrix d(lattice, n, n), dinv(lattice, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    NovikovElement u = kind == DiagonalKind::Unit ? random_unit(rng, lattice)
                                                  : random_monomial_unit(rng, lattice, kind == DiagonalKind::UnitCoefficient);
    if (with_inverse) dinv.at(i, i) = u.inverse(cutoff);
    det = det * u;
    d.at(i, i) = std::move(u);
  }

  Matrix e = Matrix::identity(lattice, n), einv = Matrix::identity(lattice, n);
  if (n >= 2) {
    const int ops = uniform(rng, 1, static_cast<int>(2 * n));
    for (int k = 0; k < ops; ++k) {
      const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 1));
      auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 2));
      if (j >= i) ++j;
      const NovikovElement a = random_poly(rng, lattice, 2, 2);
      Matrix step = Matrix::identity(lattice, n), back = Matrix::identity(lattice, n);
      step.at(i, j) = a;
      back.at(i, j) = -a;
      e = e * step;
      einv = back * einv;
    }
  }
  Matrix inverse = with_inverse ? einv * dinv * pinv : Matrix(lattice, 0, 0);
  return {p * d * e, std::move(inverse), std::move(det)};
}

BasisChangeClass GradedTransition::klass() const { return BasisChangeClass(even.det, odd.det); }

GradedTransition random_graded_transition(Rng& rng, const LatticePtr& lattice, std::size_t n_even,
                                          std::size_t n_odd, DiagonalKind kind, const Rational& cutoff) {
  Transition even = random_transition(rng, lattice, n_even, kind, cutoff);
  Transition odd = random_transition(rng, lattice, n_odd, kind, cutoff);
  return {std::move(even), std::move(odd)};
}

BasedComplex change_basis(const BasedComplex& c, const GradedTransition& t) {
  const auto v = c.z2();
  std::vector<std::string> even_names, odd_names;
  for (auto i : v.even) even_names.push_back(c.generators()[i].name);
  for (auto i : v.odd) odd_names.push_back(c.generators()[i].name);
  const Matrix d_even = t.odd.inverse * v.d_even * t.even.m;
  const Matrix d_odd = t.even.inverse * v.d_odd * t.odd.m;
  return BasedComplex::from_z2_matrices(d_even, d_odd, even_names, odd_names);
}

AcyclicModel random_acyclic_model(Rng& rng, const LatticePtr& lattice, std::size_t pairs, UnitKind units) {
  Matrix d_even(lattice, pairs, pairs), d_odd(lattice, pairs, pairs);
  NovikovElement num = NovikovElement::one(lattice), den = NovikovElement::one(lattice);
  for (std::size_t i = 0; i < pairs; ++i) {
    NovikovElement u = units == UnitKind::Lambda0 ? random_lambda0_unit(rng, lattice) : random_unit(rng, lattice);
    if (coin(rng)) {
      num = num * u;
      d_odd.at(i, i) = std::move(u);
    } else {
      den = den * u;
      d_even.at(i, i) = std::move(u);
    }
  }
  return {BasedComplex::from_z2_matrices(d_even, d_odd), std::move(num), std::move(den)};
}

BasedComplex random_complex_with_homology(Rng& rng, const LatticePtr& lattice, std::size_t pairs, std::size_t extra) {
  const AcyclicModel model = random_acyclic_model(rng, lattice, pairs);
  const auto v = model.complex.z2();
  const std::size_t n = pairs + extra;
  Matrix d_even(lattice, n, n), d_odd(lattice, n, n);
  for (std::size_t i = 0; i < pairs; ++i) {
    for (std::size_t j = 0; j < pairs; ++j) {
      d_even.at(i, j) = v.d_even.at(i, j);
      d_odd.at(i, j) = v.d_odd.at(i, j);
    }
  }
  return BasedComplex::from_z2_matrices(d_even, d_odd);
}

GradedMap block_map(std::shared_ptr<const BasedComplex> source, std::shared_ptr<const BasedComplex> target,
                    const Matrix& from_even, const Matrix& from_odd, int shift) {
  return GradedMap::from_z2_blocks(std::move(source), std::move(target), shift, from_even, from_odd);
}

GradedMap random_graded_map(Rng& rng, std::shared_ptr<const BasedComplex> source,
                            std::shared_ptr<const BasedComplex> target, int shift, int max_terms) {
  const int s = ((shift % 2) + 2) % 2;
  const LatticePtr& l = source->lattice_ptr();
  auto block = [&](int parity) {
    Matrix m(l, target->parity_basis((parity + s) % 2).size(), source->parity_basis(parity).size());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = random_poly(rng, l, max_terms, 2);
    }
    return m;
  };
  const Matrix e = block(0);
  const Matrix o = block(1);
  return block_map(std::move(source), std::move(target), e, o, shift);
}

GradedMap null_homotopic_map(const GradedMap& k) {
  const auto kb = k.z2();  // from_even: src even -> tgt odd; from_odd: src odd -> tgt even
  const auto s = k.source().z2();
  const auto t = k.target().z2();
  const Matrix f_even = t.d_odd * kb.from_even + kb.from_odd * s.d_even;
  const Matrix f_odd = t.d_even * kb.from_odd + kb.from_even * s.d_odd;
  return block_map(k.source_ptr(), k.target_ptr(), f_even, f_odd, 0);
}

GradedMap identity_map(std::shared_ptr<const BasedComplex> source, std::shared_ptr<const BasedComplex> target) {
  const LatticePtr& l = source->lattice_ptr();
  const Matrix e = Matrix::identity(l, source->parity_basis(0).size());
  const Matrix o = Matrix::identity(l, source->parity_basis(1).size());
  return block_map(std::move(source), std::move(target), e, o, 0);
}

GradedMap add_maps(const GradedMap& f, const GradedMap& g) {
  const auto a = f.z2();
  const auto b = g.z2();
  return block_map(f.source_ptr(), f.target_ptr(), a.from_even + b.from_even, a.from_odd + b.from_odd, f.shift());
}

GradedMap compose_maps(const GradedMap& g, const GradedMap& f) {
  const auto a = f.z2();
  const auto b = g.z2();
  return block_map(f.source_ptr(), g.target_ptr(), b.from_even * a.from_even, b.from_odd * a.from_odd, 0);
}

ComplexDocument random_document(Rng& rng) {
  static const LatticePtr chern_lattice = std::make_shared<const Lattice>(
      std::vector<Rational>{Rational(1), Rational(-2, 3), Rational(5, 7)}, std::vector<std::int64_t>{2, 0, 4});
  static const LatticePtr rank0 = std::make_shared<const Lattice>(std::vector<Rational>{}, std::vector<std::int64_t>{});
  ComplexDocument doc;
  switch (uniform(rng, 0, 3)) {
    case 0:
      doc.lattice = laurent();
      break;
    case 1:
      doc.lattice = plane();
      break;
    case 2:
      doc.lattice = chern_lattice;
      break;
    default:
      doc.lattice = rank0;
      break;
  }
  doc.grading_kind = static_cast<GradingKind>(uniform(rng, 0, 2));
  const Grading grading = doc.grading();

  static const std::vector<std::string> stems = {"x", "y", "gen", "a_", "p.q", "z'", "Orbit", "_h"};
  const int ncomplexes = uniform(rng, 1, 3);
  for (int c = 0; c < ncomplexes; ++c) {
    auto complex = std::make_shared<BasedComplex>(doc.lattice, grading);
    const int ngen = uniform(rng, 0, 5);
    std::vector<int> degrees;
    for (int i = 0; i < ngen; ++i) {
      const int d = grading.modulus == 0 ? uniform(rng, -2, 3) : uniform(rng, 0, grading.modulus - 1);
      degrees.push_back(grading.normalize(d));
    }
    std::sort(degrees.begin(), degrees.end());
    for (int i = 0; i < ngen; ++i) {
      complex->add_generator(stems[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(stems.size()) - 1))] +
                                 std::to_string(i),
                             degrees[static_cast<std::size_t>(i)]);
    }
    const auto& gens = complex->generators();
    for (std::size_t s = 0; s < gens.size(); ++s) {
      for (std::size_t t = 0; t < gens.size(); ++t) {
        if (gens[t].degree != grading.shift(gens[s].degree, 1) || coin(rng)) continue;
        NovikovElement v = random_poly(rng, doc.lattice, 3, 3);
        if (uniform(rng, 0, 4) == 0) v = v.truncated(random_rational(rng, 9, 4));
        complex->set_entry(s, t, std::move(v));
      }
    }
    doc.complexes.push_back({c == 0 ? std::string("main") : "c" + std::to_string(c), std::move(complex)});
  }
  const int nmaps = uniform(rng, 0, 2);
  for (int m = 0; m < nmaps; ++m) {
    const auto& src = doc.complexes[static_cast<std::size_t>(uniform(rng, 0, ncomplexes - 1))];
    const auto& tgt = doc.complexes[static_cast<std::size_t>(uniform(rng, 0, ncomplexes - 1))];
    const int shift = coin(rng) ? 0 : -1;
    auto map = std::make_shared<GradedMap>(src.complex, tgt.complex, shift);
    const auto& sg = src.complex->generators();
    const auto& tg = tgt.complex->generators();
    for (std::size_t s = 0; s < sg.size(); ++s) {
      for (std::size_t t = 0; t < tg.size(); ++t) {
        if (tg[t].degree != grading.shift(sg[s].degree, shift) || coin(rng)) continue;
        map->set_entry(s, t, random_poly(rng, doc.lattice, 2, 2));
      }
    }
    doc.maps.push_back({"f" + std::to_string(m), src.name, tgt.name, std::move(map)});
  }
  return doc;
}

}  // namespace symt::testing
