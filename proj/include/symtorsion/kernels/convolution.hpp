#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "symtorsion/lattice.hpp"
#include "symtorsion/rational.hpp"

// Convolution product of finitely supported series, the inner loop of Novikov
// multiplication. The serial version is the reference; the OpenMP version must
// return identical maps (exact arithmetic, so summation order is irrelevant).
namespace symt::kernels {

using TermMap = std::map<GroupElement, Rational>;

struct WeightedTerm {
  GroupElement element;
  Rational coefficient;
  Rational weight;
};

// Terms of `terms` tagged with their weight, sorted by ascending weight.
std::vector<WeightedTerm> weighted_terms(const Lattice& lattice, const TermMap& terms);

// Sum over pairs (s, t) with weight(s) + weight(t) < cutoff (all pairs when
// cutoff is empty). Zero coefficients are pruned. `b` must be weight-sorted.
TermMap convolve_serial(std::span<const WeightedTerm> a, std::span<const WeightedTerm> b,
                        const std::optional<Rational>& cutoff);

TermMap convolve_parallel(std::span<const WeightedTerm> a, std::span<const WeightedTerm> b,
                          const std::optional<Rational>& cutoff);

// Pair count above which NovikovElement multiplication uses the parallel kernel.
inline constexpr std::size_t kParallelConvolutionThreshold = 1u << 12;

}  // namespace symt::kernels
