#pragma once

// Randomized identity checks. Each runs `cases` independent cases from
// `seed` and reports how many failed, keeping the first failure message.

#include <cstdint>
#include <string>

namespace symt::testing {

struct PropertyResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string message;

  bool ok() const { return failures == 0 && cases > 0; }
};

// Basis change classes.
PropertyResult check_cocycle(int cases, std::uint64_t seed);
PropertyResult check_triangular_bases(int cases, std::uint64_t seed);

// Milnor and relative torsion.
PropertyResult check_base_change(int cases, std::uint64_t seed);
PropertyResult check_truncated_base_change(int cases, std::uint64_t seed);
PropertyResult check_additivity(int cases, std::uint64_t seed);
PropertyResult check_base_dependence(int cases, std::uint64_t seed);
PropertyResult check_homotopy_invariance(int cases, std::uint64_t seed);
PropertyResult check_composition(int cases, std::uint64_t seed);
PropertyResult check_acyclic_difference(int cases, std::uint64_t seed);
PropertyResult check_pivot_independence(int cases, std::uint64_t seed);
PropertyResult check_relabel_invariance(int cases, std::uint64_t seed);
PropertyResult check_lambda0_leading_term(int cases, std::uint64_t seed);

// Novikov arithmetic.
PropertyResult check_ring_axioms(int cases, std::uint64_t seed);
PropertyResult check_inverse(int cases, std::uint64_t seed);
PropertyResult check_leading_term_product(int cases, std::uint64_t seed);

// Acyclic complexes have as many even as odd generators.
PropertyResult check_euler_parity(int cases, std::uint64_t seed);

}  // namespace symt::testing
