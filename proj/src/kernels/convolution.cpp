#include "symtorsion/kernels/convolution.hpp"

#include <algorithm>

#include <omp.h>

namespace symt::kernels {

namespace {

void accumulate_row(const WeightedTerm& s, std::span<const WeightedTerm> b, const std::optional<Rational>& cutoff,
                    TermMap& out) {
  for (const auto& t : b) {
    if (cutoff && s.weight + t.weight >= *cutoff) break;  // b is weight-sorted
    auto [it, inserted] = out.try_emplace(s.element + t.element, s.coefficient * t.coefficient);
    if (!inserted) it->second += s.coefficient * t.coefficient;
  }
}

void prune_zeros(TermMap& m) { std::erase_if(m, [](const auto& kv) { return kv.second == 0; }); }

}  // namespace

std::vector<WeightedTerm> weighted_terms(const Lattice& lattice, const TermMap& terms) {
  std::vector<WeightedTerm> out;
  out.reserve(terms.size());
  for (const auto& [g, c] : terms) out.push_back({g, c, lattice.weight(g)});
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.weight < y.weight; });
  return out;
}

TermMap convolve_serial(std::span<const WeightedTerm> a, std::span<const WeightedTerm> b,
                        const std::optional<Rational>& cutoff) {
  TermMap out;
  for (const auto& s : a) accumulate_row(s, b, cutoff, out);
  prune_zeros(out);
  return out;
}

TermMap convolve_parallel(std::span<const WeightedTerm> a, std::span<const WeightedTerm> b,
                          const std::optional<Rational>& cutoff) {
  const int threads = std::max(1, omp_get_max_threads());
  std::vector<TermMap> partial(static_cast<std::size_t>(threads));
  const auto n = static_cast<std::ptrdiff_t>(a.size());

#pragma omp parallel num_threads(threads)
  {
    TermMap& local = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 8)
    for (std::ptrdiff_t i = 0; i < n; ++i) accumulate_row(a[static_cast<std::size_t>(i)], b, cutoff, local);
  }

  TermMap out = std::move(partial.front());
  for (std::size_t k = 1; k < partial.size(); ++k) {
    for (auto& [g, c] : partial[k]) {
      auto [it, inserted] = out.try_emplace(g, c);
      if (!inserted) it->second += c;
    }
  }
  prune_zeros(out);
  return out;
}

}  // namespace symt::kernels
