#pragma once

#include <vector>

#include "cgolay/core.hpp"
#include "cgolay/textio.hpp"

namespace cgolay {

/// Every pair reachable from p by E1-E5, sorted.
std::vector<GolayPair> equivalence_closure(const GolayPair& p);

struct OmegaSets {
  std::vector<GolayPair> all;         // sorted
  std::vector<GolayPair> inequiv;     // one per class: the least member, sorted
  std::vector<QuatSequence> seqs;     // sorted
  /// Orbit size for each entry of `inequiv`.
  std::vector<std::size_t> class_sizes;

  CountsRow counts(std::size_t n) const { return {n, seqs.size(), all.size(), inequiv.size()}; }
};

/// Expands normalized pairs to all pairs, one representative per class, and
/// the set of sequences that occur in some pair. Throws on an invalid pair.
OmegaSets build_omegas(const std::vector<GolayPair>& normalized);

/// a_k conj(a_{n-k-1}) = (-1)^{n+1} b_k conj(b_{n-k-1}) for k = 1..n-2.
bool crossover_check(const GolayPair& p);

}  // namespace cgolay
