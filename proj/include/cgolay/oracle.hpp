#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "cgolay/core.hpp"

namespace cgolay::oracle {

inline constexpr std::size_t kMaxNormalizedLength = 8;
inline constexpr std::size_t kMaxFullLength = 6;

class TooLarge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Brute force over all (A, B) with a_0 = a_1 = b_0 = 1 and a_2 != -i,
/// sorted. No filtering and no solver.
std::vector<GolayPair> normalized_pairs(std::size_t n);

/// Brute force over all of ({1, i, -1, -i}^n)^2, sorted.
std::vector<GolayPair> full_pairs(std::size_t n);

}  // namespace cgolay::oracle
