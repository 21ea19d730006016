#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "cgolay/core.hpp"
#include "cgolay/progsat.hpp"

namespace cgolay {

/// b_k is encoded by (v_{2k}, v_{2k+1}):
///   (F,F) -> 1, (F,T) -> -1, (T,F) -> i, (T,T) -> -i.
/// v_{2k} is therefore true exactly when b_k is imaginary.
Quat decode_entry(bool v_even, bool v_odd);

/// The fixed sequence A and the data the autocorrelation callback needs.
struct PartnerEncoding {
  QuatSequence a;
  /// na[s] = N_A(s); na[0] is unused.
  std::vector<GaussianInt> na;

  std::size_t n() const { return a.size(); }
  static sat::Var entry_var(std::size_t k, int bit) { return static_cast<sat::Var>(2 * k + bit); }
};

struct InstanceShape {
  std::size_t variables = 0;
  std::size_t unit_clauses = 0;
  std::size_t binary_clauses = 0;
  std::size_t programmatic_constraints = 0;
};

struct PartnerInstance {
  std::unique_ptr<sat::Solver> solver;
  PartnerEncoding encoding;
  InstanceShape shape;
};

struct PartnerOptions {
  /// Add the pairwise realness-parity clauses for (b_k, b_{n-1-k}).
  bool parity_clauses = true;
};

/// Solver with 2n variables, b_0 = 1 units, and the parity clauses, with
/// decisions ordered from the outside of B inwards.
PartnerInstance build_instance(const QuatSequence& a, const PartnerOptions& options = {});

/// Entry order b_0, b_{n-1}, b_1, b_{n-2}, ... expanded to variable pairs.
std::vector<sat::Var> outer_first_order(std::size_t n);

/// Checks every shift s = n-1 down to 1 whose support is fully assigned;
/// the first violated one yields a clause over exactly its support variables.
sat::CheckResult golay_callback(const PartnerEncoding& enc, const sat::PartialAssignment& partial);

/// Every B with b_0 = 1 such that (A, B) is a complex Golay pair, sorted.
std::vector<QuatSequence> find_partners(const QuatSequence& a, const PartnerOptions& options = {},
                                        sat::SolveStats* stats = nullptr);

}  // namespace cgolay
