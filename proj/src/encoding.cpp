#include "cgolay/encoding.hpp"

#include <algorithm>
#include <stdexcept>

namespace cgolay {

using sat::Lit;
using sat::Var;

Quat decode_entry(bool v_even, bool v_odd) { return Quat((v_even ? 1 : 0) + (v_odd ? 2 : 0)); }

std::vector<Var> outer_first_order(std::size_t n) {
  std::vector<Var> order;
  order.reserve(2 * n);
  for (std::size_t lo = 0; 2 * lo < n; ++lo) {
    const std::size_t hi = n - 1 - lo;
    order.push_back(PartnerEncoding::entry_var(lo, 0));
    order.push_back(PartnerEncoding::entry_var(lo, 1));
    if (hi != lo) {
      order.push_back(PartnerEncoding::entry_var(hi, 0));
      order.push_back(PartnerEncoding::entry_var(hi, 1));
    }
  }
  return order;
}

PartnerInstance build_instance(const QuatSequence& a, const PartnerOptions& options) {
  const std::size_t n = a.size();
  if (n == 0) throw std::invalid_argument("cannot encode an empty sequence");

  PartnerInstance inst;
  inst.encoding.a = a;
  inst.encoding.na.assign(n, GaussianInt{});
  for (std::size_t s = 1; s < n; ++s) inst.encoding.na[s] = autocorr(a, s);

  inst.solver = std::make_unique<sat::Solver>(2 * n);
  auto& solver = *inst.solver;
  inst.shape.variables = 2 * n;

  solver.add_clause({Lit::neg(0)});
  solver.add_clause({Lit::neg(1)});
  inst.shape.unit_clauses = 2;

  if (options.parity_clauses) {
    // An even number of a_k, a_{n-1-k}, b_k, b_{n-1-k} are real.
    for (std::size_t k = 0; k < n / 2; ++k) {
      const std::size_t m = n - 1 - k;
      const Var x = PartnerEncoding::entry_var(k, 0);
      const Var y = PartnerEncoding::entry_var(m, 0);
      if (a[k].is_real() != a[m].is_real()) {
        solver.add_clause({Lit::pos(x), Lit::pos(y)});
        solver.add_clause({Lit::neg(x), Lit::neg(y)});
      } else {
        solver.add_clause({Lit::pos(x), Lit::neg(y)});
        solver.add_clause({Lit::neg(x), Lit::pos(y)});
      }
      inst.shape.binary_clauses += 2;
    }
  }
  inst.shape.programmatic_constraints = n - 1;
  solver.set_branch_order(outer_first_order(n));
  return inst;
}

sat::CheckResult golay_callback(const PartnerEncoding& enc, const sat::PartialAssignment& partial) {
  const std::size_t n = enc.n();

  // Entries outside [first_open, last_open] are fully assigned.
  std::size_t first_open = n;
  std::size_t last_open = 0;
  bool any_open = false;
  for (std::size_t k = 0; k < n; ++k) {
    if (!partial.assigned(PartnerEncoding::entry_var(k, 0)) || !partial.assigned(PartnerEncoding::entry_var(k, 1))) {
      if (!any_open) first_open = k;
      last_open = k;
      any_open = true;
    }
  }
  auto entry = [&](std::size_t k) {
    return decode_entry(partial.is_true(PartnerEncoding::entry_var(k, 0)),
                        partial.is_true(PartnerEncoding::entry_var(k, 1)));
  };

  for (std::size_t s = n - 1; s >= 1; --s) {
    // The support of N_B(s) is {0..n-s-1} u {s..n-1}; the complement is the
    // gap [n-s, s-1]. It is complete iff every open entry sits in the gap.
    if (any_open && !(first_open + s >= n && last_open + 1 <= s)) continue;
    GaussianInt sum = enc.na[s];
    for (std::size_t k = 0; k + s < n; ++k) sum += GaussianInt::of(entry(k) * entry(k + s).conj());
    if (!sum.is_zero()) {
      sat::Conflict conflict;
      for (std::size_t k = 0; k < n; ++k) {
        if (k + s < n || k >= s) {
          for (int bit = 0; bit < 2; ++bit) {
            // Negation of the current literal.
            conflict.clause.push_back(~partial.current(PartnerEncoding::entry_var(k, bit)));
          }
        }
      }
      return conflict;
    }
  }
  if (!any_open) return sat::Solution{};
  return sat::NoConflict{};
}

std::vector<QuatSequence> find_partners(const QuatSequence& a, const PartnerOptions& options,
                                        sat::SolveStats* stats) {
  auto inst = build_instance(a, options);
  const auto& enc = inst.encoding;
  std::vector<QuatSequence> partners;
  const auto result = inst.solver->solve_all(
      [&](const sat::PartialAssignment& p) { return golay_callback(enc, p); },
      [&](const std::vector<bool>& model) {
        std::vector<Quat> b;
        b.reserve(a.size());
        for (std::size_t k = 0; k < a.size(); ++k) b.push_back(decode_entry(model[2 * k], model[2 * k + 1]));
        QuatSequence seq(std::move(b));
        if (!is_golay_pair(a, seq)) {
          throw sat::ContractViolation("solver emitted " + seq.to_string() + " which does not pair with " +
                                       a.to_string());
        }
        partners.push_back(std::move(seq));
      });
  if (stats) *stats = result;
  std::sort(partners.begin(), partners.end());
  partners.erase(std::unique(partners.begin(), partners.end()), partners.end());
  return partners;
}

}  // namespace cgolay
