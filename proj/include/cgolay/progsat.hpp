#pragma once

// Complete DPLL search with a programmatic conflict interface.
//
// The solver enumerates every full assignment satisfying the clause store and
// accepted by a user callback. After each unit-propagation fixpoint the
// callback inspects the partial assignment and may return a clause that the
// assignment falsifies; the clause is learned and the search backtracks
// chronologically. Each emitted solution is blocked by a clause over its
// non-fixed variables.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

namespace cgolay::sat {

using Var = std::uint32_t;

class Lit {
 public:
  constexpr Lit() = default;
  static constexpr Lit pos(Var v) { return Lit(2 * v); }
  static constexpr Lit neg(Var v) { return Lit(2 * v + 1); }
  static constexpr Lit make(Var v, bool negative) { return Lit(2 * v + (negative ? 1 : 0)); }

  constexpr Var var() const { return code_ >> 1; }
  constexpr bool negative() const { return (code_ & 1U) != 0; }
  constexpr std::uint32_t code() const { return code_; }
  constexpr Lit operator~() const { return Lit(code_ ^ 1U); }
  constexpr bool operator==(const Lit&) const = default;

  /// DIMACS integer: +(v+1) or -(v+1).
  int dimacs() const { return negative() ? -static_cast<int>(var() + 1) : static_cast<int>(var() + 1); }

 private:
  constexpr explicit Lit(std::uint32_t code) : code_(code) {}
  std::uint32_t code_ = 0;
};

using Clause = std::vector<Lit>;

enum class Value : std::int8_t { unassigned = 0, true_ = 1, false_ = -1 };

/// Read-only view of the current partial assignment.
class PartialAssignment {
 public:
  explicit PartialAssignment(std::span<const Value> values) : values_(values) {}
  std::size_t size() const { return values_.size(); }
  Value operator[](Var v) const { return values_[v]; }
  bool assigned(Var v) const { return values_[v] != Value::unassigned; }
  bool is_true(Var v) const { return values_[v] == Value::true_; }
  /// The literal over v that is currently true. Requires assigned(v).
  Lit current(Var v) const { return Lit::make(v, values_[v] == Value::false_); }
  bool complete() const;

 private:
  std::span<const Value> values_;
};

struct NoConflict {};
struct Conflict {
  Clause clause;
};
struct Solution {};

using CheckResult = std::variant<NoConflict, Conflict, Solution>;
using CheckFn = std::function<CheckResult(const PartialAssignment&)>;
using SolutionFn = std::function<void(const std::vector<bool>&)>;

/// Raised when a callback breaks its contract (e.g. returns a clause the
/// current assignment does not falsify).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct SolveStats {
  std::uint64_t decisions = 0;
  std::uint64_t propagations = 0;
  std::uint64_t callback_calls = 0;
  std::uint64_t callback_conflicts = 0;
  std::uint64_t clause_conflicts = 0;
  std::uint64_t solutions = 0;
  std::uint64_t learned = 0;
};

class Solver {
 public:
  explicit Solver(std::size_t vars);

  std::size_t num_vars() const { return num_vars_; }
  std::size_t num_clauses() const { return clauses_.size(); }

  /// Adds a static clause. Only valid before solve_all.
  void add_clause(Clause clause);

  /// Decisions follow `order`, trying false before true.
  void set_branch_order(std::vector<Var> order);

  /// Enumerates every full assignment that satisfies all clauses and for
  /// which `check` returns Solution. A full assignment answered with
  /// NoConflict is rejected silently. Can be called once per solver.
  SolveStats solve_all(const CheckFn& check, const SolutionFn& on_solution);

  /// Writes the static clauses (not learned ones) in DIMACS CNF.
  void write_dimacs(std::ostream& out) const;

 private:
  enum class Status { satisfied, open, unit, falsified };

  Value value(Lit l) const;
  void enqueue(Lit l);
  /// Returns the index of a falsified clause, or -1.
  long propagate();
  void new_level(Lit decision, bool flipped);
  void cancel_until(std::size_t level);
  /// Flips the deepest decision not yet flipped. False when none is left.
  bool backtrack();
  Status status(const Clause& c) const;
  /// Moves the best literals (true, then unassigned, then most recently
  /// falsified) to the two watched positions and registers the watches.
  Status attach(std::size_t ci);
  /// Learns `clause`, which the current assignment falsifies, and backtracks.
  bool learn_and_backtrack(Clause clause);
  /// Backtracks until clause ci is no longer falsified; enqueues its
  /// implied literal if it became unit. False when the search is exhausted.
  bool resolve_conflict(std::size_t ci);
  void check_shape(const Clause& clause) const;

  std::size_t num_vars_;
  std::vector<Clause> static_clauses_;  // as given, for export
  std::vector<Clause> clauses_;
  std::vector<std::vector<std::uint32_t>> watches_;  // by literal code
  std::vector<Value> assigns_;
  std::vector<std::uint32_t> level_;
  std::vector<std::uint32_t> trail_pos_;
  std::vector<Lit> trail_;
  std::vector<std::size_t> trail_lim_;
  std::vector<Lit> decisions_;
  std::vector<bool> flipped_;
  std::size_t qhead_ = 0;
  std::vector<Var> order_;
  bool root_conflict_ = false;
  bool used_ = false;
  SolveStats stats_;
};

}  // namespace cgolay::sat
