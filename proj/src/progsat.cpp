#include "cgolay/progsat.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <string>

namespace cgolay::sat {

bool PartialAssignment::complete() const {
  return std::none_of(values_.begin(), values_.end(), [](Value v) { return v == Value::unassigned; });
}

Solver::Solver(std::size_t vars)
    : num_vars_(vars),
      watches_(2 * vars),
      assigns_(vars, Value::unassigned),
      level_(vars, 0),
      trail_pos_(vars, 0) {
  order_.resize(vars);
  std::iota(order_.begin(), order_.end(), Var{0});
}

void Solver::check_shape(const Clause& clause) const {
  if (clause.empty()) throw std::invalid_argument("empty clause");
  std::vector<bool> seen(num_vars_, false);
  for (Lit l : clause) {
    if (l.var() >= num_vars_) {
      throw std::invalid_argument("literal over variable " + std::to_string(l.var()) + " but only " +
                                  std::to_string(num_vars_) + " variables exist");
    }
    if (seen[l.var()]) {
      throw std::invalid_argument("variable " + std::to_string(l.var()) + " repeated in clause");
    }
    seen[l.var()] = true;
  }
}

void Solver::add_clause(Clause clause) {
  if (used_) throw std::logic_error("add_clause after solve_all");
  check_shape(clause);
  static_clauses_.push_back(clause);
  clauses_.push_back(std::move(clause));
  switch (attach(clauses_.size() - 1)) {
    case Status::falsified: root_conflict_ = true; break;
    case Status::unit: enqueue(clauses_.back()[0]); break;
    default: break;
  }
}

void Solver::set_branch_order(std::vector<Var> order) {
  if (order.size() != num_vars_) throw std::invalid_argument("branch order is not a permutation");
  std::vector<bool> seen(num_vars_, false);
  for (Var v : order) {
    if (v >= num_vars_ || seen[v]) throw std::invalid_argument("branch order is not a permutation");
    seen[v] = true;
  }
  order_ = std::move(order);
}

Value Solver::value(Lit l) const {
  const Value v = assigns_[l.var()];
  if (v == Value::unassigned) return v;
  return (v == Value::true_) != l.negative() ? Value::true_ : Value::false_;
}

void Solver::enqueue(Lit l) {
  assigns_[l.var()] = l.negative() ? Value::false_ : Value::true_;
  level_[l.var()] = static_cast<std::uint32_t>(trail_lim_.size());
  trail_pos_[l.var()] = static_cast<std::uint32_t>(trail_.size());
  trail_.push_back(l);
}

long Solver::propagate() {
  while (qhead_ < trail_.size()) {
    const Lit falsified = ~trail_[qhead_++];
    ++stats_.propagations;
    auto& ws = watches_[falsified.code()];
    std::size_t i = 0;
    std::size_t j = 0;
    long conflict = -1;
    while (i < ws.size()) {
      const std::uint32_t ci = ws[i++];
      Clause& c = clauses_[ci];
      if (c.size() == 1) {
        ws[j++] = ci;
        conflict = ci;
        break;
      }
      if (c[0] == falsified) std::swap(c[0], c[1]);
      if (value(c[0]) == Value::true_) {
        ws[j++] = ci;
        continue;
      }
      bool moved = false;
      for (std::size_t k = 2; k < c.size(); ++k) {
        if (value(c[k]) != Value::false_) {
          std::swap(c[1], c[k]);
          watches_[c[1].code()].push_back(ci);
          moved = true;
          break;
        }
      }
      if (moved) continue;
      ws[j++] = ci;
      if (value(c[0]) == Value::false_) {
        conflict = ci;
        break;
      }
      enqueue(c[0]);
    }
    while (i < ws.size()) ws[j++] = ws[i++];
    ws.resize(j);
    if (conflict >= 0) return conflict;
  }
  return -1;
}

void Solver::new_level(Lit decision, bool flipped) {
  trail_lim_.push_back(trail_.size());
  decisions_.push_back(decision);
  flipped_.push_back(flipped);
  enqueue(decision);
}

void Solver::cancel_until(std::size_t level) {
  if (trail_lim_.size() <= level) return;
  const std::size_t keep = trail_lim_[level];
  for (std::size_t t = trail_.size(); t-- > keep;) assigns_[trail_[t].var()] = Value::unassigned;
  trail_.resize(keep);
  trail_lim_.resize(level);
  decisions_.resize(level);
  flipped_.resize(level);
  qhead_ = std::min(qhead_, trail_.size());
}

bool Solver::backtrack() {
  for (std::size_t d = trail_lim_.size(); d > 0; --d) {
    if (!flipped_[d - 1]) {
      const Lit decision = decisions_[d - 1];
      cancel_until(d - 1);
      new_level(~decision, true);
      return true;
    }
  }
  return false;
}

Solver::Status Solver::status(const Clause& c) const {
  std::size_t open = 0;
  for (Lit l : c) {
    const Value v = value(l);
    if (v == Value::true_) return Status::satisfied;
    if (v == Value::unassigned) ++open;
  }
  if (open == 0) return Status::falsified;
  return open == 1 ? Status::unit : Status::open;
}

Solver::Status Solver::attach(std::size_t ci) {
  Clause& c = clauses_[ci];
  auto rank = [&](Lit l) -> long {
    switch (value(l)) {
      case Value::true_: return -2;
      case Value::unassigned: return -1;
      default: return static_cast<long>(num_vars_) - static_cast<long>(trail_pos_[l.var()]);
    }
  };
  const std::size_t heads = std::min<std::size_t>(2, c.size());
  std::partial_sort(c.begin(), c.begin() + static_cast<long>(heads), c.end(),
                    [&](Lit x, Lit y) { return rank(x) < rank(y); });
  for (std::size_t h = 0; h < heads; ++h) watches_[c[h].code()].push_back(static_cast<std::uint32_t>(ci));
  return status(c);
}

bool Solver::resolve_conflict(std::size_t ci) {
  while (true) {
    if (!backtrack()) return false;
    const Status st = status(clauses_[ci]);
    if (st == Status::falsified) continue;
    if (st == Status::unit) {
      // Suffix-of-trail undo leaves the one open literal in a watched slot.
      for (Lit l : clauses_[ci]) {
        if (value(l) == Value::unassigned) {
          enqueue(l);
          break;
        }
      }
    }
    return true;
  }
}

bool Solver::learn_and_backtrack(Clause clause) {
  clauses_.push_back(std::move(clause));
  const std::size_t ci = clauses_.size() - 1;
  attach(ci);
  ++stats_.learned;
  return resolve_conflict(ci);
}

SolveStats Solver::solve_all(const CheckFn& check, const SolutionFn& on_solution) {
  if (used_) throw std::logic_error("solve_all may only run once per solver");
  used_ = true;
  stats_ = {};
  if (root_conflict_) return stats_;

  std::vector<bool> model(num_vars_);
  while (true) {
    if (const long confl = propagate(); confl >= 0) {
      ++stats_.clause_conflicts;
      if (!resolve_conflict(static_cast<std::size_t>(confl))) break;
      continue;
    }

    const PartialAssignment view(assigns_);
    CheckResult result = check(view);
    ++stats_.callback_calls;
    if (auto* conflict = std::get_if<Conflict>(&result)) {
      try {
        check_shape(conflict->clause);
      } catch (const std::invalid_argument& e) {
        throw ContractViolation(std::string("callback clause malformed: ") + e.what());
      }
      for (Lit l : conflict->clause) {
        if (value(l) != Value::false_) {
          throw ContractViolation("callback clause not falsified by the current assignment (literal " +
                                  std::to_string(l.dimacs()) + ")");
        }
      }
      ++stats_.callback_conflicts;
      if (!learn_and_backtrack(std::move(conflict->clause))) break;
      continue;
    }

    if (trail_.size() == num_vars_) {
      if (std::holds_alternative<Solution>(result)) {
        for (Var v = 0; v < num_vars_; ++v) model[v] = assigns_[v] == Value::true_;
        ++stats_.solutions;
        on_solution(model);
      }
      Clause block;
      for (Var v = 0; v < num_vars_; ++v) {
        if (level_[v] > 0) block.push_back(Lit::make(v, assigns_[v] == Value::true_));
      }
      if (block.empty() || !learn_and_backtrack(std::move(block))) break;
      continue;
    }

    for (Var v : order_) {
      if (assigns_[v] == Value::unassigned) {
        ++stats_.decisions;
        new_level(Lit::neg(v), false);
        break;
      }
    }
  }
  return stats_;
}

void Solver::write_dimacs(std::ostream& out) const {
  out << "p cnf " << num_vars_ << ' ' << static_clauses_.size() << '\n';
  for (const auto& c : static_clauses_) {
    for (Lit l : c) out << l.dimacs() << ' ';
    out << "0\n";
  }
}

}  // namespace cgolay::sat
