#include "cgolay/postprocess.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace cgolay {

namespace {

std::string key_of(const GolayPair& p) { return p.a.to_string() + '\t' + p.b.to_string(); }

}  // namespace

std::vector<GolayPair> equivalence_closure(const GolayPair& p) {
  std::unordered_set<std::string> seen{key_of(p)};
  std::vector<GolayPair> members{p};
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const GolayPair current = members[queue.front()];
    queue.pop_front();
    for (auto op : kAllEquivalences) {
      GolayPair next = apply_equivalence(op, current);
      if (seen.insert(key_of(next)).second) {
        members.push_back(std::move(next));
        queue.push_back(members.size() - 1);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

OmegaSets build_omegas(const std::vector<GolayPair>& normalized) {
  OmegaSets out;
  std::unordered_set<std::string> absorbed;
  std::vector<std::vector<GolayPair>> classes;
  for (const auto& p : normalized) {
    if (!is_golay_pair(p)) throw std::invalid_argument("not a complex Golay pair: " + p.to_line());
    if (absorbed.contains(key_of(p))) continue;
    auto closure = equivalence_closure(p);
    for (const auto& q : closure) absorbed.insert(key_of(q));
    classes.push_back(std::move(closure));
  }
  std::sort(classes.begin(), classes.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });

  std::set<QuatSequence> seqs;
  for (auto& cls : classes) {
    out.inequiv.push_back(cls.front());
    out.class_sizes.push_back(cls.size());
    for (auto& q : cls) {
      seqs.insert(q.a);
      seqs.insert(q.b);
      out.all.push_back(std::move(q));
    }
  }
  std::sort(out.all.begin(), out.all.end());
  out.seqs.assign(seqs.begin(), seqs.end());
  return out;
}

bool crossover_check(const GolayPair& p) {
  const std::size_t n = p.size();
  const Quat sign = (n % 2 == 1) ? Quat::one() : Quat::minus_one();  // (-1)^{n+1}
  for (std::size_t k = 1; k + 2 <= n; ++k) {
    const std::size_t m = n - k - 1;
    if (p.a[k] * p.a[m].conj() != sign * p.b[k] * p.b[m].conj()) return false;
  }
  return true;
}

}  // namespace cgolay
