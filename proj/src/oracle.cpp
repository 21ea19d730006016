#include "cgolay/oracle.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace cgolay::oracle {

namespace {

// Straight-loop autocorrelation over raw exponents, kept separate from core.
using Exps = std::vector<int>;

struct Corr {
  std::vector<long> re;
  std::vector<long> im;
};

Corr correlations(const Exps& x) {
  static constexpr std::array<long, 4> kRe{1, 0, -1, 0};
  static constexpr std::array<long, 4> kIm{0, 1, 0, -1};
  const std::size_t n = x.size();
  Corr c{std::vector<long>(n, 0), std::vector<long>(n, 0)};
  for (std::size_t s = 1; s < n; ++s) {
    for (std::size_t k = 0; k + s < n; ++k) {
      const int e = ((x[k] - x[k + s]) % 4 + 4) % 4;
      c.re[s] += kRe[e];
      c.im[s] += kIm[e];
    }
  }
  return c;
}

bool complementary(const Corr& a, const Corr& b) {
  for (std::size_t s = a.re.size(); s-- > 1;) {
    if (a.re[s] + b.re[s] != 0 || a.im[s] + b.im[s] != 0) return false;
  }
  return true;
}

// All exponent vectors of length n with the first `fixed` entries set to 0.
std::vector<Exps> all_sequences(std::size_t n, std::size_t fixed) {
  std::vector<Exps> out;
  Exps x(n, 0);
  const std::size_t free_slots = n > fixed ? n - fixed : 0;
  std::size_t total = 1;
  for (std::size_t i = 0; i < free_slots; ++i) total *= 4;
  out.reserve(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t v = idx;
    for (std::size_t k = n; k-- > fixed;) {
      x[k] = static_cast<int>(v % 4);
      v /= 4;
    }
    out.push_back(x);
  }
  return out;
}

QuatSequence to_seq(const Exps& x) { return QuatSequence::from_exponents(x); }

}  // namespace

std::vector<GolayPair> normalized_pairs(std::size_t n) {
  if (n == 0) throw std::invalid_argument("length must be >= 1");
  if (n > kMaxNormalizedLength) {
    throw TooLarge("oracle refuses n=" + std::to_string(n) + ": about 3*4^" + std::to_string(2 * n - 3) +
                   " pair checks (limit n<=" + std::to_string(kMaxNormalizedLength) + ")");
  }
  std::vector<Exps> as;
  for (auto& x : all_sequences(n, std::min<std::size_t>(n, 2))) {
    if (n >= 3 && x[2] == 3) continue;  // a_2 = -i
    as.push_back(std::move(x));
  }
  const auto bs = all_sequences(n, 1);
  std::vector<Corr> b_corr;
  b_corr.reserve(bs.size());
  for (const auto& b : bs) b_corr.push_back(correlations(b));

  std::vector<GolayPair> out;
  for (const auto& a : as) {
    const Corr ca = correlations(a);
    for (std::size_t j = 0; j < bs.size(); ++j) {
      if (complementary(ca, b_corr[j])) out.push_back({to_seq(a), to_seq(bs[j])});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GolayPair> full_pairs(std::size_t n) {
  if (n == 0) throw std::invalid_argument("length must be >= 1");
  if (n > kMaxFullLength) {
    throw TooLarge("oracle refuses n=" + std::to_string(n) + ": 16^" + std::to_string(n) +
                   " pair checks (limit n<=" + std::to_string(kMaxFullLength) + ")");
  }
  const auto seqs = all_sequences(n, 0);
  std::vector<Corr> corr;
  corr.reserve(seqs.size());
  for (const auto& x : seqs) corr.push_back(correlations(x));
  std::vector<GolayPair> out;
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    for (std::size_t j = 0; j < seqs.size(); ++j) {
      if (complementary(corr[i], corr[j])) out.push_back({to_seq(seqs[i]), to_seq(seqs[j])});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cgolay::oracle
