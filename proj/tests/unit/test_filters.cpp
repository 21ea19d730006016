#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "cgolay/filters.hpp"
#include "cgolay/oracle.hpp"

using namespace cgolay;

namespace {

QuatSequence seq(const char* s) { return QuatSequence::parse(s); }

QuatSequence random_seq(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(0, 3);
  std::vector<int> e(n);
  for (auto& x : e) x = d(rng);
  return QuatSequence::from_exponents(e);
}

bool naive_solvable(long n, long r, long im) {
  const long target = 2 * n;
  for (long x = -20; x <= 20; ++x) {
    for (long y = -20; y <= 20; ++y) {
      if (r * r + im * im + x * x + y * y == target) return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("spectrum examples") {
  const auto s = spectrum(seq("+"), 4);
  CHECK(s.samples == 4);
  for (double v : s.values) CHECK(v == doctest::Approx(1.0));
  const auto t = spectrum(seq("++"), 2);
  CHECK(t.values[0] == doctest::Approx(4.0));
  CHECK(t.values[1] == doctest::Approx(0.0));
  CHECK_THROWS_AS(spectrum(seq("+++"), 2), std::invalid_argument);
}

TEST_CASE("spectrum agrees with direct evaluation") {
  std::mt19937 rng(5);
  const double two_pi = 2 * 3.14159265358979323846;
  for (int t = 0; t < 20; ++t) {
    const auto a = random_seq(rng, 1 + t % 13);
    const std::size_t N = 32;
    const auto s = spectrum(a, N);
    for (std::size_t j = 0; j < N; ++j) {
      const auto z = std::polar(1.0, two_pi * double(j) / double(N));
      CHECK(s.values[j] == doctest::Approx(std::norm(hall_eval(a, z))).epsilon(1e-9));
    }
  }
}

TEST_CASE("Parseval") {
  std::mt19937 rng(17);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + t % 20;
    const auto a = random_seq(rng, n);
    auto [even, odd] = split_even_odd(a);
    std::vector<std::size_t> sizes{n};
    for (std::size_t N = 8; N <= (std::size_t{1} << 14); N *= 2) {
      if (N >= n) sizes.push_back(N);
    }
    for (auto N : sizes) {
      const auto full = spectrum(a, N);
      const double total = std::accumulate(full.values.begin(), full.values.end(), 0.0);
      CHECK(std::abs(total - double(N * n)) <= 1e-6 * double(N * n));
      const auto half = spectrum(even, N);
      const double half_total = std::accumulate(half.values.begin(), half.values.end(), 0.0);
      CHECK(std::abs(half_total - double(N * even.nonzero_count())) <= 1e-6 * double(N * n));
    }
  }
}

TEST_CASE("filter schedules") {
  CHECK_THROWS_AS(FilterSchedule({{8, SampleSet::all}, {8, SampleSet::all}}, 1e-3), std::invalid_argument);
  CHECK_THROWS_AS(FilterSchedule({{8, SampleSet::all}}, 0.0), std::invalid_argument);

  const auto pre = preprocessing_schedule(8);
  REQUIRE(pre.stages().size() == 2);
  CHECK(pre.stages()[0].samples == 8);
  CHECK(pre.stages()[1].samples == 16384);
  CHECK(pre.stages()[1].which == SampleSet::all);
  CHECK(pre.epsilon() == 1e-3);

  const auto s1 = stage1_schedule();
  REQUIRE(s1.stages().size() == 5);
  CHECK(s1.stages().front().samples == 8);
  CHECK(s1.stages().back().samples == 128);
  for (const auto& st : s1.stages()) CHECK(st.which == SampleSet::odd_only);
  CHECK_THROWS(stage1_schedule(100));
}

TEST_CASE("passes_hall_filter") {
  const auto sched5 = preprocessing_schedule(5);
  CHECK_FALSE(passes_hall_filter(seq("+++++"), 5, sched5));
  CHECK(passes_hall_filter(seq("+"), 1, preprocessing_schedule(1)));
}

TEST_CASE("squares table") {
  const SquaresTable t23(23);
  CHECK_FALSE(t23.solvable(0, 5));
  CHECK(t23.solvable(1, 2));
  CHECK(t23.solvable(0, 1));  // 0+1+9+36
  CHECK(t23.solvable(-2, 1));
  CHECK_FALSE(t23.solvable(7, 0));

  for (long n = 1; n <= 30; ++n) {
    const SquaresTable t(static_cast<std::size_t>(n));
    for (long r = 0; r <= n; ++r) {
      for (long i = 0; i <= n; ++i) {
        CHECK(t.solvable(r, i) == naive_solvable(n, r, i));
        CHECK(t.solvable(r, i) == t.solvable(i, r));
      }
    }
  }
}

TEST_CASE("scaled sums and sos_filter") {
  const auto sums = scaled_sums(seq("++-"));
  CHECK(sums[0] == GaussianInt{1, 0});
  // 1 + i*1 + i^2*(-1) = 2 + i
  CHECK(sums[1] == GaussianInt{2, 1});
  CHECK(sums[2] == GaussianInt{-1, 0});
  CHECK(sums[3] == GaussianInt{2, -1});

  const SquaresTable t3(3);
  CHECK(t3.solvable(1, 0));
  CHECK(sos_filter(seq("++-"), t3));
  CHECK_FALSE(sos_filter(seq("+++"), t3));  // 9 > 6

  std::mt19937 rng(2);
  for (int t = 0; t < 50; ++t) {
    const auto a = random_seq(rng, 9);
    const auto [even, odd] = split_even_odd(a);
    const auto s = scaled_sums(a);
    const auto se = scaled_sums(even);
    const auto so = scaled_sums(odd);
    for (int k = 0; k < 4; ++k) CHECK(s[k] == se[k] + so[k]);
    const auto scaled = positional_scale(Quat::i(), a);
    CHECK(scaled_sums(scaled)[0] == s[1]);
  }
}

TEST_CASE("every oracle first member passes every filter") {
  for (std::size_t n = 1; n <= 7; ++n) {
    const SquaresTable table(n);
    const auto pre = preprocessing_schedule(n);
    const Stage1Grid grid(stage1_schedule());
    for (const auto& p : oracle::normalized_pairs(n)) {
      CHECK(passes_hall_filter(p.a, n, pre));
      CHECK(passes_hall_filter(p.b, n, pre));
      CHECK(sos_filter(p.a, table));
      auto [even, odd] = split_even_odd(p.a);
      CHECK(passes_hall_filter(even, n, pre));
      CHECK(passes_hall_filter(odd, n, pre));
      CHECK(stage1_filter(p.a, table, grid, half_spectrum(even, grid), half_spectrum(odd, grid)));
    }
  }
}

TEST_CASE("half candidates") {
  const auto even1 = enumerate_half_candidates(1, Parity::even, preprocessing_schedule(1));
  REQUIRE(even1.size() == 1);
  CHECK(even1[0].to_string() == "+");
  CHECK(enumerate_half_candidates(1, Parity::odd, preprocessing_schedule(1)).empty());
  CHECK(enumerate_half_candidates(2, Parity::odd, preprocessing_schedule(2)).size() == 1);

  const auto sched = preprocessing_schedule(8);
  const auto even8 = enumerate_half_candidates(8, Parity::even, sched, 2);
  const auto odd8 = enumerate_half_candidates(8, Parity::odd, sched, 2);
  CHECK(even8.size() == 48);
  CHECK(odd8.size() == 64);
  CHECK(even8 == enumerate_half_candidates(8, Parity::even, sched, 1));

  for (const auto& h : even8) {
    CHECK(h.at(0) == Quat::one());
    CHECK(h.at(2) != Quat::minus_i());
  }
  for (const auto& h : odd8) CHECK(h.at(1) == Quat::one());

  // Lexicographic in exponents.
  auto key = [](const MaskedSequence& m) {
    std::vector<int> k;
    for (std::size_t i = 0; i < m.size(); ++i) k.push_back(m.at(i) ? m.at(i)->exponent() : -1);
    return k;
  };
  for (std::size_t i = 1; i < even8.size(); ++i) CHECK(key(even8[i - 1]) < key(even8[i]));
}

TEST_CASE("a finer schedule never keeps more candidates") {
  for (std::size_t n : {6, 9, 10}) {
    for (Parity parity : {Parity::even, Parity::odd}) {
      std::set<std::string> prev;
      bool first = true;
      for (std::size_t N : {64, 256, 1024, 4096}) {
        std::set<std::string> cur;
        for (const auto& m : enumerate_half_candidates(n, parity, preprocessing_schedule(n, N))) {
          cur.insert(m.to_string());
        }
        if (!first) CHECK(std::includes(prev.begin(), prev.end(), cur.begin(), cur.end()));
        prev = std::move(cur);
        first = false;
      }
    }
  }
}

TEST_CASE("join_halves") {
  const auto even = MaskedSequence::parse("+0-", Parity::even);
  const auto odd = MaskedSequence::parse("0i0", Parity::odd);
  CHECK(join_halves(odd, even) == seq("+i-"));
  CHECK_THROWS_AS(join_halves(even, even), std::invalid_argument);
  CHECK_THROWS_AS(join_halves(MaskedSequence::parse("0i", Parity::odd), even), std::invalid_argument);

  std::mt19937 rng(9);
  for (int t = 0; t < 50; ++t) {
    const auto a = random_seq(rng, 1 + t % 11);
    auto [e, o] = split_even_odd(a);
    CHECK(join_halves(o, e) == a);
  }
}

TEST_CASE("stage-1 grid skips the points i^k") {
  const Stage1Grid grid(stage1_schedule());
  CHECK(grid.finest() == 128);
  CHECK(grid.point_count() == 124);
  CHECK(grid.stage_offsets().back() == 124);
  std::set<std::size_t> seen;
  for (auto j : grid.fine_indices()) {
    CHECK(j % 32 != 0);
    CHECK(seen.insert(j).second);
  }
  // First stage: N = 8, odd j.
  CHECK(grid.fine_indices()[0] == 16);
}

TEST_CASE("batched join filter agrees with stage1_filter") {
  for (std::size_t n : {3, 8, 10, 12}) {
    const auto pre = preprocessing_schedule(n);
    const auto evens = enumerate_half_candidates(n, Parity::even, pre);
    const auto odds = enumerate_half_candidates(n, Parity::odd, pre);
    const SquaresTable table(n);
    const Stage1Grid grid(stage1_schedule());
    const JoinFilter filter(evens, table, grid);
    CHECK(filter.even_count() == evens.size());
    std::vector<HalfSpectrum> even_specs;
    for (const auto& e : evens) even_specs.push_back(half_spectrum(e, grid));
    std::size_t total = 0;
    for (const auto& o : odds) {
      const auto os = half_spectrum(o, grid);
      std::vector<std::size_t> batched;
      filter.scan(o, [&](std::size_t e) { batched.push_back(e); });
      std::vector<std::size_t> exact;
      for (std::size_t e = 0; e < evens.size(); ++e) {
        if (stage1_filter(join_halves(o, evens[e]), table, grid, even_specs[e], os)) exact.push_back(e);
      }
      CHECK(batched == exact);
      total += exact.size();
    }
    if (n == 3) CHECK(total == 1);
    if (n == 8) CHECK(total == 36);
  }
}
